#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "casson/closed_forms.hpp"
#include "casson/oracle.hpp"
#include "casson/splice.hpp"

namespace py = pybind11;
using namespace casson;

namespace {

py::object from_json(const std::string& text)
{
    return py::module_::import("json").attr("loads")(text);
}

py::int_ to_py(const Integer& z)
{
    return py::int_(py::module_::import("builtins").attr("int")(z.get_str()));
}

IntPolynomial to_poly(const std::vector<py::int_>& coeffs)
{
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (const auto& x : coeffs) c.emplace_back(x.attr("__str__")().cast<std::string>());
    return IntPolynomial(std::move(c));
}

std::vector<py::int_> from_poly(const IntPolynomial& f)
{
    std::vector<py::int_> out;
    for (const auto& c : f.coefficients()) out.push_back(to_py(c));
    return out;
}

InvariantStore load_store(const std::vector<std::string>& data_files)
{
    InvariantStore s;
    for (const auto& f : data_files) s.load_file(f);
    return s;
}

py::dict check_to_dict(const ConditionCheck& c)
{
    py::dict d;
    d["direction"] = c.side == ConditionSide::First ? "first" : "second";
    d["k"] = c.k;
    d["verdict"] = std::string(to_string(c.verdict));
    d["condition"] = c.condition();
    d["witness"] = c.witness();
    d["gcd"] = c.gcd ? py::object(py::cast(from_poly(*c.gcd))) : py::object(py::none());
    d["resultant"] = c.resultant ? py::object(to_py(*c.resultant)) : py::object(py::none());
    return d;
}

}  // namespace

PYBIND11_MODULE(casson, m)
{
    m.doc() = "Exact SL(2,C) Casson invariants of Brieskorn spheres, surgeries and spliced sums";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<KnotDataError>(m, "KnotDataError", PyExc_ValueError);
    py::register_exception<UnknownKnot>(m, "UnknownKnot", PyExc_KeyError);
    py::register_exception<MissingAPolynomial>(m, "MissingAPolynomial", PyExc_LookupError);
    py::register_exception<UnknownCatalogName>(m, "UnknownCatalogName", PyExc_KeyError);

    m.def(
        "parse", [](const std::string& src) { return parse_expression(src).to_string(); }, py::arg("expression"),
        "Parse an expression and return its canonical spelling.");

    m.def(
        "evaluate",
        [](const std::string& src, const std::vector<std::string>& data_files, std::optional<std::string> krange) {
            const InvariantStore store = load_store(data_files);
            EvalOptions opts{&store, krange ? std::optional<KRange>(parse_krange(*krange)) : std::nullopt};
            return from_json(to_json(lambda(parse_expression(src), opts)));
        },
        py::arg("expression"), py::arg("data_files") = std::vector<std::string>{}, py::arg("krange") = py::none(),
        "Evaluate lambda and return the certificate as a dict.");

    m.def(
        "check_conditions",
        [](const std::string& knot1, const std::string& knot2, std::int64_t lo, std::int64_t hi,
           const std::vector<std::string>& data_files) {
            const InvariantStore store = load_store(data_files);
            py::list out;
            for (const auto& c : check_splice_conditions_both(parse_knot(knot1), parse_knot(knot2), KRange{lo, hi}, store))
                out.append(check_to_dict(c));
            return out;
        },
        py::arg("knot1"), py::arg("knot2"), py::arg("lo") = -8, py::arg("hi") = 8,
        py::arg("data_files") = std::vector<std::string>{});

    m.def(
        "brieskorn_lambda", [](std::int64_t a, std::int64_t b, std::int64_t c) { return brieskorn_lambda({a, b, c}); },
        py::arg("a1"), py::arg("a2"), py::arg("a3"));
    m.def("catalog_lambda", [](const std::string& name) { return catalog_lambda(name); }, py::arg("name"));
    m.def("whitehead_double_surgery_lambda", &whitehead_double_surgery_lambda, py::arg("p"), py::arg("q"), py::arg("k"));
    m.def("torus_surgery_lambda", &torus_surgery_lambda, py::arg("p"), py::arg("q"), py::arg("k"));
    m.def(
        "positivity_guarantee",
        [](const std::string& knot, std::int64_t q, const std::vector<std::string>& data_files) {
            return positivity_guarantee(parse_knot(knot), q, load_store(data_files));
        },
        py::arg("knot"), py::arg("q"), py::arg("data_files") = std::vector<std::string>{});

    m.def(
        "count_irreducible_characters",
        [](std::int64_t a, std::int64_t b, std::int64_t c) { return count_irreducible_characters({a, b, c}); },
        py::arg("a1"), py::arg("a2"), py::arg("a3"));
    m.def(
        "verify_closed_form",
        [](std::int64_t max_product) {
            SweepResult r;
            {
                py::gil_scoped_release release;
                r = verify_closed_form(max_product);
            }
            py::dict d;
            d["triples_checked"] = r.triples_checked;
            py::list bad;
            for (const auto& x : r.mismatches) bad.append(py::make_tuple(x.triple.to_string(), x.oracle, x.closed_form));
            d["mismatches"] = bad;
            return d;
        },
        py::arg("max_product") = 1000);

    m.def("non_additivity_demo", [] { return from_json(to_json(non_additivity_demo())); });

    m.def(
        "alexander",
        [](const std::string& knot, const std::vector<std::string>& data_files) {
            return from_poly(alexander(parse_knot(knot), load_store(data_files)));
        },
        py::arg("knot"), py::arg("data_files") = std::vector<std::string>{},
        "Alexander polynomial coefficients, ascending in t.");
    m.def(
        "resultant",
        [](const std::vector<py::int_>& f, const std::vector<py::int_>& g) { return to_py(resultant(to_poly(f), to_poly(g))); },
        py::arg("f"), py::arg("g"));
    m.def(
        "gcd", [](const std::vector<py::int_>& f, const std::vector<py::int_>& g) { return from_poly(gcd_rational(to_poly(f), to_poly(g))); },
        py::arg("f"), py::arg("g"));
}
