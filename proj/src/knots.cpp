#include "casson/knots.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

namespace casson {

namespace {

constexpr std::array<std::string_view, 10> kReserved = {
    "unknot", "torus", "twist", "fiber", "S3", "brieskorn", "catalog", "surgery", "splice", "ksplice",
};

IntPolynomial cyclotomic_quotient(std::int64_t p, std::int64_t q)
{
    // (t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))
    auto t_pow_minus_one = [](std::int64_t e) {
        IntPolynomial f = IntPolynomial::monomial(1, static_cast<std::size_t>(e));
        return f - IntPolynomial{1};
    };
    IntPolynomial num = t_pow_minus_one(p * q) * t_pow_minus_one(1);
    IntPolynomial den = t_pow_minus_one(p) * t_pow_minus_one(q);
    return exact_quotient(num, den);
}

IntPolynomial normalize_alexander(const IntPolynomial& f)
{
    IntPolynomial g = f.strip_t_factor();
    return sgn(g.leading()) < 0 ? -g : g;
}

std::string trimmed(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_words(const std::string& line)
{
    std::istringstream is(line);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(std::move(w));
    return out;
}

}  // namespace

KnotDescriptor KnotDescriptor::torus(std::int64_t p, std::int64_t q)
{
    if (p < 2 || q < 2)
        throw std::invalid_argument("torus(" + std::to_string(p) + "," + std::to_string(q) +
                                    "): parameters must be >= 2");
    if (std::gcd(p, q) != 1)
        throw std::invalid_argument("torus(" + std::to_string(p) + "," + std::to_string(q) +
                                    "): parameters must be coprime");
    if (p > q) std::swap(p, q);
    return KnotDescriptor(TorusKnot{p, q});
}

KnotDescriptor KnotDescriptor::twist(std::int64_t n)
{
    if (n == 0) throw std::invalid_argument("twist(0) is the unknot; use 'unknot'");
    return KnotDescriptor(TwistKnot{n});
}

KnotDescriptor KnotDescriptor::named(std::string name)
{
    if (!is_knot_identifier(name)) throw std::invalid_argument("invalid knot name '" + name + "'");
    return KnotDescriptor(NamedKnot{std::move(name)});
}

std::string KnotDescriptor::to_string() const
{
    struct Visitor {
        std::string operator()(const Unknot&) const { return "unknot"; }
        std::string operator()(const TorusKnot& t) const
        {
            return "torus(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
        }
        std::string operator()(const TwistKnot& t) const { return "twist(" + std::to_string(t.n) + ")"; }
        std::string operator()(const NamedKnot& n) const { return n.name; }
    };
    return std::visit(Visitor{}, v_);
}

bool is_knot_identifier(std::string_view s)
{
    if (s.empty()) return false;
    auto ok_first = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    auto ok_rest = [&](char c) { return ok_first(c) || c == '.'; };
    if (!ok_first(s.front())) return false;
    for (char c : s)
        if (!ok_rest(c)) return false;
    for (auto r : kReserved)
        if (s == r) return false;
    return true;
}

std::string_view to_string(Tristate t)
{
    switch (t) {
    case Tristate::False: return "false";
    case Tristate::True: return "true";
    case Tristate::Unknown: return "unknown";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------

void validate_alexander(const IntPolynomial& delta, std::string_view knot)
{
    const std::string who(knot);
    if (delta.is_zero()) throw std::invalid_argument("knot " + who + ": Alexander polynomial is zero");
    Integer at_one = delta.evaluate(Integer(1));
    if (abs(at_one) != 1)
        throw std::invalid_argument("knot " + who + ": Alexander polynomial has Delta(1) = " + at_one.get_str() +
                                    ", expected +1 or -1");
    IntPolynomial d = delta.strip_t_factor();
    IntPolynomial r = d.reversed();
    if (!(r == d) && !(r == -d))
        throw std::invalid_argument("knot " + who + ": Alexander polynomial " + d.to_string() +
                                    " is not symmetric under t -> 1/t");
}

std::size_t InvariantStore::load(std::istream& in, std::string_view source)
{
    const std::string src(source);
    std::map<std::string, KnotInvariantRecord, std::less<>> staged;
    std::optional<KnotInvariantRecord> open;
    std::size_t open_line = 0;
    bool in_apoly = false;
    bool saw_alexander = false;

    auto parse_error = [&](std::size_t line, const std::string& msg) {
        return KnotDataError(KnotDataError::Kind::Parse, line, src + ":" + std::to_string(line) + ": " + msg);
    };
    auto to_int = [&](const std::string& w, std::size_t line) {
        std::int64_t v = 0;
        const char* b = w.data();
        const char* e = w.data() + w.size();
        if (!w.empty() && *b == '+') ++b;
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || p != e) throw parse_error(line, "expected an integer, got '" + w + "'");
        return v;
    };
    auto to_big = [&](const std::string& w, std::size_t line) {
        Integer v;
        std::string digits = (!w.empty() && w[0] == '+') ? w.substr(1) : w;
        if (digits.empty() || v.set_str(digits, 10) != 0) throw parse_error(line, "expected an integer, got '" + w + "'");
        return v;
    };

    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trimmed(raw);
        if (line.empty() || line[0] == '#') continue;
        auto words = split_words(line);
        const std::string& key = words[0];

        if (key == "knot") {
            if (open) throw parse_error(lineno, "'knot' inside the record opened at line " + std::to_string(open_line));
            if (words.size() != 2) throw parse_error(lineno, "expected 'knot <name>'");
            if (!is_knot_identifier(words[1])) throw parse_error(lineno, "invalid knot name '" + words[1] + "'");
            open = KnotInvariantRecord{};
            open->name = words[1];
            open_line = lineno;
            in_apoly = false;
            saw_alexander = false;
            continue;
        }
        if (!open) throw parse_error(lineno, "'" + key + "' outside a knot record");

        if (key == "term") {
            if (!in_apoly) throw parse_error(lineno, "'term' must follow 'apoly'");
            if (words.size() != 4) throw parse_error(lineno, "expected 'term <coeff> <degM> <degL>'");
            Integer c = to_big(words[1], lineno);
            std::int64_t dm = to_int(words[2], lineno);
            std::int64_t dl = to_int(words[3], lineno);
            if (dm < 0 || dl < 0) throw parse_error(lineno, "term degrees must be nonnegative");
            open->a_polynomial->add_term(c, static_cast<std::uint32_t>(dm), static_cast<std::uint32_t>(dl));
            continue;
        }
        in_apoly = false;

        if (key == "alexander") {
            if (saw_alexander) throw parse_error(lineno, "duplicate 'alexander'");
            if (words.size() < 2) throw parse_error(lineno, "'alexander' needs at least one coefficient");
            std::vector<Integer> cs;
            for (std::size_t i = 1; i < words.size(); ++i) cs.push_back(to_big(words[i], lineno));
            open->alexander = IntPolynomial(std::move(cs));
            saw_alexander = true;
        } else if (key == "apoly") {
            if (words.size() != 1) throw parse_error(lineno, "'apoly' takes no arguments; list 'term' lines after it");
            if (open->a_polynomial) throw parse_error(lineno, "duplicate 'apoly'");
            open->a_polynomial = TwoVarPolynomial{};
            in_apoly = true;
        } else if (key == "slopes") {
            if (open->slopes) throw parse_error(lineno, "duplicate 'slopes'");
            if (words.size() == 2 && words[1] == "even-only") {
                open->slopes = SlopeInfo{EvenOnlySlopes{}};
            } else {
                if (words.size() < 2) throw parse_error(lineno, "'slopes' needs 'even-only' or a list of integers");
                std::vector<std::int64_t> ss;
                for (std::size_t i = 1; i < words.size(); ++i) ss.push_back(to_int(words[i], lineno));
                open->slopes = SlopeInfo{std::move(ss)};
            }
        } else if (key == "flags") {
            if (words.size() < 2) throw parse_error(lineno, "'flags' needs at least one flag");
            for (std::size_t i = 1; i < words.size(); ++i) {
                if (words[i] == "two-bridge") {
                    open->two_bridge = true;
                    open->small = true;
                } else if (words[i] == "small") {
                    open->small = true;
                } else {
                    throw parse_error(lineno, "unknown flag '" + words[i] + "'");
                }
            }
        } else if (key == "end") {
            if (words.size() != 1) throw parse_error(lineno, "'end' takes no arguments");
            KnotInvariantRecord rec = std::move(*open);
            open.reset();
            auto fail = [&](const std::string& msg) {
                return KnotDataError(KnotDataError::Kind::Validation, lineno, src + ":" + std::to_string(lineno) + ": " + msg);
            };
            if (!saw_alexander) throw fail("knot " + rec.name + ": missing 'alexander'");
            try {
                validate_alexander(rec.alexander, rec.name);
            } catch (const std::invalid_argument& e) {
                throw fail(e.what());
            }
            rec.alexander = normalize_alexander(rec.alexander);
            if (rec.a_polynomial && rec.a_polynomial->is_zero())
                throw fail("knot " + rec.name + ": A-polynomial is zero");
            if (rec.two_bridge && !rec.slopes) rec.slopes = SlopeInfo{EvenOnlySlopes{}};
            if (records_.count(rec.name) || staged.count(rec.name))
                throw fail("knot " + rec.name + ": already defined");
            std::string name = rec.name;
            staged.emplace(std::move(name), std::move(rec));
        } else {
            throw parse_error(lineno, "unknown key '" + key + "'");
        }
    }
    if (open)
        throw KnotDataError(KnotDataError::Kind::Parse, 0,
                            src + ": record '" + open->name + "' opened at line " + std::to_string(open_line) +
                                " is missing 'end'");
    std::size_t n = staged.size();
    records_.merge(staged);
    return n;
}

std::size_t InvariantStore::load_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open knot data file '" + path.string() + "'");
    return load(in, path.string());
}

const KnotInvariantRecord* InvariantStore::find(std::string_view name) const
{
    auto it = records_.find(name);
    return it == records_.end() ? nullptr : &it->second;
}

const KnotInvariantRecord& InvariantStore::at(std::string_view name) const
{
    if (const auto* r = find(name)) return *r;
    throw UnknownKnot("unknown knot '" + std::string(name) + "' (no loaded data record)");
}

const InvariantStore& empty_store()
{
    static const InvariantStore store;
    return store;
}

// ---------------------------------------------------------------------------

IntPolynomial alexander(const KnotDescriptor& k, const InvariantStore& store)
{
    struct Visitor {
        const InvariantStore& store;
        IntPolynomial operator()(const Unknot&) const { return IntPolynomial{1}; }
        IntPolynomial operator()(const TorusKnot& t) const { return cyclotomic_quotient(t.p, t.q); }
        IntPolynomial operator()(const TwistKnot& t) const
        {
            const long n = static_cast<long>(t.n);
            return normalize_alexander(IntPolynomial{n, -(2 * n + 1), n});
        }
        IntPolynomial operator()(const NamedKnot& n) const { return store.at(n.name).alexander; }
    };
    return std::visit(Visitor{store}, k.value());
}

namespace {

std::optional<TwoVarPolynomial> lookup_a_polynomial(const KnotDescriptor& k, const InvariantStore& store)
{
    if (k.is_unknot()) return TwoVarPolynomial::term(1, 0, 1) - TwoVarPolynomial::term(1, 0, 0);
    if (const auto* t = k.as_torus(); t && t->p == 2 && t->q == 3)
        return TwoVarPolynomial::term(1, 6, 1) + TwoVarPolynomial::term(1, 0, 0);
    if (const auto* n = k.as_named())
        if (const auto* rec = store.find(n->name)) return rec->a_polynomial;
    return std::nullopt;
}

}  // namespace

TwoVarPolynomial a_polynomial(const KnotDescriptor& k, const InvariantStore& store)
{
    if (auto a = lookup_a_polynomial(k, store)) return *a;
    throw MissingAPolynomial("no A-polynomial available for knot " + k.to_string());
}

bool has_a_polynomial(const KnotDescriptor& k, const InvariantStore& store)
{
    return lookup_a_polynomial(k, store).has_value();
}

std::optional<std::vector<std::int64_t>> explicit_boundary_slopes(const KnotDescriptor& k,
                                                                  const InvariantStore& store)
{
    if (const auto* t = k.as_torus()) return std::vector<std::int64_t>{0, t->p * t->q};
    if (const auto* n = k.as_named())
        if (const auto* rec = store.find(n->name); rec && rec->slopes)
            if (const auto* v = std::get_if<std::vector<std::int64_t>>(&*rec->slopes)) return *v;
    return std::nullopt;
}

Tristate boundary_slope_excludes_pm1(const KnotDescriptor& k, const InvariantStore& store)
{
    if (k.as_twist()) return Tristate::True;
    std::optional<SlopeInfo> info;
    if (const auto* n = k.as_named())
        if (const auto* rec = store.find(n->name)) info = rec->slopes;
    if (auto v = explicit_boundary_slopes(k, store)) info = SlopeInfo{*v};
    if (!info) return Tristate::Unknown;
    if (std::holds_alternative<EvenOnlySlopes>(*info)) return Tristate::True;
    for (std::int64_t s : std::get<std::vector<std::int64_t>>(*info))
        if (s == 1 || s == -1) return Tristate::False;
    return Tristate::True;
}

bool is_two_bridge(const KnotDescriptor& k, const InvariantStore& store)
{
    if (k.as_twist()) return true;
    if (const auto* n = k.as_named()) return store.at(n->name).two_bridge;
    // T(2, q) is also 2-bridge, but torus knots are handled on their own.
    return false;
}

bool is_small(const KnotDescriptor& k, const InvariantStore& store)
{
    if (k.is_unknot() || k.as_torus() || k.as_twist()) return true;
    return store.at(k.as_named()->name).small;
}

Rational cs_seminorm(std::int64_t k, std::int64_t alpha, std::int64_t p, std::int64_t q)
{
    if (k < 1) throw std::invalid_argument("cs_seminorm: k must be positive");
    Integer diff = Integer(p) - Integer(q) * Integer(alpha);
    Rational r(Integer(k) * abs(diff), Integer(4));
    r.canonicalize();
    return r;
}

}  // namespace casson
