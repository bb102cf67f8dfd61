#include "casson/splice.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "casson/closed_forms.hpp"

namespace casson {

namespace {

constexpr std::int64_t kDefaultKBound = 8;

const char* kAbelianFactorNote =
    "A-polynomials of nontrivial knots are taken without the abelian factor (L - 1); the unknot's is L - 1";

void touch(const KnotDescriptor& k, const InvariantStore& store)
{
    if (const auto* n = k.as_named()) store.at(n->name);
}

std::int64_t abs64(std::int64_t x)
{
    return x < 0 ? -x : x;
}

LambdaCertificate unsupported(std::string why)
{
    LambdaCertificate c;
    c.status = Status::Unsupported;
    c.notes.push_back(std::move(why));
    return c;
}

std::string side_label(ConditionSide s)
{
    return s == ConditionSide::First ? "A(knot1) vs Delta(knot2)" : "A(knot2) vs Delta(knot1)";
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::int64_t> KRange::nonzero() const
{
    std::vector<std::int64_t> ks;
    for (std::int64_t k = lo; k <= hi; ++k)
        if (k != 0) ks.push_back(k);
    return ks;
}

std::string KRange::to_string() const
{
    return std::to_string(lo) + ".." + std::to_string(hi);
}

KRange parse_krange(std::string_view text)
{
    auto dots = text.find("..");
    auto bad = [&] { return std::invalid_argument("invalid k range '" + std::string(text) + "', expected A..B"); };
    if (dots == std::string_view::npos) throw bad();
    auto num = [&](std::string_view s) {
        std::int64_t v = 0;
        const char* b = s.data();
        const char* e = s.data() + s.size();
        if (b != e && *b == '+') ++b;
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || p != e || b == e) throw bad();
        return v;
    };
    KRange r{num(text.substr(0, dots)), num(text.substr(dots + 2))};
    if (r.lo > r.hi) throw bad();
    return r;
}

KRange default_krange(const KnotDescriptor& k1, const KnotDescriptor& k2, const InvariantStore& store)
{
    std::int64_t bound = kDefaultKBound;
    for (const auto* k : {&k1, &k2})
        if (auto slopes = explicit_boundary_slopes(*k, store))
            for (std::int64_t s : *slopes) bound = std::max(bound, abs64(s));
    return KRange{-bound, bound};
}

std::string ConditionCheck::condition() const
{
    if (k == 0) return "";
    const std::string l = -k == 1 ? "t" : "t^" + std::to_string(-k);
    return "A[" + a_knot + "](t, " + l + ") != 0 at roots of Delta[" + alexander_knot + "](t^" +
           std::to_string(2 * abs64(k)) + ")";
}

std::string ConditionCheck::witness() const
{
    if (!specialized) return "no A-polynomial for " + a_knot;
    std::string w = "gcd = " + (gcd ? gcd->to_string() : std::string("?"));
    if (resultant) w += "; resultant = " + resultant->get_str();
    else if (specialized->is_zero()) w += "; A vanishes identically on this curve";
    return w;
}

std::vector<ConditionCheck> check_splice_conditions(const KnotDescriptor& k1, const KnotDescriptor& k2,
                                                    const KRange& krange, const InvariantStore& store)
{
    std::vector<std::int64_t> ks = krange.nonzero();
    if (ks.empty()) throw std::invalid_argument("k range " + krange.to_string() + " contains no nonzero k");

    const IntPolynomial delta = alexander(k2, store);
    std::optional<TwoVarPolynomial> apoly;
    if (has_a_polynomial(k1, store)) apoly = a_polynomial(k1, store);

    std::vector<ConditionCheck> out;
    out.reserve(ks.size());
    for (std::int64_t k : ks) {
        ConditionCheck c;
        c.k = k;
        c.a_knot = k1.to_string();
        c.alexander_knot = k2.to_string();
        // Alexander polynomials are palindromic, so t^{2k} and t^{-2k} are
        // roots together and |2k| suffices.
        c.alexander_composed = compose_power(delta, static_cast<std::size_t>(2 * abs64(k)));
        if (!apoly) {
            c.verdict = Verdict::Unknown;
            out.push_back(std::move(c));
            continue;
        }
        c.specialized = specialize_L(*apoly, k);
        c.gcd = gcd_rational(c.alexander_composed, *c.specialized);
        const bool shared_by_gcd = *c.gcd->degree() >= 1;
        if (!c.specialized->is_zero()) {
            c.resultant = resultant(c.alexander_composed, *c.specialized);
            const bool shared_by_resultant = sgn(*c.resultant) == 0;
            if (shared_by_gcd != shared_by_resultant)
                throw std::logic_error("condition check k=" + std::to_string(k) +
                                       ": gcd and resultant disagree on a shared root");
        }
        c.verdict = shared_by_gcd ? Verdict::Fail : Verdict::Pass;
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<ConditionCheck> check_splice_conditions_both(const KnotDescriptor& k1, const KnotDescriptor& k2,
                                                         const KRange& krange, const InvariantStore& store)
{
    std::vector<ConditionCheck> out = check_splice_conditions(k1, k2, krange, store);
    for (auto& c : check_splice_conditions(k2, k1, krange, store)) {
        c.side = ConditionSide::Second;
        out.push_back(std::move(c));
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

LambdaCertificate surgery_lambda(const Surgery& s, const InvariantStore& store)
{
    if (s.denominator == 0) return unsupported("slope 1/0 is the trivial filling and is not evaluated");
    if (s.numerator != 1 && s.numerator != -1)
        return unsupported("surgery slope " + std::to_string(s.numerator) + "/" + std::to_string(s.denominator) +
                           " does not give a homology sphere; only 1/q slopes are evaluated");
    const std::int64_t q = s.numerator * s.denominator;
    touch(s.knot, store);

    LambdaCertificate c;
    if (s.knot.is_unknot()) {
        c.status = Status::Computed;
        c.value = 0;
        c.citations.push_back("unknot-surgery-is-S3");
        c.notes.push_back("1/q surgery on the unknot is S3");
        return c;
    }
    if (const auto* t = s.knot.as_torus()) {
        BrieskornTriple m = torus_surgery_manifold(t->p, t->q, q);
        c.status = Status::Computed;
        c.value = torus_surgery_lambda(t->p, t->q, q);
        c.citations = {"torus-surgery-brieskorn", "brieskorn-closed-form"};
        c.notes.push_back("1/" + std::to_string(q) + " surgery on " + s.knot.to_string() + " is " + m.to_string());
        if (q < 0)
            c.notes.push_back("k < 0 uses the orientation-blind convention Sigma(p, q, |pqk - 1|)");
        if (positivity_guarantee(s.knot, q, store)) {
            c.citations.push_back("surgery-positivity");
            if (*c.value <= 0) throw std::logic_error("torus surgery value contradicts the positivity guarantee");
        }
        return c;
    }
    c = unsupported("no closed form for 1/q surgery on " + s.knot.to_string());
    if (positivity_guarantee(s.knot, q, store)) {
        c.citations.push_back("surgery-positivity");
        c.notes.push_back("lambda > 0 is guaranteed for this surgery, but its value is not computed");
    }
    return c;
}

struct FiberSide {
    BrieskornTriple triple;
    std::int64_t fiber;
    std::int64_t other_product;
    std::array<std::int64_t, 2> others;
};

FiberSide fiber_side(const AmbientKnot& a)
{
    const auto& t = std::get<BrieskornTriple>(a.ambient);
    const int idx = std::get<SingularFiber>(a.knot).index;
    std::array<std::int64_t, 2> rest{};
    std::size_t j = 0;
    for (int i = 0; i < 3; ++i)
        if (i != idx - 1) rest[j++] = t[static_cast<std::size_t>(i)];
    return FiberSide{t, t[static_cast<std::size_t>(idx - 1)], rest[0] * rest[1], rest};
}

LambdaCertificate fiber_splice_lambda(const AmbientKnot& s1, const AmbientKnot& s2)
{
    FiberSide a = fiber_side(s1);
    FiberSide b = fiber_side(s2);
    // Sigma(p,q,rs) along its rs fiber with Sigma(pq,r,s) along its pq fiber.
    if (a.fiber != b.other_product || b.fiber != a.other_product)
        return unsupported("splices along singular fibers are only evaluated for the Sigma(p,q,rs) / Sigma(pq,r,s) "
                           "pattern; no A-polynomial data is available for fiber complements");

    std::vector<std::int64_t> four = {a.others[0], a.others[1], b.others[0], b.others[1]};
    std::sort(four.begin(), four.end());
    std::string name = "Sigma(";
    for (std::size_t i = 0; i < four.size(); ++i) name += (i ? "," : "") + std::to_string(four[i]);
    name += ")";

    const std::int64_t lam1 = brieskorn_lambda(a.triple);
    const std::int64_t lam2 = brieskorn_lambda(b.triple);

    LambdaCertificate c;
    c.status = Status::NonAdditiveWarning;
    for (auto side : {ConditionSide::First, ConditionSide::Second}) {
        const FiberSide& aside = side == ConditionSide::First ? a : b;
        c.checks.push_back({side_label(side) + ": A-polynomial of the complement of the order-" +
                                std::to_string(aside.fiber) + " fiber in " + aside.triple.to_string() +
                                " is not available",
                            std::nullopt, Verdict::Unknown, ""});
    }
    c.citations = {"splice-additivity-criterion", "seifert-splice-non-additivity"};
    c.notes.push_back("this splice is the Seifert fibered sphere " + name);
    c.notes.push_back("lambda(" + a.triple.to_string() + ") + lambda(" + b.triple.to_string() +
                      ") = " + std::to_string(lam1) + " + " + std::to_string(lam2) + " = " +
                      std::to_string(lam1 + lam2));
    if (in_catalog(name)) {
        const std::int64_t lhs = catalog_lambda(name);
        c.citations.push_back("catalog");
        c.notes.push_back("catalog lambda(" + name + ") = " + std::to_string(lhs) +
                          (lhs == lam1 + lam2 ? " == " : " != ") + std::to_string(lam1 + lam2) +
                          ": additivity fails for this splice");
    } else {
        c.notes.push_back("additivity is known to fail for this family; no value is reported");
    }
    return c;
}

}  // namespace

LambdaCertificate splice_lambda(const AmbientKnot& s1, const AmbientKnot& s2, const EvalOptions& opts)
{
    const InvariantStore& store = opts.data();
    for (const auto* s : {&s1, &s2})
        if (s->in_three_sphere() && std::holds_alternative<SingularFiber>(s->knot))
            throw std::invalid_argument("a singular fiber needs a Brieskorn ambient");

    LambdaCertificate c;
    if (s1.in_three_sphere() && s2.in_three_sphere()) {
        touch(std::get<KnotDescriptor>(s1.knot), store);
        touch(std::get<KnotDescriptor>(s2.knot), store);
        c.status = Status::VanishesByCorollary;
        c.value = 0;
        c.citations = {"splice-vanishing"};
        c.notes.push_back("lambda of a spliced sum of two knots in S3 is 0; no hypotheses need checking");
    } else if (!s1.in_three_sphere() && !s2.in_three_sphere() && std::holds_alternative<SingularFiber>(s1.knot) &&
               std::holds_alternative<SingularFiber>(s2.knot)) {
        c = fiber_splice_lambda(s1, s2);
    } else {
        c = unsupported("splices mixing S3 and Brieskorn ambients are not evaluated: the additivity hypotheses "
                        "need A-polynomials of the Brieskorn-side knot complement");
    }
    c.expression = ManifoldExpression(Splice{s1, s2}).to_string();
    c.notes.push_back(kAbelianFactorNote);
    c.validate();
    return c;
}

LambdaCertificate ksplice_lambda(std::int64_t k, const KnotDescriptor& k1, const KnotDescriptor& k2,
                                 const EvalOptions& opts)
{
    const InvariantStore& store = opts.data();
    const std::string text = ManifoldExpression(KSplice{k, k1, k2}).to_string();
    if (k == 0) {
        LambdaCertificate c = splice_lambda(AmbientKnot::in_s3(k1), AmbientKnot::in_s3(k2), opts);
        c.expression = text;
        c.citations.push_back("k-splice-at-zero-is-splice");
        return c;
    }

    const Integer delta1_at_one = alexander(k1, store).evaluate(Integer(1));
    const Surgery reduced{1, k, k2};
    LambdaCertificate sub = surgery_lambda(reduced, store);

    LambdaCertificate c;
    c.expression = text;
    c.checks.push_back({"A(knot1) vs Delta(knot2): S3 has no irreducible characters, hypothesis holds vacuously",
                        std::nullopt, Verdict::Pass, "X*(S3) is empty"});
    c.checks.push_back({"A(knot2) vs Delta(knot1): the longitude of " + k2.to_string() +
                            " has eigenvalues +-1 on the surgered side and Delta[" + k1.to_string() + "](1) != 0",
                        std::nullopt, Verdict::Pass, "Delta(1) = " + delta1_at_one.get_str()});
    c.citations.push_back("k-splice-reduction");
    const std::string reduction = "lambda(" + text + ") = lambda(" + ManifoldExpression(reduced).to_string() + ")";

    if (sub.value) {
        c.status = Status::AdditivityApplied;
        c.value = sub.value;
        for (const auto& s : sub.citations) c.citations.push_back(s);
        c.notes.push_back(reduction);
        for (const auto& n : sub.notes) c.notes.push_back(n);
        const auto* t2 = k2.as_torus();
        if (t2 && k > 0 && k1 == KnotDescriptor::torus(2, 3)) {
            c.notes.push_back("with knot1 the left-handed trefoil this is -1 surgery on the " + std::to_string(-k) +
                              "-twisted Whitehead double of " + k2.to_string() + ", lambda = " +
                              std::to_string(whitehead_double_surgery_lambda(t2->p, t2->q, k)));
        }
    } else {
        c.status = Status::ConditionsUnverified;
        c.notes.push_back(reduction + ", which has no available value");
        for (const auto& n : sub.notes) c.notes.push_back(n);
    }
    if (positivity_guarantee(k2, k, store)) {
        c.citations.push_back("k-splice-positivity");
        if (c.value && *c.value <= 0) throw std::logic_error("k-splice value contradicts the positivity guarantee");
        if (!c.value) c.notes.push_back("lambda > 0 is guaranteed for this k-spliced sum");
    }
    c.notes.push_back(kAbelianFactorNote);
    c.validate();
    return c;
}

LambdaCertificate lambda(const ManifoldExpression& expr, const EvalOptions& opts)
{
    const InvariantStore& store = opts.data();
    struct Visitor {
        const EvalOptions& opts;
        const InvariantStore& store;

        LambdaCertificate operator()(const ThreeSphere&) const
        {
            LambdaCertificate c;
            c.status = Status::Computed;
            c.value = 0;
            c.citations = {"simply-connected"};
            return c;
        }
        LambdaCertificate operator()(const BrieskornTriple& t) const
        {
            LambdaCertificate c;
            c.status = Status::Computed;
            c.value = brieskorn_lambda(t);
            c.citations = {"brieskorn-closed-form"};
            c.notes.push_back("(a1-1)(a2-1)(a3-1)/4, certified against the brute-force character count");
            return c;
        }
        LambdaCertificate operator()(const CatalogRef& r) const
        {
            if (!in_catalog(r.name)) return unsupported("no catalog entry for '" + r.name + "'");
            LambdaCertificate c;
            c.status = Status::Computed;
            c.value = catalog_lambda(r.name);
            c.citations = {"catalog"};
            c.notes.push_back("catalog entry " + canonical_catalog_name(r.name));
            return c;
        }
        LambdaCertificate operator()(const Surgery& s) const { return surgery_lambda(s, store); }
        LambdaCertificate operator()(const Splice& s) const { return splice_lambda(s.side1, s.side2, opts); }
        LambdaCertificate operator()(const KSplice& s) const { return ksplice_lambda(s.k, s.knot1, s.knot2, opts); }
    };
    LambdaCertificate c = std::visit(Visitor{opts, store}, expr.value());
    c.expression = expr.to_string();
    c.validate();
    return c;
}

// ---------------------------------------------------------------------------

NonAdditivityReport non_additivity_demo()
{
    NonAdditivityReport r;
    r.lhs = catalog_lambda("Sigma(2,3,5,7)");
    r.rhs_first = brieskorn_lambda(BrieskornTriple(2, 3, 35));
    r.rhs_second = brieskorn_lambda(BrieskornTriple(5, 6, 7));
    r.rhs = r.rhs_first + r.rhs_second;
    r.equal = r.lhs == r.rhs;
    r.configuration =
        "Sigma(2,3,5,7) is the spliced sum of Sigma(2,3,35) and Sigma(6,5,7) along the 35-fiber of the first "
        "and the 6-fiber of the second";
    r.certificate = lambda(sigma4_demo_expression());
    return r;
}

std::string to_text(const NonAdditivityReport& r)
{
    std::ostringstream os;
    os << r.configuration << "\n";
    os << "lambda(Sigma(2,3,5,7))                    = " << r.lhs << "\n";
    os << "lambda(Sigma(2,3,35)) + lambda(Sigma(5,6,7)) = " << r.rhs_first << " + " << r.rhs_second << " = "
       << r.rhs << "\n";
    os << (r.equal ? "additive: " : "not additive: ") << r.lhs << (r.equal ? " == " : " != ") << r.rhs << "\n";
    return os.str();
}

std::string to_json(const NonAdditivityReport& r, int indent)
{
    nlohmann::ordered_json j;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["equal"] = r.equal;
    j["rhs_terms"] = {r.rhs_first, r.rhs_second};
    j["configuration"] = r.configuration;
    j["certificate"] = nlohmann::ordered_json::parse(to_json(r.certificate));
    return j.dump(indent);
}

}  // namespace casson
