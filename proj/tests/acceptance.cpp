// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "casson/closed_forms.hpp"
#include "casson/oracle.hpp"
#include "casson/splice.hpp"

using namespace casson;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string data_path(const std::string& file)
{
    return std::string(CASSON_SOURCE_DIR) + "/" + file;
}

bool run_criterion(int id, const char* title, double limit_seconds, const std::function<Outcome()>& body)
{
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs >= limit_seconds) {
        o.ok = false;
        o.detail = "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_seconds) + " s";
    }
    std::printf("%s criterion %d: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    return o.ok;
}

std::vector<KnotDescriptor> small_torus_knots(std::int64_t bound)
{
    std::vector<KnotDescriptor> ks;
    for (std::int64_t p = 2; p <= bound; ++p)
        for (std::int64_t q = p + 1; q <= bound; ++q)
            if (std::gcd(p, q) == 1) ks.push_back(KnotDescriptor::torus(p, q));
    return ks;
}

IntPolynomial random_polynomial(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<int> deg(0, max_degree), coef(-5, 5);
    for (;;) {
        std::vector<Integer> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        IntPolynomial f(std::move(c));
        if (!f.is_zero()) return f;
    }
}

Outcome paper_values()
{
    Outcome o;
    o.require(brieskorn_lambda(BrieskornTriple(2, 3, 35)) == 17, "lambda(2,3,35) != 17");
    o.require(brieskorn_lambda(BrieskornTriple(5, 6, 7)) == 30, "lambda(5,6,7) != 30");
    o.require(catalog_lambda("Sigma(2,3,5,7)") == 20, "catalog Sigma(2,3,5,7) != 20");
    const NonAdditivityReport r = non_additivity_demo();
    o.require(r.lhs == 20 && r.rhs == 47 && !r.equal, "demo does not report 20 != 47");
    return o;
}

Outcome vanishing()
{
    Outcome o;
    const auto knots = small_torus_knots(7);
    int n = 0;
    for (const auto& a : knots)
        for (const auto& b : knots) {
            const auto c = lambda(Splice{AmbientKnot::in_s3(a), AmbientKnot::in_s3(b)});
            o.require(c.value == 0 && c.status == Status::VanishesByCorollary, c.expression + " did not vanish");
            ++n;
        }
    o.require(n == 121, "unexpected pair count " + std::to_string(n));
    return o;
}

Outcome whitehead()
{
    Outcome o;
    int n = 0;
    for (std::int64_t p = 2; p <= 250; ++p)
        for (std::int64_t q = p + 1; p * q <= 500; ++q) {
            if (std::gcd(p, q) != 1) continue;
            for (std::int64_t k = 1; p * q * k <= 500; ++k) {
                const std::int64_t w = whitehead_double_surgery_lambda(p, q, k);
                const std::string at = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(k) + ")";
                o.require(4 * w == (p - 1) * (q - 1) * (p * q * k - 2), "formula mismatch at " + at);
                o.require(w == brieskorn_lambda(BrieskornTriple(p, q, p * q * k - 1)), "brieskorn mismatch at " + at);
                ++n;
            }
        }
    o.require(n > 0, "no cases");
    return o;
}

Outcome oracle_certification()
{
    Outcome o;
    std::size_t n = 0;
    for (std::int64_t a = 2; a * (a + 1) * (a + 2) <= 1000; ++a)
        for (std::int64_t b = a + 1; a * b * (b + 1) <= 1000; ++b)
            for (std::int64_t c = b + 1; a * b * c <= 1000; ++c) {
                if (!is_valid_brieskorn(a, b, c)) continue;
                const BrieskornTriple t(a, b, c);
                o.require(count_irreducible_characters(t) == brieskorn_lambda(t), "mismatch at " + t.to_string());
                ++n;
            }
    o.require(n == 413, "expected 413 triples, saw " + std::to_string(n));
    const SweepResult parallel = verify_closed_form(1000);
    o.require(parallel.triples_checked == n && parallel.mismatches.empty(), "parallel sweep disagrees");
    return o;
}

Outcome ksplice_consistency()
{
    Outcome o;
    for (std::int64_t k = -6; k <= 6; ++k) {
        if (k == 0) continue;
        const auto c = ksplice_lambda(k, KnotDescriptor::unknot(), KnotDescriptor::torus(2, 3));
        const std::int64_t m = 6 * k - 1 < 0 ? 1 - 6 * k : 6 * k - 1;
        o.require(c.value == brieskorn_lambda(BrieskornTriple(2, 3, m)), "k = " + std::to_string(k));
        o.require(c.status == Status::AdditivityApplied, "status at k = " + std::to_string(k));
    }
    o.require(ksplice_lambda(6, KnotDescriptor::unknot(), KnotDescriptor::torus(2, 3)).value == 17, "k = 6 is not 17");
    return o;
}

Outcome checker_soundness()
{
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::size_t pairs = 0, shared = 0;
    for (int i = 0; i < 16000; ++i) {
        IntPolynomial f = random_polynomial(rng, 6);
        IntPolynomial g = random_polynomial(rng, 6);
        if (i % 4 == 0) {
            // Planted common factor, total degree still <= 6.
            IntPolynomial h = random_polynomial(rng, 2);
            f = random_polynomial(rng, 4) * h;
            g = random_polynomial(rng, 4) * h;
            if (f.is_zero() || g.is_zero()) continue;
        }
        const bool by_gcd = *gcd_rational(f, g).degree() >= 1;
        const bool by_res = resultant(f, g) == 0;
        o.require(by_gcd == by_res, "disagreement on f = " + f.to_string() + ", g = " + g.to_string());
        ++pairs;
        shared += by_gcd;
    }
    o.require(pairs >= 10000, "only " + std::to_string(pairs) + " pairs");

    // Every check executed by the engine cross-checks internally and throws on disagreement.
    InvariantStore store;
    store.load_file(data_path("data/knots.dat"));
    auto knots = small_torus_knots(7);
    knots.push_back(KnotDescriptor::unknot());
    knots.push_back(KnotDescriptor::named("4_1"));
    std::size_t executed = 0;
    for (const auto& a : knots)
        for (const auto& b : knots)
            for (const auto& c : check_splice_conditions_both(a, b, KRange{-8, 8}, store)) {
                if (!c.resultant) continue;
                o.require((*c.gcd->degree() >= 1) == (*c.resultant == 0), "engine check disagrees");
                ++executed;
            }
    o.detail = o.ok ? std::to_string(pairs) + " random pairs (" + std::to_string(shared) + " with shared roots), " +
                          std::to_string(executed) + " engine checks"
                    : o.detail;
    return o;
}

bool valid_alexander(const IntPolynomial& d)
{
    const Integer one = d.evaluate(Integer(1));
    const IntPolynomial r = d.reversed();
    return (one == 1 || one == -1) && (r == d || r == -d);
}

Outcome alexander_invariants()
{
    Outcome o;
    o.require(valid_alexander(alexander(KnotDescriptor::unknot())), "unknot");
    for (const auto& k : small_torus_knots(12)) o.require(valid_alexander(alexander(k)), k.to_string());
    for (std::int64_t n = -10; n <= 10; ++n)
        if (n != 0) o.require(valid_alexander(alexander(KnotDescriptor::twist(n))), "twist " + std::to_string(n));

    InvariantStore store;
    o.require(store.load_file(data_path("data/knots.dat")) == 3, "sample data did not load 3 records");
    for (const auto& [name, rec] : store.records()) o.require(valid_alexander(rec.alexander), name);

    InvariantStore probe;
    bool rejected = false;
    try {
        probe.load_file(data_path("tests/data/corrupt_alexander.dat"));
    } catch (const KnotDataError& e) {
        rejected = e.kind() == KnotDataError::Kind::Validation;
    }
    o.require(rejected && probe.size() == 0, "corrupted data file was accepted");
    return o;
}

Outcome positivity_table()
{
    Outcome o;
    InvariantStore store;
    store.load_file(data_path("data/knots.dat"));
    std::istringstream extra("knot small_only\nalexander 1 -1 1\nflags small\nend\n"
                             "knot plain\nalexander 1 -3 1\nend\n");
    store.load(extra, "acceptance");

    struct Row {
        KnotDescriptor knot;
        std::int64_t q;
        bool expected;
    };
    const auto T = [](std::int64_t p, std::int64_t q) { return KnotDescriptor::torus(p, q); };
    const auto W = [](std::int64_t n) { return KnotDescriptor::twist(n); };
    const auto N = [](const char* s) { return KnotDescriptor::named(s); };
    const auto U = KnotDescriptor::unknot();
    // Torus and 2-bridge knots: any q != 0. Small nontrivial knots: |q| > 1 only.
    const std::vector<Row> rows = {
        {T(2, 3), 1, true},         {T(2, 3), -1, true},        {T(2, 3), 2, true},
        {T(2, 3), -3, true},        {T(2, 3), 0, false},        {T(3, 5), 1, true},
        {T(3, 5), -1, true},        {T(3, 5), 7, true},         {T(2, 7), -2, true},
        {T(2, 7), 5, true},         {W(1), 1, true},            {W(1), -1, true},
        {W(1), 2, true},            {W(1), 0, false},           {W(-2), 1, true},
        {W(-2), -4, true},          {N("4_1"), 1, true},        {N("4_1"), -1, true},
        {N("4_1"), 3, true},        {N("4_1"), 0, false},       {N("5_2"), 1, true},
        {N("5_2"), -2, true},       {N("pretzel_m2_3_7"), 1, false},  {N("pretzel_m2_3_7"), -1, false},
        {N("pretzel_m2_3_7"), 2, true},   {N("pretzel_m2_3_7"), -2, true},  {N("pretzel_m2_3_7"), 3, true},
        {N("pretzel_m2_3_7"), -5, true},  {N("pretzel_m2_3_7"), 0, false},  {U, 1, false},
        {U, -1, false},             {U, 2, false},              {U, -2, false},
        {U, 5, false},              {U, 0, false},              {N("small_only"), 1, false},
        {N("small_only"), -1, false}, {N("small_only"), 2, true}, {N("small_only"), 4, true},
        {N("plain"), 1, false},     {N("plain"), 2, false},     {N("plain"), -3, false},
        {T(4, 5), 1, true},         {T(4, 5), -1, true},        {T(5, 6), 3, true},
        {W(3), -1, true},           {N("5_2"), 0, false},       {N("4_1"), -6, true},
        {T(3, 4), -1, true},        {N("pretzel_m2_3_7"), 10, true},
    };
    o.require(rows.size() == 50, "table has " + std::to_string(rows.size()) + " rows");
    for (const auto& r : rows)
        o.require(positivity_guarantee(r.knot, r.q, store) == r.expected,
                  r.knot.to_string() + ", q = " + std::to_string(r.q));
    return o;
}

}  // namespace

int main()
{
    bool ok = true;
    ok &= run_criterion(1, "paper values 17, 30, 20 and 20 != 47", 1.0, paper_values);
    ok &= run_criterion(2, "spliced sums of torus knots in S3 vanish", 1.0, vanishing);
    ok &= run_criterion(3, "Whitehead double formula for pqk <= 500", 5.0, whitehead);
    ok &= run_criterion(4, "oracle count equals closed form for a1a2a3 <= 1000", 60.0, oracle_certification);
    ok &= run_criterion(5, "k-splice with the unknot matches brieskorn(2,3,|6k-1|)", 1.0, ksplice_consistency);
    ok &= run_criterion(6, "gcd and resultant shared-root detection agree", 30.0, checker_soundness);
    ok &= run_criterion(7, "Alexander invariants hold; corrupted data rejected", 5.0, alexander_invariants);
    ok &= run_criterion(8, "positivity truth table of 50 cases", 1.0, positivity_table);
    return ok ? 0 : 1;
}
