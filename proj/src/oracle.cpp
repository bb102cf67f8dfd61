#include "casson/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

namespace casson {

namespace {

// Inverse of x modulo m, for gcd(x, m) = 1 and m >= 2.
std::int64_t inverse_mod(std::int64_t x, std::int64_t m)
{
    std::int64_t r0 = m, r1 = ((x % m) + m) % m;
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    if (r0 != 1) throw std::invalid_argument("inverse_mod: arguments are not coprime");
    return ((s0 % m) + m) % m;
}

bool even(std::int64_t x)
{
    return x % 2 == 0;
}

// kappa vanishes exactly when A + s1*B + s2*C is an even integer for some
// signs, with A, B, C the rotation angles in units of pi; the numerators
// below are those angles over the common denominator a.
bool reducible_exact(std::int64_t a, std::int64_t n1, std::int64_t n2, std::int64_t n3)
{
    const std::int64_t period = 2 * a;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1}) {
            std::int64_t n = n1 + s1 * n2 + s2 * n3;
            if (((n % period) + period) % period == 0) return true;
        }
    return false;
}

constexpr double kKappaTolerance = 1e-9;

}  // namespace

SeifertInvariants seifert_invariants(const BrieskornTriple& t)
{
    const std::int64_t a = t.product();
    SeifertInvariants s;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        std::int64_t m = a / t[i];
        s.b_i[i] = inverse_mod(m, t[i]);
        sum += s.b_i[i] * m;
    }
    if ((1 - sum) % a != 0) throw std::logic_error("seifert_invariants: relation not solvable");
    s.b = (1 - sum) / a;
    check_seifert_invariants(t, s);
    return s;
}

void check_seifert_invariants(const BrieskornTriple& t, const SeifertInvariants& s)
{
    const std::int64_t a = t.product();
    std::int64_t e = s.b * a;
    for (std::size_t i = 0; i < 3; ++i) e += s.b_i[i] * (a / t[i]);
    if (e != 1 && e != -1)
        throw std::invalid_argument("Seifert invariants do not present a homology sphere (Euler relation gives " +
                                    std::to_string(e) + ")");
}

double kappa(double t1, double t2, double t3)
{
    return t1 * t1 + t2 * t2 + t3 * t3 - t1 * t2 * t3 - 4.0;
}

std::vector<CandidateCharacter> enumerate_candidates(const BrieskornTriple& t, const SeifertInvariants& s)
{
    check_seifert_invariants(t, s);
    const std::int64_t a = t.product();
    std::vector<CandidateCharacter> out;
    for (int eps : {1, -1}) {
        // Parity of l_i is forced by x_i^{a_i} = h^{-b_i} = eps^{b_i}.
        auto parity_ok = [&](std::size_t i, std::int64_t l) {
            bool want_odd = (eps == -1) && !even(s.b_i[i]);
            return even(l) != want_odd;
        };
        // tr(x1 x2) = eps^b tr(x3).
        const bool flip3 = (eps == -1) && !even(s.b);
        for (std::int64_t l1 = 1; l1 < t[0]; ++l1) {
            if (!parity_ok(0, l1)) continue;
            for (std::int64_t l2 = 1; l2 < t[1]; ++l2) {
                if (!parity_ok(1, l2)) continue;
                for (std::int64_t l3 = 1; l3 < t[2]; ++l3) {
                    if (!parity_ok(2, l3)) continue;
                    CandidateCharacter c;
                    c.rotation = RotationTriple{{l1, l2, l3}, eps};
                    const double pi = std::numbers::pi;
                    c.traces[0] = 2.0 * std::cos(pi * double(l1) / double(t[0]));
                    c.traces[1] = 2.0 * std::cos(pi * double(l2) / double(t[1]));
                    double t3 = 2.0 * std::cos(pi * double(l3) / double(t[2]));
                    c.traces[2] = flip3 ? -t3 : t3;

                    std::int64_t n1 = l1 * (a / t[0]);
                    std::int64_t n2 = l2 * (a / t[1]);
                    std::int64_t n3 = l3 * (a / t[2]);
                    // -2cos(x) = 2cos(pi - x)
                    if (flip3) n3 = a - n3;
                    c.irreducible = !reducible_exact(a, n1, n2, n3);

                    double k = kappa(c.traces[0], c.traces[1], c.traces[2]);
                    if ((!c.irreducible && std::abs(k) > kKappaTolerance) ||
                        (c.irreducible && k == 0.0))
                        throw std::logic_error("oracle: exact and floating-point reducibility tests disagree on " +
                                               t.to_string());
                    out.push_back(c);
                }
            }
        }
    }
    return out;
}

std::int64_t count_irreducible_characters(const BrieskornTriple& t)
{
    return count_irreducible_characters(t, seifert_invariants(t));
}

std::int64_t count_irreducible_characters(const BrieskornTriple& t, const SeifertInvariants& s)
{
    // The trace triple together with the central sign pins down the character.
    std::set<RotationTriple> seen;
    for (const auto& c : enumerate_candidates(t, s))
        if (c.irreducible) seen.insert(c.rotation);
    return static_cast<std::int64_t>(seen.size());
}

SweepResult verify_closed_form(std::int64_t max_product)
{
    std::vector<BrieskornTriple> triples;
    for (std::int64_t a1 = 2; a1 * (a1 + 1) * (a1 + 2) <= max_product; ++a1)
        for (std::int64_t a2 = a1 + 1; a1 * a2 * (a2 + 1) <= max_product; ++a2) {
            if (std::gcd(a1, a2) != 1) continue;
            for (std::int64_t a3 = a2 + 1; a1 * a2 * a3 <= max_product; ++a3)
                if (std::gcd(a1, a3) == 1 && std::gcd(a2, a3) == 1) triples.emplace_back(a1, a2, a3);
        }

    const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    const std::size_t chunk = (triples.size() + workers - 1) / std::max<std::size_t>(workers, 1);
    std::vector<std::future<std::vector<SweepMismatch>>> jobs;
    for (std::size_t begin = 0; begin < triples.size(); begin += chunk) {
        std::size_t end = std::min(triples.size(), begin + chunk);
        jobs.push_back(std::async(std::launch::async, [&triples, begin, end] {
            std::vector<SweepMismatch> bad;
            for (std::size_t i = begin; i < end; ++i) {
                std::int64_t o = count_irreducible_characters(triples[i]);
                std::int64_t f = brieskorn_lambda(triples[i]);
                if (o != f) bad.push_back({triples[i], o, f});
            }
            return bad;
        }));
    }
    SweepResult result;
    result.triples_checked = triples.size();
    for (auto& j : jobs) {
        auto bad = j.get();
        result.mismatches.insert(result.mismatches.end(), bad.begin(), bad.end());
    }
    return result;
}

}  // namespace casson
