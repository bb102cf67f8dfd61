// Brute-force enumeration of irreducible SL(2,C) characters of Brieskorn
// spheres, independent of the closed form in closed_forms.hpp.
//
// pi_1 Sigma(a1,a2,a3) = < x1, x2, x3, h | h central, x_i^{a_i} = h^{-b_i},
// x1 x2 x3 = h^b > with b*a + sum b_i * a / a_i = 1, a = a1 a2 a3.
// An irreducible representation sends h to eps*I, each x_i to a non-central
// element with eigenvalues exp(+-i pi l_i / a_i), and is determined up to
// conjugacy by (tr x1, tr x2, tr x1x2) = (t1, t2, eps^b t3) when that triple
// has kappa != 0.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "casson/closed_forms.hpp"

namespace casson {

struct SeifertInvariants {
    std::int64_t b = 0;
    std::array<std::int64_t, 3> b_i{};
};

/// b_i = (a / a_i)^{-1} mod a_i, b fixed by the unimodular relation.
SeifertInvariants seifert_invariants(const BrieskornTriple& t);
/// Throws std::invalid_argument unless b*a + sum b_i a/a_i = +-1.
void check_seifert_invariants(const BrieskornTriple& t, const SeifertInvariants& s);

/// Rotation data of one candidate character: x_i has trace 2 cos(pi l_i / a_i).
struct RotationTriple {
    std::array<std::int64_t, 3> l{};
    int central_sign = 1;

    friend auto operator<=>(const RotationTriple&, const RotationTriple&) = default;
};

/// t1^2 + t2^2 + t3^2 - t1 t2 t3 - 4; zero iff every pair of SL(2,C)
/// matrices with traces t1, t2 and product trace t3 is reducible.
double kappa(double t1, double t2, double t3);

struct CandidateCharacter {
    RotationTriple rotation;
    std::array<double, 3> traces{};  ///< tr x1, tr x2, tr x1x2
    bool irreducible = false;
};

/// Every rotation triple consistent with the presentation, classified exactly.
std::vector<CandidateCharacter> enumerate_candidates(const BrieskornTriple& t, const SeifertInvariants& s);

std::int64_t count_irreducible_characters(const BrieskornTriple& t);
std::int64_t count_irreducible_characters(const BrieskornTriple& t, const SeifertInvariants& s);

struct SweepMismatch {
    BrieskornTriple triple;
    std::int64_t oracle;
    std::int64_t closed_form;
};

struct SweepResult {
    std::size_t triples_checked = 0;
    std::vector<SweepMismatch> mismatches;
};

/// Compares the oracle with brieskorn_lambda on every valid triple with
/// a1*a2*a3 <= max_product.
SweepResult verify_closed_form(std::int64_t max_product);

}  // namespace casson
