// Evaluation of lambda over manifold expressions: spliced and k-spliced
// sums, with exact checks of the additivity hypotheses.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "casson/certificate.hpp"
#include "casson/expression.hpp"
#include "casson/knots.hpp"
#include "casson/polyring.hpp"

namespace casson {

/// Closed integer interval of k values; k = 0 is always skipped.
struct KRange {
    std::int64_t lo = -8;
    std::int64_t hi = 8;

    std::vector<std::int64_t> nonzero() const;
    /// "lo..hi"
    std::string to_string() const;
};

/// Rejects anything but "A..B" with A <= B.
KRange parse_krange(std::string_view text);

/// [-B, B] with B = max(8, |explicit boundary slopes of either knot|).
KRange default_krange(const KnotDescriptor& k1, const KnotDescriptor& k2,
                      const InvariantStore& store = empty_store());

/// Which knot supplies the A-polynomial. First: A of knot1 against the
/// Alexander polynomial of knot2; Second swaps the roles.
enum class ConditionSide { First, Second };

struct ConditionCheck {
    ConditionSide side = ConditionSide::First;
    std::int64_t k = 0;
    Verdict verdict = Verdict::Unknown;
    /// Delta(t^{2|k|}) of the Alexander-side knot.
    IntPolynomial alexander_composed;
    /// A(t, t^-k) of the A-side knot, absent when no A-polynomial is known.
    std::optional<IntPolynomial> specialized;
    std::optional<IntPolynomial> gcd;
    std::optional<Integer> resultant;
    std::string a_knot;
    std::string alexander_knot;

    std::string condition() const;
    std::string witness() const;
};

/// For each k in range, k != 0: PASS iff Delta_{K2}(t^{2k}) and A_{K1}(t, t^-k)
/// share no root, FAIL with the gcd as witness otherwise, UNKNOWN when K1 has
/// no A-polynomial. gcd and resultant detection are both run and must agree.
std::vector<ConditionCheck> check_splice_conditions(const KnotDescriptor& k1, const KnotDescriptor& k2,
                                                    const KRange& krange,
                                                    const InvariantStore& store = empty_store());
/// Both directions; the second is check_splice_conditions(k2, k1) relabelled.
std::vector<ConditionCheck> check_splice_conditions_both(const KnotDescriptor& k1, const KnotDescriptor& k2,
                                                         const KRange& krange,
                                                         const InvariantStore& store = empty_store());

struct EvalOptions {
    const InvariantStore* store = nullptr;
    std::optional<KRange> krange;

    const InvariantStore& data() const { return store ? *store : empty_store(); }
};

LambdaCertificate lambda(const ManifoldExpression& expr, const EvalOptions& opts = {});
LambdaCertificate splice_lambda(const AmbientKnot& s1, const AmbientKnot& s2, const EvalOptions& opts = {});
LambdaCertificate ksplice_lambda(std::int64_t k, const KnotDescriptor& k1, const KnotDescriptor& k2,
                                 const EvalOptions& opts = {});

struct NonAdditivityReport {
    std::int64_t lhs = 0;
    std::int64_t rhs_first = 0;
    std::int64_t rhs_second = 0;
    std::int64_t rhs = 0;
    bool equal = false;
    std::string configuration;
    LambdaCertificate certificate;
};

/// Sigma(2,3,5,7) against Sigma(2,3,35) + Sigma(5,6,7).
NonAdditivityReport non_additivity_demo();
std::string to_text(const NonAdditivityReport& r);
std::string to_json(const NonAdditivityReport& r, int indent = -1);

}  // namespace casson
