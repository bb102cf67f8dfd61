// Closed-form SL(2,C) Casson invariants of the building-block manifolds and
// the positivity predicates for 1/q surgeries.
#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "casson/knots.hpp"

namespace casson {

/// Sigma(a1, a2, a3): pairwise coprime orders >= 2, stored ascending.
class BrieskornTriple {
public:
    BrieskornTriple(std::int64_t a1, std::int64_t a2, std::int64_t a3);

    const std::array<std::int64_t, 3>& orders() const { return a_; }
    std::int64_t operator[](std::size_t i) const { return a_[i]; }
    std::int64_t product() const { return a_[0] * a_[1] * a_[2]; }

    /// "brieskorn(a1,a2,a3)"
    std::string to_string() const;

    friend bool operator==(const BrieskornTriple&, const BrieskornTriple&) = default;

private:
    std::array<std::int64_t, 3> a_;
};

bool is_valid_brieskorn(std::int64_t a1, std::int64_t a2, std::int64_t a3);

/// (a1 - 1)(a2 - 1)(a3 - 1) / 4.
std::int64_t brieskorn_lambda(const BrieskornTriple& t);

class UnknownCatalogName : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Sigma(2,3,5,7) -> 20; Sigma(a,b,c) aliases brieskorn_lambda.
std::int64_t catalog_lambda(std::string_view name);
/// Whitespace-free spelling with sorted orders, e.g. "Sigma(2,3,5,7)".
std::string canonical_catalog_name(std::string_view name);
bool in_catalog(std::string_view name);

/// -1 surgery on the twisted Whitehead double of T(p, q), k > 0:
/// (p - 1)(q - 1)(pqk - 2) / 4.
std::int64_t whitehead_double_surgery_lambda(std::int64_t p, std::int64_t q, std::int64_t k);

/// 1/k surgery on T(p, q) is Sigma(p, q, |pqk - 1|).
BrieskornTriple torus_surgery_manifold(std::int64_t p, std::int64_t q, std::int64_t k);
std::int64_t torus_surgery_lambda(std::int64_t p, std::int64_t q, std::int64_t k);

/// True when lambda(S^3_{1/q}(K)) > 0 is guaranteed: K a torus knot or a
/// 2-bridge knot and any q != 0, or K small and nontrivial with |q| > 1.
/// False only means no guarantee.
bool positivity_guarantee(const KnotDescriptor& k, std::int64_t q, const InvariantStore& store = empty_store());

}  // namespace casson
