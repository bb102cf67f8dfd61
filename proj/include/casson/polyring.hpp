// Exact integer polynomial arithmetic over arbitrary-precision coefficients.
//
// IntPolynomial is univariate in t, TwoVarPolynomial is sparse in (M, L).
// Both are canonical: equal polynomials compare equal member-wise, and the
// zero polynomial has no stored coefficients.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace casson {

using Integer = mpz_class;
using Rational = mpq_class;

class IntPolynomial {
public:
    IntPolynomial() = default;
    /// Coefficients ascending in t; trailing zeros are dropped.
    explicit IntPolynomial(std::vector<Integer> coeffs);
    IntPolynomial(std::initializer_list<long> coeffs);

    static IntPolynomial constant(const Integer& c);
    static IntPolynomial monomial(const Integer& c, std::size_t exponent);

    bool is_zero() const { return coeffs_.empty(); }
    /// nullopt is the zero polynomial's degree (negative infinity).
    std::optional<std::size_t> degree() const;
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    /// Coefficient of t^i, zero past the end.
    Integer coeff(std::size_t i) const;
    /// Leading coefficient; zero for the zero polynomial.
    Integer leading() const;

    Integer evaluate(const Integer& x) const;
    Rational evaluate(const Rational& x) const;

    IntPolynomial operator-() const;
    IntPolynomial& operator+=(const IntPolynomial& rhs);
    IntPolynomial& operator-=(const IntPolynomial& rhs);
    IntPolynomial& operator*=(const IntPolynomial& rhs);
    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    IntPolynomial operator*(const Integer& c) const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// gcd of the coefficients, nonnegative; zero for the zero polynomial.
    Integer content() const;
    /// Divides out the content and makes the leading coefficient positive.
    IntPolynomial primitive_part() const;
    /// Multiplicity of t as a factor (0 for the zero polynomial).
    std::size_t low_order() const;
    /// Divides out t^low_order().
    IntPolynomial strip_t_factor() const;
    /// t^deg * f(1/t).
    IntPolynomial reversed() const;

    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// f(t^k); rejects k == 0.
IntPolynomial compose_power(const IntPolynomial& f, std::size_t k);

/// Pseudo-remainder: lc(g)^(deg f - deg g + 1) * f mod g. Rejects g == 0.
IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g);

/// Exact quotient f / g over Z; throws std::domain_error if g does not divide f.
IntPolynomial exact_quotient(const IntPolynomial& f, const IntPolynomial& g);

/// Primitive, positive-leading representative of gcd(f, g) over Q.
/// Rejects f == g == 0.
IntPolynomial gcd_rational(const IntPolynomial& f, const IntPolynomial& g);

/// Resultant via the subresultant PRS. Rejects a zero argument.
Integer resultant(const IntPolynomial& f, const IntPolynomial& g);

class TwoVarPolynomial {
public:
    /// Exponent pair (degree in M, degree in L).
    using Exponent = std::pair<std::uint32_t, std::uint32_t>;
    using TermMap = std::map<Exponent, Integer>;

    TwoVarPolynomial() = default;
    explicit TwoVarPolynomial(const TermMap& terms);

    /// coeff * M^deg_m * L^deg_l
    static TwoVarPolynomial term(const Integer& coeff, std::uint32_t deg_m, std::uint32_t deg_l);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Adds coeff * M^deg_m * L^deg_l in place, dropping a cancelled term.
    void add_term(const Integer& coeff, std::uint32_t deg_m, std::uint32_t deg_l);

    Rational evaluate(const Rational& m, const Rational& l) const;

    TwoVarPolynomial operator-() const;
    TwoVarPolynomial& operator+=(const TwoVarPolynomial& rhs);
    TwoVarPolynomial& operator-=(const TwoVarPolynomial& rhs);
    friend TwoVarPolynomial operator+(TwoVarPolynomial a, const TwoVarPolynomial& b) { return a += b; }
    friend TwoVarPolynomial operator-(TwoVarPolynomial a, const TwoVarPolynomial& b) { return a -= b; }
    friend TwoVarPolynomial operator*(const TwoVarPolynomial& a, const TwoVarPolynomial& b);

    friend bool operator==(const TwoVarPolynomial& a, const TwoVarPolynomial& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    TermMap terms_;
};

/// A(t, t^-k) with denominators cleared and every factor of t removed.
/// Nonzero roots of the result are exactly the nonzero t with A(t, t^-k) = 0.
IntPolynomial specialize_L(const TwoVarPolynomial& a, std::int64_t k);

}  // namespace casson
