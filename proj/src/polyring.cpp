#include "casson/polyring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace casson {

namespace {

Integer pow_int(const Integer& base, std::size_t e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

// Appends one signed term of a rendered polynomial.
void append_term(std::ostringstream& os, const Integer& c, const std::string& monomial, bool first)
{
    Integer mag = abs(c);
    if (first) {
        if (sgn(c) < 0) os << "-";
    } else {
        os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (monomial.empty()) {
        os << mag;
    } else {
        if (mag != 1) os << mag << "*";
        os << monomial;
    }
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial IntPolynomial::constant(const Integer& c)
{
    return IntPolynomial(std::vector<Integer>{c});
}

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t exponent)
{
    std::vector<Integer> v(exponent + 1);
    v[exponent] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

std::optional<std::size_t> IntPolynomial::degree() const
{
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Integer IntPolynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
}

Integer IntPolynomial::leading() const
{
    return coeffs_.empty() ? Integer(0) : coeffs_.back();
}

Integer IntPolynomial::evaluate(const Integer& x) const
{
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntPolynomial::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + Rational(*it);
        acc.canonicalize();
    }
    return acc;
}

IntPolynomial IntPolynomial::operator-() const
{
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs)
{
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            mpz_addmul(out[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(), rhs.coeffs_[j].get_mpz_t());
        }
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial IntPolynomial::operator*(const Integer& c) const
{
    IntPolynomial r = *this;
    for (auto& x : r.coeffs_) x *= c;
    r.trim();
    return r;
}

Integer IntPolynomial::content() const
{
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const
{
    if (is_zero()) return {};
    Integer g = content();
    if (sgn(leading()) < 0) g = -g;
    IntPolynomial r = *this;
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

std::size_t IntPolynomial::low_order() const
{
    std::size_t i = 0;
    while (i < coeffs_.size() && sgn(coeffs_[i]) == 0) ++i;
    return coeffs_.empty() ? 0 : i;
}

IntPolynomial IntPolynomial::strip_t_factor() const
{
    std::size_t m = low_order();
    return IntPolynomial(std::vector<Integer>(coeffs_.begin() + static_cast<std::ptrdiff_t>(m), coeffs_.end()));
}

IntPolynomial IntPolynomial::reversed() const
{
    return IntPolynomial(std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend()));
}

std::string IntPolynomial::to_string(char var) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (sgn(coeffs_[i]) == 0) continue;
        std::string mono;
        if (i == 1) mono = std::string(1, var);
        else if (i > 1) mono = std::string(1, var) + "^" + std::to_string(i);
        append_term(os, coeffs_[i], mono, first);
        first = false;
    }
    return os.str();
}

IntPolynomial compose_power(const IntPolynomial& f, std::size_t k)
{
    if (k == 0) throw std::invalid_argument("compose_power: exponent must be positive");
    const auto& c = f.coefficients();
    if (c.size() <= 1) return f;
    std::vector<Integer> out((c.size() - 1) * k + 1);
    for (std::size_t i = 0; i < c.size(); ++i) out[i * k] = c[i];
    return IntPolynomial(std::move(out));
}

IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g)
{
    if (g.is_zero()) throw std::invalid_argument("pseudo_remainder: division by the zero polynomial");
    if (f.is_zero()) return {};
    const std::size_t dg = *g.degree();
    const std::size_t df = *f.degree();
    if (df < dg) return f;

    std::vector<Integer> r = f.coefficients();
    const auto& gc = g.coefficients();
    const Integer& lg = gc.back();
    // Exactly df - dg + 1 scalings by lg, one per eliminated position.
    for (std::size_t i = df + 1; i-- > dg;) {
        Integer top = r[i];
        for (std::size_t j = 0; j < i; ++j) r[j] *= lg;
        r[i] = 0;
        if (sgn(top) == 0) continue;
        for (std::size_t j = 0; j < dg; ++j) r[i - dg + j] -= top * gc[j];
    }
    r.resize(dg);
    return IntPolynomial(std::move(r));
}

IntPolynomial exact_quotient(const IntPolynomial& f, const IntPolynomial& g)
{
    if (g.is_zero()) throw std::invalid_argument("exact_quotient: division by the zero polynomial");
    if (f.is_zero()) return {};
    const std::size_t dg = *g.degree();
    if (*f.degree() < dg) throw std::domain_error("exact_quotient: divisor does not divide dividend");
    std::vector<Integer> r = f.coefficients();
    const auto& gc = g.coefficients();
    std::vector<Integer> q(*f.degree() - dg + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        const Integer& top = r[i + dg];
        if (!mpz_divisible_p(top.get_mpz_t(), gc.back().get_mpz_t()))
            throw std::domain_error("exact_quotient: divisor does not divide dividend");
        Integer c;
        mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), gc.back().get_mpz_t());
        for (std::size_t j = 0; j <= dg; ++j) r[i + j] -= c * gc[j];
        q[i] = c;
    }
    for (const auto& x : r)
        if (sgn(x) != 0) throw std::domain_error("exact_quotient: divisor does not divide dividend");
    return IntPolynomial(std::move(q));
}

IntPolynomial gcd_rational(const IntPolynomial& f, const IntPolynomial& g)
{
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("gcd_rational: both arguments are zero");
    IntPolynomial a = f.primitive_part();
    IntPolynomial b = g.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (*a.degree() < *b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a.primitive_part();
}

Integer resultant(const IntPolynomial& f, const IntPolynomial& g)
{
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial argument");
    const std::size_t df = *f.degree();
    const std::size_t dg = *g.degree();
    if (df == 0) return pow_int(f.leading(), dg);
    if (dg == 0) return pow_int(g.leading(), df);

    Integer ca = f.content();
    Integer cb = g.content();
    // Contents are positive, so the signs of f and g survive.
    IntPolynomial a = exact_quotient(f, IntPolynomial::constant(ca));
    IntPolynomial b = exact_quotient(g, IntPolynomial::constant(cb));

    Integer scale = pow_int(ca, dg) * pow_int(cb, df);
    int sign = 1;
    if (df < dg) {
        std::swap(a, b);
        if ((df % 2 == 1) && (dg % 2 == 1)) sign = -sign;
    }

    Integer g_ = 1;
    Integer h = 1;
    while (true) {
        const std::size_t da = *a.degree();
        const std::size_t db = *b.degree();
        const std::size_t delta = da - db;
        if ((da % 2 == 1) && (db % 2 == 1)) sign = -sign;
        IntPolynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return 0;
        Integer divisor = g_ * pow_int(h, delta);
        b = exact_quotient(r, IntPolynomial::constant(divisor));
        g_ = a.leading();
        // h <- h^(1 - delta) * g^delta
        if (delta > 0) {
            Integer num = pow_int(g_, delta);
            Integer den = pow_int(h, delta - 1);
            mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        }
        if (*b.degree() == 0) break;
    }
    const std::size_t da = *a.degree();
    Integer num = pow_int(b.leading(), da);
    Integer den = pow_int(h, da - 1);
    Integer last;
    mpz_divexact(last.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer out = scale * last;
    return sign < 0 ? Integer(-out) : out;
}

// ---------------------------------------------------------------------------

TwoVarPolynomial::TwoVarPolynomial(const TermMap& terms)
{
    for (const auto& [e, c] : terms) add_term(c, e.first, e.second);
}

TwoVarPolynomial TwoVarPolynomial::term(const Integer& coeff, std::uint32_t deg_m, std::uint32_t deg_l)
{
    TwoVarPolynomial p;
    p.add_term(coeff, deg_m, deg_l);
    return p;
}

void TwoVarPolynomial::add_term(const Integer& coeff, std::uint32_t deg_m, std::uint32_t deg_l)
{
    if (sgn(coeff) == 0) return;
    auto [it, inserted] = terms_.try_emplace({deg_m, deg_l}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational TwoVarPolynomial::evaluate(const Rational& m, const Rational& l) const
{
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        Rational mm, ll;
        mpz_pow_ui(mm.get_num_mpz_t(), m.get_num_mpz_t(), e.first);
        mpz_pow_ui(mm.get_den_mpz_t(), m.get_den_mpz_t(), e.first);
        mpz_pow_ui(ll.get_num_mpz_t(), l.get_num_mpz_t(), e.second);
        mpz_pow_ui(ll.get_den_mpz_t(), l.get_den_mpz_t(), e.second);
        mm.canonicalize();
        ll.canonicalize();
        acc += Rational(c) * mm * ll;
    }
    acc.canonicalize();
    return acc;
}

TwoVarPolynomial TwoVarPolynomial::operator-() const
{
    TwoVarPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

TwoVarPolynomial& TwoVarPolynomial::operator+=(const TwoVarPolynomial& rhs)
{
    for (const auto& [e, c] : rhs.terms_) add_term(c, e.first, e.second);
    return *this;
}

TwoVarPolynomial& TwoVarPolynomial::operator-=(const TwoVarPolynomial& rhs)
{
    for (const auto& [e, c] : rhs.terms_) add_term(-c, e.first, e.second);
    return *this;
}

TwoVarPolynomial operator*(const TwoVarPolynomial& a, const TwoVarPolynomial& b)
{
    TwoVarPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ca * cb, ea.first + eb.first, ea.second + eb.second);
    return r;
}

std::string TwoVarPolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest L degree first, then highest M degree.
    std::vector<std::pair<Exponent, Integer>> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) {
        if (x.first.second != y.first.second) return x.first.second > y.first.second;
        return x.first.first > y.first.first;
    });
    for (const auto& [e, c] : order) {
        std::string mono;
        auto piece = [&](const char* v, std::uint32_t d) {
            if (d == 0) return;
            if (!mono.empty()) mono += "*";
            mono += v;
            if (d > 1) mono += "^" + std::to_string(d);
        };
        piece("L", e.second);
        piece("M", e.first);
        append_term(os, c, mono, first);
        first = false;
    }
    return os.str();
}

IntPolynomial specialize_L(const TwoVarPolynomial& a, std::int64_t k)
{
    if (a.is_zero()) return {};
    // Exponent of t in M^m L^l after M = t, L = t^-k is m - k*l.
    std::vector<std::pair<std::int64_t, Integer>> shifted;
    shifted.reserve(a.terms().size());
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    for (const auto& [e, c] : a.terms()) {
        std::int64_t x = static_cast<std::int64_t>(e.first) - k * static_cast<std::int64_t>(e.second);
        lo = std::min(lo, x);
        shifted.emplace_back(x, c);
    }
    std::int64_t hi = lo;
    for (const auto& [x, c] : shifted) hi = std::max(hi, x);
    std::vector<Integer> coeffs(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& [x, c] : shifted) coeffs[static_cast<std::size_t>(x - lo)] += c;
    return IntPolynomial(std::move(coeffs)).strip_t_factor();
}

}  // namespace casson
