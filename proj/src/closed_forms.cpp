#include "casson/closed_forms.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <vector>

namespace casson {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in closed-form evaluation");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b, std::int64_t c)
{
    return checked_mul(checked_mul(a, b), c);
}

std::string strip_spaces(std::string_view s)
{
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

// "Sigma(a,b,...)" -> {a, b, ...} sorted; empty on any other shape.
std::vector<std::int64_t> sigma_orders(const std::string& compact)
{
    constexpr std::string_view head = "Sigma(";
    if (compact.size() <= head.size() + 1 || compact.compare(0, head.size(), head) != 0 || compact.back() != ')')
        return {};
    std::vector<std::int64_t> out;
    const char* p = compact.data() + head.size();
    const char* end = compact.data() + compact.size() - 1;
    while (p < end) {
        std::int64_t v = 0;
        auto [next, ec] = std::from_chars(p, end, v);
        if (ec != std::errc() || next == p) return {};
        out.push_back(v);
        p = next;
        if (p < end) {
            if (*p != ',') return {};
            ++p;
            if (p == end) return {};
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::map<std::vector<std::int64_t>, std::int64_t>& four_fiber_catalog()
{
    static const std::map<std::vector<std::int64_t>, std::int64_t> table = {
        {{2, 3, 5, 7}, 20},
    };
    return table;
}

}  // namespace

bool is_valid_brieskorn(std::int64_t a1, std::int64_t a2, std::int64_t a3)
{
    if (a1 < 2 || a2 < 2 || a3 < 2) return false;
    return std::gcd(a1, a2) == 1 && std::gcd(a1, a3) == 1 && std::gcd(a2, a3) == 1;
}

BrieskornTriple::BrieskornTriple(std::int64_t a1, std::int64_t a2, std::int64_t a3) : a_{a1, a2, a3}
{
    if (!is_valid_brieskorn(a1, a2, a3))
        throw std::invalid_argument("Sigma(" + std::to_string(a1) + "," + std::to_string(a2) + "," +
                                    std::to_string(a3) + ") is not a homology sphere: orders must be >= 2 and pairwise coprime");
    std::sort(a_.begin(), a_.end());
    checked_mul(a_[0], a_[1], a_[2]);
}

std::string BrieskornTriple::to_string() const
{
    return "brieskorn(" + std::to_string(a_[0]) + "," + std::to_string(a_[1]) + "," + std::to_string(a_[2]) + ")";
}

std::int64_t brieskorn_lambda(const BrieskornTriple& t)
{
    // At most one order is even, so two factors are even and 4 divides the product.
    return checked_mul(t[0] - 1, t[1] - 1, t[2] - 1) / 4;
}

std::string canonical_catalog_name(std::string_view name)
{
    std::vector<std::int64_t> orders = sigma_orders(strip_spaces(name));
    if (orders.empty()) return strip_spaces(name);
    std::string out = "Sigma(";
    for (std::size_t i = 0; i < orders.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(orders[i]);
    }
    return out + ")";
}

bool in_catalog(std::string_view name)
{
    std::vector<std::int64_t> orders = sigma_orders(strip_spaces(name));
    if (orders.size() == 3) return is_valid_brieskorn(orders[0], orders[1], orders[2]);
    return four_fiber_catalog().count(orders) > 0;
}

std::int64_t catalog_lambda(std::string_view name)
{
    std::vector<std::int64_t> orders = sigma_orders(strip_spaces(name));
    if (orders.size() == 3 && is_valid_brieskorn(orders[0], orders[1], orders[2]))
        return brieskorn_lambda(BrieskornTriple(orders[0], orders[1], orders[2]));
    auto it = four_fiber_catalog().find(orders);
    if (it == four_fiber_catalog().end())
        throw UnknownCatalogName("no catalog entry for '" + std::string(name) + "'");
    return it->second;
}

std::int64_t whitehead_double_surgery_lambda(std::int64_t p, std::int64_t q, std::int64_t k)
{
    if (k <= 0)
        throw std::invalid_argument("whitehead_double_surgery_lambda: the closed form holds for k > 0 only (got k = " +
                                    std::to_string(k) + "); use torus_surgery_lambda for k < 0");
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("whitehead_double_surgery_lambda: p, q must be coprime and >= 2");
    std::int64_t pqk = checked_mul(p, q, k);
    std::int64_t value = checked_mul(p - 1, q - 1, pqk - 2) / 4;
    // The surgery is the Brieskorn sphere Sigma(p, q, pqk - 1).
    std::int64_t via_brieskorn = brieskorn_lambda(BrieskornTriple(p, q, pqk - 1));
    if (value != via_brieskorn)
        throw std::logic_error("whitehead_double_surgery_lambda: closed form disagrees with Brieskorn value");
    return value;
}

BrieskornTriple torus_surgery_manifold(std::int64_t p, std::int64_t q, std::int64_t k)
{
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus_surgery_lambda: p, q must be coprime and >= 2");
    std::int64_t r = checked_mul(p, q, k) - 1;
    if (r < 0) r = -r;
    if (r < 2)
        throw std::invalid_argument("torus_surgery_lambda: |pqk - 1| = " + std::to_string(r) +
                                    " is degenerate (k must be nonzero)");
    return BrieskornTriple(p, q, r);
}

std::int64_t torus_surgery_lambda(std::int64_t p, std::int64_t q, std::int64_t k)
{
    return brieskorn_lambda(torus_surgery_manifold(p, q, k));
}

bool positivity_guarantee(const KnotDescriptor& k, std::int64_t q, const InvariantStore& store)
{
    if (q == 0 || k.is_unknot()) return false;
    if (k.as_torus() || is_two_bridge(k, store)) return true;
    return is_small(k, store) && (q > 1 || q < -1);
}

}  // namespace casson
