// Knot descriptors and their invariant providers.
#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "casson/polyring.hpp"

namespace casson {

struct Unknot {
    friend bool operator==(const Unknot&, const Unknot&) = default;
};

/// T(p, q) with 2 <= p < q and gcd(p, q) = 1.
struct TorusKnot {
    std::int64_t p = 2;
    std::int64_t q = 3;
    friend bool operator==(const TorusKnot&, const TorusKnot&) = default;
};

/// Twist knot with n full twists; n = 1 is the figure-eight, n = -1 the trefoil.
struct TwistKnot {
    std::int64_t n = 1;
    friend bool operator==(const TwistKnot&, const TwistKnot&) = default;
};

/// A knot whose invariants come from an ingested data file.
struct NamedKnot {
    std::string name;
    friend bool operator==(const NamedKnot&, const NamedKnot&) = default;
};

class KnotDescriptor {
public:
    using Variant = std::variant<Unknot, TorusKnot, TwistKnot, NamedKnot>;

    KnotDescriptor() = default;

    static KnotDescriptor unknot() { return KnotDescriptor(Unknot{}); }
    /// Canonicalizes the order; rejects p or q < 2 and gcd(p, q) != 1.
    static KnotDescriptor torus(std::int64_t p, std::int64_t q);
    /// Rejects n == 0.
    static KnotDescriptor twist(std::int64_t n);
    /// Rejects names that are not identifiers or collide with grammar keywords.
    static KnotDescriptor named(std::string name);

    const Variant& value() const { return v_; }
    bool is_unknot() const { return std::holds_alternative<Unknot>(v_); }
    const TorusKnot* as_torus() const { return std::get_if<TorusKnot>(&v_); }
    const TwistKnot* as_twist() const { return std::get_if<TwistKnot>(&v_); }
    const NamedKnot* as_named() const { return std::get_if<NamedKnot>(&v_); }

    /// Expression-grammar spelling: unknot, torus(2,3), twist(1), or the name.
    std::string to_string() const;

    friend bool operator==(const KnotDescriptor&, const KnotDescriptor&) = default;

private:
    explicit KnotDescriptor(Variant v) : v_(std::move(v)) {}
    Variant v_{Unknot{}};
};

bool is_knot_identifier(std::string_view s);

enum class Tristate { False, True, Unknown };
std::string_view to_string(Tristate t);

struct EvenOnlySlopes {
    friend bool operator==(const EvenOnlySlopes&, const EvenOnlySlopes&) = default;
};
using SlopeInfo = std::variant<EvenOnlySlopes, std::vector<std::int64_t>>;

struct KnotInvariantRecord {
    std::string name;
    IntPolynomial alexander;
    std::optional<TwoVarPolynomial> a_polynomial;
    std::optional<SlopeInfo> slopes;
    bool two_bridge = false;
    bool small = false;
};

/// Failure while ingesting a knot data file. line is 0 when the failure is
/// not tied to one line (e.g. a record left open at end of input).
class KnotDataError : public std::runtime_error {
public:
    enum class Kind { Parse, Validation };
    KnotDataError(Kind kind, std::size_t line, const std::string& what)
        : std::runtime_error(what), kind_(kind), line_(line)
    {
    }
    Kind kind() const { return kind_; }
    std::size_t line() const { return line_; }

private:
    Kind kind_;
    std::size_t line_;
};

class UnknownKnot : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MissingAPolynomial : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Records for named knots. Loaded during setup, read-only afterwards.
class InvariantStore {
public:
    /// Parses the line-oriented data format and merges its records.
    /// Nothing is merged if any record fails. Returns the number of records.
    std::size_t load(std::istream& in, std::string_view source = "<stream>");
    std::size_t load_file(const std::filesystem::path& path);

    const KnotInvariantRecord* find(std::string_view name) const;
    const KnotInvariantRecord& at(std::string_view name) const;
    std::size_t size() const { return records_.size(); }
    const std::map<std::string, KnotInvariantRecord, std::less<>>& records() const { return records_; }

private:
    std::map<std::string, KnotInvariantRecord, std::less<>> records_;
};

const InvariantStore& empty_store();

/// Throws std::invalid_argument naming the knot unless Delta(1) = +-1 and the
/// coefficients are palindromic up to a global sign.
void validate_alexander(const IntPolynomial& delta, std::string_view knot);

/// Integer coefficients, positive leading coefficient, no factor of t.
IntPolynomial alexander(const KnotDescriptor& k, const InvariantStore& store = empty_store());

/// Built-ins: unknot -> L - 1, T(2,3) -> L*M^6 + 1. Nontrivial knots are
/// stored without the abelian factor L - 1. Throws MissingAPolynomial when
/// no polynomial is known, including for named knots with no record.
TwoVarPolynomial a_polynomial(const KnotDescriptor& k, const InvariantStore& store = empty_store());
bool has_a_polynomial(const KnotDescriptor& k, const InvariantStore& store = empty_store());

/// Explicit boundary slopes when known (torus knots: 0 and pq).
std::optional<std::vector<std::int64_t>> explicit_boundary_slopes(const KnotDescriptor& k,
                                                                  const InvariantStore& store = empty_store());
/// Unknown when no slope information is available.
Tristate boundary_slope_excludes_pm1(const KnotDescriptor& k, const InvariantStore& store = empty_store());

bool is_two_bridge(const KnotDescriptor& k, const InvariantStore& store = empty_store());
bool is_small(const KnotDescriptor& k, const InvariantStore& store = empty_store());

/// Culler-Shalen seminorm of p*meridian + q*longitude on a curve with
/// parameters (k, alpha): k * |p - q*alpha| / 4.
Rational cs_seminorm(std::int64_t k, std::int64_t alpha, std::int64_t p, std::int64_t q);

}  // namespace casson
