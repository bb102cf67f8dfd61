// Algebraic descriptions of homology spheres and their text form.
//
//   expr := "S3" | "brieskorn(" int "," int "," int ")" | "catalog(" name ")"
//         | "surgery(" int "/" int "," knot ")" | "splice(" side "," side ")"
//         | "ksplice(" int "," knot "," knot ")" | "sigma4demo"
//   side := knot | "fiber(" "brieskorn(" int "," int "," int ")" "," int ")"
//   knot := "unknot" | "torus(" int "," int ")" | "twist(" int ")" | identifier
//
// Whitespace is insignificant, keywords are case-sensitive. A bare knot as a
// splice side lies in S3; fiber(...) picks a singular fiber by its position
// in the ascending triple.
#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "casson/closed_forms.hpp"
#include "casson/knots.hpp"

namespace casson {

struct ThreeSphere {
    friend bool operator==(const ThreeSphere&, const ThreeSphere&) = default;
};

/// The exceptional fiber of order triple[index - 1].
struct SingularFiber {
    int index = 1;
    friend bool operator==(const SingularFiber&, const SingularFiber&) = default;
};

struct AmbientKnot {
    std::variant<ThreeSphere, BrieskornTriple> ambient{ThreeSphere{}};
    std::variant<KnotDescriptor, SingularFiber> knot{KnotDescriptor::unknot()};

    static AmbientKnot in_s3(KnotDescriptor k);
    /// Rejects index outside 1..3.
    static AmbientKnot fiber(const BrieskornTriple& t, int index);

    bool in_three_sphere() const { return std::holds_alternative<ThreeSphere>(ambient); }
    std::string to_string() const;

    friend bool operator==(const AmbientKnot&, const AmbientKnot&) = default;
};

struct CatalogRef {
    std::string name;
    friend bool operator==(const CatalogRef&, const CatalogRef&) = default;
};

struct Surgery {
    std::int64_t numerator = 1;
    std::int64_t denominator = 1;
    KnotDescriptor knot;
    friend bool operator==(const Surgery&, const Surgery&) = default;
};

struct Splice {
    AmbientKnot side1;
    AmbientKnot side2;
    friend bool operator==(const Splice&, const Splice&) = default;
};

struct KSplice {
    std::int64_t k = 0;
    KnotDescriptor knot1;
    KnotDescriptor knot2;
    friend bool operator==(const KSplice&, const KSplice&) = default;
};

class ManifoldExpression {
public:
    using Variant = std::variant<ThreeSphere, BrieskornTriple, CatalogRef, Surgery, Splice, KSplice>;

    ManifoldExpression() = default;
    template <class T>
        requires std::is_constructible_v<Variant, T&&>
    ManifoldExpression(T&& alt) : v_(std::forward<T>(alt))  // NOLINT(google-explicit-constructor)
    {
    }

    const Variant& value() const { return v_; }

    /// Text that parse_expression maps back to an equal expression.
    std::string to_string() const;

    friend bool operator==(const ManifoldExpression&, const ManifoldExpression&) = default;

private:
    Variant v_{ThreeSphere{}};
};

/// The splice realizing Sigma(2,3,5,7) from Sigma(2,3,35) and Sigma(5,6,7).
ManifoldExpression sigma4_demo_expression();

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, std::set<std::string> expected, const std::string& what)
        : std::runtime_error(what), position_(position), expected_(std::move(expected))
    {
    }
    /// 0-based byte offset into the source.
    std::size_t position() const { return position_; }
    const std::set<std::string>& expected() const { return expected_; }

private:
    std::size_t position_;
    std::set<std::string> expected_;
};

ManifoldExpression parse_expression(std::string_view src);
KnotDescriptor parse_knot(std::string_view src);

}  // namespace casson
