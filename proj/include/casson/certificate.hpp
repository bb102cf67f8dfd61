// The verdict record returned by every evaluation.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace casson {

enum class Status {
    Computed,
    VanishesByCorollary,
    AdditivityApplied,
    ConditionsUnverified,
    NonAdditiveWarning,
    Unsupported,
};

std::string_view to_string(Status s);
/// Statuses that carry a value.
bool has_value(Status s);

enum class Verdict { Pass, Fail, Unknown };
std::string_view to_string(Verdict v);

struct CertificateCheck {
    std::string condition;
    std::optional<std::int64_t> k;
    Verdict verdict = Verdict::Unknown;
    std::string witness;
};

struct LambdaCertificate {
    std::string expression;
    std::optional<std::int64_t> value;
    Status status = Status::Unsupported;
    std::vector<CertificateCheck> checks;
    std::vector<std::string> citations;
    std::vector<std::string> notes;

    /// Throws std::logic_error if value presence does not match the status.
    void validate() const;
};

/// Single-line JSON; key order value, status, checks, citations, expression, notes.
std::string to_json(const LambdaCertificate& c, int indent = -1);
std::string to_text(const LambdaCertificate& c);

}  // namespace casson
