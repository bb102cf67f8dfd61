#include "casson/certificate.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace casson {

std::string_view to_string(Status s)
{
    switch (s) {
    case Status::Computed: return "Computed";
    case Status::VanishesByCorollary: return "VanishesByCorollary";
    case Status::AdditivityApplied: return "AdditivityApplied";
    case Status::ConditionsUnverified: return "ConditionsUnverified";
    case Status::NonAdditiveWarning: return "NonAdditiveWarning";
    case Status::Unsupported: return "Unsupported";
    }
    return "Unsupported";
}

bool has_value(Status s)
{
    return s == Status::Computed || s == Status::VanishesByCorollary || s == Status::AdditivityApplied;
}

std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Unknown: return "UNKNOWN";
    }
    return "UNKNOWN";
}

void LambdaCertificate::validate() const
{
    if (value.has_value() != has_value(status))
        throw std::logic_error("certificate for " + expression + ": status " + std::string(to_string(status)) +
                               (value ? " must not carry a value" : " requires a value"));
    for (const auto& c : checks)
        if (c.verdict != Verdict::Unknown && c.witness.empty())
            throw std::logic_error("certificate for " + expression + ": decided check '" + c.condition +
                                   "' has no witness");
}

std::string to_json(const LambdaCertificate& c, int indent)
{
    c.validate();
    nlohmann::ordered_json j;
    j["value"] = c.value ? nlohmann::ordered_json(*c.value) : nlohmann::ordered_json(nullptr);
    j["status"] = std::string(to_string(c.status));
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& ch : c.checks) {
        nlohmann::ordered_json e;
        e["condition"] = ch.condition;
        e["k"] = ch.k ? nlohmann::ordered_json(*ch.k) : nlohmann::ordered_json(nullptr);
        e["verdict"] = std::string(to_string(ch.verdict));
        e["witness"] = ch.witness;
        j["checks"].push_back(std::move(e));
    }
    j["citations"] = c.citations;
    j["expression"] = c.expression;
    j["notes"] = c.notes;
    return j.dump(indent);
}

std::string to_text(const LambdaCertificate& c)
{
    c.validate();
    std::ostringstream os;
    os << "expression: " << c.expression << "\n";
    os << "lambda:     " << (c.value ? std::to_string(*c.value) : std::string("(no value)")) << "\n";
    os << "status:     " << to_string(c.status) << "\n";
    if (!c.checks.empty()) {
        os << "checks:\n";
        for (const auto& ch : c.checks) {
            os << "  [" << to_string(ch.verdict) << "] ";
            if (ch.k) os << "k=" << *ch.k << " ";
            os << ch.condition;
            if (!ch.witness.empty()) os << "  {" << ch.witness << "}";
            os << "\n";
        }
    }
    if (!c.citations.empty()) {
        os << "uses:";
        for (const auto& s : c.citations) os << " " << s;
        os << "\n";
    }
    for (const auto& n : c.notes) os << "note: " << n << "\n";
    return os.str();
}

}  // namespace casson
