// Command execution for the `casson` tool. Argument parsing lives in
// tools/; this layer is what tests and the Python module drive.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "casson/splice.hpp"

namespace casson {

enum class ExitCode : int {
    Ok = 0,
    Error = 1,
    ConditionsUnverified = 2,
    Unsupported = 3,
};

struct Command {
    enum class Action { Eval, Check, Verify, Demo, LoadProbe };

    Action action = Action::Demo;
    std::string expression;           // Eval
    std::string knot1, knot2;         // Check
    std::optional<KRange> krange;     // Check, Eval
    std::int64_t max_product = 1000;  // Verify
    std::string path;                 // LoadProbe
    bool json = false;
    std::vector<std::string> data_files;
};

/// Exit code for a certificate: 0 with a value, 2 or 3 otherwise.
ExitCode exit_code_for(const LambdaCertificate& c);

/// Runs one command. Errors are reported on err and yield ExitCode::Error.
ExitCode run(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace casson
