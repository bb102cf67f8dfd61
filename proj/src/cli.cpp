#include "casson/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "casson/oracle.hpp"

namespace casson {

namespace {

using ordered_json = nlohmann::ordered_json;

ExitCode run_eval(const Command& cmd, const InvariantStore& store, std::ostream& out)
{
    ManifoldExpression expr = parse_expression(cmd.expression);
    EvalOptions opts{&store, cmd.krange};
    LambdaCertificate c = lambda(expr, opts);
    if (cmd.json) out << to_json(c) << "\n";
    else out << to_text(c);
    return exit_code_for(c);
}

ExitCode run_check(const Command& cmd, const InvariantStore& store, std::ostream& out)
{
    KnotDescriptor k1 = parse_knot(cmd.knot1);
    KnotDescriptor k2 = parse_knot(cmd.knot2);
    KRange range = cmd.krange ? *cmd.krange : default_krange(k1, k2, store);
    auto checks = check_splice_conditions_both(k1, k2, range, store);

    bool all_pass = true;
    for (const auto& c : checks) all_pass = all_pass && c.verdict == Verdict::Pass;

    if (cmd.json) {
        ordered_json j;
        j["knot1"] = k1.to_string();
        j["knot2"] = k2.to_string();
        j["krange"] = range.to_string();
        j["checks"] = ordered_json::array();
        for (const auto& c : checks) {
            ordered_json e;
            e["direction"] = c.side == ConditionSide::First ? "first" : "second";
            e["k"] = c.k;
            e["verdict"] = std::string(to_string(c.verdict));
            e["condition"] = c.condition();
            e["witness"] = c.witness();
            j["checks"].push_back(std::move(e));
        }
        j["all_pass"] = all_pass;
        out << j.dump() << "\n";
    } else {
        out << "knot1: " << k1.to_string() << "\nknot2: " << k2.to_string() << "\nk range: " << range.to_string()
            << " (k = 0 skipped)\n";
        for (auto side : {ConditionSide::First, ConditionSide::Second}) {
            out << (side == ConditionSide::First ? "A(knot1) vs Delta(knot2):\n" : "A(knot2) vs Delta(knot1):\n");
            for (const auto& c : checks) {
                if (c.side != side) continue;
                out << "  k=" << std::setw(4) << c.k << "  " << std::left << std::setw(7) << to_string(c.verdict)
                    << std::right << " " << c.witness() << "\n";
            }
        }
        out << (all_pass ? "all checks PASS\n" : "some checks did not PASS\n");
    }
    return all_pass ? ExitCode::Ok : ExitCode::ConditionsUnverified;
}

ExitCode run_verify(const Command& cmd, std::ostream& out)
{
    SweepResult r = verify_closed_form(cmd.max_product);
    if (cmd.json) {
        ordered_json j;
        j["max_product"] = cmd.max_product;
        j["triples_checked"] = r.triples_checked;
        j["mismatches"] = ordered_json::array();
        for (const auto& m : r.mismatches)
            j["mismatches"].push_back({{"triple", m.triple.to_string()}, {"oracle", m.oracle}, {"closed_form", m.closed_form}});
        j["verified"] = r.mismatches.empty();
        out << j.dump() << "\n";
    } else {
        for (const auto& m : r.mismatches)
            out << "MISMATCH " << m.triple.to_string() << ": oracle " << m.oracle << ", closed form "
                << m.closed_form << "\n";
        out << "checked " << r.triples_checked << " triples with a1*a2*a3 <= " << cmd.max_product << ": "
            << (r.mismatches.empty() ? "PASS" : "FAIL") << "\n";
    }
    return r.mismatches.empty() ? ExitCode::Ok : ExitCode::Error;
}

ExitCode run_demo(const Command& cmd, std::ostream& out)
{
    NonAdditivityReport r = non_additivity_demo();
    if (cmd.json) out << to_json(r) << "\n";
    else out << to_text(r);
    return ExitCode::Ok;
}

ExitCode run_load_probe(const Command& cmd, std::ostream& out)
{
    InvariantStore probe;
    std::size_t n = probe.load_file(cmd.path);
    if (cmd.json) {
        ordered_json j;
        j["path"] = cmd.path;
        j["loaded"] = n;
        j["knots"] = ordered_json::array();
        for (const auto& [name, rec] : probe.records())
            j["knots"].push_back({{"name", name},
                                  {"alexander", rec.alexander.to_string()},
                                  {"a_polynomial", rec.a_polynomial ? rec.a_polynomial->to_string() : ""}});
        out << j.dump() << "\n";
    } else {
        out << "loaded " << n << " record(s) from " << cmd.path << "\n";
        for (const auto& [name, rec] : probe.records()) {
            out << "  " << name << ": Delta = " << rec.alexander.to_string();
            if (rec.a_polynomial) out << ", A = " << rec.a_polynomial->to_string();
            out << "\n";
        }
    }
    return ExitCode::Ok;
}

}  // namespace

ExitCode exit_code_for(const LambdaCertificate& c)
{
    switch (c.status) {
    case Status::Computed:
    case Status::VanishesByCorollary:
    case Status::AdditivityApplied: return ExitCode::Ok;
    case Status::ConditionsUnverified:
    case Status::NonAdditiveWarning: return ExitCode::ConditionsUnverified;
    case Status::Unsupported: return ExitCode::Unsupported;
    }
    return ExitCode::Error;
}

ExitCode run(const Command& cmd, std::ostream& out, std::ostream& err)
{
    try {
        InvariantStore store;
        for (const auto& f : cmd.data_files) store.load_file(f);
        switch (cmd.action) {
        case Command::Action::Eval: return run_eval(cmd, store, out);
        case Command::Action::Check: return run_check(cmd, store, out);
        case Command::Action::Verify: return run_verify(cmd, out);
        case Command::Action::Demo: return run_demo(cmd, out);
        case Command::Action::LoadProbe: return run_load_probe(cmd, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return ExitCode::Error;
}

}  // namespace casson
