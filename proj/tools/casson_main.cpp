#include <iostream>

#include <CLI11.hpp>

#include "casson/cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Exact SL(2,C) Casson invariants of Brieskorn spheres, surgeries and spliced sums"};
    app.require_subcommand(1);
    app.fallthrough();

    casson::Command cmd;
    std::string krange;
    app.add_option("--data", cmd.data_files, "Knot invariant data file (repeatable)")->check(CLI::ExistingFile);
    app.add_flag("--json", cmd.json, "Print JSON instead of text");

    auto* eval = app.add_subcommand("eval", "Evaluate lambda of a manifold expression");
    eval->add_option("expression", cmd.expression, "e.g. \"splice(torus(2,3), torus(2,5))\"")->required();
    eval->add_option("--krange", krange, "k range A..B for condition checks");

    auto* check = app.add_subcommand("check", "Run the additivity condition checks for two knots in S3");
    check->add_option("knot1", cmd.knot1)->required();
    check->add_option("knot2", cmd.knot2)->required();
    check->add_option("--krange", krange, "k range A..B (default from boundary slopes, at least -8..8)");

    auto* verify = app.add_subcommand("verify", "Compare the character-count oracle with the closed form");
    verify->add_option("--max-product", cmd.max_product, "Largest a1*a2*a3 to sweep")->check(CLI::PositiveNumber);

    app.add_subcommand("demo", "Show the Sigma(2,3,5,7) non-additivity example");

    auto* load = app.add_subcommand("load", "Load and validate a knot data file");
    load->add_option("path", cmd.path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(casson::ExitCode::Error);
    }

    using Action = casson::Command::Action;
    if (*eval) cmd.action = Action::Eval;
    else if (*check) cmd.action = Action::Check;
    else if (*verify) cmd.action = Action::Verify;
    else if (*load) cmd.action = Action::LoadProbe;
    else cmd.action = Action::Demo;

    if (!krange.empty()) {
        try {
            cmd.krange = casson::parse_krange(krange);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return static_cast<int>(casson::ExitCode::Error);
        }
    }
    return static_cast<int>(casson::run(cmd, std::cout, std::cerr));
}
