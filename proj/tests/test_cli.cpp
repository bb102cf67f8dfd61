#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "casson/cli.hpp"
#include "test_support.hpp"

using namespace casson;

namespace {

struct Result {
    ExitCode code;
    std::string out;
    std::string err;
};

Result run_command(const Command& cmd)
{
    std::ostringstream out, err;
    ExitCode code = run(cmd, out, err);
    return {code, out.str(), err.str()};
}

Command eval(std::string expr, bool json = false)
{
    Command c;
    c.action = Command::Action::Eval;
    c.expression = std::move(expr);
    c.json = json;
    return c;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_parse_error(const std::string& src, std::size_t position, const std::set<std::string>& expected)
{
    CAPTURE(src);
    try {
        parse_expression(src);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == position);
        CHECK(e.expected() == expected);
        CHECK(std::string(e.what()).find("position " + std::to_string(position)) != std::string::npos);
    }
}

// Random well-formed expressions.
class ExpressionGenerator {
public:
    explicit ExpressionGenerator(std::uint64_t seed) : rng_(seed) {}

    ManifoldExpression next()
    {
        switch (pick(0, 6)) {
        case 0: return ThreeSphere{};
        case 1: return triple();
        case 2: return CatalogRef{pick(0, 1) ? "Sigma(2,3,5,7)" : "Sigma(" + std::to_string(pick(2, 9)) + ",11,13)"};
        case 3: return Surgery{pick(-3, 3), pick(-20, 20), knot()};
        case 4: return Splice{side(), side()};
        case 5: return KSplice{pick(-50, 50), knot(), knot()};
        default: return sigma4_demo_expression();
        }
    }

    /// Text with random whitespace between tokens.
    std::string spaced(const std::string& text)
    {
        std::string out;
        for (char c : text) {
            if (c == ' ') continue;
            if ((c == '(' || c == ')' || c == ',' || c == '/') && pick(0, 2) == 0) out += std::string(pick(1, 3), ' ');
            out += c;
            if ((c == '(' || c == ',' || c == '/') && pick(0, 2) == 0) out += pick(0, 1) ? "\t" : " \n ";
        }
        return pick(0, 1) ? "  " + out + " " : out;
    }

private:
    std::int64_t pick(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    BrieskornTriple triple()
    {
        for (;;) {
            std::int64_t a = pick(2, 40), b = pick(2, 40), c = pick(2, 400);
            if (is_valid_brieskorn(a, b, c)) return BrieskornTriple(a, b, c);
        }
    }

    KnotDescriptor knot()
    {
        static const char* names[] = {"4_1", "K11n34", "pretzel_m2_3_7", "knot.v2", "_x"};
        switch (pick(0, 3)) {
        case 0: return KnotDescriptor::unknot();
        case 1:
            for (;;) {
                std::int64_t p = pick(2, 15), q = pick(2, 15);
                if (std::gcd(p, q) == 1) return KnotDescriptor::torus(p, q);
            }
        case 2: {
            std::int64_t n = pick(-9, 9);
            return KnotDescriptor::twist(n == 0 ? 1 : n);
        }
        default: return KnotDescriptor::named(names[pick(0, 4)]);
        }
    }

    AmbientKnot side()
    {
        if (pick(0, 3) == 0) return AmbientKnot::fiber(triple(), static_cast<int>(pick(1, 3)));
        return AmbientKnot::in_s3(knot());
    }

    std::mt19937_64 rng_;
};

}  // namespace

TEST_CASE("parse examples")
{
    auto e = parse_expression("splice(torus(2,3), torus(2,5))");
    const auto* s = std::get_if<Splice>(&e.value());
    REQUIRE(s);
    CHECK(s->side1 == AmbientKnot::in_s3(KnotDescriptor::torus(2, 3)));
    CHECK(s->side2 == AmbientKnot::in_s3(KnotDescriptor::torus(2, 5)));

    CHECK(parse_expression("brieskorn(2,3,35)") == ManifoldExpression(BrieskornTriple(2, 3, 35)));
    CHECK(parse_expression(" brieskorn ( 35 , 3 , 2 ) ") == ManifoldExpression(BrieskornTriple(2, 3, 35)));
    CHECK(parse_expression("surgery(1/0, unknot)") == ManifoldExpression(Surgery{1, 0, KnotDescriptor::unknot()}));
    CHECK(parse_expression("S3") == ManifoldExpression(ThreeSphere{}));
    CHECK(parse_expression("catalog(Sigma(2, 3, 5, 7))") == ManifoldExpression(CatalogRef{"Sigma(2,3,5,7)"}));
    CHECK(parse_expression("ksplice(-2, unknot, 4_1)") ==
          ManifoldExpression(KSplice{-2, KnotDescriptor::unknot(), KnotDescriptor::named("4_1")}));
    CHECK(parse_expression("sigma4demo") == sigma4_demo_expression());
    CHECK(sigma4_demo_expression().to_string() == "splice(fiber(brieskorn(2,3,35),3), fiber(brieskorn(5,6,7),2))");
    CHECK(parse_knot("torus(3,2)") == KnotDescriptor::torus(2, 3));
}

TEST_CASE("parse errors report position and expected tokens")
{
    check_parse_error("", 0, {"S3", "brieskorn", "catalog", "surgery", "splice", "ksplice", "sigma4demo"});
    check_parse_error("s3", 0, {"S3", "brieskorn", "catalog", "surgery", "splice", "ksplice", "sigma4demo"});
    check_parse_error("brieskorn(2,3 35)", 14, {"','"});
    check_parse_error("brieskorn(2,3,x)", 14, {"<integer>"});
    check_parse_error("splice(torus(2,3), 7)", 19, {"unknot", "torus", "twist", "<knot name>", "fiber"});
    check_parse_error("ksplice(1, unknot, fiber)", 19, {"unknot", "torus", "twist", "<knot name>"});
    check_parse_error("surgery(1 2, unknot)", 10, {"'/'"});
    check_parse_error("S3 S3", 3, {"<end of input>"});
    check_parse_error("splice(fiber(S3, 1), unknot)", 13, {"brieskorn"});
    check_parse_error("brieskorn(2,3,35", 16, {"')'"});
    CHECK_THROWS_AS(parse_expression("brieskorn(2,4,5)"), ParseError);
    CHECK_THROWS_AS(parse_expression("torus(2,4)"), ParseError);
    CHECK_THROWS_AS(parse_expression("splice(fiber(brieskorn(2,3,5), 4), unknot)"), ParseError);
    CHECK_THROWS_AS(parse_knot("torus(2,4)"), ParseError);
    CHECK_THROWS_AS(parse_expression("brieskorn(2,3,99999999999999999999)"), ParseError);
}

TEST_CASE("parse of the printed form is the identity")
{
    ExpressionGenerator gen(2024);
    for (int i = 0; i < 5000; ++i) {
        const ManifoldExpression e = gen.next();
        const std::string text = e.to_string();
        CAPTURE(text);
        CHECK(parse_expression(text) == e);
        CHECK(parse_expression(gen.spaced(text)) == e);
    }
}

TEST_CASE("exit codes")
{
    CHECK(run_command(eval("splice(torus(2,3),torus(2,5))")).code == ExitCode::Ok);
    CHECK(run_command(eval("brieskorn(2,3,35)")).code == ExitCode::Ok);
    CHECK(run_command(eval("ksplice(6, unknot, torus(2,3))")).code == ExitCode::Ok);
    CHECK(run_command(eval("sigma4demo")).code == ExitCode::ConditionsUnverified);
    CHECK(run_command(eval("ksplice(2, unknot, twist(1))")).code == ExitCode::ConditionsUnverified);
    CHECK(run_command(eval("surgery(1/0, unknot)")).code == ExitCode::Unsupported);
    CHECK(run_command(eval("catalog(nonsense)")).code == ExitCode::Unsupported);

    const Result bad = run_command(eval("splice(torus(2,3)"));
    CHECK(bad.code == ExitCode::Error);
    CHECK(bad.err.find("error: syntax error at position 17") == 0);
    CHECK(run_command(eval("ksplice(1, unknot, mystery)")).code == ExitCode::Error);

    Command demo;
    demo.action = Command::Action::Demo;
    const Result d = run_command(demo);
    CHECK(d.code == ExitCode::Ok);
    CHECK(d.out.find("20 != 47") != std::string::npos);

    Command check;
    check.action = Command::Action::Check;
    check.knot1 = "unknot";
    check.knot2 = "torus(2,3)";
    CHECK(run_command(check).code == ExitCode::Ok);
    check.knot1 = "torus(2,5)";
    CHECK(run_command(check).code == ExitCode::ConditionsUnverified);
    check.krange = KRange{0, 0};
    CHECK(run_command(check).code == ExitCode::Error);

    Command verify;
    verify.action = Command::Action::Verify;
    verify.max_product = 400;
    const Result v = run_command(verify);
    CHECK(v.code == ExitCode::Ok);
    CHECK(v.out.find("PASS") != std::string::npos);

    Command load;
    load.action = Command::Action::LoadProbe;
    load.path = test::data_path("data/knots.dat");
    CHECK(run_command(load).code == ExitCode::Ok);
    load.path = test::data_path("tests/data/corrupt_alexander.dat");
    const Result corrupt = run_command(load);
    CHECK(corrupt.code == ExitCode::Error);
    CHECK(corrupt.err.find("Delta(1) = 0") != std::string::npos);
    load.path = test::data_path("tests/data/does_not_exist.dat");
    CHECK(run_command(load).code == ExitCode::Error);
}

TEST_CASE("data files feed evaluation")
{
    Command c = eval("ksplice(3, 4_1, torus(2,3))");
    CHECK(run_command(c).code == ExitCode::Error);
    c.data_files = {test::data_path("data/knots.dat")};
    c.json = true;
    const Result r = run_command(c);
    CHECK(r.code == ExitCode::Ok);
    CHECK(nlohmann::json::parse(r.out)["value"] == 8);

    c.data_files.push_back(test::data_path("tests/data/corrupt_alexander.dat"));
    CHECK(run_command(c).code == ExitCode::Error);
}

TEST_CASE("json output")
{
    const Result r = run_command(eval("brieskorn(2,3,35)", true));
    const auto j = nlohmann::ordered_json::parse(r.out);
    CHECK(j["value"] == 17);
    CHECK(j["status"] == "Computed");
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"value", "status", "checks", "citations", "expression", "notes"});

    const auto u = nlohmann::ordered_json::parse(run_command(eval("surgery(1/0, unknot)", true)).out);
    CHECK(u["value"].is_null());
    CHECK(u["status"] == "Unsupported");
}

TEST_CASE("json golden files")
{
    struct Golden {
        const char* file;
        Command cmd;
    };
    Command check;
    check.action = Command::Action::Check;
    check.knot1 = "unknot";
    check.knot2 = "torus(2,3)";
    check.krange = KRange{-2, 2};
    check.json = true;
    Command demo;
    demo.action = Command::Action::Demo;
    demo.json = true;
    Command verify;
    verify.action = Command::Action::Verify;
    verify.max_product = 100;
    verify.json = true;

    const Golden cases[] = {
        {"eval_brieskorn.json", eval("brieskorn(2,3,35)", true)},
        {"eval_splice.json", eval("splice(torus(2,3), torus(2,5))", true)},
        {"eval_ksplice.json", eval("ksplice(6, unknot, torus(2,3))", true)},
        {"eval_sigma4demo.json", eval("sigma4demo", true)},
        {"eval_unsupported.json", eval("surgery(1/0, unknot)", true)},
        {"check.json", check},
        {"demo.json", demo},
        {"verify.json", verify},
    };
    for (const auto& g : cases) {
        CAPTURE(g.file);
        const Result r = run_command(g.cmd);
        CHECK(r.out == read_file(test::data_path(std::string("tests/golden/") + g.file)));
    }
}
