#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <eiscong/cli.hpp>

using namespace eiscong;

static std::pair<int, json> run(std::vector<std::string> args) {
    std::ostringstream out;
    int code = cmd_dispatch(args, out);
    json j;
    if (!out.str().empty() && (out.str()[0] == '{' || out.str()[0] == '[')) j = json::parse(out.str());
    return {code, j};
}

TEST_CASE("decide strong-modularity at 691") {
    auto [code, j] = run({"decide", "strong-modularity", "--char1", "trivial", "--char2",
                          "trivial", "--k", "12", "--ell", "691"});
    CHECK(code == 0);
    CHECK(j.at("verdict") == true);
    CHECK(j.at("condition") == "bernoulli-vanishes");
    CHECK(j.contains("place"));
}

TEST_CASE("scan level-raise in the Mazur case") {
    auto [code, j] = run({"scan", "level-raise", "--char1", "trivial", "--char2", "trivial",
                          "--k", "2", "--ell", "5", "--bound", "100"});
    CHECK(code == 0);
    CHECK(j.at("primes") == json::array({11, 31, 41, 61, 71}));
}

TEST_CASE("domain errors exit 1 with a machine-readable code") {
    auto [code, j] = run({"decide", "strong-modularity", "--k", "3", "--ell", "7", "--char1",
                          "trivial", "--char2", "trivial"});
    CHECK(code == 1);
    CHECK(j.at("error") == "not-odd");
    CHECK(j.contains("detail"));
}

TEST_CASE("usage errors exit 2") {
    auto [code, j] = run({"decide", "strong-modularity", "--char1", "trivial"});
    CHECK(code == 2);
    auto [code2, j2] = run({"frobnicate"});
    CHECK(code2 == 2);
}

TEST_CASE("bernoulli subcommand") {
    auto [code, j] = run({"bernoulli", "--k", "12", "--char", "trivial"});
    CHECK(code == 0);
    CHECK(j.at("coeffs")[0] == "-691/2730");
}

TEST_CASE("gauss subcommand") {
    auto [code, j] = run({"gauss", "--char", "quad:4"});
    CHECK(code == 0);
    // 2i in Q(zeta_4): coefficients [0, 2]
    CHECK(j.at("order") == 4);
    CHECK(j.at("coeffs") == json::array({"0", "2"}));
}

TEST_CASE("eis qexp subcommand") {
    auto [code, j] = run({"eis", "qexp", "--char1", "trivial", "--char2", "trivial", "--k", "4",
                          "--prec", "4"});
    CHECK(code == 0);
    CHECK(j.at("level") == 1);
    CHECK(j.at("coeffs")[0].at("coeffs")[0] == "1/240");
    CHECK(j.at("coeffs")[3].at("coeffs")[0] == "28"); // sigma_3(3)
}

TEST_CASE("eis cusp-constant subcommand") {
    auto [code, j] = run({"eis", "cusp-constant", "--char1", "trivial", "--char2", "trivial",
                          "--k", "4", "--u", "0", "--beta", "-1", "--v", "1", "--delta", "0"});
    CHECK(code == 0);
    CHECK(j.at("coeffs")[0] == "1/240");
}

TEST_CASE("decide level-raise subcommand") {
    auto [code, j] = run({"decide", "level-raise", "--char1", "trivial", "--char2", "trivial",
                          "--k", "2", "--ell", "5", "--M", "11"});
    CHECK(code == 0);
    CHECK(j.at("verdict") == true);
    CHECK(j.at("condition") == "mazur-congruence");
    CHECK(j.at("witness") == 11);
}

TEST_CASE("output is deterministic across runs") {
    std::ostringstream a, b;
    std::vector<std::string> args{"decide", "strong-modularity", "--char1", "gen:5:1:4",
                                  "--char2", "quad:4", "--k", "4", "--ell", "11"};
    cmd_dispatch(args, a);
    cmd_dispatch(args, b);
    CHECK(a.str() == b.str());
    CHECK_FALSE(a.str().empty());
}
