#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "sl2ab/cli.hpp"

using nlohmann::json;

namespace {

struct outcome {
    int code;
    std::string out;
    std::string err;
};

outcome run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int const code = sl2ab::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(std::string const& name)
{
    return std::string(SL2AB_DATA_DIR) + "/" + name;
}

json run_json(std::vector<std::string> args, int expected = 0)
{
    args.push_back("--json");
    auto const r = run(args);
    REQUIRE(r.code == expected);
    auto const j = json::parse(r.out);
    // byte-identical re-serialization
    CHECK(j.dump(2) + "\n" == r.out);
    return j;
}

std::vector<std::uint64_t> factors(json const& j)
{
    return j.at("group").at("invariant_factors").get<std::vector<std::uint64_t>>();
}

}  // namespace

TEST_CASE("help and usage")
{
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"compute", "--help"}).code == 0);
    CHECK(run({}).code == 4);
    CHECK(run({"frobnicate"}).code == 4);
}

TEST_CASE("compute: rational ring with inverted primes")
{
    auto const j = run_json({"compute", "--rational", "--invert", "2,3"});
    CHECK(factors(j).empty());
    CHECK(factors(run_json({"compute", "--rational", "--invert", "5"})) == std::vector<std::uint64_t>{12});
    CHECK(factors(run_json({"compute", "--rational", "--invert", "2"})) == std::vector<std::uint64_t>{3});
    CHECK(factors(run_json({"compute", "--rational", "--invert", "3,7"})) == std::vector<std::uint64_t>{4});
    CHECK(run({"compute", "--rational", "--invert", "4"}).code == 4);
}

TEST_CASE("compute: finite units exit with the theorem code")
{
    auto const r = run({"compute", "--quadratic", "-15"});
    CHECK(r.code == 2);
    CHECK(r.out.find("|S| >= 2") != std::string::npos);
    CHECK(run({"compute", "--rational"}).code == 2);
    auto const bare = run({"compute", "--quadratic", "-7"});
    CHECK(bare.code == 2);
    CHECK(bare.err.find("|S| >= 2") != std::string::npos);
}

TEST_CASE("compute: imaginary quadratic with S")
{
    auto const j = run_json({"compute", "--quadratic", "-15", "--remove-prime", "2:1"});
    CHECK(factors(j) == std::vector<std::uint64_t>{12});
    CHECK(j.at("route") == "quadratic");
    CHECK(run({"compute", "--quadratic", "-15", "--remove-prime", "2:7"}).code == 4);
    CHECK(run({"compute", "--quadratic", "-15", "--remove-prime", "5:0"}).code == 4);
    CHECK(run({"compute", "--quadratic", "-15", "--remove-prime", "2-1"}).code == 4);
}

TEST_CASE("compute: cube root of 5 by polynomial and by user-supplied data")
{
    auto const a = run_json({"compute", "--poly", "-5,0,0,1"});
    CHECK(factors(a) == std::vector<std::uint64_t>{12});
    CHECK(a.at("route") == "Main");
    auto const b = run_json({"compute", "--field", data("cube_root_5.json")});
    CHECK(factors(b) == std::vector<std::uint64_t>{12});
    CHECK(run({"compute", "--field", data("bad_identity.json")}).code == 4);
    CHECK(run({"compute", "--field", data("missing.json")}).code == 4);
}

TEST_CASE("compute: polynomial input errors")
{
    CHECK(run({"compute", "--poly", "-5,0,1"}).code == 3);    // Z[sqrt 5] is not 2-maximal
    CHECK(run({"compute", "--poly", "-1,0,0,0,1"}).code == 4);  // integer root
    CHECK(run({"compute", "--poly", "1,2"}).code == 4);        // not monic
    CHECK(run({"compute", "--poly", "a,b"}).code == 4);
}

TEST_CASE("compute: other field kinds")
{
    CHECK(factors(run_json({"compute", "--quadratic", "33"})) == std::vector<std::uint64_t>{4, 12});
    CHECK(factors(run_json({"compute", "--cyclotomic", "16"})) == std::vector<std::uint64_t>{2, 2});
    CHECK(factors(run_json({"compute", "--function-field", "2", "--extra-s-primes", "1"})) ==
          std::vector<std::uint64_t>{2, 2, 2, 2});
    CHECK(factors(run_json({"compute", "--galois", "4,4,1,2,1"})) == std::vector<std::uint64_t>{6, 6});
    CHECK(run({"compute", "--function-field", "2"}).code == 2);
    CHECK(run({"compute", "--quadratic", "12"}).code == 4);
    CHECK(run({"compute", "--rational", "--quadratic", "2"}).code == 4);
    CHECK(run({"compute", "--quadratic", "2", "--invert", "5"}).code == 4);
}

TEST_CASE("human output shows the breakdown and both forms")
{
    auto const r = run({"compute", "--poly", "-5,0,0,1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("(2, x+1)") != std::string::npos);
    CHECK(r.out.find("Z/4 + Z/3") != std::string::npos);
    CHECK(r.out.find("Z/12") != std::string::npos);
}

TEST_CASE("oracle")
{
    auto const j = run_json({"oracle", "--zmod", "4", "--compare"});
    CHECK(factors(j) == std::vector<std::uint64_t>{4});
    CHECK(j.at("comparison").at("matches") == true);
    CHECK(j.at("sl2_order") == 48);

    auto const h = run({"oracle", "--zmod", "4", "--compare"});
    CHECK(h.out.find("matches the local-ring formula") != std::string::npos);

    CHECK(factors(run_json({"oracle", "--ring", data("f2_dual.json"), "--compare"})) ==
          std::vector<std::uint64_t>{2, 2});
    CHECK(factors(run_json({"oracle", "--ring", data("f4_x_f3.json")})) == std::vector<std::uint64_t>{3});
    CHECK(run({"oracle", "--zmod", "17"}).code == 5);
    CHECK(run({"oracle", "--zmod", "17", "--cap", "17"}).code == 0);
    CHECK(run({"oracle"}).code == 4);
}

TEST_CASE("table")
{
    auto const j = run_json({"table", "quadratic", "--max", "30"});
    CHECK(j.at("rows").size() == 18);
    CHECK(j.at("skipped").size() == 11);
    CHECK(j.at("rows")[2].at("d") == 5);
    CHECK(j.at("rows")[2].at("group").at("invariant_factors").empty());
    CHECK(run_json({"table", "cyclotomic", "--max", "20"}).at("rows").size() == 20);
    CHECK(run_json({"table", "z-inv-n"}).at("rows").size() == 29);
    CHECK(run({"table", "sextic"}).code == 4);
}

TEST_CASE("verify")
{
    CHECK(run({"verify", "z-inv-n"}).code == 0);
    auto const j = run_json({"verify", "oracle-local"});
    CHECK(j.at("ok") == true);
    CHECK(run({"verify", "nonsense"}).code == 4);
}
