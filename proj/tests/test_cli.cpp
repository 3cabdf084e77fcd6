#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "valleyless/cli.hpp"

using vls::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count commands") {
  CHECK(invoke({"count", "perms", "--n", "5", "--valleys", "1"}).out == "88\n");
  CHECK(invoke({"count", "seqs", "--len", "10", "--sum", "20", "--max", "5"}).out == "325\n");
  CHECK(invoke({"count", "seqs", "--len", "6", "--max", "5"}).out == "1287\n");
  const auto big = invoke({"count", "perms", "--n", "40", "--valleys", "0"});
  CHECK(big.code == 0);
  CHECK(big.out == "549755813888\n");
  const auto huge = invoke({"count", "perms", "--n", "60", "--valleys", "10"});
  CHECK(huge.out.find('e') == std::string::npos);
  CHECK(huge.out.size() > 60);
}

TEST_CASE("json output parses and carries the same values") {
  const auto r = invoke({"count", "perms", "--n", "10", "--valleys", "4", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out).at("count") == "353792");
  const auto before = invoke({"--json", "count", "seqs", "--len", "10", "--sum", "20", "--max", "5"});
  CHECK(nlohmann::json::parse(before.out).at("count") == "325");
  const auto e = nlohmann::json::parse(invoke({"enum", "perms", "--n", "3", "--json"}).out);
  CHECK(e.at("count") == 4);
  CHECK(e.at("items")[0] == std::vector<int>{1, 2, 3});
  const auto g = nlohmann::json::parse(invoke({"gf", "vxy", "--x-order", "3", "--y-order", "3", "--json"}).out);
  CHECK(g.at("orders").at("x") == 3);
  CHECK(g.at("terms")[0].at("coeff") == "1");
}

TEST_CASE("enumeration commands") {
  CHECK(invoke({"enum", "perms", "--n", "3"}).out == "123\n231\n132\n321\n");
  CHECK(invoke({"enum", "perms", "--n", "3", "--valleys", "1"}).out == "213\n312\n");
  const auto ten = invoke({"enum", "perms", "--n", "10", "--valleys", "0"});
  CHECK(ten.out.substr(0, ten.out.find('\n')) == "1,2,3,4,5,6,7,8,9,10");
  CHECK(std::count(ten.out.begin(), ten.out.end(), '\n') == 512);
  CHECK(invoke({"enum", "seqs", "--len", "2", "--max", "2"}).out == "12\n21\n22\n");
}

TEST_CASE("generating function commands") {
  CHECK(invoke({"gf", "valley-perms", "--k", "1", "--order", "6"}).out == "2 x^3\n16 x^4\n88 x^5\n");
  const auto an = invoke({"gf", "an", "--n", "1", "--q-order", "3", "--y-order", "3"});
  CHECK(an.out == "1 q^1 y^1\n1 q^2 y^2\n");
  const auto v = invoke({"gf", "vxqy", "--x-order", "2", "--q-order", "3", "--y-order", "3"});
  CHECK(v.out == "1 x^1 q^1 y^1\n1 x^1 q^2 y^2\n");
}

TEST_CASE("bijection commands") {
  CHECK(invoke({"biject", "perm-to-comp", "--perm", "3,2,1"}).out == "1,1,1\n");
  CHECK(invoke({"biject", "perm-to-comp", "--perm", "321"}).out == "1,1,1\n");
  CHECK(invoke({"biject", "comp-to-perm", "--comp", "1,1,1"}).out == "321\n");
  CHECK(invoke({"biject", "theta", "--comp", "2,3,2,1,1"}).out == "2,5,7,8\n");
  CHECK(invoke({"biject", "untheta", "--set", "2,5,7,8", "--total", "9"}).out == "2,3,2,1,1\n");
  CHECK(invoke({"biject", "untheta", "--set", "", "--total", "4"}).out == "4\n");
  const auto round = invoke({"biject", "comp-to-perm", "--comp", "1,1,1,1,1,1,1,1,1,1"});
  CHECK(round.out == "10,9,8,7,6,5,4,3,2,1\n");
  CHECK(invoke({"biject", "perm-to-comp", "--perm", "10,9,8,7,6,5,4,3,2,1"}).out == "1,1,1,1,1,1,1,1,1,1\n");
}

TEST_CASE("invalid input exits 1 with a message on the error stream") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {},
           {"count"},
           {"count", "perms", "--n", "5"},
           {"count", "perms", "--n", "x", "--valleys", "1"},
           {"count", "perms", "--n", "0", "--valleys", "0"},
           {"count", "seqs", "--len", "3", "--max", "0"},
           {"biject", "perm-to-comp", "--perm", "2,1,3"},
           {"biject", "perm-to-comp", "--perm", "1,1"},
           {"biject", "perm-to-comp", "--perm", "12345678910"},
           {"biject", "untheta", "--set", "9", "--total", "4"},
           {"gf", "valley-perms", "--k", "9", "--order", "0"},
           {"frobnicate"},
       }) {
    const auto r = invoke(args);
    CHECK(r.code == vls::cli::kExitInvalidInput);
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
  }
}

TEST_CASE("help exits 0") {
  const auto r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("count") != std::string::npos);
}

TEST_CASE("verify exit codes") {
  const auto ok = invoke({"verify", "--max-n", "5"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  const auto j = nlohmann::json::parse(invoke({"verify", "--max-n", "4", "--json"}).out);
  CHECK(j.at("checks").size() > 0);
  const auto empty = nlohmann::json::parse(invoke({"verify", "--max-n", "0", "--json"}).out);
  CHECK(empty.at("checks").empty());
}

TEST_CASE("argument parsers") {
  CHECK(vls::cli::parse_permutation_arg("2731546") == std::vector<int>{2, 7, 3, 1, 5, 4, 6});
  CHECK(vls::cli::parse_permutation_arg("1") == std::vector<int>{1});
  CHECK(vls::cli::parse_int_list("") == std::vector<int>{});
  CHECK_THROWS(vls::cli::parse_int_list("1,,2"));
  CHECK_THROWS(vls::cli::parse_int_list("1,-2"));
}
