#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "weyl/cli.hpp"

using weyl::cli::run_command;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("golden outputs") {
  CHECK(run({"mul", "--n", "1", "d1", "x1"}).out == "x1*d1 + 1\n");
  CHECK(run({"nf", "--n", "1", "d1^2*x1^2"}).out == "x1^2*d1^2 + 4*x1*d1 + 2\n");
  CHECK(run({"cmp", "--n", "1", "--order", "lex", "d1", "x1"}).out == "d1 < x1\n");
  CHECK(run({"cmp", "--n", "1", "--order", "matrix:[[0,1]]", "d1", "x1"}).out == "d1 > x1\n");
  CHECK(run({"cmp", "--n", "1", "x1*d1", "d1*x1"}).code == 1);
  CHECK(run({"gb", "--n", "1", "--order", "lex", "x1", "d1"}).out == "1\n");

  const Run div = run({"div", "--n", "1", "--order", "lex", "x1*d1", "d1"});
  CHECK(div.code == 0);
  CHECK(div.out ==
        "q1 = x1\n"
        "r = 0\n"
        "contract (a) w = sum q_f f + r: verified\n"
        "contract (b) no lt(f) divides a remainder monomial: verified\n"
        "contract (c) LT(q_f f) <= LT(w): verified\n");

  const Run ugb = run({"ugb", "--n", "1", "x1", "d1"});
  CHECK(ugb.code == 0);
  CHECK(ugb.out.find("basis: 1\n  1\n") != std::string::npos);
  CHECK(ugb.out.find("cone 1\n") != std::string::npos);
  CHECK(ugb.out.find("cone 2\n") == std::string::npos);

  const Run cert = run({"cert", "--n", "1", "x1 + d1"});
  CHECK(cert.code == 0);
  CHECK(cert.out.find("verdict: universal") != std::string::npos);
  const Run counter = run({"cert", "--n", "1", "x1", "d1"});
  CHECK(counter.code == 0);
  CHECK(counter.out.find("verdict: counterexample") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"mul", "--n", "1", "x2", "x1"}).code == 1);
  CHECK(run({"mul", "--n", "1", "x1 +", "x1"}).code == 1);
  CHECK(run({"mul", "x1", "x1"}).code == 1);
  CHECK(run({"nf", "--n", "1", "--order", "revlex", "x1"}).code == 1);

  const Run refused = run({"ugb", "--n", "2", "--max-support", "3", "x1^2 - x2", "x1*x2 - 1"});
  CHECK(refused.code == 2);
  CHECK_FALSE(refused.err.empty());
  const Run capped = run({"cert", "--n", "1", "--max-support", "1", "x1 + d1"});
  CHECK(capped.code == 2);
}

TEST_CASE("json output is byte-stable and well formed") {
  const std::vector<std::string> args{"ugb", "--n", "2", "--json", "x1^2 - x2", "x1*x2 - 1"};
  const Run a = run(args);
  const Run b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto doc = nlohmann::json::parse(a.out).at("certificate");
  CHECK(doc.at("dimension") == 2);
  CHECK(doc.at("basis").is_array());
  CHECK(doc.at("cones").size() > 1);

  const auto nf = nlohmann::json::parse(run({"nf", "--n", "1", "--json", "d1*x1"}).out).at("results").at(0);
  CHECK(nf.at("text") == "x1*d1 + 1");
  CHECK(nf.at("terms").size() == 2);
}

TEST_CASE("problem file input") {
  const auto path = std::filesystem::temp_directory_path() / "weylgb_cli_test.txt";
  {
    std::ofstream f(path);
    f << "# whole algebra\nn=1\norder=lex\ngen=x1\ngen=d1\n";
  }
  const Run r = run({"gb", "--input", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
  std::filesystem::remove(path);
  CHECK(run({"gb", "--input", path.string()}).code == 1);
}
