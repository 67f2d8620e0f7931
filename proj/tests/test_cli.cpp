#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tlwords");
  std::vector<char const*> argv;
  for (auto const& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = tl::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tables") {
  CHECK(run({"tables", "fine", "4"}).out == "fine: 1, 0, 1, 2, 6\n");
  CHECK(run({"tables", "jacobsthal", "4"}).out == "jacobsthal: 1, 1, 3, 5\n");
  CHECK(run({"tables", "catalan", "3", "--format", "csv"}).out == "n,catalan\n0,1\n1,1\n2,2\n3,5\n");
  auto j = nlohmann::json::parse(run({"tables", "bgrid", "3", "--format", "json"}).out);
  CHECK(j["schema"] == 1);
  CHECK(j["rows"][3] == nlohmann::json::array({5, 5, 3, 1}));
  auto mult = run({"tables", "multiplicities", "4"});
  CHECK(mult.code == 0);
  CHECK(mult.out.find("(2,2)") != std::string::npos);
  CHECK(run({"tables", "nope", "4"}).code == 2);
  CHECK(run({"tables", "fine", "-1"}).code == 2);
}

TEST_CASE("mul and basis") {
  auto r = run({"mul", "2", "udud", "udud"});
  CHECK(r.code == 0);
  CHECK(r.out == "(v^1 + v^-1) * udud\n");
  CHECK(run({"mul", "2", "uudd", "udud"}).out == "(1) * udud\n");
  CHECK(run({"mul", "5", "uudududdud", "uududduudd"}).out == "(v^1 + v^-1) * uudududdud\n");
  CHECK(run({"mul", "2", "uddu", "udud"}).code == 2);
  CHECK(run({"mul", "3", "udud", "udud"}).code == 2);
  auto b = run({"basis", "4", "3"});
  CHECK(b.out == "uuuudddd\nuuududdd\nuuuddudd\nuuudddud\n");
  CHECK(run({"basis", "4", "5"}).code == 2);
  CHECK(run({"basis", "3", "1", "--verbose"}).out.find("{(1,6),(2,5),(3,4)}") != std::string::npos);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"verify"}).code == 2);  // --n-max missing
  CHECK(run({"verify", "--n-max", "3", "--convention", "C"}).code == 2);
  CHECK(run({"verify", "--n-max", "3", "bogus"}).code == 2);
  CHECK(run({"verify", "--n-max", "3", "--points", "2"}).code == 2);
  CHECK(run({"verify", "--n-max", "3", "--points", "0,2"}).code == 2);
}

TEST_CASE("verify report") {
  auto r = run({"verify", "--n-max", "4", "--format", "json", "--convention", "B"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["convention"] == "B");
  CHECK(j["status"] == "pass");
  CHECK(j["thmD_ratio_sign"] == -1);
  CHECK(j["checks"].size() == 4 * 12 + 1);
  CHECK(j["checks"][0]["name"] == "relations");
  CHECK(j["checks"][0]["n"] == 1);
  // deterministic
  CHECK(run({"verify", "--n-max", "4", "--format", "json", "--convention", "B"}).out == r.out);

  auto sub = nlohmann::json::parse(run({"verify", "euler", "thmC", "--n-max", "3", "--format", "json"}).out);
  CHECK(sub["checks"].size() == 6);
  CHECK(sub["checks"][1]["name"] == "thmC");
  CHECK_FALSE(sub.contains("thmD_ratio_sign"));
}

TEST_CASE("matrix dump") {
  std::string path = "tlwords_matrices_test.json";
  CHECK(run({"verify", "ddzero", "--n-max", "3", "--emit-matrices", path}).code == 0);
  std::ifstream in(path);
  std::stringstream first;
  first << in.rdbuf();
  auto j = nlohmann::json::parse(first.str());
  CHECK(j["complexes"].size() == 3);
  CHECK(j["complexes"][2]["n"] == 3);
  CHECK(j["complexes"][2]["bases"][0]["diagrams"] == nlohmann::json::array({"uuuddd"}));
  CHECK(run({"verify", "ddzero", "--n-max", "3", "--emit-matrices", path}).code == 0);
  std::ifstream again(path);
  std::stringstream second;
  second << again.rdbuf();
  CHECK(first.str() == second.str());
  std::remove(path.c_str());
}
