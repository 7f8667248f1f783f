#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sstream>

#include "kp/cli.hpp"

namespace {

struct Invocation {
  int code = -1;
  std::string out;
  std::string err;
};

Invocation run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Invocation result;
  result.code = kp::cli::run(args, out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

void check_roundtrip(const std::string& emitted) {
  const nlohmann::json parsed = nlohmann::json::parse(emitted);
  CHECK(parsed.dump(2) + "\n" == emitted);
}

}  // namespace

TEST_CASE("schubert subcommand") {
  const Invocation r = run({"schubert", "1,3,2"});
  CHECK(r.code == 0);
  CHECK(r.out == "x1 + x2\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"schubert", "2,2"}).code == 2);
  CHECK(run({"schubert", "2,2"}).err.find("not a permutation") != std::string::npos);
  CHECK(run({"pieri", "1,3,2", "--d", "1"}).code == 2);                              // missing --i
  CHECK(run({"pieri", "1,3,2", "--i", "0", "--d", "1"}).code == 2);                  // bad i
  CHECK(run({"pieri", "1,3,2", "--i", "1", "--d", "-1"}).code == 2);                 // bad d
  CHECK(run({"filtration", "1,3,2", "--i", "5", "--d", "1", "--kind", "X"}).code == 2);  // i > n
  CHECK(run({"filtration", "1,3,2", "--i", "2", "--d", "1", "--kind", "Z"}).code == 2);  // bad kind
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"filtration", "--help"}).code == 0);
}

TEST_CASE("verification subcommands report through exit codes") {
  CHECK(run({"pieri", "2,1", "--i", "1", "--d", "1"}).code == 0);
  CHECK(run({"dual-pieri", "1", "--i", "2", "--d", "1"}).code == 0);
  CHECK(run({"prop-check", "1,3,2", "--i", "2", "--d", "1", "--kind", "X", "--n", "4"}).code == 0);
  CHECK(run({"filtration", "2,4,3,1", "--i", "3", "--d", "2", "--kind", "Y", "--n", "4"}).code == 0);
}

TEST_CASE("kp-char defaults n to the window") {
  const Invocation r = run({"kp-char", "1,3,2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dimension = 2") != std::string::npos);
  CHECK(r.out.find("character = x1 + x2") != std::string::npos);
}

TEST_CASE("filtration JSON carries the ladder and survives a round trip") {
  const Invocation r = run({"filtration", "1,3,2", "--i", "2", "--d", "1", "--kind", "X", "--n", "4", "--json"});
  CHECK(r.code == 0);
  check_roundtrip(r.out);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["ladder"] == nlohmann::json::array({0, 3, 4}));
  CHECK(j["verdict"] == "ok");
  CHECK(j["triangular"] == true);
  CHECK(j["chains"][0]["end"] == "1,4,2,3");
  CHECK(j["chains"][0]["length_end"] == 2);
  CHECK(j["quotients"][1]["dim"] == 1);
}

TEST_CASE("emitted JSON reports re-serialize byte-identically") {
  for (const std::vector<std::string>& args : {
           std::vector<std::string>{"schubert", "2,4,3,1", "--json"},
           std::vector<std::string>{"pieri", "1,3,2", "--i", "2", "--d", "2", "--json"},
           std::vector<std::string>{"dual-pieri", "2,1", "--i", "2", "--d", "1", "--json"},
           std::vector<std::string>{"kp-char", "2,4,3,1", "--json"},
           std::vector<std::string>{"prop-check", "1,3,2", "--i", "2", "--d", "1", "--kind", "X", "--json"},
       }) {
    const Invocation r = run(args);
    REQUIRE(r.code == 0);
    check_roundtrip(r.out);
  }
}

TEST_CASE("verify-suite runs a reduced range") {
  const Invocation r = run({"verify-suite", "--max-sn", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("criterion 7") != std::string::npos);
  CHECK(r.out.find("verify-suite: PASS") != std::string::npos);

  const Invocation j = run({"verify-suite", "--max-sn", "3", "--json"});
  CHECK(j.code == 0);
  check_roundtrip(j.out);
  CHECK(nlohmann::json::parse(j.out)["pass"] == true);

  CHECK(run({"verify-suite", "--max-sn", "1"}).code == 2);
}
