#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "app/run.hpp"

using namespace evenfix::app;
using nlohmann::json;

namespace {

struct Result {
  int code = 0;
  std::string out, err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "evenfix");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const auto parsed = parse_command_line(static_cast<int>(argv.size()), argv.data(), out, err);
  Result r;
  r.code = parsed.config ? run(*parsed.config, out, err) : parsed.exit_code;
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parsing") {
    std::ostringstream out, err;
    const char* argv[] = {"evenfix", "bifurcate", "--family", "g3", "--m", "5", "--a", "0.7", "--seed", "4"};
    const auto p = parse_command_line(10, argv, out, err);
    REQUIRE(p.config);
    CHECK(p.config->command == Command::bifurcate);
    CHECK(p.config->m == 5);
    CHECK(p.config->a == doctest::Approx(0.7));
    CHECK(p.config->seed == 4);
    const Sweep s = parse_sweep("-2:3:11");
    CHECK(s.a0 == -2.0);
    CHECK(s.a1 == 3.0);
    CHECK(s.steps == 11);
  }

  TEST_CASE("usage errors") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {}, {"frobnicate"}, {"certify", "--family", "g5"}, {"bifurcate", "--sweep", "1:2"}, {"certify", "--threads", "0"}}) {
      const Result r = invoke(args);
      CHECK(r.code == exit_usage);
      CHECK(json::parse(r.err).at("error").at("kind") == "usage");
    }
  }

  TEST_CASE("module parameter errors map to usage") {
    const Result r = invoke({"certify", "--family", "g3", "--m", "4"});
    CHECK(r.code == exit_usage);
    CHECK(json::parse(r.err)["error"]["kind"] == "parameter");
    CHECK(invoke({"cosets", "--k", "14"}).code == exit_usage);
  }

  TEST_CASE("molien") {
    const Result r = invoke({"molien", "--family", "g3", "--m", "3", "--degree", "3"});
    REQUIRE(r.code == exit_pass);
    const json doc = json::parse(r.out);
    CHECK(doc["schemaVersion"] == 1);
    CHECK(doc["dimensions"][2]["dimension"] == 3);
    const json basis = json::parse(invoke({"molien", "--family", "g3", "--m", "3", "--degree", "3", "--basis"}).out)["basis"];
    CHECK(basis["maps"].size() == 3);
  }

  TEST_CASE("certify G(1)") {
    const Result r = invoke({"certify", "--family", "g8", "--l", "1"});
    CHECK(r.code == exit_pass);
    const json doc = json::parse(r.out);
    CHECK(doc["group"]["order"] == 192);
    CHECK(doc["pass"] == true);
    for (const auto& c : doc["checks"]) CHECK_MESSAGE(c["pass"] == true, c["name"]);
  }

  TEST_CASE("certify output does not depend on the thread count") {
    for (const auto& fam : std::vector<std::vector<std::string>>{{"--family", "g8", "--l", "1"}, {"--family", "g3", "--m", "5"}}) {
      std::vector<std::string> a{"certify", "--threads", "1"}, b{"certify", "--threads", "4"};
      a.insert(a.end(), fam.begin(), fam.end());
      b.insert(b.end(), fam.begin(), fam.end());
      CHECK(invoke(a).out == invoke(b).out);
    }
  }

  TEST_CASE("cosets") {
    const Result plain = invoke({"cosets", "--k", "12"});
    CHECK(plain.code == exit_pass);
    CHECK(json::parse(plain.out)["order"] == 192);
    CHECK(json::parse(invoke({"cosets", "--k", "12", "--commuting"}).out)["order"] == 24);
    const Result tables = invoke({"cosets", "--k", "12", "--check-tables"});
    CHECK(tables.code == exit_claim_failure);
    const json doc = json::parse(tables.out);
    CHECK(doc["tables"]["matched"] == 25);
    CHECK(doc["tables"]["total"] == 36);
    CHECK(doc["tables"]["tail"]["mismatches"].size() == 2);
  }

  TEST_CASE("group documents round-trip") {
    const auto path = (std::filesystem::temp_directory_path() / "evenfix_cli_group.json").string();
    REQUIRE(invoke({"build", "--family", "g8", "--l", "1", "--output", path}).code == exit_pass);
    std::ifstream in(path);
    const json doc = json::parse(in);
    CHECK(doc["order"] == 192);
    CHECK(doc["elements"].size() == 192);
    CHECK(doc["elements"][0].size() == 64);
    const Result r = invoke({"analyze", "--group", path});
    REQUIRE(r.code == exit_pass);
    const json a = json::parse(r.out);
    CHECK(a["commutant"]["dimension"] == 1);
    CHECK(a["isotropy"]["types"].size() == 5);
    CHECK(a["normalizer"]["weylOrder"] == 48);
    std::filesystem::remove(path);
  }

  TEST_CASE("a tampered group document is rejected") {
    const auto path = (std::filesystem::temp_directory_path() / "evenfix_cli_bad.json").string();
    {
      std::ofstream f(path);
      f << R"({"dim":2,"order":2,"family":"custom","elements":[[1,0,0,1],[0,-1,1,0]]})";
    }
    const Result r = invoke({"analyze", "--group", path});
    CHECK(r.code == exit_internal);
    CHECK(json::parse(r.err)["error"]["kind"] == "structural");
    std::filesystem::remove(path);
  }

  TEST_CASE("bifurcate") {
    const Result r = invoke({"bifurcate", "--family", "g3", "--m", "3", "--a", "0.0"});
    REQUIRE(r.code == exit_pass);
    const json doc = json::parse(r.out);
    REQUIRE(doc["reports"].size() == 3);
    CHECK(doc["reports"][1]["zeroCount"] == 8);
    const Result csv = invoke({"bifurcate", "--family", "g3", "--sweep", "-1:0:2"});
    CHECK(csv.out.rfind("a,fixed_space,zeros,degenerate,all_regular\n", 0) == 0);
    CHECK(csv.out.find("-1,H2,0,1,1\n") != std::string::npos);
  }
}
