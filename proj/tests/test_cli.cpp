#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "cscrystal/format.hpp"

using cscrystal::Json;
using namespace cscrystal::cli;

namespace {
struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "cs_crystal");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}
}  // namespace

TEST_CASE("enumerate") {
  auto r = call({"enumerate", "--rank", "2", "--lambda", "0,1", "--shifted", "--format", "json"});
  CHECK(r.code == kSuccess);
  CHECK(Json::parse(r.out).at("count") == 15);
  r = call({"enumerate", "--rank", "1", "--lambda", "0", "--shifted"});
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("count: 2") != std::string::npos);
  CHECK(call({"enumerate", "--rank", "2", "--lambda", "1,1,1"}).code == kUsage);
  CHECK(call({"enumerate", "--rank", "2", "--lambda", "1,1,1", "--partition"}).code == kSuccess);
  CHECK(call({"enumerate", "--rank", "2", "--lambda", "1,2", "--partition"}).code == kUsage);
  CHECK(call({"enumerate", "--rank", "2", "--lambda", "-1,0"}).code == kUsage);
}

TEST_CASE("bzl") {
  auto r = call({"bzl", "--rank", "2", "--tableau", "1 2 2 / 3 3"});
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("(2; 2, 0)") != std::string::npos);
  CHECK(r.out.find("(2; 2□, 0◯)") != std::string::npos);
  CHECK(r.out.find("-t + t^2") != std::string::npos);
  r = call({"bzl", "--rank", "2", "--tableau", "1 2 2 / 3 3", "--format", "json"});
  CHECK(r.code == kSuccess);
  const Json j = Json::parse(r.out);
  CHECK(j.at("rules_agree") == true);
  CHECK(j.at("c") == Json::parse("[0,-1,1]"));
  r = call({"bzl", "--rank", "2", "--tableau", "1 1 1 / 2 2"});
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("(0; 0, 0)") != std::string::npos);
  CHECK(call({"bzl", "--rank", "2", "--tableau", "1 x"}).code == kUsage);
  CHECK(call({"bzl", "--rank", "2", "--tableau", "2 1"}).code == kUsage);
  CHECK(call({"bzl", "--rank", "2", "--tableau", "1 1 / 2 2"}).code == kUsage);
  CHECK(call({"bzl", "--rank", "2"}).code == kUsage);
}

TEST_CASE("verify") {
  auto r = call({"verify", "--rank", "2", "--lambda", "0,1"});
  CHECK(r.code == kSuccess);
  r = call({"verify", "--rank", "1", "--lambda", "3", "--format", "json"});
  CHECK(r.code == kSuccess);
  CHECK(Json::parse(r.out).at("ok") == true);
  CHECK(call({"verify", "--rank", "0", "--lambda", "1"}).code == kUsage);
  CHECK(call({"verify", "--rank", "3", "--lambda", "1,0,1", "--threads", "3"}).code == kSuccess);
  r = call({"verify", "--rank", "1", "--lambda", "1", "--format", "json", "--timing"});
  CHECK(Json::parse(r.out).contains("seconds"));
}

TEST_CASE("hpoly") {
  auto r = call({"hpoly", "--rank", "2", "--lambda", "0,1", "--format", "latex"});
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("\\alpha_1+2\\alpha_2 & -2q^{-1}+2q^{-2}") != std::string::npos);
  r = call({"hpoly", "--rank", "2", "--lambda", "0,1", "--at", "-1", "--format", "csv"});
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("\n1,2,0,-2,2,0,4,1\n") != std::string::npos);
  r = call({"hpoly", "--rank", "1", "--lambda", "0"});
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("a1  -t") != std::string::npos);
  r = call({"hpoly", "--rank", "2", "--lambda", "0,1", "--at", "inf", "--at", "-1", "--at", "1", "--format", "json"});
  CHECK(r.code == kSuccess);
  CHECK(Json::parse(r.out).at("rows").size() == 12);
  CHECK(call({"hpoly", "--rank", "2", "--lambda", "0,1", "--at", "2"}).code == kUsage);
}

TEST_CASE("graph") {
  auto r = call({"graph", "--rank", "2", "--lambda", "1,0"});
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("n0 -> n1 [label=\"1\"]") != std::string::npos);
  CHECK(r.out.find("n1 -> n2 [label=\"2\"]") != std::string::npos);
  r = call({"graph", "--rank", "1", "--lambda", "1"});
  CHECK(r.out.find("n1 [label=\"2\"]") != std::string::npos);
  CHECK(r.out.find("n2") == std::string::npos);
  CHECK(call({"graph", "--rank", "1", "--lambda", "z"}).code == kUsage);
}

TEST_CASE("usage errors") {
  CHECK(call({}).code == kUsage);
  CHECK(call({"frobnicate"}).code == kUsage);
  CHECK(call({"enumerate", "--lambda", "1"}).code == kUsage);
  CHECK(call({"--help"}).code == kSuccess);
}

TEST_CASE("output is byte-deterministic") {
  const std::vector<std::vector<std::string>> commands{
      {"enumerate", "--rank", "2", "--lambda", "1,1", "--shifted", "--format", "json"},
      {"graph", "--rank", "2", "--lambda", "1,1"},
      {"hpoly", "--rank", "3", "--lambda", "1,0,1", "--format", "csv", "--at", "-1"},
      {"verify", "--rank", "3", "--lambda", "0,1,0", "--format", "json"},
  };
  for (auto cmd : commands) {
    const auto once = call(cmd);
    CHECK(call(cmd).out == once.out);
    cmd.push_back("--threads");
    cmd.push_back("4");
    CHECK(call(cmd).out == once.out);
  }
}
