#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "nonarch_cli/cli.hpp"

namespace {

using nlohmann::json;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome r;
  r.code = nonarch::cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string data(const std::string& name) { return std::string(NONARCH_TEST_DATA) + "/" + name; }

json report(const Outcome& r) { return json::parse(r.out); }

}  // namespace

TEST(Cli, MoebiusCheck) {
  const Outcome r = run({"moebius-check", "--p", "3", "--q", "p", "--n", "1", "--J", "10"});
  ASSERT_EQ(r.code, nonarch::cli::kOk) << r.err;
  const json j = report(r);
  EXPECT_EQ(j["command"], "moebius-check");
  EXPECT_EQ(j["result"]["value"], "p + O(p^11)");
  EXPECT_EQ(j["result"]["ok"], true);
  EXPECT_TRUE(j["wall_time_ms"].is_number_integer());
}

TEST(Cli, SplittingRadius) {
  const Outcome r = run({"splitting-radius", "--p", "3", "--N", "2", "--n", "4", "--numeric"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report(r)["result"]["logradius"], "9/4");
  EXPECT_EQ(report(r)["result"]["agrees"], true);
}

TEST(Cli, OrderSetFromFile) {
  const Outcome r = run({"order-set", "--poles", data("poles.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report(r)["result"]["orders"], json::parse("[0,1,2,3]"));
}

TEST(Cli, CurrentAndLadder) {
  Outcome r = run({"current", "--p", "3", "--file", data("current.json"), "--q", "p", "--z", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json c = report(r)["result"];
  EXPECT_EQ(c["valid"], true);
  EXPECT_EQ(c["factored_alpha"]["m"], -1);
  r = run({"ladder-ord", "--p", "3", "--file", data("current.json"), "--q", "p", "--z", "1+p"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report(r)["result"]["ord"], 0);
  EXPECT_EQ(report(r)["result"]["estimate"], "1");
  // z = q lies on the cusp at e_1.
  r = run({"ladder-ord", "--p", "3", "--file", data("current.json"), "--q", "p", "--z", "p"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report(r)["result"]["cusp"], true);
}

TEST(Cli, SkeletonTowerFromFile) {
  const Outcome r = run({"skeleton-tower", "--file", data("tower.json"), "--check", "separation", "--samples", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report(r)["result"]["levels"], 2);
}

TEST(Cli, ThetaIsConstant) {
  const Outcome r = run({"theta", "--p", "3", "--zeros", "1:1,2:-1", "--z", "2+p", "--z", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(report(r)["result"]["constant"], true);
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"splitting-radius", "--p", "3", "--N", "3", "--n", "1", "--bogus"},
           {},
           {"no-such-command"},
           {"splitting-radius", "--p", "4", "--N", "3", "--n", "1"},
           {"order-set", "--poles", data("missing.json")},
           {"moebius-check", "--p", "3", "--q", "1"}}) {
    const Outcome r = run(args);
    EXPECT_EQ(r.code, nonarch::cli::kUsage) << r.out << r.err;
    EXPECT_TRUE(r.out.empty());
  }
  const Outcome r = run({"splitting-radius", "--p", "3", "--N", "3", "--n", "1", "--bogus"});
  EXPECT_EQ(json::parse(r.err)["error"]["error"], "usage");
}

TEST(Cli, PrecisionAndMathFailures) {
  Outcome r = run({"current", "--p", "3", "--file", data("current_periodic.json"), "--q", "p", "--z", "p^40", "--periods", "1"});
  EXPECT_EQ(r.code, nonarch::cli::kPrecision) << r.err;
  EXPECT_EQ(json::parse(r.err)["error"]["error"], "precision");
  r = run({"find-order", "--p", "2", "--poles", data("poles_two.json")});
  EXPECT_EQ(r.code, nonarch::cli::kMathFailure) << r.err;
  r = run({"current", "--p", "3", "--file", data("current.json"), "--q", "p", "--z", "p"});
  EXPECT_EQ(r.code, nonarch::cli::kMathFailure) << r.err;
}

TEST(Cli, SeededRunsAreReproducible) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--seed", "17", "find-order", "--p", "3"},
           {"skeleton-tower", "--seed", "5", "--depth", "4", "--check", "compose", "--samples", "30"}}) {
    json a = report(run(args)), b = report(run(args));
    a.erase("wall_time_ms");
    b.erase("wall_time_ms");
    EXPECT_EQ(a.dump(), b.dump());
  }
  json a = report(run({"--seed", "1", "skeleton-tower", "--depth", "3", "--check", "separation"}));
  json b = report(run({"--seed", "2", "skeleton-tower", "--depth", "3", "--check", "separation"}));
  EXPECT_NE(a["result"].dump(), b["result"].dump());
}
