#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "whirl/cli.hpp"
#include "whirl/json_io.hpp"

namespace whirl {
namespace {

struct Captured {
  int code;
  std::string out;
  std::string err;
};

Captured invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const auto r = cli::run(args, out, err);
  return {r.exit_code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("whirlctl_test_" + name);
}

TEST(CliTest, GenWhirlJson) {
  const auto r = invoke({"gen-whirl", "--low", "1", "--high", "2"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["vertices"].size(), 10u);
  EXPECT_EQ(j["edges"].size(), 12u);
}

TEST(CliTest, GenWhirlDotPinsPositions) {
  const auto r = invoke({"gen-whirl", "--low", "1", "--high", "1", "--format", "dot"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_NE(r.out.find("graph"), std::string::npos);
  EXPECT_NE(r.out.find("pos="), std::string::npos);
}

TEST(CliTest, GenFareyAndGStar) {
  auto r = invoke({"gen-farey", "--order", "2"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(io::json::parse(r.out)["vertices"].size(), 8u);

  r = invoke({"gen-farey", "--order", "2", "--halved"});
  ASSERT_EQ(r.code, cli::kOk);
  const auto halved = io::json::parse(r.out);
  EXPECT_EQ(halved["vertices"].size(), 5u);
  EXPECT_EQ(halved["blue"].size(), 4u);

  r = invoke({"gen-gstar", "--level", "2"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(io::json::parse(r.out).contains("matching"));
}

TEST(CliTest, PathsMethods) {
  const auto file = scratch("g2.json");
  ASSERT_EQ(invoke({"--out", file.string(), "gen-whirl", "--low", "1", "--high", "2"}).code, cli::kOk);
  auto r = invoke({"paths", "--graph", file.string(), "--u", "0/1", "--v", "1/1", "--k", "2", "--method", "mincost"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  auto j = io::json::parse(r.out);
  EXPECT_EQ(j["totalEdges"], 8);
  EXPECT_EQ(j["system"]["paths"].size(), 2u);

  r = invoke({"paths", "--graph", file.string(), "--u", "0/1", "--v", "1/1", "--k", "2", "--method", "uncross",
              "--seed", "7"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  j = io::json::parse(r.out);
  EXPECT_EQ(j["seed"], 7);
  EXPECT_TRUE(j["validation"]["orderCompatible"].get<bool>());

  r = invoke({"paths", "--graph", file.string(), "--u", "0/1", "--v", "1/1", "--method", "maxflow"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_EQ(io::json::parse(r.out)["system"]["paths"].size(), 2u);

  r = invoke({"paths", "--graph", file.string(), "--u", "0/1", "--v", "1/1", "--k", "3"});
  EXPECT_EQ(r.code, cli::kUsageError);
  std::filesystem::remove(file);
}

TEST(CliTest, VerifySuitesPass) {
  auto r = invoke({"verify", "lemma31", "--order", "8"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(io::json::parse(r.out)["summary"], "iso verified, 257 vertices");

  EXPECT_EQ(invoke({"verify", "theorem2", "--level", "5"}).code, cli::kOk);
  EXPECT_EQ(invoke({"verify", "sternbrocot", "--order", "5"}).code, cli::kOk);
  EXPECT_EQ(invoke({"verify", "lemma22", "--level", "2", "--samples", "20", "--seed", "3"}).code, cli::kOk);
  EXPECT_EQ(invoke({"verify", "kneip", "--level", "3", "--trials", "10", "--seed", "3"}).code, cli::kOk);
  EXPECT_EQ(invoke({"verify", "theorem1", "--level", "2", "--budget", "100000"}).code, cli::kOk);
}

TEST(CliTest, SeedIsEchoedAndReportsAreDeterministic) {
  const std::vector<std::string> args{"verify", "kneip", "--level", "3", "--trials", "15", "--seed", "99"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  ASSERT_EQ(a.code, cli::kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(io::json::parse(a.out)["seed"], 99);
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"gen-whirl", "--low", "1"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"gen-whirl", "--low", "3", "--high", "2"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"gen-farey", "--order", "2", "--format", "svg"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"paths", "--graph", "/nonexistent.json", "--u", "0/1", "--v", "1/1"}).code, cli::kUsageError);
  EXPECT_EQ(invoke({"verify", "theorem1", "--level", "3", "--budget", "50"}).code, cli::kBudgetExceeded);
}

TEST(CliTest, OutFileMatchesStdout) {
  const auto file = scratch("farey.json");
  const auto r = invoke({"gen-farey", "--order", "3", "--out", file.string()});
  ASSERT_EQ(r.code, cli::kOk);
  std::ifstream f(file);
  std::stringstream contents;
  contents << f.rdbuf();
  EXPECT_EQ(contents.str(), r.out);
  EXPECT_FALSE(std::filesystem::exists(file.string() + ".tmp"));
  std::filesystem::remove(file);
}

}  // namespace
}  // namespace whirl
