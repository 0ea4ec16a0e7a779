#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "json.hpp"

namespace fs = std::filesystem;
using tiletopo::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("tiletopo_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, Classify) {
  const auto r = invoke({"classify", "--A", "5", "--B", "5"});
  EXPECT_EQ(r.code, tiletopo::cli::kOk);
  EXPECT_EQ(r.out, "HasCutPoint z=0.(2)\n");
  EXPECT_EQ(invoke({"classify", "--A", "4", "--B", "5"}).out.rfind("NoCutPointInteriorDisconnected", 0), 0u);
  EXPECT_EQ(invoke({"classify", "--A", "2", "--B", "2"}).out.rfind("DiskLike", 0), 0u);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, tiletopo::cli::kUsage);
  EXPECT_EQ(invoke({"classify"}).code, tiletopo::cli::kUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, tiletopo::cli::kUsage);
  EXPECT_EQ(invoke({"classify", "--A", "x", "--B", "5"}).code, tiletopo::cli::kUsage);
}

TEST(Cli, NeighborsJson) {
  const auto r = invoke({"neighbors", "--A", "4", "--B", "5", "--format", "json"});
  ASSERT_EQ(r.code, tiletopo::cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 10);
}

TEST(Cli, RegimeErrors) {
  EXPECT_EQ(invoke({"cutpoint", "--A", "4", "--B", "5"}).code, tiletopo::cli::kRegime);
  EXPECT_EQ(invoke({"verify-chains", "--A", "5", "--B", "5"}).code, tiletopo::cli::kRegime);
}

TEST(Cli, VerifyChainsWritesFiles) {
  const auto dir = scratch_dir("chains");
  const auto r = invoke({"verify-chains", "--A", "4", "--B", "5", "--out", dir.string()});
  EXPECT_EQ(r.code, tiletopo::cli::kOk) << r.err;
  EXPECT_TRUE(fs::exists(dir / "chains_A4_B5.json"));
  fs::remove_all(dir);
}

TEST(Cli, ParamRoundTrip) {
  const auto r = invoke({"param", "--A", "4", "--B", "5", "--walk", "5;2,(6)"});
  ASSERT_EQ(r.code, tiletopo::cli::kOk) << r.err;
  EXPECT_NE(r.out.find("0.4(2)"), std::string::npos);
  EXPECT_NE(r.out.find("11/80 - 11/40*b + 9/80*b^2"), std::string::npos);
}

TEST(Cli, SweepAndRenderAreDeterministic) {
  const auto a = invoke({"sweep", "--Bmax", "8", "--format", "json"});
  const auto b = invoke({"sweep", "--Bmax", "8", "--format", "json"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto s1 = invoke({"render", "--A", "5", "--B", "5", "--kind", "cutpoint", "--n", "2"});
  const auto s2 = invoke({"render", "--A", "5", "--B", "5", "--kind", "cutpoint", "--n", "2"});
  EXPECT_EQ(s1.code, 0);
  EXPECT_EQ(s1.out, s2.out);
  EXPECT_EQ(s1.out.rfind("<?xml", 0), 0u);
}

TEST(Cli, NormalizeRawInstance) {
  const auto r = invoke({"normalize", "--matrix", "0,-5,1,-4", "--v", "1,0"});
  EXPECT_EQ(r.code, tiletopo::cli::kOk) << r.err;
  EXPECT_NE(r.out.find("A=4"), std::string::npos) << r.out;
}
