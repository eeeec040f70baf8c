#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli/cli.hpp"

namespace fracindex::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "fracindex");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json invoke_json(std::vector<std::string> args) {
  args.insert(args.begin(), {"--format", "json"});
  const Result r = invoke(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return nlohmann::json::parse(r.out);
}

const std::string kData = FRACINDEX_DATA_DIR;

TEST(Cli, IndexOfProjectivePlane) {
  const auto doc = invoke_json({"index", "--manifold", "cp2", "--bundle", "trivial"});
  ASSERT_EQ(doc["rows"].size(), 1u);
  EXPECT_EQ(doc["rows"][0]["value"], "-1/8");
  EXPECT_EQ(doc["rows"][0]["integer"], false);
  EXPECT_EQ(doc["rows"][0]["denominator"], "8");
}

TEST(Cli, IndexMarkdownTable) {
  const Result r = invoke({"index", "--manifold", "cp4", "--manifold", kData + "/manifolds/cp2.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| CP^4 | dirac | 3/128 | 128 | false |"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("| CP^2 | dirac | -1/8 | 8 | false |"), std::string::npos) << r.out;
}

TEST(Cli, IndexWithTwists) {
  auto doc = invoke_json({"index", "--manifold", "cp2", "--twist", "lprime=3x"});
  EXPECT_EQ(doc["rows"][0]["formula"], "spinc");
  EXPECT_EQ(doc["rows"][0]["value"], "1");
  doc = invoke_json({"index", "--manifold", "cp1", "--twist", "l=x, n=2"});
  EXPECT_EQ(doc["rows"][0]["value"], "1/2");
  doc = invoke_json({"index", "--manifold", "k3", "--formula", "all"});
  EXPECT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][1]["formula"], "dolbeault");
  EXPECT_EQ(doc["rows"][1]["value"], "2");
}

TEST(Cli, GenusSeries) {
  const auto doc = invoke_json({"genus", "--series", "a-hat", "--order", "2"});
  EXPECT_EQ(doc["coefficients"], (nlohmann::json{"1", "0", "-1/24"}));
  const auto cls = invoke_json({"genus", "--series", "todd", "--manifold", "cp2"});
  EXPECT_EQ(cls["rows"][0]["class"], "1 + 3/2*x + x^2");
  EXPECT_EQ(cls["rows"][0]["integral"], "1");
}

TEST(Cli, Catalog) {
  const auto list = invoke_json({"catalog", "list"});
  EXPECT_GE(list["rows"].size(), 8u);
  const auto show = invoke_json({"catalog", "show", "hopkins"});
  bool found = false;
  for (const auto& row : show["rows"]) {
    if (row["property"] == "integral A-hat") {
      EXPECT_EQ(row["value"], "3/128");
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Cli, LabWinding) {
  const auto doc = invoke_json({"lab", "winding", "--symbol", "e^{3it}"});
  EXPECT_EQ(doc["rows"][0]["winding"], 3);
}

TEST(Cli, LabExperiments) {
  auto doc = invoke_json({"lab", "index", "--symbol", "e^{-2it}"});
  EXPECT_EQ(doc["rows"][0]["index"], "2");
  doc = invoke_json({"lab", "homotopy", "--input", kData + "/lab/homotopy.json"});
  EXPECT_EQ(doc["rows"].size(), 11u);
  EXPECT_EQ(doc["constant"], true);
  doc = invoke_json({"lab", "compose", "--symbol", "e^{it}", "--symbol", "e^{2it}"});
  EXPECT_EQ(doc["rows"][0]["lhs"], "-3");
  EXPECT_EQ(doc["rows"][0]["rhs"], "-3");
  doc = invoke_json({"lab", "adjoint", "--symbol", "e^{it}"});
  EXPECT_EQ(doc["rows"][0]["index"], "-1");
  EXPECT_EQ(doc["rows"][1]["index"], "1");
  EXPECT_EQ(doc["rotation_zero"], true);
  doc = invoke_json({"lab", "heat", "--operator", kData + "/lab/operator.json"});
  EXPECT_EQ(doc["rows"][0]["kernel_index"], -3);
}

TEST(Cli, WindowIsAutoAdjustedWithWarning) {
  const Result r = invoke({"--format", "csv", "lab", "index", "--symbol", "e^{it}", "--K", "2", "--W", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  EXPECT_NE(r.out.find("e^{it},exact,5,1,1,-1"), std::string::npos) << r.out;
}

TEST(Cli, ErrorsGoToErrorStream) {
  Result r = invoke({"lab", "homotopy", "--symbol", "1", "--symbol", "e^{it}"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("t = 1/2"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());

  r = invoke({"index", "--manifold", kData + "/manifolds/bad_odd_degree.json"});
  EXPECT_NE(r.code, 0);
  EXPECT_NE(r.err.find("odd-degree"), std::string::npos);

  r = invoke({"frobnicate"});
  EXPECT_EQ(r.code, 2);

  r = invoke({"--tolerance-index", "0", "lab", "winding", "--symbol", "e^{it}"});
  EXPECT_NE(r.code, 0);
}

TEST(Cli, DeterministicOutput) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--format", "json", "catalog", "show", "cp2*cp2"},
           {"--format", "csv", "lab", "adjoint", "--symbol", kData + "/lab/block_symbol.json"},
           {"lab", "heat", "--seed", "4"}}) {
    const Result a = invoke(args);
    const Result b = invoke(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, OutputDirectoryFromEnvironment) {
  const auto dir = std::filesystem::temp_directory_path() / "fracindex_cli_test";
  std::filesystem::remove_all(dir);
  ::setenv("FRACINDEX_OUT_DIR", dir.c_str(), 1);
  const Result r = invoke({"--format", "csv", "--out", "sub/report.csv", "index", "--manifold", "cp2"});
  ::unsetenv("FRACINDEX_OUT_DIR");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(dir / "sub/report.csv");
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "manifold,formula,value,denominator,integer,digest\nCP^2,dirac,-1/8,8,false,3bf444267fc6bfd4\n");
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace fracindex::cli
