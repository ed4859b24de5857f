// End-to-end tests driving the installed CLI binary.

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string command = std::string(CLI_BINARY_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
    result.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

TEST(CliExpand, GoldenText) {
  const RunResult r =
      run_cli("expand --letters 2 --max-degree 2 --engine posetted --format text");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "a + b + 1/2 ab - 1/2 ba\n");
}

TEST(CliExpand, LogEngineDefaults) {
  const RunResult r = run_cli("expand --letters 2 --max-degree 1 --engine log");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.output, "a + b\n");
}

TEST(CliExpand, JsonSchemaAndStability) {
  const std::string args =
      "expand --letters 3 --max-degree 3 --engine posetted --format json";
  const RunResult first = run_cli(args);
  const RunResult second = run_cli(args);
  ASSERT_EQ(first.exit_code, 0);
  EXPECT_EQ(first.output, second.output);  // byte-identical across runs

  const auto doc = nlohmann::json::parse(first.output);
  EXPECT_EQ(doc.at("engine"), "posetted");
  EXPECT_EQ(doc.at("letters"), 3);
  EXPECT_EQ(doc.at("max_degree"), 3);
  const auto& series = doc.at("series");
  EXPECT_EQ(series.at("alphabet"), (nlohmann::json{"a", "b", "c"}));
  EXPECT_EQ(series.at("max_degree"), 3);
  ASSERT_FALSE(series.at("terms").empty());
  for (const auto& term : series.at("terms")) {
    EXPECT_TRUE(term.contains("word"));
    EXPECT_TRUE(term.at("coeff").contains("num"));
    EXPECT_TRUE(term.at("coeff").contains("den"));
  }
  EXPECT_EQ(doc.at("components").size(), 3u);

  // The alternating-chain engine yields the same series.
  const RunResult reversed = run_cli(
      "expand --letters 3 --max-degree 3 --engine posetted_reversed --format json");
  ASSERT_EQ(reversed.exit_code, 0);
  const auto rdoc = nlohmann::json::parse(reversed.output);
  EXPECT_EQ(doc.at("series"), rdoc.at("series"));
}

TEST(CliExpand, LedgerAndLatex) {
  const RunResult r = run_cli(
      "expand --letters 2 --max-degree 2 --engine posetted --ledger --format json");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.output);
  ASSERT_TRUE(doc.contains("ledger"));
  EXPECT_EQ(doc.at("ledger").size(), 5u);  // 2 + 3 posetted trees
  for (const auto& entry : doc.at("ledger")) {
    EXPECT_TRUE(entry.contains("tree"));
    EXPECT_TRUE(entry.contains("coefficient"));
    EXPECT_TRUE(entry.contains("bracket"));
  }

  const RunResult latex =
      run_cli("expand --letters 2 --max-degree 2 --engine posetted --format latex");
  ASSERT_EQ(latex.exit_code, 0);
  EXPECT_EQ(latex.output, "a + b + \\frac{1}{2} ab - \\frac{1}{2} ba\n");

  const RunResult bracket_latex = run_cli(
      "expand --letters 2 --max-degree 2 --engine posetted --ledger --format latex");
  ASSERT_EQ(bracket_latex.exit_code, 0);
  EXPECT_NE(bracket_latex.output.find("[b,a]"), std::string::npos);
}

TEST(CliExpand, UsageErrors) {
  EXPECT_EQ(run_cli("expand --letters 2 --max-degree 2 --engine nope").exit_code, 2);
  EXPECT_EQ(run_cli("expand --letters 3 --max-degree 2 --engine dynkin").exit_code, 2);
  EXPECT_EQ(run_cli("expand --letters 2 --max-degree 2 --engine dynkin --restrict-c").exit_code,
            2);
  EXPECT_EQ(run_cli("expand --letters 2 --max-degree 4 --engine star --seq -1/2").exit_code, 2);
  EXPECT_EQ(run_cli("expand").exit_code, 2);          // missing required flag
  EXPECT_EQ(run_cli("unknown-command").exit_code, 2);
}

TEST(CliExpand, StarEngine) {
  // Default sequence makes star identical to posetted.
  const RunResult star = run_cli("expand --letters 2 --max-degree 3 --engine star");
  const RunResult posetted = run_cli("expand --letters 2 --max-degree 3 --engine posetted");
  ASSERT_EQ(star.exit_code, 0);
  EXPECT_EQ(star.output, posetted.output);
  const RunResult custom =
      run_cli("expand --letters 2 --max-degree 2 --engine star --seq -1/2,0");
  ASSERT_EQ(custom.exit_code, 0);
  EXPECT_EQ(custom.output, "a + b + 1/2 ab - 1/2 ba\n");  // degree <= 2 sees only c_1
}

TEST(CliTrees, Counts) {
  EXPECT_EQ(run_cli("trees --leaves 2 --binary --poset \"b<=a\" --emit count").output, "3\n");
  EXPECT_EQ(run_cli("trees --leaves 1 --binary --emit count").output, "1\n");
  EXPECT_EQ(run_cli("trees --leaves 4 --binary --emit count").output, "5\n");
  EXPECT_EQ(run_cli("trees --leaves 3 --emit count").output, "3\n");
  EXPECT_EQ(run_cli("trees --leaves 3 --binary --poset \"b<=a\" --emit count").output, "9\n");
}

TEST(CliTrees, ListAndDot) {
  const RunResult list = run_cli("trees --leaves 2 --binary --poset \"b<=a\" --emit list");
  EXPECT_EQ(list.output, "(b,b)\n(b,a)\n(a,a)\n");
  const RunResult dot = run_cli("trees --leaves 2 --binary --emit dot");
  EXPECT_NE(dot.output.find("digraph tree0"), std::string::npos);
  const RunResult bad = run_cli("trees --leaves 2 --poset \"a<=a\" --emit count");
  EXPECT_EQ(bad.exit_code, 2);
}

TEST(CliCoeff, WorkedExample) {
  const RunResult r = run_cli("coeff --tree \"((b,a),a)\" --poset \"b<=a\"");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("coefficient = 1/8"), std::string::npos);
  EXPECT_NE(r.output.find("d=1"), std::string::npos);
  EXPECT_NE(r.output.find("t=2"), std::string::npos);
}

TEST(CliCoeff, BernoulliTypeTree) {
  const RunResult r = run_cli("coeff --tree \"(b,(b,(b,a)))\" --poset \"b<=a\"");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("coefficient = 0"), std::string::npos);  // b_3 = 0
}

TEST(CliCoeff, NonMonotoneIsUsageError) {
  const RunResult r = run_cli("coeff --tree \"((a,b),b)\" --poset \"b<=a\"");
  EXPECT_EQ(r.exit_code, 2);
  // The message names the violated pair l1 <= l2.
  EXPECT_NE(r.output.find("1 <= 2"), std::string::npos);
  EXPECT_NE(r.output.find("non-monotone"), std::string::npos);
}

TEST(CliVerify, SuitesPass) {
  const RunResult all = run_cli("verify --max-degree 4");
  EXPECT_EQ(all.exit_code, 0) << all.output;
  EXPECT_NE(all.output.find("[PASS]"), std::string::npos);
  EXPECT_EQ(all.output.find("[FAIL]"), std::string::npos);

  const RunResult engines = run_cli("verify --max-degree 6 --suite engines");
  EXPECT_EQ(engines.exit_code, 0) << engines.output;

  const RunResult star = run_cli("verify --max-degree 4 --suite star");
  EXPECT_EQ(star.exit_code, 0) << star.output;
  EXPECT_NE(star.output.find("designed-sequence-fails"), std::string::npos);

  const RunResult quick = run_cli("verify --max-degree 1");
  EXPECT_EQ(quick.exit_code, 0) << quick.output;

  EXPECT_EQ(run_cli("verify --max-degree 3 --suite nope").exit_code, 2);
  EXPECT_EQ(run_cli("verify --max-degree 0").exit_code, 2);
}

TEST(CliVerify, JsonFormat) {
  const RunResult r = run_cli("verify --max-degree 2 --suite bernoulli --format json");
  ASSERT_EQ(r.exit_code, 0);
  const auto doc = nlohmann::json::parse(r.output);
  ASSERT_TRUE(doc.is_array());
  for (const auto& check : doc) {
    EXPECT_TRUE(check.at("pass").get<bool>());
    EXPECT_TRUE(check.contains("check"));
  }
}

TEST(CliMinimalCases, NoSpecialCasing) {
  EXPECT_EQ(run_cli("expand --letters 1 --max-degree 1").output, "a\n");
  EXPECT_EQ(run_cli("trees --leaves 1 --emit list").output, "*\n");
  EXPECT_EQ(run_cli("bernoulli --upto 0").output, "b_0 = 1\n");
  const RunResult single = run_cli("coeff --tree a --poset \"b<=a\"");
  EXPECT_EQ(single.exit_code, 0);
  EXPECT_NE(single.output.find("coefficient = 1"), std::string::npos);
}

TEST(CliBernoulli, Table) {
  const RunResult r = run_cli("bernoulli --upto 6");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("b_0 = 1\n"), std::string::npos);
  EXPECT_NE(r.output.find("b_1 = -1/2\n"), std::string::npos);
  EXPECT_NE(r.output.find("b_2 = 1/12\n"), std::string::npos);
  EXPECT_NE(r.output.find("b_3 = 0\n"), std::string::npos);
  EXPECT_NE(r.output.find("b_4 = -1/720\n"), std::string::npos);
  EXPECT_NE(r.output.find("b_6 = 1/30240\n"), std::string::npos);

  const RunResult json = run_cli("bernoulli --upto 2 --format json");
  const auto doc = nlohmann::json::parse(json.output);
  ASSERT_EQ(doc.size(), 3u);
  EXPECT_EQ(doc[2].at("num"), "1");
  EXPECT_EQ(doc[2].at("den"), "12");
}

}  // namespace
