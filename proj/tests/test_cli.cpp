#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

const std::string kCli = SYMRES_CLI;
const std::string kData = SYMRES_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + kCli + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return "'" + kData + "/" + name + "'"; }

std::string without_timing(std::string json) {
  auto j = nlohmann::ordered_json::parse(json);
  j.erase("timing_ms");
  return j.dump();
}

}  // namespace

TEST(Cli, AnalyzeQ8D8) {
  const auto r = run("analyze " + data("q8d8.arr") + " --oracle nbc");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1 + 21t + 170t^2 + 650t^3 + 1125t^4 + 625t^5"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("2592"), std::string::npos);
}

TEST(Cli, CountCatalog) {
  const auto r = run("count --catalog q8d8 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("resolution_count"), 81);
  EXPECT_EQ(j.at("exit_code"), 0);
  EXPECT_EQ(run("count --catalog g4").code, 0);
  EXPECT_EQ(run("count --catalog wreath:A2:2").code, 0);
}

TEST(Cli, CountFromFile) {
  const auto r = run("count --arrangement " + data("braid3.arr") + " --weyl-order 6 --json");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("resolution_count"), 1);
}

TEST(Cli, InvalidInputExitsOne) {
  EXPECT_EQ(run("analyze /nonexistent/file.arr").code, 1);
  EXPECT_EQ(run("count --catalog nope").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("analyze " + data("q8d8.arr") + " --oracle magic").code, 1);
  EXPECT_EQ(run("catalan --type Z3 --n 1").code, 1);
  EXPECT_EQ(run("analyze " + data("q8d8.arr"), "SYMRES_FLAT_CAP=abc").code, 1);
}

TEST(Cli, CapExitsTwo) {
  const auto r = run("analyze " + data("q8d8.arr") + " --json", "SYMRES_FLAT_CAP=10");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(run("group analyze --catalog q8d8", "SYMRES_GROUP_CAP=5").code, 2);
}

TEST(Cli, InconsistencyExitsThree) {
  EXPECT_EQ(run("count --arrangement " + data("braid3.arr") + " --weyl-order 5").code, 3);
}

TEST(Cli, GroupAnalyze) {
  const auto r = run("group analyze " + data("g4.grp") + " --json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("order"), 24);
  EXPECT_EQ(run("group analyze --catalog q8d8").code, 0);
}

TEST(Cli, ConeAndCatalanWriteFiles) {
  const std::string out = testing::TempDir() + "symres_cat.arr";
  EXPECT_EQ(run("catalan --type A2 --n 2 --affine --out '" + out + "'").code, 0);
  EXPECT_EQ(run("analyze '" + out + "'").code, 0);
  const std::string coned = testing::TempDir() + "symres_cone.arr";
  EXPECT_EQ(run("cone '" + out + "' --out '" + coned + "'").code, 0);
  std::ifstream in(coned);
  EXPECT_TRUE(in.good());
}

TEST(Cli, JsonIsDeterministic) {
  for (const std::string& args : std::vector<std::string>{"analyze " + data("q8d8.arr") + " --oracle ff --json", "count --catalog g4 --json",
                                 "group analyze --catalog g4 --json", "wreath-formula --type E8 --n 3 --json"}) {
    const auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << args;
    EXPECT_EQ(without_timing(a.out), without_timing(b.out)) << args;
  }
}

TEST(Cli, SelftestWithSkips) {
  const auto r = run("selftest --skip ff,properties");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SKIP"), std::string::npos);
  EXPECT_NE(r.out.find("selftest OK"), std::string::npos);
  EXPECT_EQ(run("selftest --skip bogus").code, 1);
}
