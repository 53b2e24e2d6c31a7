#include <sys/wait.h>

#include <cstdio>
#include <fstream>

#include "common.hpp"

using namespace wbh::test;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(WBH_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string inst(const char* n) { return data_path(std::string("instances/") + n + ".instance"); }

std::string read(const std::string& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST(Cli, CheckPasses) {
  auto r = run("check " + inst("g2"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("all checks pass: yes"), std::string::npos);
}

TEST(Cli, CheckNamesFailingAxiom) {
  auto text = read(inst("g2"));
  auto at = text.find("[0, 0, 0, \"1\"]");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 14, "[0, 0, 0, \"2\"]");
  std::string path = ::testing::TempDir() + "broken.instance";
  std::ofstream(path) << text;
  auto r = run("check " + path);
  EXPECT_EQ(r.code, 1) << r.out;
  EXPECT_NE(r.out.find("FAIL alg.assoc"), std::string::npos) << r.out;
}

TEST(Cli, MalformedIsInputError) {
  std::string path = ::testing::TempDir() + "malformed.instance";
  std::ofstream(path) << "{\"name\": \"x\"";
  EXPECT_EQ(run("check " + path).code, 2);
  EXPECT_EQ(run("check /nonexistent/file.instance").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Cli, Derive) {
  auto r = run("derive " + inst("g2"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("r = 2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("separable Frobenius: pass"), std::string::npos);
  EXPECT_NE(run("derive " + inst("z2")).out.find("r = 1"), std::string::npos);
  EXPECT_NE(run("derive " + inst("k2")).out.find("n = 2, r = 2"), std::string::npos);
}

TEST(Cli, AntipodeOnNZ) {
  auto r = run("antipode " + inst("nz"));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "no weak antipode (linear system inconsistent); γ rank 3/4\n");
}

TEST(Cli, AntipodeOnG2) {
  auto r = run("antipode " + inst("g2"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("origin from_galois"), std::string::npos);
  EXPECT_NE(r.out.find("[1, 2, \"1\"]"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("[2, 1, \"1\"]"), std::string::npos);
}

TEST(Cli, Galois) {
  auto r = run("galois " + inst("g2"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("γ: 8×8 invertible; γ′: 8×8 invertible"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("t = 8, c = 8"), std::string::npos);
  EXPECT_EQ(run("galois " + inst("nz")).code, 1);
}

TEST(Cli, HopfModule) {
  auto r = run("hopfmod " + inst("g2") + " " + data_path("modules/g2_komega1.module"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("coinvariants dim 2"), std::string::npos);
  EXPECT_NE(r.out.find("bijective"), std::string::npos);
}

TEST(Cli, Eval) {
  auto r = run("eval " + inst("z2") + " \"eps o e\"");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[] -> []\n1\n");
  EXPECT_EQ(run("eval " + inst("z2") + " \"m o m\"").code, 2);
}

TEST(Cli, GenIsDeterministic) {
  auto r = run("gen groupoid --objects 2 --full");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, read(inst("g2")));
  EXPECT_EQ(run("gen monoid --table \"1 1; 1 1\"").code, 2);
}

TEST(Cli, ReportJsonToFile) {
  std::string path = ::testing::TempDir() + "g2.report.json";
  auto r = run("report --out " + path + " " + inst("g2"));
  EXPECT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(read(path));
  EXPECT_EQ(doc["instance"], "G2");
  EXPECT_EQ(doc["dims"]["r"], 2);
  EXPECT_TRUE(doc["all_checks_pass"].get<bool>());
}

TEST(Cli, FloatMode) {
  auto r = run("--float --tol 1e-10 check " + inst("sl"));
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, MaxDimGuard) {
  EXPECT_EQ(run("--max-dim 3 check " + inst("g2")).code, 2);
  EXPECT_EQ(run("--max-dim 4 check " + inst("g2")).code, 0);
}
