#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("residua_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) const {
    auto p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
  }

  static std::string instance(const std::string& name) { return std::string(RESIDUA_INSTANCES_DIR) + "/" + name; }

  Outcome run(const std::string& args) const {
    auto out = dir_ / "stdout";
    auto err = dir_ / "stderr";
    std::string cmd = std::string("\"") + RESIDUA_CLI_PATH + "\" " + args + " >\"" + out.string() + "\" 2>\"" +
                      err.string() + "\"";
    int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
  }

  fs::path dir_;
};

TEST_F(Cli, ColonOfTheCoordinatePoint) {
  auto r = run("colon " + instance("ci_points.txt"));
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["command"], "colon");
  EXPECT_EQ(j["lhs"], nlohmann::json({"y^2", "x*y", "x^2"}));
  EXPECT_TRUE(j["verdict"].is_null());
  EXPECT_EQ(j["input_hash"].get<std::string>().size(), 16U);
}

TEST_F(Cli, OtherComputations) {
  auto gb = run("gb " + instance("power.txt"));
  ASSERT_EQ(gb.code, 0) << gb.err;
  EXPECT_EQ(nlohmann::json::parse(gb.out)["lhs"], nlohmann::json({"y^2", "x*y", "x^2"}));
  auto f = run("fitt0 " + instance("ci_points.txt"));
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_EQ(nlohmann::json::parse(f.out)["lhs"], nlohmann::json({"y^2", "x*y", "x^2"}));
  auto k = run("kitt " + instance("power.txt"));
  ASSERT_EQ(k.code, 0) << k.err;
  EXPECT_EQ(nlohmann::json::parse(k.out)["lhs"], nlohmann::json({"y", "x"}));
}

TEST_F(Cli, VerifyReportsEquality) {
  auto r = run("verify thm25 " + instance("power.txt"));
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["theorem"], "thm25");
  EXPECT_EQ(j["verdict"], "equal");
  EXPECT_EQ(j["lhs"], j["rhs"]);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["instance"]["family"], "power");
}

TEST_F(Cli, FieldOverride) {
  auto r = run("colon --field q " + instance("ci_points.txt"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["instance"]["field"], "QQ");
}

TEST_F(Cli, NotEqualVerdictExitsWithTwo) {
  // Twisted cubics are not Gorenstein, so the link formula undershoots.
  auto c = run("corpus hb2 1 --seed 3 --out \"" + (dir_ / "hb2.txt").string() + "\"");
  ASSERT_EQ(c.code, 0) << c.err;
  auto r = run("verify thm34 \"" + (dir_ / "hb2.txt").string() + "\"");
  EXPECT_EQ(r.code, 2) << r.err;
  auto j = nlohmann::ordered_json::parse(r.out);
  EXPECT_EQ(j["verdict"], "lhs-strictly-larger");
  EXPECT_EQ(j["rhs_subset_lhs"], true);
}

TEST_F(Cli, ErrorsExitWithOne) {
  auto missing = run("colon \"" + (dir_ / "nope.txt").string() + "\"");
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.err.rfind("residua: ", 0), 0U) << missing.err;

  auto bad_thm = run("verify thm99 " + instance("power.txt"));
  EXPECT_EQ(bad_thm.code, 1);

  auto invalid = write("bad.txt", "vars = x, y\nI = x\na = y\n");
  auto v = run("colon \"" + invalid.string() + "\"");
  EXPECT_EQ(v.code, 1);
  EXPECT_NE(v.err.find("a not contained in I"), std::string::npos) << v.err;

  auto syntax = write("syntax.txt", "vars = x, y\nI = x +* y\ns = 1\n");
  auto p = run("gb \"" + syntax.string() + "\"");
  EXPECT_EQ(p.code, 1);
  EXPECT_NE(p.err.find("line 2, column 8"), std::string::npos) << p.err;

  auto violated = run("verify cor31 " + instance("power.txt"));
  EXPECT_EQ(violated.code, 1);
  EXPECT_NE(violated.err.find("hypothesis-violation: cor31"), std::string::npos) << violated.err;

  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("corpus nosuch 2").code, 1);
}

TEST_F(Cli, StepBudgetIsAnError) {
  auto r = run("colon --max-steps 1 " + instance("power.txt"));
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST_F(Cli, CorpusIsReproducible) {
  auto a = run("corpus ci 5 --seed 7");
  auto b = run("corpus ci 5 --seed 7");
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run("corpus ci 5 --seed 8").out);
  auto path = dir_ / "ci.txt";
  ASSERT_EQ(run("corpus ci 5 --seed 7 --out \"" + path.string() + "\"").code, 0);
  EXPECT_EQ(slurp(path), a.out);
}

TEST_F(Cli, ParallelJobsKeepDocumentOrder) {
  auto path = dir_ / "ci.txt";
  ASSERT_EQ(run("corpus ci 6 --seed 11 --out \"" + path.string() + "\"").code, 0);
  auto serial = run("verify cor31 \"" + path.string() + "\"");
  auto parallel = run("verify cor31 --jobs 4 \"" + path.string() + "\"");
  ASSERT_EQ(serial.code, 0) << serial.err;
  EXPECT_EQ(parallel.code, 0) << parallel.err;
  EXPECT_EQ(serial.out, parallel.out);
  auto j = nlohmann::json::parse(serial.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.size(), 6U);
  for (const auto& doc : j) EXPECT_EQ(doc["verdict"], "equal");
}

}  // namespace
