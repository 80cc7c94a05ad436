#include <gtest/gtest.h>

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "sweep.hpp"
#include "zdkit/cli.hpp"

using namespace zdkit;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int status;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run_cli(std::move(args), out, err);
  return {status, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("zdkit_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

std::string fixture(const std::string& name) { return zdkit::sweep::fixture_dir() + "/" + name; }

}  // namespace

TEST_F(Cli, ConstructZn) {
  const CliRun r = invoke({"construct", "--family", "zn", "--n", "11", "--e", "5", "--out", path("t.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  const Json j = r.json();
  EXPECT_EQ(j["parameters"], "(11,3,4)");
  EXPECT_EQ(j["spectrum"]["preimage_sizes"], "{1, 5^2}");
  EXPECT_EQ(table_from_json(read_json_file(path("t.json"))), family_zn(11, 5).table);
}

TEST_F(Cli, ConstructProductFields) {
  CliRun r = invoke({"construct", "--family", "product-fields", "--factors", "3^2,5", "--e", "4"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.json()["parameters"], "(45,12,3)");
  r = invoke({"construct", "--family", "product-fields", "--n", "45", "--e", "4"});
  EXPECT_EQ(r.json()["parameters"], "(45,12,3)");
}

TEST_F(Cli, PipelineOnZ11) {
  ASSERT_EQ(invoke({"construct", "--family", "zn", "--n", "11", "--e", "5", "--out", path("t.json")}).status, 0);
  CliRun r = invoke({"change-point", "--in", path("t.json"), "--out", path("cp.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.json()["parameters"], "(11,2,{5})");
  EXPECT_EQ(r.json()["case"], "{k}");

  r = invoke({"code", "--in", path("cp.json"), "--zero-label", "1"});
  EXPECT_EQ(r.json()["parameters"], "(11,11,6,6)_2");
  EXPECT_EQ(r.json()["code"]["zd_optimality"], true);

  r = invoke({"--format", "text", "code", "--in", path("cp.json"), "--emit"});
  ASSERT_EQ(r.status, 0);
  std::ofstream(path("words.txt")) << r.out;
  r = invoke({"verify", "--kind", "code", "--in", path("words.txt")});
  EXPECT_EQ(r.json()["parameters"], "(11,11,6,5)_2");

  r = invoke({"dss", "--in", path("t.json")});
  EXPECT_EQ(r.json()["dss"]["optimal"], true);
  EXPECT_EQ(r.json()["coverage_matches_spectrum"], true);
  r = invoke({"dss", "--in", path("t.json"), "--emit"});
  std::ofstream(path("dss.json")) << r.out;
  r = invoke({"verify", "--kind", "dss", "--in", path("dss.json")});
  EXPECT_EQ(r.json()["dss"]["rho"], 7);

  r = invoke({"fhs", "--in", path("cp.json")});
  EXPECT_EQ(r.json()["fhs"]["H_max"], 5);
  r = invoke({"spectrum", "--in", path("cp.json"), "--full"});
  EXPECT_EQ(r.json()["identities"]["all_ok"], true);
  EXPECT_EQ(r.json()["spectrum"]["lambda_by_difference"].size(), 10u);
}

TEST_F(Cli, ChangePointPreferringEmptyD) {
  const CliRun r = invoke({"change-point", "--in", fixture("zdb_52_18_2.json"), "--prefer-empty-d"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.json()["parameters"], "(52,17,{2,3})");
  EXPECT_TRUE(r.json()["D"].empty());
}

TEST_F(Cli, VerifyPrinted) {
  CliRun r = invoke({"verify", "--kind", "code", "--in", fixture("c2.txt")});
  EXPECT_EQ(r.json()["parameters"], "(21,21,20,20)_11");
  r = invoke({"verify", "--kind", "fhs", "--in", fixture("t1.txt")});
  EXPECT_EQ(r.json()["fhs"]["H_max"], 3);
  EXPECT_EQ(r.json()["fhs"]["C"], "36/17");
}

TEST_F(Cli, ImportExport) {
  std::ofstream(path("raw.json")) << R"({"group":{"kind":"zn","n":4},"values":[7,9,7,9]})";
  CliRun r = invoke({"import", "--in", path("raw.json"), "--out", path("t.json")});
  ASSERT_EQ(r.status, 0) << r.err;
  r = invoke({"export", "--in", path("t.json")});
  EXPECT_EQ(r.out, R"({"group":{"kind":"zn","n":4},"m":2,"values":[0,1,0,1]})" "\n");
  r = invoke({"export", "--in", path("t.json"), "--as", "sequence"});
  EXPECT_EQ(r.out, "0, 1, 0, 1\n");
  // canonical documents survive import unchanged
  r = invoke({"import", "--in", fixture("t1_source.json")});
  EXPECT_EQ(Json::parse(r.out), read_json_file(fixture("t1_source.json")));
}

TEST_F(Cli, TextFormatIsDeterministic) {
  const CliRun a = invoke({"--format", "text", "reproduce"});
  const CliRun b = invoke({"reproduce", "--format", "text"});
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("DISCREPANCY"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(invoke({}).status, 2);
  EXPECT_EQ(invoke({"construct", "--family", "zn", "--n", "11"}).status, 2);
  EXPECT_EQ(invoke({"construct", "--family", "torus", "--e", "1"}).status, 2);
  EXPECT_EQ(invoke({"construct", "--family", "zn", "--e", "5"}).status, 2);
  EXPECT_EQ(invoke({"construct", "--family", "product-fields", "--factors", "3^x", "--e", "2"}).status, 2);
  EXPECT_EQ(invoke({"reproduce", "--target", "nothing"}).status, 2);
  const CliRun domain = invoke({"construct", "--family", "zn", "--n", "15", "--e", "4"});
  EXPECT_EQ(domain.status, 1);
  EXPECT_NE(domain.err.find("does not divide"), std::string::npos);
  EXPECT_EQ(invoke({"spectrum", "--in", path("missing.json")}).status, 1);
  std::ofstream(path("bad.json")) << "{not json";
  EXPECT_EQ(invoke({"spectrum", "--in", path("bad.json")}).status, 1);
  std::ofstream(path("dup.txt")) << "01\n01\n";
  EXPECT_EQ(invoke({"verify", "--kind", "code", "--in", path("dup.txt")}).status, 1);
  EXPECT_EQ(invoke({"--help"}).status, 0);
}

TEST_F(Cli, OrderCapFromEnvironment) {
  ::setenv("ZDKIT_MAX_ORDER", "10", 1);
  EXPECT_EQ(invoke({"construct", "--family", "zn", "--n", "11", "--e", "5"}).status, 1);
  ::setenv("ZDKIT_MAX_ORDER", "ten", 1);
  EXPECT_EQ(invoke({"construct", "--family", "zn", "--n", "11", "--e", "5"}).status, 2);
  ::unsetenv("ZDKIT_MAX_ORDER");
  EXPECT_EQ(invoke({"construct", "--family", "zn", "--n", "11", "--e", "5"}).status, 0);
}
