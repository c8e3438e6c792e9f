#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "gsc/cartan.hpp"
#include "gsc/cli.hpp"

using namespace gsc;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("gsc_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream(p) << text;
}

}  // namespace

TEST(Cli, DecideE6) {
  const auto r = run({"decide", "--root", "E6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "scenario=a trace=1 constraint={0,1,2} status=proved\n");
}

TEST(Cli, DecideE8IsConjectural) {
  const auto r = run({"decide", "--root", "E8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("status=conjectural"), std::string::npos);
}

TEST(Cli, GammaG2) {
  const auto r = run({"gamma", "G2"});
  ASSERT_EQ(r.code, 0);
  for (const char* line : {"\t1\t1\t0\tq^6\n", "\teps\t1\t3\tq^3\n", "\teps'\t1\t3\tq^3\n",
                           "\trho\t2\t1\tq+q^5\n", "\trho'\t2\t2\tq^2+q^4\n", "\ts\t1\t6\t1\n"})
    EXPECT_NE(r.out.find(line), std::string::npos) << line;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 2 + 6);
}

TEST(Cli, MissingScript) {
  const auto r = run({"euler", "missing.eul"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("file not found"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"table", "Q7"}).code, 2);
  EXPECT_EQ(run({"census", "--preset", "nope"}).code, 2);
  EXPECT_EQ(run({"block", "--root", "F4"}).code, 2);
  EXPECT_EQ(run({"block", "--root", "E6", "--scenario", "c"}).code, 2);
  EXPECT_EQ(run({"decide"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "decide", "--root", "E6"}).code, 2);
}

TEST(Cli, BlockOutputIsDeterministicAndMatchesGolden) {
  const auto a = run({"block", "--root", "E6", "--scenario", "both"});
  const auto b = run({"block", "--root", "E6", "--scenario", "both"});
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, read_text_file(std::string(GSC_GOLDEN_DIR) + "/block/block_E6.tsv"));
}

TEST(Cli, SingleScenarioHasNoVerdict) {
  const auto r = run({"block", "--root", "E6", "--scenario", "b"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("[scenario b]"), std::string::npos);
  EXPECT_EQ(r.out.find("[scenario a]"), std::string::npos);
  EXPECT_EQ(r.out.find("scenario=b"), std::string::npos);
}

TEST(Cli, OutFileAndPrettyFormat) {
  const auto dir = scratch_dir("out");
  const auto file = dir / "g.tsv";
  const auto r = run({"gamma", "G2", "--out", file.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(read_text_file(file), run({"gamma", "G2"}).out);
  const auto p = run({"--format", "pretty", "gamma", "G2"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out.find('\t', p.out.find('\n')), std::string::npos);
  EXPECT_NE(p.out.find("\nphi2,1 "), std::string::npos) << p.out;
}

TEST(Cli, EulerExitCodes) {
  const auto dir = scratch_dir("euler");
  write_file(dir / "ok.eul", "x = P1;\nassert x == 2;\n");
  write_file(dir / "fail.eul", "x = P1;\nassert x == 5;\n");
  write_file(dir / "broken.eul", "a = P1; b = P1; u = union{a, b};\n");
  const auto ok = run({"euler", (dir / "ok.eul").string()});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "name\tchi\tstatus\nx\t2\tpass\n");
  const auto fail = run({"euler", (dir / "fail.eul").string()});
  EXPECT_EQ(fail.code, 1);
  EXPECT_NE(fail.err.find("expected 5"), std::string::npos);
  EXPECT_EQ(run({"euler", (dir / "broken.eul").string()}).code, 1);
}

TEST(Cli, CensusMismatchExitsWithOne) {
  const auto dir = scratch_dir("census");
  fs::create_directories(dir / "cartan");
  fs::create_directories(dir / "census");
  fs::copy_file(fs::path(GSC_PRESET_DIR) / "cartan" / "A2A1A1.cartan", dir / "cartan" / "A2A1A1.cartan");
  write_file(dir / "census" / "wrong.census",
             "group A2A1A1\nconstituent 2 3\nexpect {1} 5\ncomplete\n");
  const auto r = run({"--preset-dir", dir.string(), "census", "--preset", "wrong"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("census mismatch"), std::string::npos);
  EXPECT_EQ(run({"census", "--preset", "a2a1a1"}).code, 0);
}
