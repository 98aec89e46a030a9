#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "chordarc/curve_io.hpp"
#include "chordarc/generators.hpp"
#include "chordarc/verify.hpp"
#include "chordarc_cli/cli.hpp"

namespace fs = std::filesystem;
using namespace chordarc;

namespace {

const fs::path kConfigs = CHORDARC_CONFIG_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "chordarc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("chordarc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write_config(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, AuditCircle) {
  write_curve(dir_ / "c.curve", sample_circle(1.0, 128));
  const auto r = run_cli({"audit", (dir_ / "c.curve").string(), "--pairs-csv", (dir_ / "pairs.csv").string()});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("N 128\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("embedded true"), std::string::npos);
  const auto at = r.out.find("ratio_min ");
  ASSERT_NE(at, std::string::npos);
  EXPECT_NEAR(std::stod(r.out.substr(at + 10)), 1.0, 1e-3) << r.out;
  EXPECT_NE(r.out.find("theta_min_ge_minus_pi true"), std::string::npos);
  std::ifstream pairs(dir_ / "pairs.csv");
  std::string line;
  std::size_t rows = 0;
  std::getline(pairs, line);
  EXPECT_EQ(line, "i,j,d,l,psi,ratio,theta");
  while (std::getline(pairs, line)) ++rows;
  EXPECT_EQ(rows, 128u * 127u);
}

TEST_F(CliTest, AuditSelfIntersectingReportsWitness) {
  const auto r = run_cli({"audit", (kConfigs / "bowtie.curve").string()});
  EXPECT_NE(r.out.find("embedded false (edges 0, 4)"), std::string::npos) << r.out << r.err;
}

TEST_F(CliTest, AuditMissingFile) {
  const auto r = run_cli({"audit", (dir_ / "none.curve").string()});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST_F(CliTest, SimulateStarArea) {
  const auto r = run_cli({"simulate", (kConfigs / "star_area.cfg").string(), "--out", (dir_ / "o").string()});
  EXPECT_EQ(r.code, cli::kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("9 pass, 0 fail, 0 inconclusive"), std::string::npos) << r.out;
  for (const char* f : {"trajectory.csv", "report.json", "report.txt"}) {
    EXPECT_TRUE(fs::exists(dir_ / "o" / f)) << f;
  }
  const auto csv = slurp(dir_ / "o" / "trajectory.csv");
  EXPECT_EQ(csv.rfind("time,ratio_min,theta_min,theta_max,L,A,h,kappa_max,embedded\n", 0), 0u);
  const auto report = report_from_json(slurp(dir_ / "o" / "report.json"));
  EXPECT_EQ(report.forcing, "area");
  EXPECT_FALSE(report.any_fail());
}

TEST_F(CliTest, SimulateWritesSnapshotsAndPairs) {
  const auto cfg = write_config("s.cfg", "[generator]\nname = ellipse\nN = 64\n[flow]\nmax_time = 0.01\n"
                                         "monitor_every = 10\n[monitors]\nenabled = H_NONNEG\n[output]\npair_dump = true\n");
  const auto r = run_cli({"simulate", cfg.string(), "--out", (dir_ / "o").string(), "--snapshots"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir_ / "o" / "pairs.csv"));
  ASSERT_TRUE(fs::is_directory(dir_ / "o" / "snapshots"));
  EXPECT_GT(std::distance(fs::directory_iterator(dir_ / "o" / "snapshots"), fs::directory_iterator{}), 1);
}

TEST_F(CliTest, SimulateRejectsSelfIntersectingInput) {
  const auto r = run_cli({"simulate", (kConfigs / "bowtie.cfg").string(), "--out", (dir_ / "o").string()});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("edges 0 and 4"), std::string::npos) << r.err;
}

TEST_F(CliTest, SimulateIsDeterministic) {
  const auto cfg = write_config("d.cfg", "[generator]\nname = fourier\nseed = 3\nN = 128\n[flow]\nforcing = jianpan\n"
                                         "max_time = 0.05\nmonitor_every = 25\n");
  ASSERT_EQ(run_cli({"simulate", cfg.string(), "--out", (dir_ / "a").string()}).code, cli::kExitOk);
  ASSERT_EQ(run_cli({"simulate", cfg.string(), "--out", (dir_ / "b").string()}).code, cli::kExitOk);
  EXPECT_EQ(slurp(dir_ / "a" / "trajectory.csv"), slurp(dir_ / "b" / "trajectory.csv"));
  EXPECT_EQ(slurp(dir_ / "a" / "report.json"), slurp(dir_ / "b" / "report.json"));
}

TEST_F(CliTest, SweepRowsSorted) {
  const auto cfg = write_config("w.cfg", "[generator]\nname = star\nN = 128\n[flow]\nmax_time = 0.02\nmonitor_every = 50\n"
                                         "[monitors]\nenabled = THETA_RANGE, EMBEDDEDNESS\n"
                                         "[sweep]\nforcing = zero, area\nepsilon = 0.3, 0.1\n");
  const auto r = run_cli({"sweep", cfg.string(), "--out", (dir_ / "w").string(), "--threads", "2"});
  EXPECT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream in(r.out);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  ASSERT_EQ(lines.size(), 5u) << r.out;
  EXPECT_EQ(lines[0], "label,status,theta0_min,admissible,ratio_min_floor,final_time,THETA_RANGE,EMBEDDEDNESS");
  EXPECT_EQ(lines[1].rfind("forcing=area_epsilon=0.1,", 0), 0u);
  EXPECT_EQ(lines[4].rfind("forcing=zero_epsilon=0.3,", 0), 0u);
  EXPECT_TRUE(std::is_sorted(lines.begin() + 1, lines.end()));
  EXPECT_EQ(slurp(dir_ / "w" / "sweep.csv"), r.out);
  EXPECT_TRUE(fs::exists(dir_ / "w" / "forcing=zero_epsilon=0.1" / "report.json"));
}

TEST_F(CliTest, ExpandSweepGrid) {
  RunConfig cfg;
  cfg.generator.name = "star";
  cfg.sweep = {{"epsilon", {"0.1", "0.2"}}, {"forcing", {"zero", "area", "length"}}};
  const auto points = cli::expand_sweep(cfg);
  ASSERT_EQ(points.size(), 6u);
  EXPECT_EQ(points[0].label, "epsilon=0.1_forcing=zero");
  EXPECT_EQ(points[5].config.forcing.kind, ForcingKind::kLengthPreserving);
  EXPECT_EQ(points[5].config.generator.params.at("epsilon"), 0.2);
  EXPECT_TRUE(points[3].config.sweep.empty());
}

TEST_F(CliTest, BadUsage) {
  EXPECT_EQ(run_cli({}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"simulate"}).code, cli::kExitError);
  EXPECT_EQ(run_cli({"simulate", (dir_ / "missing.cfg").string()}).code, cli::kExitError);
  const auto cfg = write_config("bad.cfg", "[flow]\ncfl = 7\n");
  const auto r = run_cli({"simulate", cfg.string()});
  EXPECT_EQ(r.code, cli::kExitError);
  EXPECT_NE(r.err.find("bad.cfg:2:"), std::string::npos) << r.err;
}

TEST_F(CliTest, VersionAndHelp) {
  auto r = run_cli({"--version"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("chordarc"), std::string::npos);
  r = run_cli({"--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.out.find("simulate"), std::string::npos);
}
