#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <tifl_cli/commands.hpp>

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("tifl_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "tifl");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return tifl::cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  fs::path write_config(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(f), {}};
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

}  // namespace

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}), 64);
  EXPECT_EQ(run({"frobnicate"}), 64);
  EXPECT_EQ(run({"simulate", "--out", (dir_ / "o").string()}), 64);
  EXPECT_EQ(run({"plan", "--out", (dir_ / "o").string()}), 64);
  EXPECT_EQ(run({"sweep", "--scenario", "z"}), 64);
  EXPECT_EQ(run({"--help"}), 0);
}

TEST_F(Cli, BadDataExitCode) {
  const auto cfg = write_config("bad.json", R"({"montage": {"phi": 90}, "colour": "red"})");
  EXPECT_EQ(run({"simulate", "--config", cfg.string()}), 65);
  const auto off = write_config("off.json", R"({"montage": {"phi": 150}})");
  EXPECT_EQ(run({"simulate", "--config", off.string()}), 65);
  const auto broken = write_config("broken.json", "{");
  EXPECT_EQ(run({"simulate", "--config", broken.string()}), 65);
}

TEST_F(Cli, SimulateScenarioPresetWritesRastersAndSummary) {
  const fs::path out = dir_ / "sim";
  ASSERT_EQ(run({"simulate", "--scenario", "a", "--resolution", "33", "--out", out.string()}), 0) << err_.str();
  for (const char* f : {"envelope_xy.csv", "envelope_xz.csv", "envelope_xy.pgm", "envelope_xz.pgm", "summary.json",
                        "fields_right_xy.csv", "fields_left_xz.csv", "envelope_xz.json"})
    EXPECT_TRUE(fs::exists(out / f)) << f;
}

TEST_F(Cli, FlagsOverrideConfig) {
  const auto cfg = write_config("c.json", R"({"montage": {"phi": 60}, "resolution": 21, "formats": ["json"]})");
  const fs::path out = dir_ / "o";
  ASSERT_EQ(run({"simulate", "--config", cfg.string(), "--format", "csv", "--plane", "xz", "--out", out.string()}), 0);
  EXPECT_TRUE(fs::exists(out / "envelope_xz.csv"));
  EXPECT_FALSE(fs::exists(out / "envelope_xy.csv"));
  EXPECT_FALSE(fs::exists(out / "envelope_xz.json"));
}

TEST_F(Cli, PlanExitCodes) {
  const auto centre = write_config("p0.json", R"({"plan": {"target": [0, 0, 0]}})");
  EXPECT_EQ(run({"plan", "--config", centre.string(), "--out", (dir_ / "p0").string()}), 0);
  const auto deep = write_config("p1.json", R"({"plan": {"target": {"region": "R_22", "depth": "D4"}}})");
  EXPECT_EQ(run({"plan", "--config", deep.string(), "--out", (dir_ / "p1").string()}), 2);
  const auto unsafe =
      write_config("p2.json", R"({"plan": {"target": [0, 0, 0], "limits": {"max_field_anywhere": 1e-9}}})");
  EXPECT_EQ(run({"plan", "--config", unsafe.string(), "--out", (dir_ / "p2").string()}), 3);
  EXPECT_TRUE(fs::exists(dir_ / "p2" / "plan.json"));
}

TEST_F(Cli, SweepScenarioBIsMonotoneInRatio) {
  const fs::path out = dir_ / "sw";
  ASSERT_EQ(run({"sweep", "--scenario", "b", "--resolution", "41", "--out", out.string()}), 0);
  std::ifstream in(out / "scenario_b_xy.csv");
  std::string line;
  std::getline(in, line);
  double prev = -2.0;
  int rows = 0;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string param, x;
    std::getline(ls, param, ',');
    std::getline(ls, x, ',');
    EXPECT_GT(std::stod(x), prev);
    prev = std::stod(x);
    ++rows;
  }
  EXPECT_EQ(rows, 3);
  EXPECT_TRUE(fs::exists(out / "scenario_b_xz_2.pgm"));
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  const auto cfg = write_config("c.json", R"({"montage": {"phi": 75, "alpha": 50, "psi": 10, "i_left": 1.3, "i_right": 0.7},
                                              "resolution": 33, "grid": {"grid_n": 33}})");
  for (const char* cmd : {"simulate", "export"}) {
    const fs::path a = dir_ / (std::string(cmd) + "_a"), b = dir_ / (std::string(cmd) + "_b");
    ASSERT_EQ(run({cmd, "--config", cfg.string(), "--out", a.string()}), 0) << err_.str();
    ASSERT_EQ(run({cmd, "--config", cfg.string(), "--out", b.string()}), 0);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(a)) {
      ++files;
      EXPECT_EQ(slurp(e.path()), slurp(b / e.path().filename())) << e.path();
    }
    EXPECT_GT(files, 0u);
  }
}
