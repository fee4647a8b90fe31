#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "settlegen/cli.hpp"
#include "settlegen/gdw.hpp"
#include "settlegen/plan.hpp"

using namespace settlegen;
namespace fs = std::filesystem;

namespace {

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("settlegen_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(std::vector<std::string> args) {
    out_.str("");
    err_.str("");
    return run_cli(args, out_, err_);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  std::string small_map(const std::string& kind = "flat") {
    const std::string p = path(kind + ".gdw");
    EXPECT_EQ(run({"make-testmap", kind, p, "--size", "48,40,48", "--seed", "3"}), kExitOk) << err_.str();
    return p;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

}  // namespace

TEST_F(CliTest, GenerateTwiceIsByteIdentical) {
  const std::string in = small_map();
  ASSERT_EQ(run({"generate", "--gen", "incremental", "--seed", "7", "--set", "incremental.samples=300", in,
                 path("a.gdw")}),
            kExitOk)
      << err_.str();
  ASSERT_EQ(run({"generate", "--gen", "incremental", "--seed", "7", "--set", "incremental.samples=300", in,
                 path("b.gdw")}),
            kExitOk);
  EXPECT_EQ(slurp(path("a.gdw")), slurp(path("b.gdw")));
  EXPECT_EQ(slurp(path("a.gdw.plan.json")), slurp(path("b.gdw.plan.json")));
  const SettlementPlan p = parse_plan(slurp(path("a.gdw.plan.json")));
  EXPECT_EQ(p.seed, 7u);
  EXPECT_EQ(p.world_hash, hash_hex(world_hash(load_gdw(path("a.gdw")))));
}

TEST_F(CliTest, MissingInputIsFormatErrorWithoutOutputs) {
  EXPECT_EQ(run({"generate", "--gen", "grid", path("missing.gdw"), path("out.gdw")}), kExitInput);
  EXPECT_FALSE(fs::exists(path("out.gdw")));
  EXPECT_FALSE(fs::exists(path("out.gdw.plan.json")));
  EXPECT_FALSE(err_.str().empty());
}

TEST_F(CliTest, CorruptInputAndBadFlagsAreFormatErrors) {
  std::ofstream(path("bad.gdw")) << "not a world";
  EXPECT_EQ(run({"analyze", path("bad.gdw")}), kExitInput);
  const std::string in = small_map();
  EXPECT_EQ(run({"generate", "--gen", "castle", in, path("o.gdw")}), kExitInput);
  EXPECT_EQ(run({"generate", "--gen", "grid", "--set", "grid.min_plot=abc", in, path("o.gdw")}), kExitInput);
  EXPECT_EQ(run({"generate", "--gen", "grid", "--region", "1,2,3", in, path("o.gdw")}), kExitInput);
  EXPECT_EQ(run({"explode"}), kExitInput);
  EXPECT_FALSE(fs::exists(path("o.gdw")));
}

TEST_F(CliTest, GenerationFailureExitsThree) {
  VoxelWorld sea(32, 12, 32);
  sea.fill_box({{0, 0, 0}, {31, 3, 31}}, "minecraft:stone");
  sea.fill_box({{0, 4, 0}, {31, 6, 31}}, "minecraft:water");
  save_gdw(sea, path("sea.gdw"));
  EXPECT_EQ(run({"generate", "--gen", "edgemap", path("sea.gdw"), path("o.gdw")}), kExitGeneration);
  EXPECT_FALSE(fs::exists(path("o.gdw")));
}

TEST_F(CliTest, WinterGridFarmsAreFallow) {
  const std::string in = small_map();
  ASSERT_EQ(run({"generate", "--gen", "grid", "--set", "grid.season=winter", in, "--out", path("w.gdw"),
                 "--plan", path("w.json")}),
            kExitOk)
      << err_.str();
  const SettlementPlan p = parse_plan(slurp(path("w.json")));
  EXPECT_EQ(p.config.at("grid.season"), "winter");
  for (const auto& r : p.placements) EXPECT_TRUE(r.crop.empty());
}

TEST_F(CliTest, AnalyzeAllAirWorld) {
  save_gdw(VoxelWorld(4, 4, 4), path("air.gdw"));
  ASSERT_EQ(run({"analyze", path("air.gdw")}), kExitOk);
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_TRUE(j["census"]["block_freq"].empty());
  EXPECT_EQ(j["diagnostics"].size(), 16u);
  ASSERT_EQ(run({"analyze", small_map(), "--out", path("a.json"), "--pgm", path("h.pgm")}), kExitOk);
  EXPECT_EQ(slurp(path("h.pgm")).rfind("P5\n48 48\n", 0), 0u);
  EXPECT_FALSE(nlohmann::json::parse(slurp(path("a.json")))["census"]["block_freq"].empty());
}

TEST_F(CliTest, MetricsOnGeneratorOutputAndHashMismatch) {
  const std::string in = small_map("river");
  ASSERT_EQ(run({"generate", "--gen", "partition", in, path("p.gdw")}), kExitOk) << err_.str();
  ASSERT_EQ(run({"metrics", path("p.gdw"), path("p.gdw.plan.json")}), kExitOk) << err_.str();
  const auto j = nlohmann::json::parse(out_.str());
  EXPECT_EQ(j["adaptability"]["doors_into_water"], 0);
  EXPECT_EQ(run({"metrics", in, path("p.gdw.plan.json")}), kExitConsistency);
}

TEST_F(CliTest, RangeWritesOneRowPerSeed) {
  const std::string in = small_map();
  ASSERT_EQ(run({"range", in, "--gen", "edgemap", "--k", "3"}), kExitOk) << err_.str();
  std::istringstream lines(out_.str());
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line)) rows.push_back(line);
  ASSERT_EQ(rows.size(), 4u);
  for (int s = 0; s < 3; ++s) EXPECT_EQ(rows[s + 1].rfind(std::to_string(s) + ",", 0), 0u);
}

TEST_F(CliTest, MakeTestmapHonoursOptions) {
  ASSERT_EQ(run({"make-testmap", "island", path("i.gdw"), "--size", "40,36,36", "--species",
                 "jungle:1", "--biome", "21"}),
            kExitOk);
  const VoxelWorld w = load_gdw(path("i.gdw"));
  EXPECT_EQ(w.size_x(), 40);
  EXPECT_EQ(w.size_z(), 36);
  EXPECT_EQ(run({"make-testmap", "volcano", path("v.gdw")}), kExitInput);
  EXPECT_EQ(run({"make-testmap", "flat", path("v.gdw"), "--species", "oak:-1"}), kExitInput);
}
