#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "settlegen/terrain.hpp"

using namespace settlegen;

namespace {

TerrainMaps maps_from_heights(const std::vector<std::vector<int>>& h) {
  const int d = static_cast<int>(h.size());
  const int w = static_cast<int>(h[0].size());
  TerrainMaps m;
  m.area = {0, 0, w - 1, d - 1};
  m.ground = Grid2D<int>(m.area);
  m.surface = Grid2D<int>(m.area);
  m.water = Mask(m.area);
  m.lava = Mask(m.area);
  for (int z = 0; z < d; ++z)
    for (int x = 0; x < w; ++x) m.ground(x, z) = m.surface(x, z) = h[z][x];
  return m;
}

}  // namespace

TEST(Terrain, FlatStoneWorld) {
  VoxelWorld w(8, 20, 8);
  w.fill_box({{0, 0, 0}, {7, 10, 7}}, "minecraft:stone");
  const TerrainMaps m = compute_terrain(w);
  for (int v : m.ground.data()) EXPECT_EQ(v, 10);
  for (int v : m.surface.data()) EXPECT_EQ(v, 10);
  for (auto v : m.water.data()) EXPECT_EQ(v, 0);
  EXPECT_TRUE(m.diagnostics.empty());
}

TEST(Terrain, WaterColumnSplitsGroundAndSurface) {
  VoxelWorld w(1, 12, 1);
  w.fill_box({{0, 0, 0}, {0, 5, 0}}, "minecraft:stone");
  w.fill_box({{0, 6, 0}, {0, 8, 0}}, "minecraft:water");
  const TerrainMaps m = compute_terrain(w);
  EXPECT_EQ(m.ground(0, 0), 5);
  EXPECT_EQ(m.surface(0, 0), 8);
  EXPECT_TRUE(m.water(0, 0));
}

TEST(Terrain, VegetationAndCraftedAreSkipped) {
  VoxelWorld w(2, 12, 1);
  w.fill_box({{0, 0, 0}, {1, 4, 0}}, "minecraft:stone");
  w.fill_box({{0, 5, 0}, {0, 9, 0}}, "minecraft:oak_log");
  w.fill_box({{1, 5, 0}, {1, 7, 0}}, "minecraft:oak_planks");
  const TerrainMaps m = compute_terrain(w);
  EXPECT_EQ(m.ground(0, 0), 4);
  EXPECT_EQ(m.ground(1, 0), 4);
}

TEST(Terrain, AllAirColumnIsDiagnosed) {
  VoxelWorld w(3, 5, 1);
  w.set_block({0, 2, 0}, "minecraft:stone");
  const TerrainMaps m = compute_terrain(w, {{0, 1, 0}, {2, 4, 0}});
  EXPECT_EQ(m.ground(1, 0), 1);
  EXPECT_EQ(m.diagnostics.size(), 2u);
}

TEST(Terrain, RandomWorldsMatchColumnScan) {
  Rng rng(21);
  for (int i = 0; i < 10; ++i) {
    const VoxelWorld w = oracle::random_world(rng, 12, 16, 10);
    const BoundingBox region{{1, 2, 1}, {10, 14, 8}};
    const TerrainMaps m = compute_terrain(w, region);
    for (int z = 1; z <= 8; ++z) {
      for (int x = 1; x <= 10; ++x) {
        const auto c = oracle::scan_column(w, x, z, 2, 14);
        ASSERT_EQ(m.ground(x, z), c.ground);
        ASSERT_EQ(m.surface(x, z), c.surface);
        ASSERT_EQ(m.water(x, z) != 0, c.water);
        ASSERT_EQ(m.lava(x, z) != 0, c.lava);
        ASSERT_GE(m.surface(x, z), m.ground(x, z));
        if (m.surface(x, z) > m.ground(x, z)) ASSERT_TRUE(m.water(x, z));
      }
    }
  }
}

TEST(Edges, ConstantHeightHasNoEdges) {
  const auto m = maps_from_heights(std::vector<std::vector<int>>(6, std::vector<int>(6, 3)));
  const EdgeMap e = compute_edges(m, 2);
  for (auto v : e.edges.data()) EXPECT_EQ(v, 0);
}

TEST(Edges, SingleCliffColumnAtRadiusZeroAndOne) {
  std::vector<std::vector<int>> h(7, std::vector<int>(7, 5));
  h[3][3] = 8;
  const auto m = maps_from_heights(h);
  const EdgeMap e0 = compute_edges(m, 0);
  const auto raw = oracle::raw_edges(h);
  EXPECT_EQ(raw.size(), 5u);
  for (int z = 0; z < 7; ++z)
    for (int x = 0; x < 7; ++x) EXPECT_EQ(e0.edges(x, z) != 0, raw.count({x, z}) == 1);
  const EdgeMap e1 = compute_edges(m, 1);
  const auto dil = oracle::dilate(raw, 1, 7, 7);
  for (int z = 0; z < 7; ++z)
    for (int x = 0; x < 7; ++x) EXPECT_EQ(e1.edges(x, z) != 0, dil.count({x, z}) == 1);
}

TEST(Edges, ThresholdIsExactlyTwo) {
  std::vector<std::vector<int>> h{{0, 1, 2, 4}};
  const EdgeMap e = compute_edges(maps_from_heights(h), 0);
  EXPECT_FALSE(e.edges(0, 0));
  EXPECT_FALSE(e.edges(1, 0));
  EXPECT_TRUE(e.edges(2, 0));
  EXPECT_TRUE(e.edges(3, 0));
}

TEST(Edges, RandomHeightmapsMatchBruteForceAndAreMonotone) {
  Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    std::vector<std::vector<int>> h(9, std::vector<int>(11));
    for (auto& row : h)
      for (int& v : row) v = rng.uniform_int(0, 4);
    const auto m = maps_from_heights(h);
    const auto raw = oracle::raw_edges(h);
    for (int r = 0; r <= 2; ++r) {
      const EdgeMap e = compute_edges(m, r);
      const EdgeMap next = compute_edges(m, r + 1);
      const auto dil = oracle::dilate(raw, r, 11, 9);
      for (int z = 0; z < 9; ++z) {
        for (int x = 0; x < 11; ++x) {
          ASSERT_EQ(e.edges(x, z) != 0, dil.count({x, z}) == 1);
          if (e.edges(x, z)) ASSERT_TRUE(next.edges(x, z));
        }
      }
    }
  }
}

TEST(Regions, AllClearIsOneRegion) {
  const Rect2 a{0, 0, 7, 7};
  const auto r = buildable_regions(EdgeMap{Mask(a), 0}, Mask(a));
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].cells.size(), 64u);
  EXPECT_EQ(r[0].bounds, a);
}

TEST(Regions, FullWidthEdgeLineSplitsInTwo) {
  const Rect2 a{0, 0, 9, 9};
  EdgeMap e{Mask(a), 0};
  for (int x = 0; x <= 9; ++x) e.edges(x, 6) = 1;
  const auto r = buildable_regions(e, Mask(a));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].cells.size(), 60u);
  EXPECT_EQ(r[1].cells.size(), 30u);
}

TEST(Regions, RandomMasksMatchFloodFill) {
  Rng rng(13);
  for (int i = 0; i < 30; ++i) {
    const Rect2 a{0, 0, 13, 10};
    EdgeMap e{Mask(a), 0};
    Mask water(a);
    std::vector<std::vector<bool>> open(11, std::vector<bool>(14));
    for (int z = 0; z <= 10; ++z) {
      for (int x = 0; x <= 13; ++x) {
        e.edges(x, z) = rng.chance(0.25);
        water(x, z) = rng.chance(0.1);
        open[z][x] = !e.edges(x, z) && !water(x, z);
      }
    }
    const auto regions = buildable_regions(e, water);
    const auto expected = oracle::components(open);
    std::set<std::set<std::pair<int, int>>> got;
    std::size_t prev = SIZE_MAX;
    for (const Region& r : regions) {
      EXPECT_LE(r.cells.size(), prev);
      prev = r.cells.size();
      std::set<std::pair<int, int>> s;
      for (Cell2 c : r.cells) s.insert({c.x, c.z});
      got.insert(s);
    }
    EXPECT_EQ(got, expected);
  }
}

TEST(Census, OakLogRegion) {
  VoxelWorld w(3, 3, 3, "minecraft:oak_log");
  const SiteProfile s = census(w);
  ASSERT_EQ(s.wood_freq.size(), 1u);
  EXPECT_DOUBLE_EQ(s.wood_freq.at("oak"), 1.0);
  EXPECT_EQ(s.dominant_wood(), "oak");
}

TEST(Census, HalfDesertHalfJungleTemperature) {
  VoxelWorld w(4, 2, 2);
  for (int z = 0; z < 2; ++z)
    for (int x = 0; x < 4; ++x) w.set_biome(x, z, x < 2 ? 2 : 21);
  const SiteProfile s = census(w);
  EXPECT_NEAR(s.avg_temperature, (2.0 + 0.95) / 2.0, 1e-12);
  EXPECT_TRUE(s.block_freq.empty());
  EXPECT_EQ(s.diagnostics.size(), 8u);
}

TEST(Census, RandomWorldsMatchCountingOracle) {
  Rng rng(31);
  for (int i = 0; i < 10; ++i) {
    const VoxelWorld w = oracle::random_world(rng, 9, 9, 9);
    const SiteProfile s = census(w);
    std::map<std::string, double> counts;
    double total = 0;
    for (int y = 0; y < 9; ++y)
      for (int z = 0; z < 9; ++z)
        for (int x = 0; x < 9; ++x) {
          const auto& n = w.name_at({x, y, z});
          if (n == "minecraft:air") continue;
          counts[n] += 1;
          total += 1;
        }
    ASSERT_EQ(s.block_freq.size(), counts.size());
    double sum = 0;
    for (auto& [n, c] : counts) {
      EXPECT_NEAR(s.block_freq.at(n), c / total, 1e-12);
      sum += s.block_freq.at(n);
    }
    EXPECT_NEAR(sum, 1.0, 1e-9);
    EXPECT_GE(s.water_fraction, 0.0);
    EXPECT_LE(s.water_fraction + s.fertile_fraction, 1.0 + 1e-12);
  }
}

TEST(Flatness, RangeOverRectangle) {
  std::vector<std::vector<int>> h(5, std::vector<int>(5, 4));
  h[2][3] = 7;
  const auto m = maps_from_heights(h);
  EXPECT_EQ(flatness(m, {0, 0, 1, 4}), 0.0);
  EXPECT_EQ(flatness(m, {2, 1, 4, 3}), 3.0);
  EXPECT_THROW(flatness(m, {0, 0, 5, 5}), std::out_of_range);
}

TEST(Terrain, DeterministicMaps) {
  Rng rng(4);
  const VoxelWorld w = oracle::random_world(rng, 10, 10, 10);
  EXPECT_EQ(compute_terrain(w), compute_terrain(w));
}
