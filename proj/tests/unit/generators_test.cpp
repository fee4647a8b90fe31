#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "settlegen/gdw.hpp"
#include "settlegen/generators.hpp"
#include "settlegen/testmaps.hpp"

using namespace settlegen;

namespace {

VoxelWorld small_map(TestMapKind kind, std::uint64_t seed = 1) {
  TestMapOptions o;
  o.size_x = 64;
  o.size_y = 48;
  o.size_z = 64;
  o.seed = seed;
  return make_test_map(kind, o);
}

void expect_tiles(const Rect2& region, const std::vector<Rect2>& parts) {
  std::map<std::pair<int, int>, int> cover;
  for (const Rect2& r : parts) {
    ASSERT_TRUE(region.contains(r));
    for (int z = r.z0; z <= r.z1; ++z)
      for (int x = r.x0; x <= r.x1; ++x) ++cover[{x, z}];
  }
  EXPECT_EQ(static_cast<std::int64_t>(cover.size()), region.area());
  for (auto& [c, n] : cover) EXPECT_EQ(n, 1);
}

}  // namespace

TEST(TestMaps, ArchetypesDifferAndAreDeterministic) {
  const VoxelWorld flat = small_map(TestMapKind::flat);
  const VoxelWorld river = small_map(TestMapKind::river);
  const VoxelWorld island = small_map(TestMapKind::island);
  EXPECT_EQ(flat, small_map(TestMapKind::flat));
  EXPECT_GT(census(river).water_fraction, 0.0);
  EXPECT_GT(census(island).water_fraction, census(river).water_fraction);
  EXPECT_EQ(census(flat).water_fraction, 0.0);
  EXPECT_THROW(parse_test_map_kind("volcano"), std::invalid_argument);
}

TEST(Plots, PairwiseClearanceAndSizes) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const VoxelWorld w = small_map(TestMapKind::island, seed);
    const TerrainMaps m = compute_terrain(w);
    const EdgeMap e = compute_edges(m, 1);
    const Mask liquid = m.liquid();
    const auto plots = find_plots(e, liquid, 7, 10, 3, seed, 20);
    for (std::size_t i = 0; i < plots.size(); ++i) {
      const Rect2& r = plots[i].rect;
      EXPECT_GE(r.width(), 7);
      EXPECT_LE(r.width(), 10);
      EXPECT_GE(r.depth(), 7);
      EXPECT_LE(r.depth(), 10);
      for (int z = r.z0; z <= r.z1; ++z)
        for (int x = r.x0; x <= r.x1; ++x) {
          EXPECT_FALSE(e.edges(x, z));
          EXPECT_FALSE(liquid(x, z));
        }
      for (std::size_t j = 0; j < i; ++j) EXPECT_GE(rect_gap(r, plots[j].rect), 3);
    }
  }
}

TEST(Bisect, LeavesAndStripsTileTheRegion) {
  Rng rng(2);
  for (int i = 0; i < 40; ++i) {
    const Rect2 region = Rect2::from_size(rng.uniform_int(0, 5), rng.uniform_int(0, 5),
                                          rng.uniform_int(5, 90), rng.uniform_int(5, 90));
    const int min_plot = rng.uniform_int(5, 8);
    const int max_plot = min_plot + rng.uniform_int(0, 10);
    const int strip = rng.uniform_int(1, 3);
    const PlotTree t = bisect_plots(region, min_plot, max_plot, strip, rng.next());
    auto parts = t.leaves();
    const auto strips = t.strips();
    for (const Rect2& s : strips) EXPECT_TRUE(s.width() == strip || s.depth() == strip);
    parts.insert(parts.end(), strips.begin(), strips.end());
    expect_tiles(region, parts);
    for (const Rect2& l : t.leaves()) {
      if (region.width() >= min_plot) EXPECT_GE(l.width(), min_plot);
      if (region.depth() >= min_plot) EXPECT_GE(l.depth(), min_plot);
    }
  }
}

TEST(Bisect, LeavesWithinRangeWhenFeasible) {
  const PlotTree t = bisect_plots({0, 0, 99, 99}, 8, 20, 3, 5);
  for (const Rect2& l : t.leaves()) {
    EXPECT_GE(l.width(), 8);
    EXPECT_LE(l.width(), 20);
    EXPECT_GE(l.depth(), 8);
    EXPECT_LE(l.depth(), 20);
  }
  EXPECT_THROW(bisect_plots({0, 0, 9, 9}, 4, 9, 1, 0), std::invalid_argument);
  EXPECT_THROW(bisect_plots({0, 0, 9, 9}, 5, 9, 0, 0), std::invalid_argument);
}

TEST(Builders, FitnessMatchesFormula) {
  const PlotTree t = bisect_plots({0, 0, 63, 63}, 8, 16, 2, 3);
  SiteProfile site;
  site.fertile_fraction = 0.6;
  site.water_fraction = 0.1;
  site.avg_rainfall = 0.8;
  const auto fit = assign_builders(t, site);
  const auto leaves = t.leaves();
  const auto strips = t.strips();
  ASSERT_EQ(fit.size(), leaves.size());
  double mx = 0, mz = 0, dmax = 0;
  std::int64_t amax = 0;
  for (const Rect2& l : leaves) {
    mx += (l.x0 + l.x1) / 2.0 / leaves.size();
    mz += (l.z0 + l.z1) / 2.0 / leaves.size();
    amax = std::max(amax, l.area());
  }
  for (const Rect2& l : leaves) dmax = std::max(dmax, std::hypot((l.x0 + l.x1) / 2.0 - mx, (l.z0 + l.z1) / 2.0 - mz));
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const Rect2& l = leaves[i];
    const double c = -std::hypot((l.x0 + l.x1) / 2.0 - mx, (l.z0 + l.z1) / 2.0 - mz) / dmax;
    bool touches = false;
    for (const Rect2& s : strips) touches |= rect_gap(l, s) == 1 && !l.intersects(s) &&
                                             (std::max(l.x0, s.x0) <= std::min(l.x1, s.x1) ||
                                              std::max(l.z0, s.z0) <= std::min(l.z1, s.z1));
    const double house = 1 + c + (touches ? 0.5 : 0.0);
    const double farm = -c * (0.6 + 0.1 + 0.5 * 0.8);
    const double plaza = house - 0.5 + 0.8 * (1.0 - static_cast<double>(l.area()) / amax);
    EXPECT_NEAR(fit[i].house, house, 1e-12);
    EXPECT_NEAR(fit[i].farm, farm, 1e-12);
    EXPECT_NEAR(fit[i].plaza, plaza, 1e-12);
    Builder best = Builder::house;
    double bv = house;
    if (farm > bv) {
      best = Builder::farm;
      bv = farm;
    }
    if (plaza > bv) best = Builder::plaza;
    EXPECT_EQ(fit[i].choice, best);
  }
}

TEST(Builders, FarmFitnessGrowsWithRainfallAndDistance) {
  const PlotTree t = bisect_plots({0, 0, 79, 79}, 8, 14, 1, 9);
  SiteProfile dry;
  SiteProfile wet;
  wet.avg_rainfall = 0.9;
  wet.fertile_fraction = 0.5;
  const auto a = assign_builders(t, dry);
  const auto b = assign_builders(t, wet);
  int farms_dry = 0, farms_wet = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_GE(b[i].farm, a[i].farm);
    EXPECT_DOUBLE_EQ(a[i].house, b[i].house);
    farms_dry += a[i].choice == Builder::farm;
    farms_wet += b[i].choice == Builder::farm;
  }
  EXPECT_GE(farms_wet, farms_dry);
}

TEST(Flatten, LowerMedianAndConstantGround) {
  EXPECT_EQ(choose_level({1, 2, 3, 4}, LevelPolicy::median), 2);
  EXPECT_EQ(choose_level({5, 1, 3}, LevelPolicy::median), 3);
  EXPECT_EQ(choose_level({5, 1, 3}, LevelPolicy::min), 1);
  EXPECT_EQ(choose_level({5, 1, 3}, LevelPolicy::max), 5);
  EXPECT_EQ(choose_level({1, 2}, LevelPolicy::mean), 2);
  EXPECT_THROW(choose_level({}, LevelPolicy::median), std::invalid_argument);
  VoxelWorld w = small_map(TestMapKind::island);
  const Rect2 r{10, 10, 50, 40};
  const FlattenResult res = flatten(w, r);
  EXPECT_GT(res.changed, 0u);
  const TerrainMaps m = compute_terrain(w);
  for (int z = r.z0; z <= r.z1; ++z)
    for (int x = r.x0; x <= r.x1; ++x) {
      EXPECT_EQ(m.ground(x, z), res.level);
      EXPECT_FALSE(m.water(x, z));
    }
}

TEST(Yards, PartitionCoversRegionWithHouseAndStrips) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Rect2 region{0, 0, 70, 45};
    const PartitionNode root = partition_yards(region, 9, 16, seed);
    std::vector<Rect2> parts;
    for (const PartitionNode* y : yards(root)) {
      parts.push_back(footprint_of(y->box));
      ASSERT_EQ(y->children.size(), 5u);
      std::vector<Rect2> inner;
      for (const PartitionNode& c : y->children) {
        inner.push_back(footprint_of(c.box));
        EXPECT_EQ(c.op, c.tag == PartitionTag::house ? PartitionOp::add : PartitionOp::cut);
      }
      expect_tiles(footprint_of(y->box), inner);
      const Rect2 yr = footprint_of(y->box);
      EXPECT_GE(yr.width(), 9);
      EXPECT_GE(yr.depth(), 9);
      // Sides above the maximum remain only when they cannot hold two yards.
      EXPECT_TRUE(yr.width() <= 16 || yr.width() < 18);
      EXPECT_TRUE(yr.depth() <= 16 || yr.depth() < 18);
    }
    expect_tiles(region, parts);
  }
  EXPECT_THROW(partition_yards({0, 0, 20, 20}, 6, 10, 0), std::invalid_argument);
}

TEST(CgaHouse, FacesRequestedSide) {
  const auto pal = MaterialPalette::from_species("birch", "granite");
  for (Facing f : {Facing::north, Facing::east, Facing::south, Facing::west}) {
    const auto bp = build_house_cga(7, 5, 9, pal, 3, f);
    EXPECT_EQ(bp.size_x, 7);
    EXPECT_EQ(bp.size_z, 9);
    ASSERT_FALSE(bp.door_cells.empty());
    const Coord out = door_outward(bp.footprint, bp.door_cells[0]);
    const Coord expect[] = {{0, 0, -1}, {1, 0, 0}, {0, 0, 1}, {-1, 0, 0}};
    EXPECT_EQ(out, expect[quarter_turns(f)]);
  }
  EXPECT_THROW(build_house_cga(4, 5, 5, pal, 0), SpecError);
}

TEST(Incremental, LayoutScoreRules) {
  SettlementPlan p;
  PlacementRecord h;
  h.kind = StructureKind::house;
  h.box = {{0, 0, 0}, {4, 5, 4}};
  p.add(h);
  h.box = {{30, 0, 30}, {34, 5, 34}};
  p.add(h);
  EXPECT_DOUBLE_EQ(layout_score(StructureKind::plaza, {6, 0, 12, 6}, p, 12.0), 1.0);
  EXPECT_DOUBLE_EQ(layout_score(StructureKind::house, {6, 0, 12, 6}, p, 12.0), 0.0);
  PlacementRecord plaza;
  plaza.kind = StructureKind::plaza;
  plaza.box = {{8, 0, 8}, {14, 1, 14}};
  p.add(plaza);
  EXPECT_DOUBLE_EQ(layout_score(StructureKind::house, {16, 8, 20, 12}, p, 12.0), 0.5);
  EXPECT_GT(layout_score(StructureKind::farm, {0, 6, 4, 12}, p, 12.0), 0.0);
}

TEST(Incremental, DefaultQueueCyclesKinds) {
  const auto q = default_build_queue(8);
  ASSERT_EQ(q.size(), 8u);
  const StructureKind cycle[] = {StructureKind::house, StructureKind::house_large, StructureKind::plaza,
                                 StructureKind::farm};
  for (std::size_t i = 0; i < q.size(); ++i) EXPECT_EQ(q[i].kind, cycle[i % 4]);
  EXPECT_THROW(IncrementalConfig::from(Config::parse("incremental.samples=0")), ConfigError);
  EXPECT_THROW(IncrementalConfig::from(Config::parse("incremental.queue=house,castle")),
               std::invalid_argument);
}

TEST(Generators, RegistryListsFourEntries) {
  const auto& reg = generator_registry();
  ASSERT_EQ(reg.size(), 4u);
  EXPECT_EQ(find_generator("partition")->entry, 3);
  EXPECT_EQ(find_generator("nope"), nullptr);
  VoxelWorld w = small_map(TestMapKind::flat);
  EXPECT_THROW(run_generator("nope", w, {}, 0), std::invalid_argument);
}

TEST(Generators, EachRunIsValidAndReproducible) {
  for (const GeneratorInfo& g : generator_registry()) {
    for (TestMapKind k : {TestMapKind::flat, TestMapKind::river}) {
      Config cfg;
      cfg.set("incremental.samples", "400");
      VoxelWorld a = small_map(k, 2);
      VoxelWorld b = a;
      const SettlementPlan pa = run_generator(g.id, a, cfg, 7);
      const SettlementPlan pb = run_generator(g.id, b, cfg, 7);
      EXPECT_EQ(serialize_gdw(a), serialize_gdw(b)) << g.id;
      EXPECT_EQ(serialize_plan(pa), serialize_plan(pb)) << g.id;
      EXPECT_FALSE(pa.placements.empty()) << g.id;
      EXPECT_EQ(pa.world_hash, hash_hex(world_hash(a)));
      EXPECT_EQ(pa.generator, g.id);
      const auto v = validate(pa, a, compute_terrain(a));
      EXPECT_TRUE(v.empty()) << g.id << " " << to_string(k) << ": " << (v.empty() ? "" : v[0].message);
    }
  }
}

TEST(Generators, ThreadCountDoesNotChangeOutput) {
  VoxelWorld a = small_map(TestMapKind::river, 3);
  VoxelWorld b = a;
  Config cfg;
  cfg.set("incremental.samples", "300");
  setenv("SETTLEGEN_THREADS", "1", 1);
  const SettlementPlan pa = run_generator("incremental", a, cfg, 5);
  setenv("SETTLEGEN_THREADS", "4", 1);
  const SettlementPlan pb = run_generator("incremental", b, cfg, 5);
  unsetenv("SETTLEGEN_THREADS");
  EXPECT_EQ(a, b);
  EXPECT_EQ(pa, pb);
}

TEST(Grid, WinterFarmsLieFallow) {
  VoxelWorld w = small_map(TestMapKind::flat, 4);
  Config cfg;
  cfg.set("grid.season", "winter");
  const SettlementPlan p = run_generator("grid", w, cfg, 1);
  for (const PlacementRecord& r : p.placements) EXPECT_TRUE(r.crop.empty());
  Config summer;
  summer.set("grid.season", "summer");
  VoxelWorld w2 = small_map(TestMapKind::flat, 4);
  const SettlementPlan ps = run_generator("grid", w2, summer, 1);
  for (const PlacementRecord& r : ps.placements)
    if (r.kind == StructureKind::farm) EXPECT_FALSE(r.crop.empty());
}

TEST(Edgemap, FaithfulHasNoRoadsImprovedMayConnect) {
  VoxelWorld w = small_map(TestMapKind::flat, 5);
  VoxelWorld w2 = w;
  const SettlementPlan p = run_generator("edgemap", w, {}, 2);
  EXPECT_EQ(p.road_cell_count(), 0u);
  Config improved;
  improved.set("edgemap.improved", "true");
  const SettlementPlan q = run_generator("edgemap", w2, improved, 2);
  if (q.placements.size() > 1) EXPECT_GT(q.road_cell_count(), 0u);
  EXPECT_THROW(EdgemapConfig::from(Config::parse("edgemap.plot_min=5")), ConfigError);
}

TEST(Generators, NoBuildableGroundIsAGenerationError) {
  VoxelWorld w(32, 16, 32);
  w.fill_box({{0, 0, 0}, {31, 3, 31}}, "minecraft:stone");
  w.fill_box({{0, 4, 0}, {31, 6, 31}}, "minecraft:water");
  EXPECT_THROW(run_generator("edgemap", w, {}, 0), GenerationError);
  EXPECT_THROW(run_generator("incremental", w, {}, 0), GenerationError);
}
