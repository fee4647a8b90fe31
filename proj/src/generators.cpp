#include "settlegen/generators.hpp"

#include "settlegen/gdw.hpp"
#include "settlegen/terrain.hpp"

namespace settlegen {

const std::vector<GeneratorInfo>& generator_registry() {
  static const std::vector<GeneratorInfo> kRegistry = {
      {"incremental", 1, "incremental placement", "material, elevation, water",
       "clustered community village"},
      {"edgemap", 2, "height-map and edge detection", "elevation and water",
       "a small country village"},
      {"partition", 3, "binary-space partitioning", "n/a", "wealthy urban"},
      {"grid", 4, "grid-based partitioning", "climatic, biome, seasonal, material",
       "densely-populated urban"},
  };
  return kRegistry;
}

const GeneratorInfo* find_generator(std::string_view id) {
  for (const GeneratorInfo& g : generator_registry()) {
    if (g.id == id) return &g;
  }
  return nullptr;
}

SettlementPlan run_generator(std::string_view id, VoxelWorld& world, const Config& cfg,
                             std::uint64_t seed, std::optional<Rect2> region) {
  if (find_generator(id) == nullptr) {
    throw std::invalid_argument("unknown generator '" + std::string(id) + "'");
  }
  const Rect2 r = region.value_or(world.columns()).clipped(world.columns());
  if (r.empty()) throw std::invalid_argument("region lies outside the world");

  SettlementPlan plan;
  if (id == "partition") {
    plan = generate_partition(world, cfg, seed, r);
  } else {
    const BoundingBox box = column_box(world, r);
    const TerrainMaps maps = compute_terrain(world, box);
    if (id == "incremental") {
      plan = generate_incremental(world, maps, census(world, box), cfg, seed);
    } else if (id == "edgemap") {
      plan = generate_edgemap(world, maps, cfg, seed);
    } else {
      plan = generate_grid(world, maps, census(world, box), cfg, seed);
    }
  }
  plan.generator = std::string(id);
  plan.seed = seed;
  plan.config = cfg.snapshot();
  plan.world_hash = hash_hex(world_hash(world));
  return plan;
}

}  // namespace settlegen
