#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "settlegen/climate.hpp"
#include "settlegen/config.hpp"
#include "settlegen/partition.hpp"
#include "settlegen/plan.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

struct PartitionConfig {
  int min_yard = 9;
  int max_yard = 16;
  double farm_chance = 0.25;
  std::string road_material = "minecraft:purple_concrete";
  Season season = Season::summer;

  static PartitionConfig from(const Config& cfg);
};

/// Flattens `region` (default: the whole world), fills it with yards and runs
/// one road between its (x0, z0) and (x1, z1) corners.
SettlementPlan generate_partition(VoxelWorld& world, const Config& cfg, std::uint64_t seed,
                                  std::optional<Rect2> region = std::nullopt);

}  // namespace settlegen
