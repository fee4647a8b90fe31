#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "settlegen/config.hpp"
#include "settlegen/gen_edgemap.hpp"
#include "settlegen/gen_grid.hpp"
#include "settlegen/gen_incremental.hpp"
#include "settlegen/gen_partition.hpp"
#include "settlegen/generation.hpp"
#include "settlegen/plan.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

/// One generation strategy and how it approaches the task.
struct GeneratorInfo {
  std::string id;
  int entry = 0;
  std::string placement;
  std::string adaptability;
  std::string aesthetic;
};

const std::vector<GeneratorInfo>& generator_registry();
/// nullptr for unknown ids.
const GeneratorInfo* find_generator(std::string_view id);

/// Runs generator `id` over `region` (default: the whole world) and fills in
/// the plan's generator id, seed, config snapshot and output world hash.
/// Throws std::invalid_argument for unknown ids, ConfigError for bad
/// settings and GenerationError when nothing could be built.
SettlementPlan run_generator(std::string_view id, VoxelWorld& world, const Config& cfg,
                             std::uint64_t seed, std::optional<Rect2> region = std::nullopt);

}  // namespace settlegen
