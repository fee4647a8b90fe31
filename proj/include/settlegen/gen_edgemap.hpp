#pragma once

#include <cstdint>
#include <vector>

#include "settlegen/config.hpp"
#include "settlegen/plan.hpp"
#include "settlegen/terrain.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

struct Plot {
  Rect2 rect;
  int region_id = 0;

  friend bool operator==(const Plot&, const Plot&) = default;
};

/// Greedy plot search. Regions are visited largest first; inside a region,
/// anchors are tried in scan order with a random target size that shrinks
/// until the rectangle is clear and at least `spacing` (Chebyshev gap) from
/// every plot chosen so far. Stops after `max_plots` plots.
std::vector<Plot> find_plots(const EdgeMap& edges, const Mask& water, int min_size, int max_size,
                             int spacing, std::uint64_t seed, int max_plots = 8);

struct EdgemapConfig {
  int plot_min = 11;
  int plot_max = 15;
  int spacing = 8;
  int max_plots = 8;
  int floors_min = 2;
  int floors_max = 3;
  bool improved = false;

  static EdgemapConfig from(const Config& cfg);
};

SettlementPlan generate_edgemap(VoxelWorld& world, const TerrainMaps& maps, const Config& cfg,
                                std::uint64_t seed);

}  // namespace settlegen
