#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "settlegen/climate.hpp"
#include "settlegen/config.hpp"
#include "settlegen/plan.hpp"
#include "settlegen/terrain.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

enum class PlotRole { leaf_plot, road_strip, internal };

struct PlotNode {
  Rect2 rect;
  PlotRole role = PlotRole::leaf_plot;
  int first = -1;
  int second = -1;
  int strip = -1;
};

struct PlotTree {
  std::vector<PlotNode> nodes;
  int root = -1;

  /// Leaf plot rectangles in depth-first order.
  std::vector<Rect2> leaves() const;
  std::vector<Rect2> strips() const;
};

/// Recursive bisection: the longest axis above `max_plot` is split at a
/// random point that keeps every later leaf within [min_plot, max_plot],
/// with a road strip of `strip_width` between the halves. A region below
/// `min_plot` on an axis stays a single leaf.
PlotTree bisect_plots(const Rect2& region, int min_plot, int max_plot, int strip_width,
                      std::uint64_t seed);

enum class Builder { house, farm, plaza };

std::string_view to_string(Builder b);

struct BuilderWeights {
  double road_bonus = 0.5;
  double rainfall_weight = 0.5;
  double plaza_offset = 0.5;
  double plaza_small_bonus = 0.8;
};

struct BuilderFitness {
  double house = 0.0;
  double farm = 0.0;
  double plaza = 0.0;
  Builder choice = Builder::house;
};

/// Fitness of each builder on each leaf (same order as tree.leaves()).
///   centrality c = -dist(leaf centre, mean leaf centre) / max dist (0 if all equal)
///   house = 1 + c + road_bonus * touches_strip
///   farm  = -c * (fertile_fraction + water_fraction + rainfall_weight * avg_rainfall)
///   plaza = house - plaza_offset + plaza_small_bonus * (1 - area / max area)
/// Ties prefer house, then farm, then plaza.
std::vector<BuilderFitness> assign_builders(const PlotTree& tree, const SiteProfile& site,
                                            const BuilderWeights& weights = {});

struct GridConfig {
  int min_plot = 8;
  int max_plot = 20;
  int strip_width = 3;
  bool faithful = false;
  std::optional<Season> season;  // empty: drawn from the seed

  static GridConfig from(const Config& cfg);
};

SettlementPlan generate_grid(VoxelWorld& world, const TerrainMaps& maps, const SiteProfile& site,
                             const Config& cfg, std::uint64_t seed);

}  // namespace settlegen
