#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "settlegen/config.hpp"
#include "settlegen/pathing.hpp"
#include "settlegen/plan.hpp"
#include "settlegen/terrain.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

/// Shannon entropy in bits of a count distribution.
double shannon_entropy(const std::vector<std::uint64_t>& counts);

struct NgramStats {
  int n = 2;
  std::map<std::vector<std::string>, std::uint64_t> counts;
  std::uint64_t total = 0;
  double entropy = 0.0;
};

/// Ordered n-tuples of block names along +x, +y and +z, pooled.
NgramStats ngram_stats(const VoxelWorld& world, const BoundingBox& region, int n);

/// Mean entropy of the ground-height histogram over every full window x window
/// square (one window over the whole map when it is smaller than the window).
double spatial_entropy(const TerrainMaps& maps, int window);

struct FunctionalityReport {
  std::size_t doors = 0;
  std::optional<double> reachability;
  std::optional<int> components;
  int doors_into_water = 0;
};

/// Door connectivity over walkable terrain. Start cells are the cells in
/// front of each door; placement footprints are impassable.
FunctionalityReport functionality_report(const VoxelWorld& world, const TerrainMaps& maps,
                                         const SettlementPlan& plan, const TraversalRules& rules = {});

struct MetricsReport {
  double bigram_entropy = 0.0;
  double trigram_entropy = 0.0;
  double spatial_entropy = 0.0;
  std::optional<double> reachability_fraction;
  std::optional<int> disconnected_components;
  int doors_into_water = 0;
  int structure_count = 0;
  std::size_t road_cell_count = 0;

  friend bool operator==(const MetricsReport&, const MetricsReport&) = default;
};

inline constexpr int kDefaultEntropyWindow = 8;

MetricsReport compute_metrics(const VoxelWorld& world, const SettlementPlan& plan,
                              const TraversalRules& rules = {}, int window = kDefaultEntropyWindow);

/// Report as JSON grouped by the four judging categories.
std::string metrics_json(const MetricsReport& r);

struct RangeRow {
  std::uint64_t seed = 0;
  std::optional<MetricsReport> report;
  std::string error;
};

using GeneratorFn = std::function<SettlementPlan(VoxelWorld& world, std::uint64_t seed)>;

/// Runs `gen` on copies of `world` for seeds 0..k-1. Failing seeds produce a
/// row with `error` set.
std::vector<RangeRow> expressive_range(const GeneratorFn& gen, const VoxelWorld& world, int k);
std::vector<RangeRow> expressive_range(std::string_view generator_id, const VoxelWorld& world, int k,
                                       const Config& cfg = {},
                                       std::optional<Rect2> region = std::nullopt);

std::string range_csv(const std::vector<RangeRow>& rows);

}  // namespace settlegen
