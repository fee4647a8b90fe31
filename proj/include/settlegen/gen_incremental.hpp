#pragma once

#include <cstdint>
#include <vector>

#include "settlegen/climate.hpp"
#include "settlegen/config.hpp"
#include "settlegen/plan.hpp"
#include "settlegen/structures.hpp"
#include "settlegen/terrain.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

struct IncrementalConfig {
  int samples = 5000;
  double w_elevation = 1.0;
  double w_layout = 1.0;
  double w_distance = 1.0;
  double d_pref = 20.0;
  double d_min = 4.0;
  double layout_radius = 12.0;
  Season season = Season::summer;
  std::vector<StructureSpec> queue;

  /// Reads the incremental.* keys; missing keys keep the defaults above.
  static IncrementalConfig from(const Config& cfg);
};

/// `length` specs cycling house, house_large, plaza, farm.
std::vector<StructureSpec> default_build_queue(int length = 16);
StructureSpec default_spec(StructureKind kind);

struct CandidateScore {
  Cell2 position;
  int rotation = 0;
  double elevation_term = 0.0;
  double layout_term = 0.0;
  double distance_term = 0.0;
  double total = 0.0;
};

/// Soft layout preference of a footprint given what is already placed.
/// Plazas count houses whose centres lie within `radius`; farms count
/// footprint edges flush and collinear with nearby placements; houses get
/// 0.5 when a plaza is within `radius`.
double layout_score(StructureKind kind, const Rect2& footprint, const SettlementPlan& plan,
                    double radius = 12.0);

SettlementPlan generate_incremental(VoxelWorld& world, const TerrainMaps& maps,
                                    const SiteProfile& site, const Config& cfg,
                                    std::uint64_t seed);

}  // namespace settlegen
