#pragma once

#include <stdexcept>
#include <vector>

#include "settlegen/pathing.hpp"
#include "settlegen/plan.hpp"
#include "settlegen/structures.hpp"
#include "settlegen/terrain.hpp"

namespace settlegen {

/// A generator could not produce any placement.
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Palette built from the site's most abundant wood and stone.
MaterialPalette site_palette(const SiteProfile& site);

/// Full-height box over a column rectangle.
BoundingBox column_box(const VoxelWorld& world, const Rect2& columns);

/// Footprints of `placements` marked over `area`.
Mask occupancy_mask(const Rect2& area, const std::vector<PlacementRecord>& placements);

/// Grading centred on `area` with radius equal to its half-diagonal.
RoadGrading area_grading(const Rect2& area);

/// Cells a walker uses to enter a placement: the cells in front of its doors,
/// or the ring around its footprint when it has none.
std::vector<Cell2> access_cells(const PlacementRecord& p, const TerrainMaps& maps);

/// Shortest road between access cells of `a` and `b`. Candidate endpoint
/// pairs are tried nearest first, up to `attempts` of them.
PathResult connect_placements(const TerrainMaps& maps, const TraversalRules& rules,
                              const PlacementRecord& a, const PlacementRecord& b,
                              int attempts = 4);

}  // namespace settlegen
