#pragma once

#include <map>
#include <string>
#include <vector>

#include "settlegen/geometry.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

/// Per-column height caches over a region.
///
/// ground is the highest solid block, skipping vegetation and crafted blocks.
/// surface equals ground except on water columns, where it is the top water
/// block. Lava columns set `lava` and keep surface == ground.
struct TerrainMaps {
  Rect2 area;
  int floor_y = 0;
  int top_y = 0;
  Grid2D<int> ground;
  Grid2D<int> surface;
  Mask water;
  Mask lava;
  /// Columns with no solid block; their ground is floor_y.
  std::vector<Cell2> diagnostics;

  bool contains(int x, int z) const { return area.contains(x, z); }
  bool contains(Cell2 c) const { return area.contains(c); }
  /// Water or lava.
  Mask liquid() const;

  friend bool operator==(const TerrainMaps&, const TerrainMaps&) = default;
};

TerrainMaps compute_terrain(const VoxelWorld& world, const BoundingBox& region);
TerrainMaps compute_terrain(const VoxelWorld& world);

/// Columns too steep to build across.
struct EdgeMap {
  Mask edges;
  int dilation_radius = 0;
};

/// Height difference to a 4-neighbour at which a column is an edge.
inline constexpr int kEdgeStep = 2;

/// Marks both columns of every 4-neighbour pair whose ground differs by at
/// least kEdgeStep, then dilates by `radius` (square footprint).
EdgeMap compute_edges(const TerrainMaps& maps, int radius = 1);

/// Chebyshev (square) dilation.
Mask dilate(const Mask& mask, int radius);

struct Region {
  std::vector<Cell2> cells;  // row-major order
  Rect2 bounds;
};

/// 4-connected components of cells that are neither edge nor blocked,
/// largest first; equal sizes keep scan order of their first cell.
std::vector<Region> buildable_regions(const EdgeMap& edges, const Mask& blocked);

struct SiteProfile {
  std::map<std::string, double> block_freq;
  std::map<std::string, double> wood_freq;
  std::map<std::string, double> stone_freq;
  std::map<int, double> biome_freq;
  double water_fraction = 0.0;
  double fertile_fraction = 0.0;
  double avg_temperature = 0.0;
  double avg_rainfall = 0.0;
  std::vector<Cell2> diagnostics;

  /// Most frequent species; ties go to the lexicographically smaller name.
  std::string dominant_wood() const;
  std::string dominant_stone() const;
};

/// Block, material and climate census of a region.
SiteProfile census(const VoxelWorld& world, const BoundingBox& region);
SiteProfile census(const VoxelWorld& world);

/// Ground height range max - min over `rect` (lower is flatter).
double flatness(const TerrainMaps& maps, const Rect2& rect);

}  // namespace settlegen
