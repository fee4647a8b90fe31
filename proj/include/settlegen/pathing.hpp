#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "settlegen/geometry.hpp"
#include "settlegen/terrain.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

/// Embodied movement model shared by road planning and metrics.
struct TraversalRules {
  int max_step_up = 1;
  int max_step_down = 1;
  bool forbid_water = true;
  bool forbid_lava = true;
  /// Cells near hill corners; impassable when set.
  std::optional<Mask> corner_mask;
  /// Occupied cells (structure footprints); impassable when set.
  std::optional<Mask> blocked;

  bool passable(const TerrainMaps& maps, Cell2 c) const;
  bool step_ok(int from_height, int to_height) const {
    const int d = to_height - from_height;
    return d <= max_step_up && -d <= max_step_down;
  }
};

struct PathCell {
  int x = 0;
  int z = 0;
  int y = 0;  // walking surface height

  Cell2 cell() const { return {x, z}; }
  friend bool operator==(const PathCell&, const PathCell&) = default;
};

struct Path {
  std::vector<PathCell> cells;
  double cost = 0.0;

  friend bool operator==(const Path&, const Path&) = default;
};

enum class NoPathReason { none, out_of_bounds, start_impassable, goal_impassable, disconnected };

std::string_view to_string(NoPathReason r);

struct PathResult {
  std::optional<Path> path;
  NoPathReason reason = NoPathReason::none;

  explicit operator bool() const { return path.has_value(); }
};

/// Cost of a single 4-neighbour step between walking heights.
inline int step_cost(int from_height, int to_height) {
  return 1 + std::abs(to_height - from_height);
}

/// A* over surface heights with 4-connectivity, step cost 1 + |dh| and the
/// Manhattan heuristic. Open-set ties break on (f, h, x, z) so results are
/// reproducible. Heights come from maps.surface.
PathResult find_path(const TerrainMaps& maps, const TraversalRules& rules, Cell2 start, Cell2 goal);

/// Edge cells on the upper side of each drop (the cliff-top outline).
EdgeMap cliff_tops(const TerrainMaps& maps);

/// Cells with an edge neighbour along x and another along z, dilated by one.
Mask corner_mask(const EdgeMap& edges);

/// Maps normalised distance from the settlement centre (0 centre, 1 border)
/// to a road block name.
using RoadMaterialFn = std::function<std::string(double)>;

struct RoadGrading {
  double center_x = 0.0;
  double center_z = 0.0;
  double radius = 1.0;

  double normalized(int x, int z) const;
};

struct RoadTiers {
  double inner = 1.0 / 3.0;
  double outer = 2.0 / 3.0;
  std::string center = "minecraft:stone_bricks";
  std::string middle = "minecraft:gravel";
  std::string border = "minecraft:dirt";

  std::string operator()(double d) const {
    if (d < inner) return center;
    if (d < outer) return middle;
    return border;
  }
};

/// Replaces the walking-surface block of each path cell and clears
/// vegetation above it.
void carve_road(VoxelWorld& world, const Path& path, const RoadGrading& grading,
                const RoadMaterialFn& material);

}  // namespace settlegen
