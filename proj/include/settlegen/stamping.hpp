#pragma once

#include <span>
#include <stdexcept>

#include "settlegen/plan.hpp"
#include "settlegen/structures.hpp"
#include "settlegen/terrain.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

enum class PlacementErrorKind { out_of_bounds, overlap, door_into_water, foundation_too_deep };

std::string_view to_string(PlacementErrorKind k);

class PlacementError : public std::runtime_error {
 public:
  PlacementError(PlacementErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  PlacementErrorKind kind() const { return kind_; }

 private:
  PlacementErrorKind kind_;
};

/// Deepest allowed foundation column.
inline constexpr int kMaxFoundationDepth = 8;
/// Horizontal reach of the tree search beyond the footprint border.
inline constexpr int kCanopyRadius = 5;

/// Highest ground over `footprint`; the level a blueprint's y = 0 layer sits on.
int placement_level(const TerrainMaps& maps, const Rect2& footprint);

/// Removes every log/leaf component (6-connected) touching `area`, searching
/// at most kCanopyRadius cells further out. Returns the number of cells cleared.
std::size_t clear_trees_near(VoxelWorld& world, const Rect2& area);

/// Writes `bp` with its local origin at `position`. All checks run before the
/// world is touched, so a PlacementError leaves the world unchanged.
PlacementRecord stamp(VoxelWorld& world, const TerrainMaps& maps, const StructureBlueprint& bp,
                      Coord position, bool clear_trees,
                      std::span<const PlacementRecord> existing = {});

}  // namespace settlegen
