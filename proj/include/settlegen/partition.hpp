#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "settlegen/geometry.hpp"
#include "settlegen/structures.hpp"
#include "settlegen/terrain.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

enum class LevelPolicy { median, min, max, mean };

struct FlattenResult {
  int level = 0;
  std::size_t changed = 0;
};

/// Levels every column of `region`: solid up to the chosen level, air above.
/// The median policy uses the lower median of the column ground heights.
FlattenResult flatten(VoxelWorld& world, const Rect2& region, LevelPolicy policy = LevelPolicy::median);

/// Level `flatten` would choose for these heights.
int choose_level(std::vector<int> heights, LevelPolicy policy);

enum class PartitionOp { add, cut };
enum class PartitionTag { yard, house, road_strip, farm, fence, roof, wall, floor, door, window, void_ };

std::string_view to_string(PartitionTag t);

struct PartitionNode {
  BoundingBox box;
  PartitionOp op = PartitionOp::add;
  PartitionTag tag = PartitionTag::void_;
  std::vector<PartitionNode> children;

  friend bool operator==(const PartitionNode&, const PartitionNode&) = default;
};

/// Nodes tagged yard, in depth-first order.
std::vector<const PartitionNode*> yards(const PartitionNode& root);

/// Recursive add/cut split of `region` into yards. A region dimension above
/// `max_yard` is always split; one of at least 2 * min_yard is split at
/// random. Each yard holds an inner house box (add) and the one-cell margin
/// around it as four cut strips. Boxes use y = 0.
PartitionNode partition_yards(const Rect2& region, int min_yard, int max_yard, std::uint64_t seed);

enum class Facing { north, east, south, west };

/// Quarter turns that bring a front (-z) face to `f`.
int quarter_turns(Facing f);

/// House built from floor, wall and roof partitions filling a box of
/// size_x * size_y * size_z, door on the `door` side. Throws SpecError below 5x4x5.
StructureBlueprint build_house_cga(int size_x, int size_y, int size_z, const MaterialPalette& palette,
                                   std::uint64_t seed, Facing door = Facing::north);

/// The partition tree build_house_cga rasterises, in canonical (door north)
/// orientation.
PartitionNode house_partitions(int size_x, int size_y, int size_z, int door_x0, int door_x1);

}  // namespace settlegen
