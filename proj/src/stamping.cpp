#include "settlegen/stamping.hpp"

#include <algorithm>
#include <deque>
#include <vector>

namespace settlegen {

std::string_view to_string(PlacementErrorKind k) {
  switch (k) {
    case PlacementErrorKind::out_of_bounds: return "out_of_bounds";
    case PlacementErrorKind::overlap: return "overlap";
    case PlacementErrorKind::door_into_water: return "door_into_water";
    case PlacementErrorKind::foundation_too_deep: return "foundation_too_deep";
  }
  return "out_of_bounds";
}

int placement_level(const TerrainMaps& maps, const Rect2& fp) {
  if (fp.empty() || !maps.area.contains(fp)) {
    throw std::out_of_range("footprint outside terrain maps");
  }
  int level = maps.ground(fp.x0, fp.z0);
  for (int z = fp.z0; z <= fp.z1; ++z) {
    for (int x = fp.x0; x <= fp.x1; ++x) level = std::max(level, maps.ground(x, z));
  }
  return level;
}

std::size_t clear_trees_near(VoxelWorld& world, const Rect2& area) {
  const Rect2 seed_area = area.clipped(world.columns());
  const Rect2 limit = area.expanded(kCanopyRadius).clipped(world.columns());
  if (seed_area.empty()) return 0;

  const auto is_tree = [&](Coord c) { return world.info(world.at(c)).tree; };
  std::vector<std::uint8_t> seen(world.volume(), 0);
  std::deque<Coord> queue;
  for (int y = 0; y < world.size_y(); ++y) {
    for (int z = seed_area.z0; z <= seed_area.z1; ++z) {
      for (int x = seed_area.x0; x <= seed_area.x1; ++x) {
        const Coord c{x, y, z};
        if (is_tree(c)) {
          seen[world.index(c)] = 1;
          queue.push_back(c);
        }
      }
    }
  }

  static constexpr Coord kSteps[6] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                      {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<Coord> found;
  while (!queue.empty()) {
    const Coord c = queue.front();
    queue.pop_front();
    found.push_back(c);
    for (const Coord& s : kSteps) {
      const Coord n = c + s;
      if (n.y < 0 || n.y >= world.size_y() || !limit.contains(n.x, n.z)) continue;
      const std::size_t i = world.index(n);
      if (seen[i] || !is_tree(n)) continue;
      seen[i] = 1;
      queue.push_back(n);
    }
  }
  const BlockId air = world.intern(kAir);
  for (const Coord& c : found) world.put(c, air);
  return found.size();
}

PlacementRecord stamp(VoxelWorld& world, const TerrainMaps& maps, const StructureBlueprint& bp,
                      Coord position, bool clear_trees, std::span<const PlacementRecord> existing) {
  const Rect2 fp = Rect2::from_size(position.x, position.z, bp.size_x, bp.size_z);
  const Coord top{fp.x1, position.y + bp.size_y - 1, fp.z1};
  if (!world.contains({fp.x0, position.y, fp.z0}) || !world.contains(top) ||
      !maps.area.contains(fp)) {
    throw PlacementError(PlacementErrorKind::out_of_bounds, "blueprint extends outside the world");
  }
  for (const PlacementRecord& r : existing) {
    if (r.footprint().intersects(fp)) {
      throw PlacementError(PlacementErrorKind::overlap,
                           "footprint overlaps placement " + std::to_string(r.order));
    }
  }

  int lowest = position.y;
  for (int z = 0; z < bp.size_z; ++z) {
    for (int x = 0; x < bp.size_x; ++x) {
      const std::string* base = bp.at({x, 0, z});
      if (base == nullptr || *base == kAir) continue;
      const int ground = maps.ground(position.x + x, position.z + z);
      if (position.y - ground > kMaxFoundationDepth) {
        throw PlacementError(PlacementErrorKind::foundation_too_deep,
                             "foundation deeper than " + std::to_string(kMaxFoundationDepth));
      }
      lowest = std::min(lowest, std::max(ground + 1, 0));
    }
  }

  std::vector<Coord> doors;
  for (const Coord& d : bp.door_cells) {
    const Coord w = position + d;
    const Coord out = w + door_outward(bp.footprint, d);
    if (!world.contains(out) || !maps.contains(out.x, out.z)) {
      throw PlacementError(PlacementErrorKind::out_of_bounds, "door faces the world border");
    }
    const auto liquid = [&](Coord c) {
      if (!world.contains(c)) return false;
      const auto cat = world.category_at(c);
      return cat == BlockCategory::water || cat == BlockCategory::lava;
    };
    if (maps.water(out.x, out.z) || maps.lava(out.x, out.z) || liquid(out) ||
        liquid(out - Coord{0, 1, 0})) {
      throw PlacementError(PlacementErrorKind::door_into_water, "door opens onto liquid");
    }
    doors.push_back(w);
  }

  if (clear_trees) clear_trees_near(world, fp.expanded(1));

  const BlockId fill = world.intern(bp.palette.foundation.empty() ? "minecraft:cobblestone"
                                                                  : bp.palette.foundation);
  for (int z = 0; z < bp.size_z; ++z) {
    for (int x = 0; x < bp.size_x; ++x) {
      const std::string* base = bp.at({x, 0, z});
      if (base == nullptr || *base == kAir) continue;
      const int ground = maps.ground(position.x + x, position.z + z);
      for (int y = std::max(ground + 1, 0); y < position.y; ++y) {
        world.put({position.x + x, y, position.z + z}, fill);
      }
    }
  }
  for (const auto& [c, name] : bp.blocks) world.put(position + c, world.intern(name));

  PlacementRecord rec;
  rec.kind = bp.kind;
  rec.box = {{fp.x0, lowest, fp.z0}, top};
  rec.doors = std::move(doors);
  rec.palette = bp.palette;
  rec.crop = bp.crop;
  return rec;
}

}  // namespace settlegen
