#include "settlegen/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "settlegen/rng.hpp"

namespace settlegen {

int choose_level(std::vector<int> heights, LevelPolicy policy) {
  if (heights.empty()) throw std::invalid_argument("choose_level: no columns");
  std::sort(heights.begin(), heights.end());
  switch (policy) {
    case LevelPolicy::median: return heights[(heights.size() - 1) / 2];
    case LevelPolicy::min: return heights.front();
    case LevelPolicy::max: return heights.back();
    case LevelPolicy::mean: {
      const double sum = std::accumulate(heights.begin(), heights.end(), 0.0);
      return static_cast<int>(std::lround(sum / static_cast<double>(heights.size())));
    }
  }
  return heights[(heights.size() - 1) / 2];
}

FlattenResult flatten(VoxelWorld& world, const Rect2& region, LevelPolicy policy) {
  const Rect2 r = region.clipped(world.columns());
  if (r.empty()) throw std::invalid_argument("flatten: region outside the world");
  const TerrainMaps maps =
      compute_terrain(world, {{r.x0, 0, r.z0}, {r.x1, world.size_y() - 1, r.z1}});
  std::vector<int> heights(maps.ground.data().begin(), maps.ground.data().end());
  FlattenResult res;
  res.level = choose_level(std::move(heights), policy);

  const BlockId air = world.intern(kAir);
  const BlockId dirt = world.intern("minecraft:dirt");
  const auto write = [&](Coord c, BlockId id) {
    if (world.at(c) != id) {
      world.put(c, id);
      ++res.changed;
    }
  };
  for (int z = r.z0; z <= r.z1; ++z) {
    for (int x = r.x0; x <= r.x1; ++x) {
      const int ground = maps.ground(x, z);
      BlockId fill = dirt;
      if (world.contains({x, ground, z}) &&
          world.category_at({x, ground, z}) == BlockCategory::solid) {
        fill = world.at({x, ground, z});
      }
      for (int y = 0; y < world.size_y(); ++y) {
        const Coord c{x, y, z};
        if (y > res.level) {
          write(c, air);
        } else if (y > ground) {
          write(c, fill);
        } else if (y == res.level && world.category_at(c) != BlockCategory::solid) {
          write(c, fill);
        }
      }
    }
  }
  return res;
}

std::string_view to_string(PartitionTag t) {
  switch (t) {
    case PartitionTag::yard: return "yard";
    case PartitionTag::house: return "house";
    case PartitionTag::road_strip: return "road_strip";
    case PartitionTag::farm: return "farm";
    case PartitionTag::fence: return "fence";
    case PartitionTag::roof: return "roof";
    case PartitionTag::wall: return "wall";
    case PartitionTag::floor: return "floor";
    case PartitionTag::door: return "door";
    case PartitionTag::window: return "window";
    case PartitionTag::void_: return "void";
  }
  return "void";
}

namespace {

BoundingBox flat_box(const Rect2& r) { return {{r.x0, 0, r.z0}, {r.x1, 0, r.z1}}; }

PartitionNode make_yard(const Rect2& r) {
  PartitionNode yard{flat_box(r), PartitionOp::add, PartitionTag::yard, {}};
  const Rect2 inner{r.x0 + 1, r.z0 + 1, r.x1 - 1, r.z1 - 1};
  if (inner.empty()) return yard;
  yard.children.push_back({flat_box(inner), PartitionOp::add, PartitionTag::house, {}});
  const Rect2 strips[4] = {{r.x0, r.z0, r.x1, r.z0},
                           {r.x0, r.z1, r.x1, r.z1},
                           {r.x0, r.z0 + 1, r.x0, r.z1 - 1},
                           {r.x1, r.z0 + 1, r.x1, r.z1 - 1}};
  for (const Rect2& s : strips) {
    yard.children.push_back({flat_box(s), PartitionOp::cut, PartitionTag::road_strip, {}});
  }
  return yard;
}

PartitionNode split(const Rect2& r, int min_yard, int max_yard, Rng& rng) {
  const int w = r.width();
  const int d = r.depth();
  const bool can_x = w >= 2 * min_yard;
  const bool can_z = d >= 2 * min_yard;
  const bool must_x = w > max_yard && can_x;
  const bool must_z = d > max_yard && can_z;
  int axis = -1;  // 0 = x, 1 = z
  if (must_x || must_z) {
    axis = (must_x && (!must_z || w >= d)) ? 0 : 1;
  } else if ((can_x || can_z) && rng.chance(0.5)) {
    axis = (can_x && (!can_z || w >= d)) ? 0 : 1;
  }
  if (axis < 0) return make_yard(r);

  const int len = axis == 0 ? w : d;
  const int a = rng.uniform_int(min_yard, len - min_yard);
  Rect2 lo = r;
  Rect2 hi = r;
  if (axis == 0) {
    lo.x1 = r.x0 + a - 1;
    hi.x0 = r.x0 + a;
  } else {
    lo.z1 = r.z0 + a - 1;
    hi.z0 = r.z0 + a;
  }
  PartitionNode node{flat_box(r), PartitionOp::add, PartitionTag::void_, {}};
  node.children.push_back(split(lo, min_yard, max_yard, rng));
  node.children.push_back(split(hi, min_yard, max_yard, rng));
  return node;
}

void collect_yards(const PartitionNode& n, std::vector<const PartitionNode*>& out) {
  if (n.tag == PartitionTag::yard) {
    out.push_back(&n);
    return;
  }
  for (const PartitionNode& c : n.children) collect_yards(c, out);
}

}  // namespace

std::vector<const PartitionNode*> yards(const PartitionNode& root) {
  std::vector<const PartitionNode*> out;
  collect_yards(root, out);
  return out;
}

PartitionNode partition_yards(const Rect2& region, int min_yard, int max_yard, std::uint64_t seed) {
  if (min_yard < 7) throw std::invalid_argument("partition_yards: min_yard must be at least 7");
  if (max_yard < min_yard) throw std::invalid_argument("partition_yards: max_yard below min_yard");
  if (region.empty()) throw std::invalid_argument("partition_yards: empty region");
  Rng rng = Rng::derive(seed, "partition_yards");
  if (region.width() < min_yard || region.depth() < min_yard) return make_yard(region);
  return split(region, min_yard, max_yard, rng);
}

int quarter_turns(Facing f) {
  switch (f) {
    case Facing::north: return 0;
    case Facing::east: return 1;
    case Facing::south: return 2;
    case Facing::west: return 3;
  }
  return 0;
}

namespace {

PartitionNode box_node(PartitionOp op, PartitionTag tag, Coord lo, Coord hi) {
  return {{lo, hi}, op, tag, {}};
}

std::vector<int> spaced_positions(int len) {
  std::vector<int> out;
  const int n = len - 2;
  if (n <= 0) return out;
  const int k = std::max(1, n / 3);
  for (int j = 0; j < k; ++j) {
    const int p = 1 + ((2 * j + 1) * n) / (2 * k);
    out.push_back(p);
    out.push_back(len - 1 - p);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

PartitionNode house_partitions(int w, int h, int d, int door_x0, int door_x1) {
  PartitionNode root = box_node(PartitionOp::add, PartitionTag::house, {0, 0, 0}, {w - 1, h - 1, d - 1});
  root.children.push_back(box_node(PartitionOp::add, PartitionTag::floor, {0, 0, 0}, {w - 1, 0, d - 1}));
  root.children.push_back(box_node(PartitionOp::add, PartitionTag::wall, {0, 1, 0}, {w - 1, h - 2, 0}));
  root.children.push_back(
      box_node(PartitionOp::add, PartitionTag::wall, {0, 1, d - 1}, {w - 1, h - 2, d - 1}));
  root.children.push_back(box_node(PartitionOp::add, PartitionTag::wall, {0, 1, 1}, {0, h - 2, d - 2}));
  root.children.push_back(
      box_node(PartitionOp::add, PartitionTag::wall, {w - 1, 1, 1}, {w - 1, h - 2, d - 2}));
  root.children.push_back(
      box_node(PartitionOp::add, PartitionTag::roof, {0, h - 1, 0}, {w - 1, h - 1, d - 1}));
  root.children.push_back(box_node(PartitionOp::cut, PartitionTag::door, {door_x0, 1, 0}, {door_x1, 2, 0}));

  const int wy = std::min(2, h - 2);
  for (int p : spaced_positions(w)) {
    if (p < door_x0 || p > door_x1) {
      root.children.push_back(box_node(PartitionOp::cut, PartitionTag::window, {p, wy, 0}, {p, wy, 0}));
    }
    root.children.push_back(
        box_node(PartitionOp::cut, PartitionTag::window, {p, wy, d - 1}, {p, wy, d - 1}));
  }
  for (int p : spaced_positions(d)) {
    root.children.push_back(box_node(PartitionOp::cut, PartitionTag::window, {0, wy, p}, {0, wy, p}));
    root.children.push_back(
        box_node(PartitionOp::cut, PartitionTag::window, {w - 1, wy, p}, {w - 1, wy, p}));
  }
  return root;
}

StructureBlueprint build_house_cga(int size_x, int size_y, int size_z, const MaterialPalette& palette,
                                   std::uint64_t seed, Facing door) {
  if (size_x < kMinHouseSide || size_z < kMinHouseSide || size_y < 4) {
    throw SpecError("house box below 5x4x5");
  }
  const int turns = quarter_turns(door);
  const int w = turns % 2 == 0 ? size_x : size_z;
  const int d = turns % 2 == 0 ? size_z : size_x;
  const int h = size_y;
  const int door_x0 = w % 2 == 1 ? (w - 1) / 2 : w / 2 - 1;
  const int door_x1 = w % 2 == 1 ? door_x0 : door_x0 + 1;
  Rng rng = Rng::derive(seed, "house_cga");
  const std::string& roof = rng.chance(0.5) ? palette.roof : palette.wall;

  StructureBlueprint bp;
  bp.kind = StructureKind::house;
  bp.size_x = w;
  bp.size_y = h;
  bp.size_z = d;
  bp.footprint = Rect2::from_size(0, 0, w, d);
  bp.palette = palette;
  for (int y = 0; y < h; ++y) {
    for (int z = 0; z < d; ++z) {
      for (int x = 0; x < w; ++x) bp.set({x, y, z}, std::string(kAir));
    }
  }

  const PartitionNode tree = house_partitions(w, h, d, door_x0, door_x1);
  for (const PartitionNode& n : tree.children) {
    for (int y = n.box.min.y; y <= n.box.max.y; ++y) {
      for (int z = n.box.min.z; z <= n.box.max.z; ++z) {
        for (int x = n.box.min.x; x <= n.box.max.x; ++x) {
          const bool corner = (x == 0 || x == w - 1) && (z == 0 || z == d - 1);
          switch (n.tag) {
            case PartitionTag::floor: bp.set({x, y, z}, palette.floor); break;
            case PartitionTag::wall: bp.set({x, y, z}, corner ? palette.pillar : palette.wall); break;
            case PartitionTag::roof: bp.set({x, y, z}, roof); break;
            case PartitionTag::door: bp.set({x, y, z}, palette.door); break;
            case PartitionTag::window: bp.set({x, y, z}, palette.window); break;
            default: break;
          }
        }
      }
    }
  }
  for (int x = door_x0; x <= door_x1; ++x) bp.door_cells.push_back({x, 1, 0});
  return rotated(bp, turns);
}

}  // namespace settlegen
