#include "settlegen/structures.hpp"

#include <algorithm>
#include <set>

#include "settlegen/gdw.hpp"
#include "settlegen/rng.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

std::string_view to_string(StructureKind k) {
  switch (k) {
    case StructureKind::house: return "house";
    case StructureKind::house_large: return "house_large";
    case StructureKind::plaza: return "plaza";
    case StructureKind::farm: return "farm";
    case StructureKind::fountain: return "fountain";
    case StructureKind::fence: return "fence";
  }
  return "house";
}

StructureKind parse_structure_kind(std::string_view s) {
  for (auto k : {StructureKind::house, StructureKind::house_large, StructureKind::plaza,
                 StructureKind::farm, StructureKind::fountain, StructureKind::fence}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown structure kind '" + std::string(s) + "'");
}

namespace {

std::string mc(std::string_view s) { return "minecraft:" + std::string(s); }

std::string stone_block(std::string_view stone) {
  if (stone == "granite") return mc("polished_granite");
  if (stone == "diorite") return mc("polished_diorite");
  if (stone == "andesite") return mc("polished_andesite");
  if (stone == "sandstone") return mc("cut_sandstone");
  if (stone == "red_sandstone") return mc("cut_red_sandstone");
  if (stone == "terracotta") return mc("terracotta");
  return mc("stone_bricks");
}

std::string foundation_block(std::string_view stone) {
  if (stone == "sandstone") return mc("sandstone");
  if (stone == "red_sandstone") return mc("red_sandstone");
  if (stone == "terracotta") return mc("terracotta");
  return mc("cobblestone");
}

}  // namespace

MaterialPalette MaterialPalette::from_species(std::string_view wood, std::string_view stone) {
  MaterialPalette p;
  p.wood_species = wood;
  p.stone_species = stone;
  const std::string w(wood);
  p.wall = mc(w + "_planks");
  p.roof = mc(w + "_slab");
  p.door = mc(w + "_door");
  p.fence = mc(w + "_fence");
  p.pillar = mc("stripped_" + w + "_log");
  p.floor = stone_block(stone);
  p.foundation = foundation_block(stone);
  p.window = mc("glass_pane");
  p.light = mc("lantern");
  return p;
}

std::vector<std::string> MaterialPalette::names() const {
  return {wall, floor, roof, door, pillar, window, fence, light, foundation};
}

void StructureSpec::validate() const {
  for (const IntRange* r : {&width, &depth, &floors}) {
    if (r->min > r->max) throw SpecError("structure spec range has min > max");
  }
  if (floors.min < 1) throw SpecError("structure needs at least one floor");
  const int side = is_house(kind) ? kMinHouseSide : 3;
  if (width.min < side || depth.min < side) {
    throw SpecError(std::string(to_string(kind)) + " footprint below " + std::to_string(side) +
                    "x" + std::to_string(side));
  }
}

const std::string* StructureBlueprint::at(Coord c) const {
  auto it = blocks.find(c);
  return it == blocks.end() ? nullptr : &it->second;
}

std::size_t StructureBlueprint::count(std::string_view name) const {
  return static_cast<std::size_t>(
      std::count_if(blocks.begin(), blocks.end(), [&](const auto& kv) { return kv.second == name; }));
}

Coord door_outward(const Rect2& fp, Coord door) {
  if (door.z == fp.z0) return {0, 0, -1};
  if (door.z == fp.z1) return {0, 0, 1};
  if (door.x == fp.x0) return {-1, 0, 0};
  if (door.x == fp.x1) return {1, 0, 0};
  throw std::invalid_argument("door is not on the footprint boundary");
}

namespace {

template <typename Fn>
StructureBlueprint transform(const StructureBlueprint& bp, int size_x, int size_z, Fn&& map) {
  StructureBlueprint out = bp;
  out.size_x = size_x;
  out.size_z = size_z;
  out.blocks.clear();
  for (const auto& [c, name] : bp.blocks) out.blocks.emplace(map(c), name);
  for (auto& d : out.door_cells) d = map(d);
  std::sort(out.door_cells.begin(), out.door_cells.end());
  out.footprint = Rect2::from_size(0, 0, size_x, size_z);
  return out;
}

}  // namespace

StructureBlueprint rotated(const StructureBlueprint& bp, int quarter_turns) {
  StructureBlueprint out = bp;
  for (int t = ((quarter_turns % 4) + 4) % 4; t > 0; --t) {
    const int sz = out.size_z;
    out = transform(out, out.size_z, out.size_x,
                    [sz](Coord c) { return Coord{sz - 1 - c.z, c.y, c.x}; });
  }
  return out;
}

StructureBlueprint mirrored_x(const StructureBlueprint& bp) {
  const int sx = bp.size_x;
  return transform(bp, bp.size_x, bp.size_z, [sx](Coord c) { return Coord{sx - 1 - c.x, c.y, c.z}; });
}

StructureBlueprint mirrored_z(const StructureBlueprint& bp) {
  const int sz = bp.size_z;
  return transform(bp, bp.size_x, bp.size_z, [sz](Coord c) { return Coord{c.x, c.y, sz - 1 - c.z}; });
}

namespace {

/// Window offsets along a wall of `len` cells (corners excluded): one per
/// three wall cells, spread evenly, optionally closed under mirroring.
std::set<int> window_positions(int len, bool mirror) {
  std::set<int> out;
  const int n = len - 2;
  if (n <= 0) return out;
  const int k = std::max(1, n / 3);
  for (int j = 0; j < k; ++j) {
    const int p = 1 + ((2 * j + 1) * n) / (2 * k);
    out.insert(p);
    if (mirror) out.insert(len - 1 - p);
  }
  return out;
}

}  // namespace

StructureBlueprint generate_house(const StructureSpec& spec, const MaterialPalette& palette,
                                  std::uint64_t seed) {
  if (!is_house(spec.kind)) throw SpecError("generate_house needs a house kind");
  spec.validate();
  Rng rng = Rng::derive(seed, "house");
  const int w = rng.uniform_int(spec.width.min, spec.width.max);
  const int d = rng.uniform_int(spec.depth.min, spec.depth.max);
  const int floors = rng.uniform_int(spec.floors.min, spec.floors.max);
  const int roof_y = floors * kStoreyHeight;

  StructureBlueprint bp;
  bp.kind = spec.kind;
  bp.size_x = w;
  bp.size_y = roof_y + 2;
  bp.size_z = d;
  bp.footprint = Rect2::from_size(0, 0, w, d);
  bp.palette = palette;

  std::vector<int> door_cols;
  if (spec.symmetric) {
    if (w % 2 == 1) {
      door_cols = {(w - 1) / 2};
    } else {
      door_cols = {w / 2 - 1, w / 2};
    }
  } else {
    door_cols = {rng.uniform_int(1, w - 2)};
  }
  const auto is_door_col = [&](int x) {
    return std::find(door_cols.begin(), door_cols.end(), x) != door_cols.end();
  };
  // Ladder shaft against the back wall, in the door columns.
  const auto is_ladder = [&](int x, int z) { return floors > 1 && z == d - 2 && is_door_col(x); };

  const auto front = window_positions(w, spec.symmetric);
  const auto side = window_positions(d, false);
  std::set<int> back = front;
  if (!spec.symmetric) back = window_positions(w, false);

  for (int y = 0; y < bp.size_y; ++y) {
    for (int z = 0; z < d; ++z) {
      for (int x = 0; x < w; ++x) {
        const bool edge_x = x == 0 || x == w - 1;
        const bool edge_z = z == 0 || z == d - 1;
        std::string block(kAir);
        if (y == roof_y) {
          block = palette.roof;
        } else if (y == roof_y + 1) {
          if (spec.exterior_lights && edge_x && edge_z) block = palette.light;
        } else if (y % kStoreyHeight == 0) {
          block = palette.floor;
          if (y > 0 && is_ladder(x, z)) block = "minecraft:ladder";
        } else if (edge_x || edge_z) {
          block = (edge_x && edge_z) ? palette.pillar : palette.wall;
        } else if (is_ladder(x, z) && y < roof_y - kStoreyHeight + 1) {
          block = "minecraft:ladder";
        }
        bp.set({x, y, z}, std::move(block));
      }
    }
  }

  for (int s = 0; s < floors; ++s) {
    const int eye = s * kStoreyHeight + 2;
    for (int p : front) {
      if (s == 0 && is_door_col(p)) {
        bp.set({p, eye + 1, 0}, palette.window);
      } else {
        bp.set({p, eye, 0}, palette.window);
      }
    }
    for (int p : back) bp.set({p, eye, d - 1}, palette.window);
    for (int p : side) {
      bp.set({0, eye, p}, palette.window);
      bp.set({w - 1, eye, p}, palette.window);
    }
  }

  for (int x : door_cols) {
    bp.set({x, 1, 0}, palette.door);
    bp.set({x, 2, 0}, palette.door);
    bp.door_cells.push_back({x, 1, 0});
  }
  return bp;
}

StructureBlueprint generate_farm(const SiteProfile& site, Season season, const StructureSpec& spec,
                                 std::uint64_t seed) {
  if (spec.kind != StructureKind::farm) throw SpecError("generate_farm needs kind farm");
  spec.validate();
  Rng rng = Rng::derive(seed, "farm");
  const int w = rng.uniform_int(spec.width.min, spec.width.max);
  const int d = rng.uniform_int(spec.depth.min, spec.depth.max);
  const bool fenced = w >= 5 && d >= 5 && rng.chance(0.5);
  const auto crops = CropTable::standard().compatible(site.avg_temperature, site.water_fraction);
  const CropInfo& crop =
      *crops[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(crops.size()) - 1))];

  StructureBlueprint bp;
  bp.kind = StructureKind::farm;
  bp.size_x = w;
  bp.size_y = 2;
  bp.size_z = d;
  bp.footprint = Rect2::from_size(0, 0, w, d);
  bp.palette = MaterialPalette::from_species(site.dominant_wood(), site.dominant_stone());
  const std::string planted = crop.planted(season);
  bp.crop = planted;

  const int inset = fenced ? 1 : 0;
  for (int z = 0; z < d; ++z) {
    for (int x = 0; x < w; ++x) {
      const bool ring = fenced && (x == 0 || z == 0 || x == w - 1 || z == d - 1);
      if (ring) {
        bp.set({x, 0, z}, "minecraft:dirt");
        bp.set({x, 1, z}, bp.palette.fence);
        continue;
      }
      const int row = z - inset;
      if (row % 4 == 3) {
        bp.set({x, 0, z}, "minecraft:water");
        bp.set({x, 1, z}, std::string(kAir));
      } else {
        bp.set({x, 0, z}, "minecraft:farmland");
        bp.set({x, 1, z}, planted.empty() ? std::string(kAir) : planted);
      }
    }
  }
  return bp;
}

StructureBlueprint generate_plaza(const StructureSpec& spec, const MaterialPalette& palette,
                                  std::uint64_t seed) {
  if (spec.kind != StructureKind::plaza && spec.kind != StructureKind::fountain) {
    throw SpecError("generate_plaza needs kind plaza or fountain");
  }
  spec.validate();
  Rng rng = Rng::derive(seed, "plaza");
  const int w = rng.uniform_int(spec.width.min, spec.width.max);
  const int d = rng.uniform_int(spec.depth.min, spec.depth.max);

  StructureBlueprint bp;
  bp.kind = spec.kind;
  bp.size_x = w;
  bp.size_y = 3;
  bp.size_z = d;
  bp.footprint = Rect2::from_size(0, 0, w, d);
  bp.palette = palette;
  const int cx = (w - 1) / 2;
  const int cz = (d - 1) / 2;
  for (int y = 0; y < bp.size_y; ++y) {
    for (int z = 0; z < d; ++z) {
      for (int x = 0; x < w; ++x) {
        const int ring = std::max(std::abs(x - cx), std::abs(z - cz));
        std::string block(kAir);
        if (y == 0) {
          block = palette.floor;
        } else if (y == 1 && ring == 0) {
          block = "minecraft:water";
        } else if (y == 1 && ring == 1) {
          block = "minecraft:stone_bricks";
        } else if (y == 1 && spec.exterior_lights && w >= 5 && d >= 5 &&
                   (x == 0 || x == w - 1) && (z == 0 || z == d - 1)) {
          block = palette.light;
        }
        bp.set({x, y, z}, std::move(block));
      }
    }
  }
  return bp;
}

StructureBlueprint generate_fence(const StructureSpec& spec, const MaterialPalette& palette,
                                  std::uint64_t seed) {
  if (spec.kind != StructureKind::fence) throw SpecError("generate_fence needs kind fence");
  spec.validate();
  Rng rng = Rng::derive(seed, "fence");
  const int w = rng.uniform_int(spec.width.min, spec.width.max);
  const int d = rng.uniform_int(spec.depth.min, spec.depth.max);
  StructureBlueprint bp;
  bp.kind = StructureKind::fence;
  bp.size_x = w;
  bp.size_y = 2;
  bp.size_z = d;
  bp.footprint = Rect2::from_size(0, 0, w, d);
  bp.palette = palette;
  const int gate = (w - 1) / 2;
  for (int z = 0; z < d; ++z) {
    for (int x = 0; x < w; ++x) {
      if (x != 0 && z != 0 && x != w - 1 && z != d - 1) continue;
      bp.set({x, 1, z}, (z == 0 && x == gate) ? std::string(kAir) : palette.fence);
    }
  }
  return bp;
}

std::vector<std::uint8_t> export_fragment(const StructureBlueprint& bp) {
  VoxelWorld frag(bp.size_x, bp.size_y, bp.size_z);
  for (const auto& [c, name] : bp.blocks) frag.set_block(c, name);
  return serialize_gdw(frag);
}

}  // namespace settlegen
