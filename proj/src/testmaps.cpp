#include "settlegen/testmaps.hpp"

#include <cmath>
#include <numbers>

#include "settlegen/rng.hpp"

namespace settlegen {

std::string_view to_string(TestMapKind k) {
  switch (k) {
    case TestMapKind::flat: return "flat";
    case TestMapKind::river: return "river";
    case TestMapKind::island: return "island";
  }
  return "flat";
}

TestMapKind parse_test_map_kind(std::string_view s) {
  for (auto k : {TestMapKind::flat, TestMapKind::river, TestMapKind::island}) {
    if (to_string(k) == s) return k;
  }
  throw std::invalid_argument("unknown test map '" + std::string(s) + "' (flat|river|island)");
}

int base_height(const TestMapOptions& o) { return std::max(6, o.size_y * 5 / 16); }

namespace {

enum class Column { land, water };

struct Profile {
  int height = 0;
  Column type = Column::land;
  int water_top = 0;
  std::uint8_t biome = 1;
};

Profile profile_at(TestMapKind kind, const TestMapOptions& o, int x, int z, double phase) {
  const int h0 = base_height(o);
  Profile p;
  p.height = h0;
  p.biome = o.biome.value_or(1);
  if (kind == TestMapKind::river) {
    const double cx = o.size_x / 2.0 +
                      o.size_x / 10.0 * std::sin(2.0 * std::numbers::pi * z / o.size_z + phase);
    if (std::abs(x - cx) <= 3.5) {
      p.type = Column::water;
      p.height = h0 - 3;
      p.water_top = h0 - 1;
      p.biome = 7;
    }
  } else if (kind == TestMapKind::island) {
    const double dx = x - (o.size_x - 1) / 2.0;
    const double dz = z - (o.size_z - 1) / 2.0;
    const double theta = std::atan2(dz, dx);
    const double radius = 0.4 * std::min(o.size_x, o.size_z) * (1.0 + 0.12 * std::sin(3.0 * theta + phase));
    const double d = std::hypot(dx, dz) / radius;
    if (d < 1.0) {
      const int terrace = static_cast<int>((1.0 - d) * 4.0);
      p.height = std::min(h0 + 1 + 3 * terrace, o.size_y - 20);
      p.biome = o.biome.value_or(3);
    } else {
      p.type = Column::water;
      p.height = h0 - 6;
      p.water_top = h0;
      p.biome = 0;
    }
  }
  p.height = std::max(p.height, 2);
  return p;
}

}  // namespace

VoxelWorld make_test_map(TestMapKind kind, const TestMapOptions& o) {
  if (o.size_x < 8 || o.size_z < 8 || o.size_y < 32) {
    throw std::invalid_argument("test maps need at least 8 x 32 x 8 blocks");
  }
  if (o.species.empty()) throw std::invalid_argument("test map needs at least one tree species");
  VoxelWorld w(o.size_x, o.size_y, o.size_z);
  const BlockId bedrock = w.intern("minecraft:bedrock");
  const BlockId stone = w.intern("minecraft:stone");
  const BlockId dirt = w.intern("minecraft:dirt");
  const BlockId grass = w.intern("minecraft:grass_block");
  const BlockId sand = w.intern("minecraft:sand");
  const BlockId water = w.intern("minecraft:water");

  Rng rng = Rng::derive(o.seed, "testmap");
  const double phase = rng.uniform01() * 2.0 * std::numbers::pi;
  std::vector<Profile> cols(static_cast<std::size_t>(o.size_x) * o.size_z);
  for (int z = 0; z < o.size_z; ++z) {
    for (int x = 0; x < o.size_x; ++x) {
      const Profile p = profile_at(kind, o, x, z, phase);
      cols[static_cast<std::size_t>(z) * o.size_x + x] = p;
      w.set_biome(x, z, p.biome);
      w.put({x, 0, z}, bedrock);
      for (int y = 1; y <= p.height; ++y) {
        BlockId b = stone;
        if (y == p.height) {
          b = p.type == Column::water ? sand : grass;
        } else if (y >= p.height - 3) {
          b = p.type == Column::water ? sand : dirt;
        }
        w.put({x, y, z}, b);
      }
      if (p.type == Column::water) {
        for (int y = p.height + 1; y <= p.water_top; ++y) w.put({x, y, z}, water);
      }
    }
  }

  double weight_sum = 0.0;
  for (const auto& [_, wt] : o.species) weight_sum += wt;
  std::vector<std::uint8_t> near_trunk(cols.size(), 0);
  for (int z = 2; z < o.size_z - 2; ++z) {
    for (int x = 2; x < o.size_x - 2; ++x) {
      const Profile& p = cols[static_cast<std::size_t>(z) * o.size_x + x];
      if (!rng.chance(o.tree_density)) continue;
      if (p.type != Column::land || near_trunk[static_cast<std::size_t>(z) * o.size_x + x]) continue;
      double pick = rng.uniform01() * weight_sum;
      std::string species = o.species.back().first;
      for (const auto& [name, wt] : o.species) {
        if (pick < wt) {
          species = name;
          break;
        }
        pick -= wt;
      }
      const int trunk = rng.uniform_int(4, 5);
      const int top = p.height + trunk;
      if (top + 2 >= o.size_y) continue;
      const BlockId log = w.intern("minecraft:" + species + "_log");
      const BlockId leaves = w.intern("minecraft:" + species + "_leaves");
      const BlockId air = w.intern(kAir);
      for (int y = top - 2; y <= top + 1; ++y) {
        const int r = y > top ? 1 : 2;
        for (int dz = -r; dz <= r; ++dz) {
          for (int dx = -r; dx <= r; ++dx) {
            if (r == 2 && std::abs(dx) == 2 && std::abs(dz) == 2) continue;
            const Coord c{x + dx, y, z + dz};
            if (w.contains(c) && w.at(c) == air) w.put(c, leaves);
          }
        }
      }
      for (int y = p.height + 1; y <= top; ++y) w.put({x, y, z}, log);
      for (int dz = -2; dz <= 2; ++dz) {
        for (int dx = -2; dx <= 2; ++dx) {
          near_trunk[static_cast<std::size_t>(z + dz) * o.size_x + (x + dx)] = 1;
        }
      }
    }
  }
  return w.compacted();
}

}  // namespace settlegen
