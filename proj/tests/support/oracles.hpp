#pragma once

// Straightforward reference implementations used to cross-check the library.
// They favour obviousness over speed and share no code with src/.

#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "settlegen/geometry.hpp"
#include "settlegen/rng.hpp"
#include "settlegen/world.hpp"

namespace oracle {

using settlegen::BlockCategory;
using settlegen::Cell2;
using settlegen::Coord;
using settlegen::VoxelWorld;

struct Column {
  int ground = 0;
  int surface = 0;
  bool water = false;
  bool lava = false;
  bool no_solid = false;
};

inline Column scan_column(const VoxelWorld& w, int x, int z, int y0, int y1) {
  Column c;
  c.ground = y0;
  c.no_solid = true;
  for (int y = y1; y >= y0; --y) {
    if (w.category_at({x, y, z}) == BlockCategory::solid) {
      c.ground = y;
      c.no_solid = false;
      break;
    }
  }
  int first_liquid_y = -1;
  BlockCategory first_liquid = BlockCategory::air;
  for (int y = y1; y >= y0; --y) {
    const auto cat = w.category_at({x, y, z});
    if (cat == BlockCategory::solid) break;
    if (cat == BlockCategory::water || cat == BlockCategory::lava) {
      first_liquid = cat;
      first_liquid_y = y;
      break;
    }
  }
  c.water = first_liquid == BlockCategory::water;
  c.lava = first_liquid == BlockCategory::lava;
  c.surface = c.water ? first_liquid_y : c.ground;
  return c;
}

/// Raw edge cells: any 4-neighbour differs by at least `step`.
inline std::set<std::pair<int, int>> raw_edges(const std::vector<std::vector<int>>& h, int step = 2) {
  std::set<std::pair<int, int>> out;
  const int d = static_cast<int>(h.size());
  const int w = d ? static_cast<int>(h[0].size()) : 0;
  for (int z = 0; z < d; ++z) {
    for (int x = 0; x < w; ++x) {
      const int nb[4][2] = {{x + 1, z}, {x - 1, z}, {x, z + 1}, {x, z - 1}};
      for (auto& n : nb) {
        if (n[0] < 0 || n[0] >= w || n[1] < 0 || n[1] >= d) continue;
        if (std::abs(h[n[1]][n[0]] - h[z][x]) >= step) out.insert({x, z});
      }
    }
  }
  return out;
}

inline std::set<std::pair<int, int>> dilate(const std::set<std::pair<int, int>>& s, int r, int w, int d) {
  std::set<std::pair<int, int>> out;
  for (auto [x, z] : s) {
    for (int dz = -r; dz <= r; ++dz) {
      for (int dx = -r; dx <= r; ++dx) {
        if (x + dx >= 0 && x + dx < w && z + dz >= 0 && z + dz < d) out.insert({x + dx, z + dz});
      }
    }
  }
  return out;
}

/// Connected components of `open` cells (4-connectivity), each as a sorted set.
inline std::set<std::set<std::pair<int, int>>> components(const std::vector<std::vector<bool>>& open) {
  std::set<std::set<std::pair<int, int>>> out;
  const int d = static_cast<int>(open.size());
  const int w = d ? static_cast<int>(open[0].size()) : 0;
  std::vector<std::vector<bool>> seen(d, std::vector<bool>(w, false));
  for (int z = 0; z < d; ++z) {
    for (int x = 0; x < w; ++x) {
      if (!open[z][x] || seen[z][x]) continue;
      std::set<std::pair<int, int>> comp;
      std::vector<std::pair<int, int>> stack{{x, z}};
      seen[z][x] = true;
      while (!stack.empty()) {
        auto [cx, cz] = stack.back();
        stack.pop_back();
        comp.insert({cx, cz});
        const int nb[4][2] = {{cx + 1, cz}, {cx - 1, cz}, {cx, cz + 1}, {cx, cz - 1}};
        for (auto& n : nb) {
          if (n[0] < 0 || n[0] >= w || n[1] < 0 || n[1] >= d) continue;
          if (!open[n[1]][n[0]] || seen[n[1]][n[0]]) continue;
          seen[n[1]][n[0]] = true;
          stack.push_back({n[0], n[1]});
        }
      }
      out.insert(std::move(comp));
    }
  }
  return out;
}

/// Dijkstra over a height grid: steps of |dh| <= max_step between passable
/// cells cost 1 + |dh|. Returns nullopt when the goal is unreachable.
inline std::optional<int> dijkstra(const std::vector<std::vector<int>>& h,
                                   const std::vector<std::vector<bool>>& passable, Cell2 s, Cell2 g,
                                   int max_step = 1) {
  const int d = static_cast<int>(h.size());
  const int w = static_cast<int>(h[0].size());
  if (!passable[s.z][s.x] || !passable[g.z][g.x]) return std::nullopt;
  std::vector<int> dist(static_cast<std::size_t>(w * d), std::numeric_limits<int>::max());
  using Item = std::pair<int, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s.z * w + s.x] = 0;
  pq.push({0, s.z * w + s.x});
  while (!pq.empty()) {
    auto [c, i] = pq.top();
    pq.pop();
    if (c != dist[i]) continue;
    const int x = i % w;
    const int z = i / w;
    const int nb[4][2] = {{x + 1, z}, {x - 1, z}, {x, z + 1}, {x, z - 1}};
    for (auto& n : nb) {
      if (n[0] < 0 || n[0] >= w || n[1] < 0 || n[1] >= d || !passable[n[1]][n[0]]) continue;
      const int dh = std::abs(h[n[1]][n[0]] - h[z][x]);
      if (dh > max_step) continue;
      const int j = n[1] * w + n[0];
      if (c + 1 + dh < dist[j]) {
        dist[j] = c + 1 + dh;
        pq.push({dist[j], j});
      }
    }
  }
  const int r = dist[g.z * w + g.x];
  if (r == std::numeric_limits<int>::max()) return std::nullopt;
  return r;
}

/// n-gram counts along the three axes, keyed by name tuples.
inline std::map<std::vector<std::string>, std::uint64_t> ngrams(const VoxelWorld& w, int n) {
  std::map<std::vector<std::string>, std::uint64_t> out;
  const Coord steps[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const Coord& s : steps) {
    for (int y = 0; y < w.size_y(); ++y) {
      for (int z = 0; z < w.size_z(); ++z) {
        for (int x = 0; x < w.size_x(); ++x) {
          std::vector<std::string> t;
          bool ok = true;
          for (int k = 0; k < n; ++k) {
            const Coord c{x + s.x * k, y + s.y * k, z + s.z * k};
            if (!w.contains(c)) {
              ok = false;
              break;
            }
            t.push_back(w.name_at(c));
          }
          if (ok) ++out[t];
        }
      }
    }
  }
  return out;
}

inline double entropy_bits(const std::map<std::vector<std::string>, std::uint64_t>& counts) {
  double total = 0.0;
  for (auto& [k, v] : counts) total += static_cast<double>(v);
  double h = 0.0;
  for (auto& [k, v] : counts) {
    const double p = static_cast<double>(v) / total;
    h -= p * std::log2(p);
  }
  return h;
}

/// World whose columns are random stacks of stone, dirt, water, lava, leaves
/// and crafted blocks, with random biomes.
inline VoxelWorld random_world(settlegen::Rng& rng, int sx, int sy, int sz) {
  static const char* kNames[] = {"minecraft:air",        "minecraft:stone",      "minecraft:dirt",
                                 "minecraft:grass_block", "minecraft:water",      "minecraft:lava",
                                 "minecraft:oak_leaves", "minecraft:oak_planks", "minecraft:glass",
                                 "minecraft:oak_log",    "minecraft:sand",       "minecraft:tall_grass"};
  VoxelWorld w(sx, sy, sz);
  for (int z = 0; z < sz; ++z) {
    for (int x = 0; x < sx; ++x) {
      w.set_biome(x, z, static_cast<std::uint8_t>(rng.uniform_int(0, 40)));
      const int style = rng.uniform_int(0, 4);
      const int top = rng.uniform_int(0, sy - 1);
      for (int y = 0; y < sy; ++y) {
        const char* name = "minecraft:air";
        if (style == 0) {
          name = kNames[rng.uniform_int(0, 11)];
        } else if (y <= top) {
          name = "minecraft:stone";
        } else if (style == 2 && y <= top + 3) {
          name = "minecraft:water";
        } else if (style == 3 && y == top + 1) {
          name = "minecraft:lava";
        } else if (style == 4 && y <= top + 2) {
          name = rng.chance(0.5) ? "minecraft:oak_leaves" : "minecraft:oak_planks";
        }
        if (std::string_view(name) != "minecraft:air") w.set_block({x, y, z}, name);
      }
    }
  }
  return w;
}

}  // namespace oracle
