#include "settlegen/terrain.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <tuple>

#include "settlegen/climate.hpp"

namespace settlegen {

Mask TerrainMaps::liquid() const {
  Mask out(area);
  for (std::size_t i = 0; i < out.data().size(); ++i) {
    out.data()[i] = water.data()[i] | lava.data()[i];
  }
  return out;
}

TerrainMaps compute_terrain(const VoxelWorld& world, const BoundingBox& region) {
  world.check_bounds(region);
  TerrainMaps m;
  m.area = footprint_of(region);
  m.floor_y = region.min.y;
  m.top_y = region.max.y;
  m.ground = Grid2D<int>(m.area, region.min.y);
  m.surface = Grid2D<int>(m.area, region.min.y);
  m.water = Mask(m.area);
  m.lava = Mask(m.area);

  for (int z = m.area.z0; z <= m.area.z1; ++z) {
    for (int x = m.area.x0; x <= m.area.x1; ++x) {
      bool water = false;
      bool lava = false;
      bool found = false;
      int water_top = region.min.y;
      int ground = region.min.y;
      bool top_seen = false;
      for (int y = region.max.y; y >= region.min.y; --y) {
        const BlockCategory c = world.category(world.at({x, y, z}));
        if (c == BlockCategory::solid) {
          ground = y;
          found = true;
          break;
        }
        if (!top_seen && c == BlockCategory::water) {
          water = true;
          water_top = y;
          top_seen = true;
        } else if (!top_seen && c == BlockCategory::lava) {
          lava = true;
          top_seen = true;
        }
      }
      if (!found) m.diagnostics.push_back({x, z});
      m.ground(x, z) = ground;
      m.surface(x, z) = water ? std::max(water_top, ground) : ground;
      m.water(x, z) = water;
      m.lava(x, z) = lava;
    }
  }
  return m;
}

TerrainMaps compute_terrain(const VoxelWorld& world) { return compute_terrain(world, world.bounds()); }

Mask dilate(const Mask& mask, int radius) {
  if (radius < 0) throw std::invalid_argument("dilation radius must be non-negative");
  if (radius == 0) return mask;
  const Rect2 a = mask.area();
  Mask rows(a);
  for (int z = a.z0; z <= a.z1; ++z) {
    for (int x = a.x0; x <= a.x1; ++x) {
      std::uint8_t v = 0;
      for (int dx = std::max(a.x0, x - radius); dx <= std::min(a.x1, x + radius) && !v; ++dx) {
        v = mask(dx, z);
      }
      rows(x, z) = v ? 1 : 0;
    }
  }
  Mask out(a);
  for (int z = a.z0; z <= a.z1; ++z) {
    for (int x = a.x0; x <= a.x1; ++x) {
      std::uint8_t v = 0;
      for (int dz = std::max(a.z0, z - radius); dz <= std::min(a.z1, z + radius) && !v; ++dz) {
        v = rows(x, dz);
      }
      out(x, z) = v ? 1 : 0;
    }
  }
  return out;
}

EdgeMap compute_edges(const TerrainMaps& maps, int radius) {
  if (radius < 0) throw std::invalid_argument("dilation radius must be non-negative");
  const Rect2 a = maps.area;
  Mask raw(a);
  for (int z = a.z0; z <= a.z1; ++z) {
    for (int x = a.x0; x <= a.x1; ++x) {
      const int h = maps.ground(x, z);
      if (x < a.x1 && std::abs(maps.ground(x + 1, z) - h) >= kEdgeStep) {
        raw(x, z) = 1;
        raw(x + 1, z) = 1;
      }
      if (z < a.z1 && std::abs(maps.ground(x, z + 1) - h) >= kEdgeStep) {
        raw(x, z) = 1;
        raw(x, z + 1) = 1;
      }
    }
  }
  return EdgeMap{dilate(raw, radius), radius};
}

std::vector<Region> buildable_regions(const EdgeMap& edges, const Mask& blocked) {
  if (!(edges.edges.area() == blocked.area())) {
    throw std::invalid_argument("edge map and blocked mask differ in shape");
  }
  const Rect2 a = edges.edges.area();
  Grid2D<int> label(a, -1);
  std::vector<Region> regions;
  std::deque<Cell2> queue;
  for (int z = a.z0; z <= a.z1; ++z) {
    for (int x = a.x0; x <= a.x1; ++x) {
      if (label(x, z) >= 0 || edges.edges(x, z) || blocked(x, z)) continue;
      const int id = static_cast<int>(regions.size());
      Region r;
      r.bounds = {x, z, x, z};
      label(x, z) = id;
      queue.push_back({x, z});
      while (!queue.empty()) {
        const Cell2 c = queue.front();
        queue.pop_front();
        r.cells.push_back(c);
        r.bounds = {std::min(r.bounds.x0, c.x), std::min(r.bounds.z0, c.z),
                    std::max(r.bounds.x1, c.x), std::max(r.bounds.z1, c.z)};
        constexpr int kDx[] = {1, -1, 0, 0};
        constexpr int kDz[] = {0, 0, 1, -1};
        for (int k = 0; k < 4; ++k) {
          const int nx = c.x + kDx[k];
          const int nz = c.z + kDz[k];
          if (!a.contains(nx, nz) || label(nx, nz) >= 0) continue;
          if (edges.edges(nx, nz) || blocked(nx, nz)) continue;
          label(nx, nz) = id;
          queue.push_back({nx, nz});
        }
      }
      std::sort(r.cells.begin(), r.cells.end(),
                [](Cell2 p, Cell2 q) { return std::tie(p.z, p.x) < std::tie(q.z, q.x); });
      regions.push_back(std::move(r));
    }
  }
  std::stable_sort(regions.begin(), regions.end(), [](const Region& p, const Region& q) {
    return p.cells.size() > q.cells.size();
  });
  return regions;
}

namespace {

template <typename Key>
void normalize(std::map<Key, double>& counts) {
  double total = 0.0;
  for (const auto& [k, v] : counts) total += v;
  if (total <= 0.0) return;
  for (auto& [k, v] : counts) v /= total;
}

std::string argmax(const std::map<std::string, double>& freq, const char* fallback) {
  std::string best = fallback;
  double best_v = -1.0;
  for (const auto& [k, v] : freq) {
    if (v > best_v) {
      best = k;
      best_v = v;
    }
  }
  return best;
}

}  // namespace

std::string SiteProfile::dominant_wood() const { return argmax(wood_freq, "oak"); }
std::string SiteProfile::dominant_stone() const { return argmax(stone_freq, "stone"); }

SiteProfile census(const VoxelWorld& world, const BoundingBox& region) {
  world.check_bounds(region);
  SiteProfile site;
  std::vector<std::uint64_t> counts(world.palette().size(), 0);
  for (int y = region.min.y; y <= region.max.y; ++y) {
    for (int z = region.min.z; z <= region.max.z; ++z) {
      for (int x = region.min.x; x <= region.max.x; ++x) ++counts[world.at({x, y, z}).palette_index];
    }
  }
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] == 0) continue;
    const BlockId id{static_cast<std::uint16_t>(i)};
    const BlockInfo& info = world.info(id);
    if (info.category == BlockCategory::air) continue;
    const auto n = static_cast<double>(counts[i]);
    site.block_freq[world.name(id)] += n;
    if (!info.wood_species.empty()) site.wood_freq[info.wood_species] += n;
    if (!info.stone_species.empty()) site.stone_freq[info.stone_species] += n;
  }
  normalize(site.block_freq);
  normalize(site.wood_freq);
  normalize(site.stone_freq);

  const TerrainMaps maps = compute_terrain(world, region);
  site.diagnostics = maps.diagnostics;
  const Rect2 a = maps.area;
  const auto columns = static_cast<double>(a.area());
  std::size_t water = 0;
  std::size_t fertile = 0;
  std::map<int, double> biomes;
  for (int z = a.z0; z <= a.z1; ++z) {
    for (int x = a.x0; x <= a.x1; ++x) {
      biomes[world.biome(x, z)] += 1.0;
      if (maps.water(x, z)) {
        ++water;
        continue;
      }
      const Coord top{x, maps.ground(x, z), z};
      if (world.category(world.at(top)) == BlockCategory::solid && world.info(world.at(top)).fertile) {
        ++fertile;
      }
    }
  }
  site.water_fraction = static_cast<double>(water) / columns;
  site.fertile_fraction = static_cast<double>(fertile) / columns;
  normalize(biomes);
  site.biome_freq = biomes;
  const auto& table = BiomeTable::standard();
  for (const auto& [id, f] : site.biome_freq) {
    site.avg_temperature += f * table.lookup(id).temperature;
    site.avg_rainfall += f * table.lookup(id).rainfall;
  }
  return site;
}

SiteProfile census(const VoxelWorld& world) { return census(world, world.bounds()); }

double flatness(const TerrainMaps& maps, const Rect2& rect) {
  if (!maps.area.contains(rect) || rect.empty()) {
    throw std::out_of_range("flatness rectangle outside terrain maps");
  }
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (int z = rect.z0; z <= rect.z1; ++z) {
    for (int x = rect.x0; x <= rect.x1; ++x) {
      lo = std::min(lo, maps.ground(x, z));
      hi = std::max(hi, maps.ground(x, z));
    }
  }
  return static_cast<double>(hi - lo);
}

}  // namespace settlegen
