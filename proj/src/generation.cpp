#include "settlegen/generation.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace settlegen {

MaterialPalette site_palette(const SiteProfile& site) {
  return MaterialPalette::from_species(site.dominant_wood(), site.dominant_stone());
}

BoundingBox column_box(const VoxelWorld& world, const Rect2& c) {
  return {{c.x0, 0, c.z0}, {c.x1, world.size_y() - 1, c.z1}};
}

Mask occupancy_mask(const Rect2& area, const std::vector<PlacementRecord>& placements) {
  Mask m(area, 0);
  for (const PlacementRecord& p : placements) {
    const Rect2 r = p.footprint().clipped(area);
    for (int z = r.z0; z <= r.z1; ++z) {
      for (int x = r.x0; x <= r.x1; ++x) m(x, z) = 1;
    }
  }
  return m;
}

RoadGrading area_grading(const Rect2& area) {
  const double hx = area.width() / 2.0;
  const double hz = area.depth() / 2.0;
  return {area.center_x(), area.center_z(), std::max(1.0, std::sqrt(hx * hx + hz * hz))};
}

std::vector<Cell2> access_cells(const PlacementRecord& p, const TerrainMaps& maps) {
  std::vector<Cell2> out;
  if (!p.doors.empty()) {
    for (const Coord& d : p.doors) {
      const Cell2 f = door_front(p.box, d);
      if (maps.contains(f)) out.push_back(f);
    }
  } else {
    const Rect2 fp = p.footprint();
    const Rect2 ring = fp.expanded(1);
    for (int z = ring.z0; z <= ring.z1; ++z) {
      for (int x = ring.x0; x <= ring.x1; ++x) {
        const bool corner = (x == ring.x0 || x == ring.x1) && (z == ring.z0 || z == ring.z1);
        if (fp.contains(x, z) || corner || !maps.contains(x, z)) continue;
        out.push_back({x, z});
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PathResult connect_placements(const TerrainMaps& maps, const TraversalRules& rules,
                              const PlacementRecord& a, const PlacementRecord& b, int attempts) {
  std::vector<std::tuple<int, Cell2, Cell2>> pairs;
  for (const Cell2& s : access_cells(a, maps)) {
    if (!rules.passable(maps, s)) continue;
    for (const Cell2& g : access_cells(b, maps)) {
      if (!rules.passable(maps, g)) continue;
      pairs.emplace_back(manhattan(s, g), s, g);
    }
  }
  if (pairs.empty()) return {std::nullopt, NoPathReason::start_impassable};
  std::sort(pairs.begin(), pairs.end());
  PathResult last{std::nullopt, NoPathReason::disconnected};
  const int n = std::min<int>(attempts, static_cast<int>(pairs.size()));
  for (int i = 0; i < n; ++i) {
    last = find_path(maps, rules, std::get<1>(pairs[i]), std::get<2>(pairs[i]));
    if (last) return last;
  }
  return last;
}

}  // namespace settlegen
