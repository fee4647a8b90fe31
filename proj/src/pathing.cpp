#include "settlegen/pathing.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <queue>
#include <tuple>

namespace settlegen {

std::string_view to_string(NoPathReason r) {
  switch (r) {
    case NoPathReason::none: return "none";
    case NoPathReason::out_of_bounds: return "out_of_bounds";
    case NoPathReason::start_impassable: return "start_impassable";
    case NoPathReason::goal_impassable: return "goal_impassable";
    case NoPathReason::disconnected: return "disconnected";
  }
  return "none";
}

bool TraversalRules::passable(const TerrainMaps& maps, Cell2 c) const {
  if (!maps.contains(c)) return false;
  if (forbid_water && maps.water[c]) return false;
  if (forbid_lava && maps.lava[c]) return false;
  if (corner_mask && corner_mask->contains(c) && (*corner_mask)[c]) return false;
  if (blocked && blocked->contains(c) && (*blocked)[c]) return false;
  return true;
}

PathResult find_path(const TerrainMaps& maps, const TraversalRules& rules, Cell2 start, Cell2 goal) {
  PathResult result;
  if (!maps.contains(start) || !maps.contains(goal)) {
    result.reason = NoPathReason::out_of_bounds;
    return result;
  }
  if (!rules.passable(maps, start)) {
    result.reason = NoPathReason::start_impassable;
    return result;
  }
  if (!rules.passable(maps, goal)) {
    result.reason = NoPathReason::goal_impassable;
    return result;
  }

  const Rect2 a = maps.area;
  const std::size_t n = static_cast<std::size_t>(a.area());
  std::vector<int> g(n, INT_MAX);
  std::vector<std::int64_t> parent(n, -1);
  std::vector<std::uint8_t> closed(n, 0);

  // (f, h, x, z) ascending.
  using Entry = std::tuple<int, int, int, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  const auto heuristic = [&](int x, int z) { return std::abs(x - goal.x) + std::abs(z - goal.z); };

  const std::size_t si = maps.surface.index(start.x, start.z);
  g[si] = 0;
  open.emplace(heuristic(start.x, start.z), heuristic(start.x, start.z), start.x, start.z);

  constexpr int kDx[] = {1, -1, 0, 0};
  constexpr int kDz[] = {0, 0, 1, -1};
  bool reached = false;
  while (!open.empty()) {
    const auto [f, h, x, z] = open.top();
    open.pop();
    const std::size_t ci = maps.surface.index(x, z);
    if (closed[ci]) continue;
    closed[ci] = 1;
    if (x == goal.x && z == goal.z) {
      reached = true;
      break;
    }
    const int ch = maps.surface(x, z);
    for (int k = 0; k < 4; ++k) {
      const Cell2 nb{x + kDx[k], z + kDz[k]};
      if (!rules.passable(maps, nb)) continue;
      const std::size_t ni = maps.surface.index(nb.x, nb.z);
      if (closed[ni]) continue;
      const int nh = maps.surface[nb];
      if (!rules.step_ok(ch, nh)) continue;
      const int ng = g[ci] + step_cost(ch, nh);
      if (ng < g[ni]) {
        g[ni] = ng;
        parent[ni] = static_cast<std::int64_t>(ci);
        const int hh = heuristic(nb.x, nb.z);
        open.emplace(ng + hh, hh, nb.x, nb.z);
      }
    }
  }
  if (!reached) {
    result.reason = NoPathReason::disconnected;
    return result;
  }

  Path path;
  for (std::int64_t i = static_cast<std::int64_t>(maps.surface.index(goal.x, goal.z)); i >= 0;
       i = parent[static_cast<std::size_t>(i)]) {
    const Cell2 c = maps.surface.cell(static_cast<std::size_t>(i));
    path.cells.push_back({c.x, c.z, maps.surface[c]});
  }
  std::reverse(path.cells.begin(), path.cells.end());
  path.cost = g[maps.surface.index(goal.x, goal.z)];
  result.path = std::move(path);
  return result;
}

EdgeMap cliff_tops(const TerrainMaps& maps) {
  const Rect2 a = maps.area;
  Mask out(a);
  constexpr int kDx[] = {1, -1, 0, 0};
  constexpr int kDz[] = {0, 0, 1, -1};
  for (int z = a.z0; z <= a.z1; ++z) {
    for (int x = a.x0; x <= a.x1; ++x) {
      const int h = maps.ground(x, z);
      for (int k = 0; k < 4; ++k) {
        const int nx = x + kDx[k];
        const int nz = z + kDz[k];
        if (a.contains(nx, nz) && h - maps.ground(nx, nz) >= kEdgeStep) {
          out(x, z) = 1;
          break;
        }
      }
    }
  }
  return EdgeMap{std::move(out), 0};
}

Mask corner_mask(const EdgeMap& edges) {
  const Mask& e = edges.edges;
  const Rect2 a = e.area();
  Mask raw(a);
  const auto edge = [&](int x, int z) { return a.contains(x, z) && e(x, z) != 0; };
  for (int z = a.z0; z <= a.z1; ++z) {
    for (int x = a.x0; x <= a.x1; ++x) {
      const bool along_x = edge(x - 1, z) || edge(x + 1, z);
      const bool along_z = edge(x, z - 1) || edge(x, z + 1);
      raw(x, z) = along_x && along_z;
    }
  }
  return dilate(raw, 1);
}

double RoadGrading::normalized(int x, int z) const {
  if (radius <= 0.0) return 0.0;
  const double d = std::hypot(x - center_x, z - center_z) / radius;
  return std::min(1.0, d);
}

void carve_road(VoxelWorld& world, const Path& path, const RoadGrading& grading,
                const RoadMaterialFn& material) {
  for (const auto& c : path.cells) {
    const Coord at{c.x, c.y, c.z};
    world.check_bounds(at);
    world.set_block(at, material(grading.normalized(c.x, c.z)));
    for (int y = c.y + 1; y < world.size_y(); ++y) {
      const Coord above{c.x, y, c.z};
      if (world.category(world.at(above)) == BlockCategory::vegetation) {
        world.set_block(above, kAir);
      }
    }
  }
}

}  // namespace settlegen
