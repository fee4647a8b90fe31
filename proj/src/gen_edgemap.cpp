#include "settlegen/gen_edgemap.hpp"

#include <algorithm>
#include <limits>

#include "settlegen/generation.hpp"
#include "settlegen/pathing.hpp"
#include "settlegen/rng.hpp"
#include "settlegen/stamping.hpp"
#include "settlegen/structures.hpp"

namespace settlegen {

namespace {

/// Counts cells outside one region over any rectangle in O(1).
class OutsideCount {
 public:
  OutsideCount(const Rect2& area, const Grid2D<int>& label, int id)
      : area_(area), w_(area.width() + 1), sum_(static_cast<std::size_t>(w_) * (area.depth() + 1), 0) {
    for (int z = 0; z < area.depth(); ++z) {
      for (int x = 0; x < area.width(); ++x) {
        const int out = label(area.x0 + x, area.z0 + z) != id ? 1 : 0;
        at(x + 1, z + 1) = out + at(x, z + 1) + at(x + 1, z) - at(x, z);
      }
    }
  }

  bool clear(const Rect2& r) const {
    if (!area_.contains(r)) return false;
    const int x0 = r.x0 - area_.x0;
    const int z0 = r.z0 - area_.z0;
    const int x1 = r.x1 - area_.x0 + 1;
    const int z1 = r.z1 - area_.z0 + 1;
    return at(x1, z1) - at(x0, z1) - at(x1, z0) + at(x0, z0) == 0;
  }

 private:
  int& at(int x, int z) { return sum_[static_cast<std::size_t>(z) * w_ + x]; }
  int at(int x, int z) const { return sum_[static_cast<std::size_t>(z) * w_ + x]; }

  Rect2 area_;
  int w_;
  std::vector<int> sum_;
};

}  // namespace

std::vector<Plot> find_plots(const EdgeMap& edges, const Mask& water, int min_size, int max_size,
                             int spacing, std::uint64_t seed, int max_plots) {
  if (min_size < 1 || min_size > max_size) throw std::invalid_argument("find_plots: bad size range");
  if (spacing < 0) throw std::invalid_argument("find_plots: negative spacing");
  const auto regions = buildable_regions(edges, water);
  const Rect2 area = edges.edges.area();
  Grid2D<int> label(area, -1);
  for (std::size_t r = 0; r < regions.size(); ++r) {
    for (const Cell2& c : regions[r].cells) label[c] = static_cast<int>(r);
  }

  const int min_gap = std::max(spacing, 1);
  std::vector<Plot> plots;
  const auto spaced = [&](const Rect2& r) {
    return std::all_of(plots.begin(), plots.end(),
                       [&](const Plot& p) { return rect_gap(p.rect, r) >= min_gap; });
  };

  Rng rng = Rng::derive(seed, "find_plots");
  for (std::size_t r = 0; r < regions.size(); ++r) {
    if (static_cast<int>(plots.size()) >= max_plots) break;
    const Region& region = regions[r];
    if (region.bounds.width() < min_size || region.bounds.depth() < min_size) continue;
    const OutsideCount outside(area, label, static_cast<int>(r));
    for (const Cell2& a : region.cells) {
      if (static_cast<int>(plots.size()) >= max_plots) break;
      const Rect2 smallest = Rect2::from_size(a.x, a.z, min_size, min_size);
      if (!outside.clear(smallest) || !spaced(smallest)) continue;
      const int tw = rng.uniform_int(min_size, max_size);
      const int td = rng.uniform_int(min_size, max_size);
      bool placed = false;
      for (int w = tw; w >= min_size && !placed; --w) {
        for (int d = td; d >= min_size && !placed; --d) {
          const Rect2 rect = Rect2::from_size(a.x, a.z, w, d);
          if (outside.clear(rect) && spaced(rect)) {
            plots.push_back({rect, static_cast<int>(r)});
            placed = true;
          }
        }
      }
    }
  }
  return plots;
}

EdgemapConfig EdgemapConfig::from(const Config& cfg) {
  EdgemapConfig c;
  c.plot_min = cfg.get_int("edgemap.plot_min", c.plot_min);
  c.plot_max = cfg.get_int("edgemap.plot_max", c.plot_max);
  c.spacing = cfg.get_int("edgemap.spacing", c.spacing);
  c.max_plots = cfg.get_int("edgemap.max_plots", c.max_plots);
  c.floors_min = cfg.get_int("edgemap.floors_min", c.floors_min);
  c.floors_max = cfg.get_int("edgemap.floors_max", c.floors_max);
  c.improved = cfg.get_bool("edgemap.improved", c.improved);
  if (c.plot_min < kMinHouseSide + 2 || c.plot_min > c.plot_max) {
    throw ConfigError("edgemap plot sizes must satisfy " + std::to_string(kMinHouseSide + 2) +
                      " <= plot_min <= plot_max");
  }
  if (c.floors_min < 1 || c.floors_min > c.floors_max) throw ConfigError("edgemap floors range invalid");
  if (c.spacing < 0 || c.max_plots < 1) throw ConfigError("edgemap spacing/max_plots invalid");
  return c;
}

SettlementPlan generate_edgemap(VoxelWorld& world, const TerrainMaps& maps, const Config& cfg,
                                std::uint64_t seed) {
  const EdgemapConfig ec = EdgemapConfig::from(cfg);
  const EdgeMap edges = compute_edges(maps, 1);
  const auto plots = find_plots(edges, maps.liquid(), ec.plot_min, ec.plot_max, ec.spacing, seed,
                                ec.max_plots);
  if (plots.empty()) throw GenerationError("edgemap: no buildable plot found");

  const MaterialPalette palette = MaterialPalette::from_species("oak", "stone");
  SettlementPlan plan;
  for (std::size_t i = 0; i < plots.size(); ++i) {
    const Rect2 fp{plots[i].rect.x0 + 1, plots[i].rect.z0 + 1, plots[i].rect.x1 - 1,
                   plots[i].rect.z1 - 1};
    Rng rng = Rng::derive(seed, "edgemap.plot", i);
    const int turns = rng.uniform_int(0, 3);
    const bool swap = turns % 2 == 1;
    StructureSpec spec;
    spec.kind = StructureKind::house_large;
    spec.width = {swap ? fp.depth() : fp.width(), swap ? fp.depth() : fp.width()};
    spec.depth = {swap ? fp.width() : fp.depth(), swap ? fp.width() : fp.depth()};
    spec.floors = {ec.floors_min, ec.floors_max};
    spec.exterior_lights = ec.improved;
    const StructureBlueprint bp = rotated(generate_house(spec, palette, rng.next()), turns);
    const int level = placement_level(maps, fp);
    try {
      plan.add(stamp(world, maps, bp, {fp.x0, level, fp.z0}, false, plan.placements));
    } catch (const PlacementError& e) {
      plan.notes.push_back("plot " + std::to_string(i) + ": " + e.what());
    }
  }
  if (plan.placements.empty()) throw GenerationError("edgemap: no building could be placed");

  if (ec.improved) {
    TraversalRules rules;
    rules.corner_mask = corner_mask(cliff_tops(maps));
    rules.blocked = occupancy_mask(maps.area, plan.placements);
    const RoadGrading grading = area_grading(maps.area);
    const RoadTiers tiers;
    for (std::size_t i = 1; i < plan.placements.size(); ++i) {
      const PlacementRecord& p = plan.placements[i];
      std::size_t nearest = 0;
      int best = std::numeric_limits<int>::max();
      for (std::size_t j = 0; j < i; ++j) {
        const int gap = rect_gap(p.footprint(), plan.placements[j].footprint());
        if (gap < best) {
          best = gap;
          nearest = j;
        }
      }
      const PathResult road = connect_placements(maps, rules, p, plan.placements[nearest]);
      if (!road) {
        plan.notes.push_back("placement " + std::to_string(p.order) + ": no road (" +
                             std::string(to_string(road.reason)) + ")");
        continue;
      }
      carve_road(world, *road.path, grading, tiers);
      plan.roads.push_back(*road.path);
    }
  }
  return plan;
}

}  // namespace settlegen
