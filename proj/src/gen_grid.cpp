#include "settlegen/gen_grid.hpp"

#include <algorithm>
#include <cmath>

#include "settlegen/generation.hpp"
#include "settlegen/partition.hpp"
#include "settlegen/pathing.hpp"
#include "settlegen/rng.hpp"
#include "settlegen/stamping.hpp"
#include "settlegen/structures.hpp"

namespace settlegen {

namespace {

void collect(const PlotTree& t, int i, PlotRole role, std::vector<Rect2>& out) {
  if (i < 0) return;
  const PlotNode& n = t.nodes[static_cast<std::size_t>(i)];
  if (n.role == role) {
    out.push_back(n.rect);
    return;
  }
  if (n.role != PlotRole::internal) return;
  if (role == PlotRole::road_strip && n.strip >= 0) out.push_back(t.nodes[n.strip].rect);
  collect(t, n.first, role, out);
  collect(t, n.second, role, out);
}

/// Lengths that bisect into leaves within [min, max].
std::vector<std::uint8_t> valid_lengths(int max_len, int min_plot, int max_plot, int strip) {
  std::vector<std::uint8_t> ok(static_cast<std::size_t>(std::max(max_len, 0)) + 1, 0);
  for (int len = min_plot; len <= max_len; ++len) {
    if (len <= max_plot) {
      ok[len] = 1;
      continue;
    }
    for (int a = min_plot; a <= len - strip - min_plot; ++a) {
      if (ok[a] && ok[len - strip - a]) {
        ok[len] = 1;
        break;
      }
    }
  }
  return ok;
}

class Bisector {
 public:
  Bisector(int min_plot, int max_plot, int strip, int max_len, std::uint64_t seed)
      : min_(min_plot), max_(max_plot), strip_(strip),
        ok_(valid_lengths(max_len, min_plot, max_plot, strip)),
        rng_(Rng::derive(seed, "bisect_plots")) {}

  int build(PlotTree& t, const Rect2& r) {
    const int idx = static_cast<int>(t.nodes.size());
    t.nodes.push_back({r, PlotRole::leaf_plot});
    const int w = r.width();
    const int d = r.depth();
    if (w < min_ || d < min_ || (w <= max_ && d <= max_)) return idx;
    const bool along_x = w >= d;
    const int len = along_x ? w : d;

    std::vector<int> choices;
    for (int a = min_; a <= len - strip_ - min_; ++a) {
      if (ok_[a] && ok_[len - strip_ - a]) choices.push_back(a);
    }
    if (choices.empty()) {
      for (int a = min_; a <= len - strip_ - min_; ++a) choices.push_back(a);
    }
    if (choices.empty()) return idx;
    const int a = choices[static_cast<std::size_t>(
        rng_.uniform_int(0, static_cast<int>(choices.size()) - 1))];

    Rect2 lo = r, strip = r, hi = r;
    if (along_x) {
      lo.x1 = r.x0 + a - 1;
      strip.x0 = r.x0 + a;
      strip.x1 = strip.x0 + strip_ - 1;
      hi.x0 = strip.x1 + 1;
    } else {
      lo.z1 = r.z0 + a - 1;
      strip.z0 = r.z0 + a;
      strip.z1 = strip.z0 + strip_ - 1;
      hi.z0 = strip.z1 + 1;
    }
    t.nodes[idx].role = PlotRole::internal;
    const int s = static_cast<int>(t.nodes.size());
    t.nodes.push_back({strip, PlotRole::road_strip});
    t.nodes[idx].strip = s;
    const int first = build(t, lo);
    t.nodes[idx].first = first;
    const int second = build(t, hi);
    t.nodes[idx].second = second;
    return idx;
  }

 private:
  int min_;
  int max_;
  int strip_;
  std::vector<std::uint8_t> ok_;
  Rng rng_;
};

bool edge_adjacent(const Rect2& a, const Rect2& b) {
  const bool x_overlap = a.x0 <= b.x1 && b.x0 <= a.x1;
  const bool z_overlap = a.z0 <= b.z1 && b.z0 <= a.z1;
  return (x_overlap && (b.z1 == a.z0 - 1 || b.z0 == a.z1 + 1)) ||
         (z_overlap && (b.x1 == a.x0 - 1 || b.x0 == a.x1 + 1));
}

}  // namespace

std::vector<Rect2> PlotTree::leaves() const {
  std::vector<Rect2> out;
  collect(*this, root, PlotRole::leaf_plot, out);
  return out;
}

std::vector<Rect2> PlotTree::strips() const {
  std::vector<Rect2> out;
  collect(*this, root, PlotRole::road_strip, out);
  return out;
}

PlotTree bisect_plots(const Rect2& region, int min_plot, int max_plot, int strip_width,
                      std::uint64_t seed) {
  if (min_plot < 5) throw std::invalid_argument("bisect_plots: min_plot must be at least 5");
  if (max_plot < min_plot) throw std::invalid_argument("bisect_plots: max_plot below min_plot");
  if (strip_width < 1) throw std::invalid_argument("bisect_plots: strip_width must be at least 1");
  if (region.empty()) throw std::invalid_argument("bisect_plots: empty region");
  PlotTree t;
  Bisector b(min_plot, max_plot, strip_width, std::max(region.width(), region.depth()), seed);
  t.root = b.build(t, region);
  return t;
}

std::string_view to_string(Builder b) {
  switch (b) {
    case Builder::house: return "house";
    case Builder::farm: return "farm";
    case Builder::plaza: return "plaza";
  }
  return "house";
}

std::vector<BuilderFitness> assign_builders(const PlotTree& tree, const SiteProfile& site,
                                            const BuilderWeights& wt) {
  const auto leaves = tree.leaves();
  const auto strips = tree.strips();
  std::vector<BuilderFitness> out(leaves.size());
  if (leaves.empty()) return out;

  double mx = 0.0, mz = 0.0;
  std::int64_t area_max = 1;
  for (const Rect2& l : leaves) {
    mx += l.center_x();
    mz += l.center_z();
    area_max = std::max(area_max, l.area());
  }
  mx /= static_cast<double>(leaves.size());
  mz /= static_cast<double>(leaves.size());
  std::vector<double> dist(leaves.size());
  double dmax = 0.0;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    dist[i] = std::hypot(leaves[i].center_x() - mx, leaves[i].center_z() - mz);
    dmax = std::max(dmax, dist[i]);
  }
  const double climate =
      site.fertile_fraction + site.water_fraction + wt.rainfall_weight * site.avg_rainfall;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const double c = dmax > 0.0 ? -dist[i] / dmax : 0.0;
    const bool road = std::any_of(strips.begin(), strips.end(),
                                  [&](const Rect2& s) { return edge_adjacent(leaves[i], s); });
    BuilderFitness& f = out[i];
    f.house = 1.0 + c + (road ? wt.road_bonus : 0.0);
    f.farm = -c * climate;
    f.plaza = f.house - wt.plaza_offset +
              wt.plaza_small_bonus *
                  (1.0 - static_cast<double>(leaves[i].area()) / static_cast<double>(area_max));
    f.choice = Builder::house;
    double best = f.house;
    if (f.farm > best) {
      best = f.farm;
      f.choice = Builder::farm;
    }
    if (f.plaza > best) f.choice = Builder::plaza;
  }
  return out;
}

GridConfig GridConfig::from(const Config& cfg) {
  GridConfig c;
  c.faithful = cfg.get_bool("grid.faithful", false);
  if (c.faithful) {
    c.min_plot = 6;
    c.max_plot = 12;
    c.strip_width = 1;
  }
  c.min_plot = cfg.get_int("grid.min_plot", c.min_plot);
  c.max_plot = cfg.get_int("grid.max_plot", c.max_plot);
  c.strip_width = cfg.get_int("grid.strip_width", c.strip_width);
  const std::string season = cfg.get_string("grid.season", "random");
  if (season != "random") {
    try {
      c.season = parse_season(season);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (c.min_plot < 5 || c.max_plot < c.min_plot || c.strip_width < 1) {
    throw ConfigError("grid needs 5 <= min_plot <= max_plot and strip_width >= 1");
  }
  return c;
}

namespace {

bool strip_on_side(const Rect2& leaf, const std::vector<Rect2>& strips, Facing side) {
  for (const Rect2& s : strips) {
    const bool x_overlap = leaf.x0 <= s.x1 && s.x0 <= leaf.x1;
    const bool z_overlap = leaf.z0 <= s.z1 && s.z0 <= leaf.z1;
    switch (side) {
      case Facing::north: if (x_overlap && s.z1 == leaf.z0 - 1) return true; break;
      case Facing::south: if (x_overlap && s.z0 == leaf.z1 + 1) return true; break;
      case Facing::west: if (z_overlap && s.x1 == leaf.x0 - 1) return true; break;
      case Facing::east: if (z_overlap && s.x0 == leaf.x1 + 1) return true; break;
    }
  }
  return false;
}

Rect2 centred(const Rect2& inner, int w, int d) {
  const int x0 = inner.x0 + (inner.width() - w) / 2;
  const int z0 = inner.z0 + (inner.depth() - d) / 2;
  return Rect2::from_size(x0, z0, w, d);
}

void clear_above_surface(VoxelWorld& world, const TerrainMaps& maps, const Rect2& r) {
  const BlockId air = world.intern(kAir);
  const Rect2 c = r.clipped(maps.area);
  for (int z = c.z0; z <= c.z1; ++z) {
    for (int x = c.x0; x <= c.x1; ++x) {
      for (int y = std::max(maps.surface(x, z) + 1, 0); y < world.size_y(); ++y) {
        if (world.at({x, y, z}) != air) world.put({x, y, z}, air);
      }
    }
  }
}

}  // namespace

SettlementPlan generate_grid(VoxelWorld& world, const TerrainMaps& maps, const SiteProfile& site,
                             const Config& cfg, std::uint64_t seed) {
  const GridConfig gc = GridConfig::from(cfg);
  const PlotTree tree = bisect_plots(maps.area, gc.min_plot, gc.max_plot, gc.strip_width, seed);
  const auto leaves = tree.leaves();
  const auto strips = tree.strips();
  if (leaves.empty()) throw GenerationError("grid: no plots");
  const auto fitness = assign_builders(tree, site);
  const MaterialPalette palette = site_palette(site);
  Season season = Season::summer;
  if (gc.season) {
    season = *gc.season;
  } else {
    Rng srng = Rng::derive(seed, "grid.season");
    season = static_cast<Season>(srng.uniform_int(0, 3));
  }
  const Mask liquid = maps.liquid();

  SettlementPlan plan;
  plan.notes.push_back("season " + std::string(to_string(season)));
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const Rect2& leaf = leaves[i];
    clear_above_surface(world, maps, leaf.expanded(1));
    bool wet = false;
    for (int z = leaf.z0; z <= leaf.z1 && !wet; ++z) {
      for (int x = leaf.x0; x <= leaf.x1 && !wet; ++x) wet = liquid(x, z) != 0;
    }
    if (wet) {
      plan.notes.push_back("plot " + std::to_string(i) + ": liquid on site");
      continue;
    }
    const Rect2 inner{leaf.x0 + 1, leaf.z0 + 1, leaf.x1 - 1, leaf.z1 - 1};
    Rng rng = Rng::derive(seed, "grid.plot", i);
    StructureBlueprint bp;
    Rect2 fp;
    try {
      switch (fitness[i].choice) {
        case Builder::house: {
          Facing side = Facing::north;
          for (Facing f : {Facing::north, Facing::south, Facing::west, Facing::east}) {
            if (strip_on_side(leaf, strips, f)) {
              side = f;
              break;
            }
          }
          const int w = std::min(inner.width(), 11);
          const int d = std::min(inner.depth(), 11);
          fp = centred(inner, w, d);
          if (side == Facing::north) fp = Rect2::from_size(fp.x0, inner.z0, w, d);
          if (side == Facing::south) fp = Rect2::from_size(fp.x0, inner.z1 - d + 1, w, d);
          if (side == Facing::west) fp = Rect2::from_size(inner.x0, fp.z0, w, d);
          if (side == Facing::east) fp = Rect2::from_size(inner.x1 - w + 1, fp.z0, w, d);
          const int turns = quarter_turns(side);
          StructureSpec spec;
          spec.kind = rng.chance(0.3) ? StructureKind::house_large : StructureKind::house;
          const int floors = spec.kind == StructureKind::house_large ? 2 : 1;
          spec.floors = {floors, floors};
          const int cw = turns % 2 == 0 ? w : d;
          const int cd = turns % 2 == 0 ? d : w;
          spec.width = {cw, cw};
          spec.depth = {cd, cd};
          bp = rotated(generate_house(spec, palette, rng.next()), turns);
          break;
        }
        case Builder::farm: {
          fp = inner;
          StructureSpec spec;
          spec.kind = StructureKind::farm;
          spec.width = {fp.width(), fp.width()};
          spec.depth = {fp.depth(), fp.depth()};
          bp = generate_farm(site, season, spec, rng.next());
          break;
        }
        case Builder::plaza: {
          fp = centred(inner, std::min(inner.width(), 13), std::min(inner.depth(), 13));
          StructureSpec spec;
          spec.kind = StructureKind::plaza;
          spec.width = {fp.width(), fp.width()};
          spec.depth = {fp.depth(), fp.depth()};
          bp = generate_plaza(spec, palette, rng.next());
          break;
        }
      }
      const int level = placement_level(maps, fp);
      PlacementRecord rec = stamp(world, maps, bp, {fp.x0, level, fp.z0}, true, plan.placements);
      plan.add(std::move(rec));
    } catch (const SpecError& e) {
      plan.notes.push_back("plot " + std::to_string(i) + ": " + e.what());
    } catch (const PlacementError& e) {
      plan.notes.push_back("plot " + std::to_string(i) + ": " + e.what());
    }
  }
  if (plan.placements.empty()) throw GenerationError("grid: no plot could be built");

  TraversalRules rules;
  rules.blocked = occupancy_mask(maps.area, plan.placements);
  const RoadGrading grading = area_grading(maps.area);
  const RoadTiers tiers;
  for (const Rect2& s : strips) {
    const bool vertical = s.depth() >= s.width();
    const int lanes = vertical ? s.width() : s.depth();
    const int length = vertical ? s.depth() : s.width();
    for (int lane = 0; lane < lanes; ++lane) {
      Path seg;
      const auto flush = [&] {
        if (seg.cells.size() >= 2) {
          carve_road(world, seg, grading, tiers);
          plan.roads.push_back(seg);
        }
        seg = Path{};
      };
      for (int k = 0; k < length; ++k) {
        const Cell2 c = vertical ? Cell2{s.x0 + lane, s.z0 + k} : Cell2{s.x0 + k, s.z0 + lane};
        if (!rules.passable(maps, c)) {
          flush();
          continue;
        }
        const int h = maps.surface[c];
        if (!seg.cells.empty() && !rules.step_ok(seg.cells.back().y, h)) flush();
        if (!seg.cells.empty()) seg.cost += step_cost(seg.cells.back().y, h);
        seg.cells.push_back({c.x, c.z, h});
      }
      flush();
    }
  }
  return plan;
}

}  // namespace settlegen
