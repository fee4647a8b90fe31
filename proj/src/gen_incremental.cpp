#include "settlegen/gen_incremental.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>

#include "settlegen/generation.hpp"
#include "settlegen/parallel.hpp"
#include "settlegen/pathing.hpp"
#include "settlegen/rng.hpp"
#include "settlegen/stamping.hpp"

namespace settlegen {

StructureSpec default_spec(StructureKind kind) {
  StructureSpec s;
  s.kind = kind;
  switch (kind) {
    case StructureKind::house:
      s.width = {5, 7};
      s.depth = {5, 7};
      break;
    case StructureKind::house_large:
      s.width = {7, 9};
      s.depth = {7, 9};
      s.floors = {2, 2};
      break;
    case StructureKind::plaza:
      s.width = {7, 9};
      s.depth = {7, 9};
      break;
    case StructureKind::farm:
      s.width = {7, 11};
      s.depth = {7, 9};
      break;
    case StructureKind::fountain:
      s.width = {5, 5};
      s.depth = {5, 5};
      break;
    case StructureKind::fence:
      s.width = {5, 7};
      s.depth = {5, 7};
      break;
  }
  return s;
}

std::vector<StructureSpec> default_build_queue(int length) {
  static constexpr std::array kCycle = {StructureKind::house, StructureKind::house_large,
                                        StructureKind::plaza, StructureKind::farm};
  std::vector<StructureSpec> q;
  for (int i = 0; i < length; ++i) q.push_back(default_spec(kCycle[i % kCycle.size()]));
  return q;
}

IncrementalConfig IncrementalConfig::from(const Config& cfg) {
  IncrementalConfig c;
  c.samples = cfg.get_int("incremental.samples", c.samples);
  if (c.samples < 1) throw ConfigError("incremental.samples must be at least 1");
  c.w_elevation = cfg.get_double("incremental.w_elevation", c.w_elevation);
  c.w_layout = cfg.get_double("incremental.w_layout", c.w_layout);
  c.w_distance = cfg.get_double("incremental.w_distance", c.w_distance);
  c.d_pref = cfg.get_double("incremental.d_pref", c.d_pref);
  c.d_min = cfg.get_double("incremental.d_min", c.d_min);
  c.layout_radius = cfg.get_double("incremental.layout_radius", c.layout_radius);
  try {
    c.season = parse_season(cfg.get_string("incremental.season", "summer"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (cfg.has("incremental.queue")) {
    std::stringstream ss(cfg.get_string("incremental.queue", ""));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        c.queue.push_back(default_spec(parse_structure_kind(item)));
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  } else {
    c.queue = default_build_queue(cfg.get_int("incremental.queue_length", 16));
  }
  if (c.queue.empty()) throw ConfigError("incremental build queue is empty");
  return c;
}

namespace {

double centre_distance(const Rect2& a, const Rect2& b) {
  return std::hypot(a.center_x() - b.center_x(), a.center_z() - b.center_z());
}

}  // namespace

double layout_score(StructureKind kind, const Rect2& fp, const SettlementPlan& plan,
                    double radius) {
  double score = 0.0;
  for (const PlacementRecord& p : plan.placements) {
    const Rect2 other = p.footprint();
    const bool near = centre_distance(fp, other) <= radius;
    if (kind == StructureKind::plaza || kind == StructureKind::fountain) {
      if (near && is_house(p.kind)) score += 1.0;
    } else if (kind == StructureKind::farm) {
      if (rect_gap(fp, other) > radius) continue;
      score += (fp.x0 == other.x0) + (fp.x1 == other.x1) + (fp.z0 == other.z0) +
               (fp.z1 == other.z1);
    } else if (is_house(kind)) {
      if (near && (p.kind == StructureKind::plaza || p.kind == StructureKind::fountain)) {
        score = 0.5;
      }
    }
  }
  return score;
}

namespace {

struct Candidate {
  int x = 0;
  int z = 0;
  int rotation = 0;
  bool feasible = false;
  int level = 0;
  double elevation_raw = 0.0;
  double layout_raw = 0.0;
  double distance_raw = 0.0;
};

struct Extent {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  double norm(double v) const { return hi > lo ? (v - lo) / (hi - lo) : 0.0; }
};

StructureBlueprint blueprint_for(const StructureSpec& spec, const MaterialPalette& palette,
                                 const SiteProfile& site, Season season, std::uint64_t seed) {
  switch (spec.kind) {
    case StructureKind::house:
    case StructureKind::house_large:
      return generate_house(spec, palette, seed);
    case StructureKind::farm:
      return generate_farm(site, season, spec, seed);
    case StructureKind::plaza:
    case StructureKind::fountain:
      return generate_plaza(spec, palette, seed);
    case StructureKind::fence:
      return generate_fence(spec, palette, seed);
  }
  return generate_house(spec, palette, seed);
}

class Scorer {
 public:
  Scorer(const VoxelWorld& world, const TerrainMaps& maps, const Mask& liquid, const Mask& forbid,
         const Mask& footprints, const SettlementPlan& plan, const IncrementalConfig& ic)
      : world_(world), maps_(maps), liquid_(liquid), forbid_(forbid), footprints_(footprints),
        plan_(plan), ic_(ic) {}

  void evaluate(const StructureBlueprint& bp, Candidate& c) const {
    const Rect2 fp = Rect2::from_size(c.x, c.z, bp.size_x, bp.size_z);
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (int z = fp.z0; z <= fp.z1; ++z) {
      for (int x = fp.x0; x <= fp.x1; ++x) {
        if (liquid_(x, z) || forbid_(x, z)) return;
        const int g = maps_.ground(x, z);
        lo = std::min(lo, g);
        hi = std::max(hi, g);
      }
    }
    if (hi - lo > kMaxFoundationDepth) return;
    if (hi + bp.size_y - 1 >= world_.size_y() || hi < 0) return;

    int elo = lo;
    int ehi = hi;
    const auto widen = [&](int x, int z) {
      if (!maps_.contains(x, z)) return;
      const int g = maps_.ground(x, z);
      elo = std::min(elo, g);
      ehi = std::max(ehi, g);
    };
    const Rect2 ring = fp.expanded(1).clipped(maps_.area);
    for (int z = ring.z0; z <= ring.z1; ++z) {
      for (int x = ring.x0; x <= ring.x1; ++x) widen(x, z);
    }
    for (const Coord& d : bp.door_cells) {
      const Coord out = door_outward(bp.footprint, d);
      const int fx = c.x + d.x + out.x;
      const int fz = c.z + d.z + out.z;
      if (!maps_.contains(fx, fz) || liquid_(fx, fz) || footprints_(fx, fz)) return;
      if (std::abs(maps_.ground(fx, fz) - hi) > 1) return;
      // Apron: the whole door face, two cells deep.
      for (int k = 1; k <= 2; ++k) {
        if (out.z != 0) {
          const int z = (out.z < 0 ? fp.z0 : fp.z1) + out.z * k;
          for (int x = fp.x0; x <= fp.x1; ++x) widen(x, z);
        } else {
          const int x = (out.x < 0 ? fp.x0 : fp.x1) + out.x * k;
          for (int z = fp.z0; z <= fp.z1; ++z) widen(x, z);
        }
      }
    }

    c.feasible = true;
    c.level = hi;
    c.elevation_raw = ehi - elo;
    c.layout_raw = layout_score(bp.kind, fp, plan_, ic_.layout_radius);
    if (!plan_.placements.empty()) {
      int gap = std::numeric_limits<int>::max();
      for (const PlacementRecord& p : plan_.placements) gap = std::min(gap, rect_gap(fp, p.footprint()));
      if (gap > ic_.d_pref) {
        c.distance_raw = gap - ic_.d_pref;
      } else if (gap < ic_.d_min) {
        c.distance_raw = 10.0 * (ic_.d_min - gap);
      }
    }
  }

 private:
  const VoxelWorld& world_;
  const TerrainMaps& maps_;
  const Mask& liquid_;
  const Mask& forbid_;
  const Mask& footprints_;
  const SettlementPlan& plan_;
  const IncrementalConfig& ic_;
};

void mark(Mask& m, const Rect2& r) {
  const Rect2 c = r.clipped(m.area());
  for (int z = c.z0; z <= c.z1; ++z) {
    for (int x = c.x0; x <= c.x1; ++x) m(x, z) = 1;
  }
}

}  // namespace

SettlementPlan generate_incremental(VoxelWorld& world, const TerrainMaps& maps,
                                    const SiteProfile& site, const Config& cfg,
                                    std::uint64_t seed) {
  const IncrementalConfig ic = IncrementalConfig::from(cfg);
  const Rect2 area = maps.area;
  const MaterialPalette palette = site_palette(site);
  const Mask liquid = maps.liquid();
  Mask forbid(area, 0);
  Mask footprints(area, 0);
  TraversalRules rules;
  rules.corner_mask = corner_mask(cliff_tops(maps));
  const RoadGrading grading = area_grading(area);
  const RoadTiers tiers;

  SettlementPlan plan;
  for (std::size_t k = 0; k < ic.queue.size(); ++k) {
    const StructureSpec& spec = ic.queue[k];
    const auto bp_seed = Rng::derive(seed, "incremental.blueprint", k).next();
    const StructureBlueprint base = blueprint_for(spec, palette, site, ic.season, bp_seed);
    std::array<StructureBlueprint, 4> variants;
    for (int r = 0; r < 4; ++r) variants[r] = rotated(base, r);

    Rng rng = Rng::derive(seed, "incremental.sample", k);
    std::vector<Candidate> cands(static_cast<std::size_t>(ic.samples));
    for (Candidate& c : cands) {
      c.rotation = rng.uniform_int(0, 3);
      const auto& bp = variants[c.rotation];
      if (bp.size_x > area.width() || bp.size_z > area.depth()) {
        c.rotation = -1;
        continue;
      }
      c.x = rng.uniform_int(area.x0, area.x1 - bp.size_x + 1);
      c.z = rng.uniform_int(area.z0, area.z1 - bp.size_z + 1);
    }

    const Scorer scorer(world, maps, liquid, forbid, footprints, plan, ic);
    parallel_for(cands.size(), [&](std::size_t i) {
      if (cands[i].rotation >= 0) scorer.evaluate(variants[cands[i].rotation], cands[i]);
    });

    Extent e_ext, l_ext, d_ext;
    for (const Candidate& c : cands) {
      if (!c.feasible) continue;
      e_ext.add(c.elevation_raw);
      l_ext.add(c.layout_raw);
      d_ext.add(c.distance_raw);
    }
    const Candidate* best = nullptr;
    CandidateScore best_score;
    for (const Candidate& c : cands) {
      if (!c.feasible) continue;
      CandidateScore s;
      s.position = {c.x, c.z};
      s.rotation = c.rotation;
      s.elevation_term = 1.0 - e_ext.norm(c.elevation_raw);
      s.layout_term = l_ext.norm(c.layout_raw);
      s.distance_term = 1.0 - d_ext.norm(c.distance_raw);
      s.total = ic.w_elevation * s.elevation_term + ic.w_layout * s.layout_term +
                ic.w_distance * s.distance_term;
      const bool better =
          best == nullptr || s.total > best_score.total ||
          (s.total == best_score.total &&
           std::tie(c.x, c.z, c.rotation) < std::tie(best->x, best->z, best->rotation));
      if (better) {
        best = &c;
        best_score = s;
      }
    }
    if (best == nullptr) {
      plan.notes.push_back("spec " + std::to_string(k) + " (" + std::string(to_string(spec.kind)) +
                           "): no feasible position");
      continue;
    }

    const StructureBlueprint& bp = variants[best->rotation];
    PlacementRecord rec;
    try {
      rec = stamp(world, maps, bp, {best->x, best->level, best->z}, true, plan.placements);
    } catch (const PlacementError& e) {
      plan.notes.push_back("spec " + std::to_string(k) + ": " + e.what());
      continue;
    }
    const PlacementRecord& placed = plan.add(std::move(rec));
    mark(forbid, placed.footprint().expanded(1));
    mark(footprints, placed.footprint());

    if (plan.placements.size() < 2) continue;
    const PlacementRecord* nearest = nullptr;
    int nearest_gap = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i + 1 < plan.placements.size(); ++i) {
      const int gap = rect_gap(placed.footprint(), plan.placements[i].footprint());
      if (gap < nearest_gap) {
        nearest_gap = gap;
        nearest = &plan.placements[i];
      }
    }
    rules.blocked = footprints;
    const PathResult road = connect_placements(maps, rules, placed, *nearest);
    if (!road) {
      plan.notes.push_back("placement " + std::to_string(placed.order) + ": no road (" +
                           std::string(to_string(road.reason)) + ")");
      continue;
    }
    carve_road(world, *road.path, grading, tiers);
    for (const PathCell& c : road.path->cells) forbid(c.x, c.z) = 1;
    plan.roads.push_back(*road.path);
  }

  if (plan.placements.empty()) throw GenerationError("incremental: no structure could be placed");
  return plan;
}

}  // namespace settlegen
