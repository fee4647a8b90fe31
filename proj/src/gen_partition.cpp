#include "settlegen/gen_partition.hpp"

#include <cmath>

#include "settlegen/generation.hpp"
#include "settlegen/pathing.hpp"
#include "settlegen/rng.hpp"
#include "settlegen/stamping.hpp"
#include "settlegen/terrain.hpp"

namespace settlegen {

PartitionConfig PartitionConfig::from(const Config& cfg) {
  PartitionConfig c;
  c.min_yard = cfg.get_int("partition.min_yard", c.min_yard);
  c.max_yard = cfg.get_int("partition.max_yard", c.max_yard);
  c.farm_chance = cfg.get_double("partition.farm_chance", c.farm_chance);
  c.road_material = cfg.get_string("partition.road_material", c.road_material);
  try {
    c.season = parse_season(cfg.get_string("partition.season", "summer"));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (c.min_yard < 7 || c.max_yard < c.min_yard) {
    throw ConfigError("partition yards need 7 <= min_yard <= max_yard");
  }
  if (c.road_material.empty()) throw ConfigError("partition.road_material is empty");
  return c;
}

namespace {

Facing facing_towards(const Rect2& from, const Rect2& to) {
  const double dx = to.center_x() - from.center_x();
  const double dz = to.center_z() - from.center_z();
  if (std::abs(dx) > std::abs(dz)) return dx > 0 ? Facing::east : Facing::west;
  return dz > 0 ? Facing::south : Facing::north;
}

Rect2 rect_of(const BoundingBox& b) { return footprint_of(b); }

}  // namespace

SettlementPlan generate_partition(VoxelWorld& world, const Config& cfg, std::uint64_t seed,
                                  std::optional<Rect2> region) {
  const PartitionConfig pc = PartitionConfig::from(cfg);
  const Rect2 r = region.value_or(world.columns()).clipped(world.columns());
  if (r.empty()) throw GenerationError("partition: empty region");
  const BoundingBox box = column_box(world, r);

  const SiteProfile site = census(world, box);
  const FlattenResult flat = flatten(world, r);
  const TerrainMaps maps = compute_terrain(world, box);
  const PartitionNode tree = partition_yards(r, pc.min_yard, pc.max_yard, seed);
  const MaterialPalette palette = MaterialPalette::from_species("oak", "stone");

  SettlementPlan plan;
  plan.notes.push_back("flatten level " + std::to_string(flat.level) + ", " +
                       std::to_string(flat.changed) + " cells changed");
  const auto all_yards = yards(tree);
  for (std::size_t i = 0; i < all_yards.size(); ++i) {
    const PartitionNode& yard = *all_yards[i];
    const PartitionNode* inner = nullptr;
    for (const PartitionNode& c : yard.children) {
      if (c.tag == PartitionTag::house) inner = &c;
    }
    if (inner == nullptr) continue;
    const Rect2 hb = rect_of(inner->box);
    Rng rng = Rng::derive(seed, "partition.yard", i);
    StructureBlueprint bp;
    try {
      if (rng.chance(pc.farm_chance)) {
        StructureSpec spec;
        spec.kind = StructureKind::farm;
        spec.width = {hb.width(), hb.width()};
        spec.depth = {hb.depth(), hb.depth()};
        bp = generate_farm(site, pc.season, spec, rng.next());
      } else {
        const int height = rng.uniform_int(4, 6);
        bp = build_house_cga(hb.width(), height, hb.depth(), palette, rng.next(),
                             facing_towards(rect_of(yard.box), r));
      }
      plan.add(stamp(world, maps, bp, {hb.x0, flat.level, hb.z0}, false, plan.placements));
    } catch (const SpecError& e) {
      plan.notes.push_back("yard " + std::to_string(i) + ": " + e.what());
    } catch (const PlacementError& e) {
      plan.notes.push_back("yard " + std::to_string(i) + ": " + e.what());
    }
  }
  if (plan.placements.empty()) throw GenerationError("partition: no yard could be built");

  TraversalRules rules;
  rules.blocked = occupancy_mask(maps.area, plan.placements);
  const PathResult road = find_path(maps, rules, {r.x0, r.z0}, {r.x1, r.z1});
  if (road) {
    const std::string material = pc.road_material;
    carve_road(world, *road.path, area_grading(r), [material](double) { return material; });
    plan.roads.push_back(*road.path);
  } else {
    plan.notes.push_back(std::string("corner-to-corner road omitted (") +
                         std::string(to_string(road.reason)) + ")");
  }
  return plan;
}

}  // namespace settlegen
