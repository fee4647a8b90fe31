#include "settlegen/plan.hpp"

#include <algorithm>
#include <tuple>
#include <json.hpp>

namespace settlegen {

using nlohmann::json;

PlacementRecord& SettlementPlan::add(PlacementRecord r) {
  r.order = static_cast<int>(placements.size());
  placements.push_back(std::move(r));
  return placements.back();
}

std::size_t SettlementPlan::road_cell_count() const {
  std::size_t n = 0;
  for (const Path& p : roads) n += p.cells.size();
  return n;
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::overlap: return "overlap";
    case ViolationKind::door_into_water: return "door_into_water";
    case ViolationKind::road_rule: return "road_rule";
    case ViolationKind::out_of_bounds: return "out_of_bounds";
    case ViolationKind::order: return "order";
  }
  return "overlap";
}

Cell2 door_front(const BoundingBox& box, Coord door) {
  if (door.z == box.min.z) return {door.x, door.z - 1};
  if (door.z == box.max.z) return {door.x, door.z + 1};
  if (door.x == box.min.x) return {door.x - 1, door.z};
  if (door.x == box.max.x) return {door.x + 1, door.z};
  throw std::invalid_argument("door is not on the placement boundary");
}

std::vector<Violation> validate(const SettlementPlan& plan, const VoxelWorld& world,
                                const TerrainMaps& maps, const TraversalRules& rules) {
  std::vector<Violation> out;
  const auto add = [&](ViolationKind k, std::string msg) { out.push_back({k, std::move(msg)}); };
  const auto& ps = plan.placements;

  for (const PlacementRecord& p : ps) {
    if (!world.bounds().contains(p.box)) {
      add(ViolationKind::out_of_bounds, "placement " + std::to_string(p.order) + " outside world");
    }
  }
  for (std::size_t i = 0; i < ps.size(); ++i) {
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[i].box.intersects(ps[j].box)) {
        const int a = std::min(ps[i].order, ps[j].order);
        const int b = std::max(ps[i].order, ps[j].order);
        add(ViolationKind::overlap,
            "placements " + std::to_string(a) + " and " + std::to_string(b) + " overlap");
      }
    }
  }

  const auto liquid_block = [&](Coord c) {
    if (!world.contains(c)) return false;
    const auto cat = world.category_at(c);
    return cat == BlockCategory::water || cat == BlockCategory::lava;
  };
  for (const PlacementRecord& p : ps) {
    for (const Coord& d : p.doors) {
      Cell2 f;
      try {
        f = door_front(p.box, d);
      } catch (const std::invalid_argument&) {
        add(ViolationKind::door_into_water,
            "placement " + std::to_string(p.order) + " has a door off its boundary");
        continue;
      }
      const bool in_maps = maps.contains(f);
      const bool wet = (in_maps && (maps.water[f] || maps.lava[f])) ||
                       liquid_block({f.x, d.y, f.z}) || liquid_block({f.x, d.y - 1, f.z});
      if (wet) {
        add(ViolationKind::door_into_water,
            "placement " + std::to_string(p.order) + " door at " + std::to_string(d.x) + "," +
                std::to_string(d.y) + "," + std::to_string(d.z) + " opens onto liquid");
      }
    }
  }

  for (std::size_t r = 0; r < plan.roads.size(); ++r) {
    const auto& cells = plan.roads[r].cells;
    const std::string tag = "road " + std::to_string(r);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const Cell2 c = cells[i].cell();
      if (!maps.contains(c)) {
        add(ViolationKind::road_rule, tag + " leaves the terrain");
        break;
      }
      if ((rules.forbid_water && maps.water[c]) || (rules.forbid_lava && maps.lava[c])) {
        add(ViolationKind::road_rule, tag + " crosses liquid");
        break;
      }
      const bool occupied = std::any_of(ps.begin(), ps.end(), [&](const PlacementRecord& p) {
        return p.footprint().contains(c);
      });
      if (occupied) {
        add(ViolationKind::road_rule, tag + " crosses a placement");
        break;
      }
      if (i == 0) continue;
      const Cell2 prev = cells[i - 1].cell();
      if (manhattan(prev, c) != 1) {
        add(ViolationKind::road_rule, tag + " is not 4-connected");
        break;
      }
      if (!rules.step_ok(maps.surface[prev], maps.surface[c])) {
        add(ViolationKind::road_rule, tag + " has a step over the height limit");
        break;
      }
    }
  }

  std::vector<int> orders;
  for (const PlacementRecord& p : ps) orders.push_back(p.order);
  std::sort(orders.begin(), orders.end());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] != static_cast<int>(i)) {
      add(ViolationKind::order, "order indices are not dense and unique");
      break;
    }
  }

  std::sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.kind, a.message) < std::tie(b.kind, b.message);
  });
  return out;
}

namespace {

json coord_json(Coord c) { return json::array({c.x, c.y, c.z}); }

Coord coord_from(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("coordinate must be [x,y,z]");
  return {j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
}

json palette_json(const MaterialPalette& p) {
  return {{"wall", p.wall},       {"floor", p.floor},   {"roof", p.roof},
          {"wood", p.wood_species}, {"stone", p.stone_species}, {"door", p.door},
          {"pillar", p.pillar},   {"window", p.window}, {"fence", p.fence},
          {"light", p.light},     {"foundation", p.foundation}};
}

MaterialPalette palette_from(const json& j) {
  MaterialPalette p;
  const auto get = [&](const char* k) { return j.value(k, std::string()); };
  p.wall = get("wall");
  p.floor = get("floor");
  p.roof = get("roof");
  p.wood_species = get("wood");
  p.stone_species = get("stone");
  p.door = get("door");
  p.pillar = get("pillar");
  p.window = get("window");
  p.fence = get("fence");
  p.light = get("light");
  p.foundation = get("foundation");
  return p;
}

}  // namespace

std::string serialize_plan(const SettlementPlan& plan) {
  json j;
  j["generator"] = plan.generator;
  j["seed"] = plan.seed;
  j["config"] = plan.config;
  j["world_hash"] = plan.world_hash;
  j["notes"] = plan.notes;
  json placements = json::array();
  for (const PlacementRecord& p : plan.placements) {
    json doors = json::array();
    for (const Coord& d : p.doors) doors.push_back(coord_json(d));
    json e{{"kind", std::string(to_string(p.kind))},
           {"box", {p.box.min.x, p.box.min.y, p.box.min.z, p.box.max.x, p.box.max.y, p.box.max.z}},
           {"doors", doors},
           {"order", p.order},
           {"materials", palette_json(p.palette)}};
    if (!p.crop.empty()) e["crop"] = p.crop;
    placements.push_back(std::move(e));
  }
  j["placements"] = std::move(placements);
  json roads = json::array();
  for (const Path& path : plan.roads) {
    json cells = json::array();
    for (const PathCell& c : path.cells) cells.push_back({c.x, c.z, c.y});
    roads.push_back(std::move(cells));
  }
  j["roads"] = std::move(roads);
  return j.dump(2) + "\n";
}

SettlementPlan parse_plan(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw std::invalid_argument("plan must be a JSON object");
    SettlementPlan plan;
    plan.generator = j.at("generator").get<std::string>();
    plan.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("config")) {
      plan.config = j.at("config").get<std::map<std::string, std::string>>();
    }
    plan.world_hash = j.value("world_hash", std::string());
    if (j.contains("notes")) plan.notes = j.at("notes").get<std::vector<std::string>>();
    for (const json& e : j.at("placements")) {
      PlacementRecord p;
      p.kind = parse_structure_kind(e.at("kind").get<std::string>());
      const auto& b = e.at("box");
      if (!b.is_array() || b.size() != 6) throw std::invalid_argument("box must have 6 numbers");
      p.box = BoundingBox::checked({b[0].get<int>(), b[1].get<int>(), b[2].get<int>()},
                                   {b[3].get<int>(), b[4].get<int>(), b[5].get<int>()});
      for (const json& d : e.at("doors")) p.doors.push_back(coord_from(d));
      p.order = e.at("order").get<int>();
      if (e.contains("materials")) p.palette = palette_from(e.at("materials"));
      p.crop = e.value("crop", std::string());
      plan.placements.push_back(std::move(p));
    }
    for (const json& r : j.at("roads")) {
      Path path;
      for (const json& c : r) {
        if (!c.is_array() || c.size() < 2) throw std::invalid_argument("road cell must be [x,z]");
        path.cells.push_back({c[0].get<int>(), c[1].get<int>(), c.size() > 2 ? c[2].get<int>() : 0});
      }
      for (std::size_t i = 1; i < path.cells.size(); ++i) {
        path.cost += step_cost(path.cells[i - 1].y, path.cells[i].y);
      }
      plan.roads.push_back(std::move(path));
    }
    return plan;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed plan: ") + e.what());
  }
}

}  // namespace settlegen
