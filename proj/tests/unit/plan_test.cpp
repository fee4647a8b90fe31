#include <gtest/gtest.h>

#include <json.hpp>

#include "settlegen/plan.hpp"

using namespace settlegen;

namespace {

VoxelWorld ground_world() {
  VoxelWorld w(20, 16, 20);
  w.fill_box({{0, 0, 0}, {19, 4, 19}}, "minecraft:stone");
  return w;
}

PlacementRecord house_at(int x, int z, int order) {
  PlacementRecord p;
  p.kind = StructureKind::house;
  p.box = {{x, 5, z}, {x + 4, 10, z + 4}};
  p.doors = {{x + 2, 6, z}};
  p.palette = MaterialPalette::from_species("oak", "stone");
  p.order = order;
  return p;
}

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.kind == k; });
}

}  // namespace

TEST(Plan, DoorFrontIsOutsideTheFootprint) {
  const BoundingBox b{{2, 0, 2}, {6, 5, 6}};
  EXPECT_EQ(door_front(b, {4, 1, 2}), (Cell2{4, 1}));
  EXPECT_EQ(door_front(b, {6, 1, 4}), (Cell2{7, 4}));
  EXPECT_EQ(door_front(b, {4, 1, 6}), (Cell2{4, 7}));
  EXPECT_EQ(door_front(b, {2, 1, 3}), (Cell2{1, 3}));
  EXPECT_THROW(door_front(b, {4, 1, 4}), std::invalid_argument);
}

TEST(Plan, JsonRoundTrip) {
  SettlementPlan p;
  p.generator = "grid";
  p.seed = 18446744073709551615ull;
  p.config = {{"grid.season", "winter"}};
  p.world_hash = "00000000deadbeef";
  p.notes = {"a note"};
  p.add(house_at(1, 1, 0));
  PlacementRecord farm = house_at(10, 10, 0);
  farm.kind = StructureKind::farm;
  farm.doors.clear();
  farm.crop = "minecraft:wheat[age=4]";
  p.add(farm);
  Path road;
  road.cells = {{3, 0, 4}, {4, 0, 4}, {4, 1, 5}};
  road.cost = 3;
  p.roads.push_back(road);
  const std::string text = serialize_plan(p);
  const SettlementPlan back = parse_plan(text);
  EXPECT_EQ(back, p);
  EXPECT_EQ(serialize_plan(back), text);
  EXPECT_EQ(p.road_cell_count(), 3u);
  EXPECT_EQ(p.placements[1].order, 1);
  const auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["placements"][0]["box"].size(), 6u);
  EXPECT_EQ(j["roads"][0][2], nlohmann::json::array({4, 1, 5}));
}

TEST(Plan, ParseRejectsMalformedDocuments) {
  EXPECT_THROW(parse_plan("{"), std::invalid_argument);
  EXPECT_THROW(parse_plan("[]"), std::invalid_argument);
  EXPECT_THROW(parse_plan(R"({"generator":"x","seed":0,"placements":[{"kind":"castle"}],"roads":[]})"),
               std::invalid_argument);
}

TEST(Validate, CleanPlanHasNoViolations) {
  const VoxelWorld w = ground_world();
  const TerrainMaps m = compute_terrain(w);
  SettlementPlan p;
  p.add(house_at(1, 2, 0));
  p.add(house_at(10, 2, 0));
  Path road;
  for (int x = 3; x <= 12; ++x) road.cells.push_back({x, 1, 4});
  p.roads.push_back(road);
  EXPECT_TRUE(validate(p, w, m).empty());
}

TEST(Validate, DetectsEachDefectClass) {
  VoxelWorld w = ground_world();
  w.set_block({3, 4, 1}, "minecraft:water");
  w.fill_box({{15, 5, 15}, {19, 7, 19}}, "minecraft:stone");
  const TerrainMaps m = compute_terrain(w);
  SettlementPlan p;
  p.add(house_at(1, 2, 0));
  p.add(house_at(3, 4, 0));
  PlacementRecord outside = house_at(17, 17, 0);
  p.add(outside);
  p.placements.back().order = 7;
  Path steep;
  steep.cells = {{13, 13, 4}, {14, 13, 4}, {15, 13, 4}, {15, 14, 4}, {15, 15, 7}};
  p.roads.push_back(steep);
  Path jump;
  jump.cells = {{12, 0, 4}, {12, 2, 4}};
  p.roads.push_back(jump);
  Path through;
  through.cells = {{2, 3, 4}};
  p.roads.push_back(through);
  const auto v = validate(p, w, m);
  EXPECT_TRUE(has_kind(v, ViolationKind::overlap));
  EXPECT_TRUE(has_kind(v, ViolationKind::door_into_water));
  EXPECT_TRUE(has_kind(v, ViolationKind::out_of_bounds));
  EXPECT_TRUE(has_kind(v, ViolationKind::order));
  EXPECT_EQ(std::count_if(v.begin(), v.end(),
                          [](const Violation& x) { return x.kind == ViolationKind::road_rule; }),
            3);
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.kind, a.message) < std::tie(b.kind, b.message);
  }));
}
