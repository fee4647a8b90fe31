#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "settlegen/geometry.hpp"
#include "settlegen/pathing.hpp"
#include "settlegen/structures.hpp"
#include "settlegen/terrain.hpp"
#include "settlegen/world.hpp"

namespace settlegen {

struct PlacementRecord {
  StructureKind kind = StructureKind::house;
  BoundingBox box;
  std::vector<Coord> doors;
  MaterialPalette palette;
  int order = 0;
  std::string crop;

  Rect2 footprint() const { return footprint_of(box); }
  friend bool operator==(const PlacementRecord&, const PlacementRecord&) = default;
};

/// Everything a generator placed, in placement order.
struct SettlementPlan {
  std::string generator;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> config;
  std::vector<PlacementRecord> placements;
  std::vector<Path> roads;
  std::vector<std::string> notes;
  /// Hash of the world the plan was generated into (hex), empty if unknown.
  std::string world_hash;

  /// Appends `r` with the next order index.
  PlacementRecord& add(PlacementRecord r);
  std::size_t road_cell_count() const;

  friend bool operator==(const SettlementPlan&, const SettlementPlan&) = default;
};

enum class ViolationKind { overlap, door_into_water, road_rule, out_of_bounds, order };

std::string_view to_string(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Cell just outside the footprint in front of a door.
Cell2 door_front(const BoundingBox& box, Coord door);

/// Empty result means the plan is consistent with the world.
std::vector<Violation> validate(const SettlementPlan& plan, const VoxelWorld& world,
                                const TerrainMaps& maps, const TraversalRules& rules = {});

std::string serialize_plan(const SettlementPlan& plan);
/// Throws std::invalid_argument on malformed documents.
SettlementPlan parse_plan(std::string_view json_text);

}  // namespace settlegen
