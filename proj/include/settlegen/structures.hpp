#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "settlegen/climate.hpp"
#include "settlegen/geometry.hpp"
#include "settlegen/terrain.hpp"

namespace settlegen {

enum class StructureKind { house, house_large, plaza, farm, fountain, fence };

std::string_view to_string(StructureKind k);
/// Throws std::invalid_argument for unknown names.
StructureKind parse_structure_kind(std::string_view s);
inline bool is_house(StructureKind k) {
  return k == StructureKind::house || k == StructureKind::house_large;
}

/// Building materials chosen from the site's dominant wood and stone.
struct MaterialPalette {
  std::string wall;
  std::string floor;
  std::string roof;
  std::string wood_species;
  std::string stone_species;
  std::string door;
  std::string pillar;
  std::string window;
  std::string fence;
  std::string light;
  std::string foundation;

  static MaterialPalette from_species(std::string_view wood, std::string_view stone);
  /// Every block name used by the palette.
  std::vector<std::string> names() const;

  friend bool operator==(const MaterialPalette&, const MaterialPalette&) = default;
};

struct IntRange {
  int min = 0;
  int max = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Smallest outer footprint side of an enclosed building (3 interior + 2 walls).
inline constexpr int kMinHouseSide = 5;
/// Layers per storey: floor slab plus three air layers.
inline constexpr int kStoreyHeight = 4;

struct StructureSpec {
  StructureKind kind = StructureKind::house;
  IntRange width{5, 7};
  IntRange depth{5, 7};
  IntRange floors{1, 1};
  bool symmetric = true;
  bool exterior_lights = true;

  /// Throws SpecError on inverted ranges or undersized enclosed kinds.
  void validate() const;
};

/// Structure in local coordinates. Local (0, 0, 0) is the footprint corner
/// at floor level; door cells sit on the footprint boundary at y = 1.
struct StructureBlueprint {
  StructureKind kind = StructureKind::house;
  int size_x = 0;
  int size_y = 0;
  int size_z = 0;
  /// Sparse cell -> block name. Explicit air clears the cell when stamped;
  /// absent cells leave the world untouched.
  std::map<Coord, std::string> blocks;
  Coord anchor{0, 0, 0};
  std::vector<Coord> door_cells;
  Rect2 footprint;
  MaterialPalette palette;
  /// Crop planted by farms (empty otherwise or when fallow).
  std::string crop;

  const std::string* at(Coord c) const;
  void set(Coord c, std::string name) { blocks[c] = std::move(name); }
  std::size_t count(std::string_view name) const;

  friend bool operator==(const StructureBlueprint&, const StructureBlueprint&) = default;
};

/// Unit offset from a door cell to the cell just outside the footprint.
Coord door_outward(const Rect2& footprint, Coord door);

/// Quarter turns clockwise seen from above, re-anchored at the origin.
StructureBlueprint rotated(const StructureBlueprint& bp, int quarter_turns);
StructureBlueprint mirrored_x(const StructureBlueprint& bp);
StructureBlueprint mirrored_z(const StructureBlueprint& bp);

StructureBlueprint generate_house(const StructureSpec& spec, const MaterialPalette& palette,
                                  std::uint64_t seed);

StructureBlueprint generate_farm(const SiteProfile& site, Season season, const StructureSpec& spec,
                                 std::uint64_t seed);

/// Paved square with a water fountain; the centre of an even side is the
/// lower of the two middle cells.
StructureBlueprint generate_plaza(const StructureSpec& spec, const MaterialPalette& palette,
                                  std::uint64_t seed);

/// Fence ring with a one-cell gate in the middle of the front side.
StructureBlueprint generate_fence(const StructureSpec& spec, const MaterialPalette& palette,
                                  std::uint64_t seed);

/// Blueprint as a GDW world fragment (local coordinates, absent cells air).
std::vector<std::uint8_t> export_fragment(const StructureBlueprint& bp);

}  // namespace settlegen
