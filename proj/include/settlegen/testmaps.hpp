#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "settlegen/world.hpp"

namespace settlegen {

/// Synthetic terrains modelled on the three competition map types: a level
/// map, a map split by a river, and a cliffy island in the sea.
enum class TestMapKind { flat, river, island };

std::string_view to_string(TestMapKind k);
/// Throws std::invalid_argument for unknown names.
TestMapKind parse_test_map_kind(std::string_view s);

struct TestMapOptions {
  int size_x = 128;
  int size_y = 64;
  int size_z = 128;
  std::uint64_t seed = 0;
  /// Tree species and their relative weights.
  std::vector<std::pair<std::string, double>> species{{"oak", 1.0}};
  /// Chance that a land column starts a tree.
  double tree_density = 0.006;
  /// Biome for land columns; the map type's own biome when unset.
  std::optional<std::uint8_t> biome;
};

/// Height of the flat ground and the sea surface.
int base_height(const TestMapOptions& o);

VoxelWorld make_test_map(TestMapKind kind, const TestMapOptions& options = {});

}  // namespace settlegen
