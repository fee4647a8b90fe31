#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace settlegen {

enum class BlockCategory : std::uint8_t { solid, vegetation, water, lava, air, crafted };

std::string_view to_string(BlockCategory c);

struct BlockInfo {
  BlockCategory category = BlockCategory::crafted;
  bool tree = false;     // log or leaf; removed whole by tree clearing
  bool fertile = false;  // grass/dirt class ground
  std::string wood_species;
  std::string stone_species;
};

/// Static name -> category classification. Unknown names classify as crafted.
class BlockTable {
 public:
  /// Parses the asset text format: `<name> <category> [tree|fertile|wood=..|stone=..]...`.
  /// Throws std::runtime_error naming the offending line.
  static BlockTable parse(std::string_view text);

  /// Table compiled from assets/blocks.txt.
  static const BlockTable& standard();

  const BlockInfo& classify(std::string_view name) const;
  bool known(std::string_view name) const;
  const std::map<std::string, BlockInfo, std::less<>>& entries() const { return entries_; }

 private:
  std::map<std::string, BlockInfo, std::less<>> entries_;
};

/// Strips a trailing block-state suffix: "minecraft:wheat[age=7]" -> "minecraft:wheat".
std::string_view base_name(std::string_view name);


}  // namespace settlegen
