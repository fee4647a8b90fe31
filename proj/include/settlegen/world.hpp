#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <map>
#include <vector>

#include "settlegen/blocks.hpp"
#include "settlegen/geometry.hpp"

namespace settlegen {

/// Palette index of a block within one world.
struct BlockId {
  std::uint16_t palette_index = 0;
  friend auto operator<=>(const BlockId&, const BlockId&) = default;
};

/// Out-of-bounds access. `axis()` is 'x', 'y' or 'z'.
class BoundsError : public std::out_of_range {
 public:
  BoundsError(char axis, int value, int limit);
  char axis() const { return axis_; }

 private:
  char axis_;
};

inline constexpr std::string_view kAir = "minecraft:air";

/// Palette-indexed 3D block grid with a biome id per (x, z) column.
///
/// Cells are stored in the order i = (y * size_z + z) * size_x + x. The
/// palette only grows; `compacted()` drops entries no cell references.
/// Equality is logical: same dimensions, same block name in every cell and
/// same biomes, independent of palette order.
class VoxelWorld {
 public:
  static constexpr std::size_t kMaxPalette = 65536;

  VoxelWorld() : VoxelWorld(1, 1, 1) {}
  VoxelWorld(int size_x, int size_y, int size_z, std::string_view fill = kAir,
             std::uint8_t biome = 1);

  int size_x() const { return size_x_; }
  int size_y() const { return size_y_; }
  int size_z() const { return size_z_; }
  std::size_t volume() const { return blocks_.size(); }
  BoundingBox bounds() const { return {{0, 0, 0}, {size_x_ - 1, size_y_ - 1, size_z_ - 1}}; }
  Rect2 columns() const { return {0, 0, size_x_ - 1, size_z_ - 1}; }

  bool contains(Coord c) const {
    return c.x >= 0 && c.x < size_x_ && c.y >= 0 && c.y < size_y_ && c.z >= 0 && c.z < size_z_;
  }
  /// Throws BoundsError naming the first offending axis.
  void check_bounds(Coord c) const;
  void check_bounds(const BoundingBox& box) const;

  std::size_t index(Coord c) const {
    return (static_cast<std::size_t>(c.y) * static_cast<std::size_t>(size_z_) +
            static_cast<std::size_t>(c.z)) *
               static_cast<std::size_t>(size_x_) +
           static_cast<std::size_t>(c.x);
  }

  BlockId get_block(Coord c) const;
  const std::string& name_at(Coord c) const { return name(get_block(c)); }
  BlockCategory category_at(Coord c) const { return category(get_block(c)); }
  const BlockInfo& info_at(Coord c) const { return info(get_block(c)); }

  void set_block(Coord c, std::string_view name);
  void set_block(Coord c, BlockId id);
  void fill_box(const BoundingBox& box, std::string_view name);

  /// Unchecked accessors for hot loops; the caller guarantees bounds.
  BlockId at(Coord c) const { return BlockId{blocks_[index(c)]}; }
  void put(Coord c, BlockId id) { blocks_[index(c)] = id.palette_index; }

  /// Palette index for `name`, extending the palette when unseen.
  BlockId intern(std::string_view name);
  /// Palette index for `name` if present.
  bool find(std::string_view name, BlockId& out) const;

  const std::string& name(BlockId id) const { return palette_[id.palette_index]; }
  BlockCategory category(BlockId id) const { return infos_[id.palette_index]->category; }
  const BlockInfo& info(BlockId id) const { return *infos_[id.palette_index]; }

  std::uint8_t biome(int x, int z) const;
  void set_biome(int x, int z, std::uint8_t id);

  std::span<const std::string> palette() const { return palette_; }
  std::span<const std::uint16_t> blocks() const { return blocks_; }
  std::span<const std::uint8_t> biomes() const { return biomes_; }

  /// Copy whose palette holds only referenced names, in first-palette order.
  VoxelWorld compacted() const;

  /// Builds a world from raw parts; used by the file loader. Validates sizes,
  /// palette uniqueness and index range, throwing std::invalid_argument.
  static VoxelWorld from_parts(int size_x, int size_y, int size_z,
                               std::vector<std::string> palette,
                               std::vector<std::uint16_t> blocks,
                               std::vector<std::uint8_t> biomes);

  friend bool operator==(const VoxelWorld& a, const VoxelWorld& b);

 private:
  void rebuild_lookup();

  int size_x_ = 0;
  int size_y_ = 0;
  int size_z_ = 0;
  std::vector<std::string> palette_;
  std::vector<const BlockInfo*> infos_;
  std::map<std::string, std::uint16_t, std::less<>> lookup_;
  std::vector<std::uint16_t> blocks_;
  std::vector<std::uint8_t> biomes_;
};

}  // namespace settlegen
