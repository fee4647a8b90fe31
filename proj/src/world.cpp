#include "settlegen/world.hpp"

#include <algorithm>

namespace settlegen {

namespace {

std::string bounds_message(char axis, int value, int limit) {
  return std::string("coordinate ") + axis + "=" + std::to_string(value) + " outside [0, " +
         std::to_string(limit) + ")";
}

}  // namespace

BoundsError::BoundsError(char axis, int value, int limit)
    : std::out_of_range(bounds_message(axis, value, limit)), axis_(axis) {}

VoxelWorld::VoxelWorld(int size_x, int size_y, int size_z, std::string_view fill,
                       std::uint8_t biome)
    : size_x_(size_x), size_y_(size_y), size_z_(size_z) {
  if (size_x <= 0 || size_y <= 0 || size_z <= 0) {
    throw std::invalid_argument("world dimensions must be positive");
  }
  palette_.emplace_back(fill);
  rebuild_lookup();
  blocks_.assign(static_cast<std::size_t>(size_x) * size_y * size_z, 0);
  biomes_.assign(static_cast<std::size_t>(size_x) * size_z, biome);
}

void VoxelWorld::rebuild_lookup() {
  lookup_.clear();
  infos_.clear();
  const auto& table = BlockTable::standard();
  for (std::size_t i = 0; i < palette_.size(); ++i) {
    lookup_.emplace(palette_[i], static_cast<std::uint16_t>(i));
    infos_.push_back(&table.classify(palette_[i]));
  }
}

void VoxelWorld::check_bounds(Coord c) const {
  if (c.x < 0 || c.x >= size_x_) throw BoundsError('x', c.x, size_x_);
  if (c.y < 0 || c.y >= size_y_) throw BoundsError('y', c.y, size_y_);
  if (c.z < 0 || c.z >= size_z_) throw BoundsError('z', c.z, size_z_);
}

void VoxelWorld::check_bounds(const BoundingBox& box) const {
  if (box.min.x > box.max.x || box.min.y > box.max.y || box.min.z > box.max.z) {
    throw std::invalid_argument("bounding box min exceeds max");
  }
  check_bounds(box.min);
  check_bounds(box.max);
}

BlockId VoxelWorld::get_block(Coord c) const {
  check_bounds(c);
  return at(c);
}

BlockId VoxelWorld::intern(std::string_view name) {
  if (auto it = lookup_.find(name); it != lookup_.end()) return BlockId{it->second};
  if (palette_.size() >= kMaxPalette) {
    throw std::length_error("palette full: cannot add '" + std::string(name) + "'");
  }
  const auto id = static_cast<std::uint16_t>(palette_.size());
  palette_.emplace_back(name);
  lookup_.emplace(palette_.back(), id);
  infos_.push_back(&BlockTable::standard().classify(palette_.back()));
  return BlockId{id};
}

bool VoxelWorld::find(std::string_view name, BlockId& out) const {
  auto it = lookup_.find(name);
  if (it == lookup_.end()) return false;
  out = BlockId{it->second};
  return true;
}

void VoxelWorld::set_block(Coord c, std::string_view name) {
  check_bounds(c);
  put(c, intern(name));
}

void VoxelWorld::set_block(Coord c, BlockId id) {
  check_bounds(c);
  if (id.palette_index >= palette_.size()) {
    throw std::out_of_range("palette index " + std::to_string(id.palette_index) +
                            " not in palette");
  }
  put(c, id);
}

void VoxelWorld::fill_box(const BoundingBox& box, std::string_view name) {
  check_bounds(box);
  const BlockId id = intern(name);
  for (int y = box.min.y; y <= box.max.y; ++y) {
    for (int z = box.min.z; z <= box.max.z; ++z) {
      for (int x = box.min.x; x <= box.max.x; ++x) put({x, y, z}, id);
    }
  }
}

std::uint8_t VoxelWorld::biome(int x, int z) const {
  if (x < 0 || x >= size_x_) throw BoundsError('x', x, size_x_);
  if (z < 0 || z >= size_z_) throw BoundsError('z', z, size_z_);
  return biomes_[static_cast<std::size_t>(z) * size_x_ + x];
}

void VoxelWorld::set_biome(int x, int z, std::uint8_t id) {
  if (x < 0 || x >= size_x_) throw BoundsError('x', x, size_x_);
  if (z < 0 || z >= size_z_) throw BoundsError('z', z, size_z_);
  biomes_[static_cast<std::size_t>(z) * size_x_ + x] = id;
}

VoxelWorld VoxelWorld::compacted() const {
  std::vector<std::uint8_t> used(palette_.size(), 0);
  for (auto b : blocks_) used[b] = 1;
  std::vector<std::uint16_t> remap(palette_.size(), 0);
  std::vector<std::string> palette;
  for (std::size_t i = 0; i < palette_.size(); ++i) {
    if (used[i]) {
      remap[i] = static_cast<std::uint16_t>(palette.size());
      palette.push_back(palette_[i]);
    }
  }
  VoxelWorld out = *this;
  out.palette_ = std::move(palette);
  for (auto& b : out.blocks_) b = remap[b];
  out.rebuild_lookup();
  return out;
}

VoxelWorld VoxelWorld::from_parts(int size_x, int size_y, int size_z,
                                  std::vector<std::string> palette,
                                  std::vector<std::uint16_t> blocks,
                                  std::vector<std::uint8_t> biomes) {
  if (size_x <= 0 || size_y <= 0 || size_z <= 0) {
    throw std::invalid_argument("world dimensions must be positive");
  }
  const auto volume = static_cast<std::size_t>(size_x) * size_y * size_z;
  if (blocks.size() != volume) throw std::invalid_argument("block payload size mismatch");
  if (biomes.size() != static_cast<std::size_t>(size_x) * size_z) {
    throw std::invalid_argument("biome payload size mismatch");
  }
  if (palette.empty() || palette.size() > kMaxPalette) {
    throw std::invalid_argument("palette size out of range");
  }
  for (auto b : blocks) {
    if (b >= palette.size()) throw std::invalid_argument("palette index out of range");
  }
  VoxelWorld w;
  w.size_x_ = size_x;
  w.size_y_ = size_y;
  w.size_z_ = size_z;
  w.palette_ = std::move(palette);
  w.blocks_ = std::move(blocks);
  w.biomes_ = std::move(biomes);
  w.rebuild_lookup();
  if (w.lookup_.size() != w.palette_.size()) throw std::invalid_argument("duplicate palette entry");
  return w;
}

bool operator==(const VoxelWorld& a, const VoxelWorld& b) {
  if (a.size_x_ != b.size_x_ || a.size_y_ != b.size_y_ || a.size_z_ != b.size_z_) return false;
  if (a.biomes_ != b.biomes_) return false;
  if (a.palette_ == b.palette_) return a.blocks_ == b.blocks_;
  // Palettes differ: compare names cell by cell through a translation table.
  std::vector<int> translate(a.palette_.size(), -1);
  for (std::size_t i = 0; i < a.palette_.size(); ++i) {
    BlockId id;
    if (b.find(a.palette_[i], id)) translate[i] = id.palette_index;
  }
  for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
    if (translate[a.blocks_[i]] != b.blocks_[i]) return false;
  }
  return true;
}

}  // namespace settlegen
