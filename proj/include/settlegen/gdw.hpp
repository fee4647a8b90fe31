#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "settlegen/world.hpp"

namespace settlegen {

/// GDW v1 is the portable world file format:
///
///   "GDW1"                               4-byte magic
///   u32 size_x, u32 size_y, u32 size_z
///   u32 palette_count
///   palette_count x (u16 length, UTF-8 bytes)
///   size_x*size_y*size_z x u16 palette index, order (y*size_z+z)*size_x+x
///   size_x*size_z x u8 biome id, order z*size_x+x
///
/// All integers little-endian, no compression. The writer emits only
/// palette entries that some cell references, so output is canonical.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t offset, const std::string& what);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

std::vector<std::uint8_t> serialize_gdw(const VoxelWorld& world);
VoxelWorld parse_gdw(std::span<const std::uint8_t> bytes);

/// Throws std::runtime_error on I/O failure, FormatError on malformed input.
void save_gdw(const VoxelWorld& world, const std::filesystem::path& path);
VoxelWorld load_gdw(const std::filesystem::path& path);

/// FNV-1a 64 over the canonical GDW serialization.
std::uint64_t world_hash(const VoxelWorld& world);
std::string hash_hex(std::uint64_t h);

}  // namespace settlegen
