#include "settlegen/gdw.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>

namespace settlegen {

namespace {

constexpr std::array<std::uint8_t, 4> kMagic{'G', 'D', 'W', '1'};
constexpr std::uint32_t kMaxDimension = 1u << 16;

class Writer {
 public:
  explicit Writer(std::vector<std::uint8_t>& out) : out_(out) {}
  void u8(std::uint8_t v) { out_.push_back(v); }
  void u16(std::uint16_t v) {
    out_.push_back(static_cast<std::uint8_t>(v & 0xff));
    out_.push_back(static_cast<std::uint8_t>(v >> 8));
  }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out_.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
  }
  void bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const std::uint8_t*>(data);
    out_.insert(out_.end(), p, p + n);
  }

 private:
  std::vector<std::uint8_t>& out_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> in) : in_(in) {}
  std::size_t offset() const { return pos_; }
  std::size_t remaining() const { return in_.size() - pos_; }

  void need(std::size_t n, const char* what) const {
    if (remaining() < n) {
      throw FormatError(pos_, std::string("truncated payload reading ") + what);
    }
  }
  std::uint8_t u8(const char* what) {
    need(1, what);
    return in_[pos_++];
  }
  std::uint16_t u16(const char* what) {
    need(2, what);
    const auto v = static_cast<std::uint16_t>(in_[pos_] | (in_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }
  std::uint32_t u32(const char* what) {
    need(4, what);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{in_[pos_ + i]} << (8 * i);
    pos_ += 4;
    return v;
  }
  std::span<const std::uint8_t> take(std::size_t n, const char* what) {
    need(n, what);
    auto s = in_.subspan(pos_, n);
    pos_ += n;
    return s;
  }

 private:
  std::span<const std::uint8_t> in_;
  std::size_t pos_ = 0;
};

}  // namespace

FormatError::FormatError(std::size_t offset, const std::string& what)
    : std::runtime_error("GDW format error at byte " + std::to_string(offset) + ": " + what),
      offset_(offset) {}

std::vector<std::uint8_t> serialize_gdw(const VoxelWorld& world) {
  const VoxelWorld canonical = world.compacted();
  std::vector<std::uint8_t> out;
  out.reserve(32 + canonical.volume() * 2 + canonical.biomes().size());
  Writer w(out);
  w.bytes(kMagic.data(), kMagic.size());
  w.u32(static_cast<std::uint32_t>(canonical.size_x()));
  w.u32(static_cast<std::uint32_t>(canonical.size_y()));
  w.u32(static_cast<std::uint32_t>(canonical.size_z()));
  w.u32(static_cast<std::uint32_t>(canonical.palette().size()));
  for (const auto& name : canonical.palette()) {
    if (name.size() > 0xffff) throw std::length_error("palette name longer than 65535 bytes");
    w.u16(static_cast<std::uint16_t>(name.size()));
    w.bytes(name.data(), name.size());
  }
  for (auto b : canonical.blocks()) w.u16(b);
  w.bytes(canonical.biomes().data(), canonical.biomes().size());
  return out;
}

VoxelWorld parse_gdw(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  auto magic = r.take(4, "magic");
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) {
    throw FormatError(0, "bad magic");
  }
  std::array<std::uint32_t, 3> dims{};
  const char* names[] = {"size_x", "size_y", "size_z"};
  for (int i = 0; i < 3; ++i) {
    const std::size_t at = r.offset();
    dims[i] = r.u32(names[i]);
    if (dims[i] == 0 || dims[i] > kMaxDimension) {
      throw FormatError(at, std::string(names[i]) + " out of range");
    }
  }
  const std::size_t count_at = r.offset();
  const std::uint32_t palette_count = r.u32("palette_count");
  if (palette_count == 0 || palette_count > VoxelWorld::kMaxPalette) {
    throw FormatError(count_at, "palette_count out of range");
  }
  std::vector<std::string> palette;
  palette.reserve(palette_count);
  std::set<std::string> seen;
  for (std::uint32_t i = 0; i < palette_count; ++i) {
    const std::size_t at = r.offset();
    const std::uint16_t len = r.u16("palette entry length");
    auto text = r.take(len, "palette entry");
    palette.emplace_back(text.begin(), text.end());
    if (!seen.insert(palette.back()).second) throw FormatError(at, "duplicate palette entry");
  }
  const std::uint64_t volume = std::uint64_t{dims[0]} * dims[1] * dims[2];
  const std::uint64_t columns = std::uint64_t{dims[0]} * dims[2];
  if (r.remaining() < volume * 2) {
    throw FormatError(r.offset(), "truncated payload reading block indices");
  }
  std::vector<std::uint16_t> blocks(static_cast<std::size_t>(volume));
  for (auto& b : blocks) {
    const std::size_t at = r.offset();
    b = r.u16("block index");
    if (b >= palette_count) {
      throw FormatError(at, "palette index " + std::to_string(b) + " overflows palette of " +
                                std::to_string(palette_count));
    }
  }
  auto biome_bytes = r.take(static_cast<std::size_t>(columns), "biomes");
  if (r.remaining() != 0) throw FormatError(r.offset(), "trailing bytes after biome payload");
  std::vector<std::uint8_t> biomes(biome_bytes.begin(), biome_bytes.end());
  return VoxelWorld::from_parts(static_cast<int>(dims[0]), static_cast<int>(dims[1]),
                                static_cast<int>(dims[2]), std::move(palette), std::move(blocks),
                                std::move(biomes));
}

void save_gdw(const VoxelWorld& world, const std::filesystem::path& path) {
  const auto bytes = serialize_gdw(world);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

VoxelWorld load_gdw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  return parse_gdw(bytes);
}

std::uint64_t world_hash(const VoxelWorld& world) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (auto b : serialize_gdw(world)) {
    h ^= b;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace settlegen
