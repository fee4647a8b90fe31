#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace settlegen {

/// Block coordinate. y is vertical.
struct Coord {
  int x = 0;
  int y = 0;
  int z = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
  friend Coord operator+(Coord a, Coord b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Coord operator-(Coord a, Coord b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
};

/// Column coordinate on the horizontal plane.
struct Cell2 {
  int x = 0;
  int z = 0;

  friend auto operator<=>(const Cell2&, const Cell2&) = default;
};

inline int manhattan(Cell2 a, Cell2 b) { return std::abs(a.x - b.x) + std::abs(a.z - b.z); }
inline int chebyshev(Cell2 a, Cell2 b) { return std::max(std::abs(a.x - b.x), std::abs(a.z - b.z)); }

/// Inclusive axis-aligned box.
struct BoundingBox {
  Coord min;
  Coord max;

  /// Throws std::invalid_argument unless min <= max on every axis.
  static BoundingBox checked(Coord lo, Coord hi) {
    if (lo.x > hi.x || lo.y > hi.y || lo.z > hi.z) {
      throw std::invalid_argument("bounding box min exceeds max");
    }
    return {lo, hi};
  }

  int size_x() const { return max.x - min.x + 1; }
  int size_y() const { return max.y - min.y + 1; }
  int size_z() const { return max.z - min.z + 1; }
  std::int64_t volume() const {
    return std::int64_t{size_x()} * size_y() * size_z();
  }
  bool contains(Coord c) const {
    return c.x >= min.x && c.x <= max.x && c.y >= min.y && c.y <= max.y &&
           c.z >= min.z && c.z <= max.z;
  }
  bool contains(const BoundingBox& b) const { return contains(b.min) && contains(b.max); }
  bool intersects(const BoundingBox& b) const {
    return min.x <= b.max.x && b.min.x <= max.x && min.y <= b.max.y && b.min.y <= max.y &&
           min.z <= b.max.z && b.min.z <= max.z;
  }

  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// Inclusive horizontal rectangle [x0, x1] x [z0, z1].
struct Rect2 {
  int x0 = 0;
  int z0 = 0;
  int x1 = -1;
  int z1 = -1;

  static Rect2 from_size(int x, int z, int width, int depth) {
    return {x, z, x + width - 1, z + depth - 1};
  }

  int width() const { return x1 - x0 + 1; }
  int depth() const { return z1 - z0 + 1; }
  bool empty() const { return x1 < x0 || z1 < z0; }
  std::int64_t area() const { return empty() ? 0 : std::int64_t{width()} * depth(); }

  bool contains(int x, int z) const { return x >= x0 && x <= x1 && z >= z0 && z <= z1; }
  bool contains(Cell2 c) const { return contains(c.x, c.z); }
  bool contains(const Rect2& r) const {
    return r.x0 >= x0 && r.x1 <= x1 && r.z0 >= z0 && r.z1 <= z1;
  }
  bool intersects(const Rect2& r) const {
    return x0 <= r.x1 && r.x0 <= x1 && z0 <= r.z1 && r.z0 <= z1;
  }

  Rect2 expanded(int n) const { return {x0 - n, z0 - n, x1 + n, z1 + n}; }
  Rect2 clipped(const Rect2& r) const {
    return {std::max(x0, r.x0), std::max(z0, r.z0), std::min(x1, r.x1), std::min(z1, r.z1)};
  }

  /// Centre of the rectangle in cell units.
  double center_x() const { return (x0 + x1) / 2.0; }
  double center_z() const { return (z0 + z1) / 2.0; }

  friend bool operator==(const Rect2&, const Rect2&) = default;
};

/// Chebyshev distance between the closest cells of two rectangles; 0 when they overlap.
inline int rect_gap(const Rect2& a, const Rect2& b) {
  const int gx = std::max({0, b.x0 - a.x1, a.x0 - b.x1});
  const int gz = std::max({0, b.z0 - a.z1, a.z0 - b.z1});
  return std::max(gx, gz);
}

inline Rect2 footprint_of(const BoundingBox& b) { return {b.min.x, b.min.z, b.max.x, b.max.z}; }

/// Dense 2D grid addressed in world column coordinates over `area`.
template <typename T>
class Grid2D {
 public:
  Grid2D() = default;
  explicit Grid2D(Rect2 area, T init = T{})
      : area_(area), data_(static_cast<std::size_t>(std::max<std::int64_t>(area.area(), 0)), init) {}

  const Rect2& area() const { return area_; }
  int width() const { return area_.width(); }
  int depth() const { return area_.depth(); }
  bool contains(int x, int z) const { return area_.contains(x, z); }
  bool contains(Cell2 c) const { return area_.contains(c); }

  std::size_t index(int x, int z) const {
    return static_cast<std::size_t>(z - area_.z0) * static_cast<std::size_t>(width()) +
           static_cast<std::size_t>(x - area_.x0);
  }
  Cell2 cell(std::size_t i) const {
    const auto w = static_cast<std::size_t>(width());
    return {area_.x0 + static_cast<int>(i % w), area_.z0 + static_cast<int>(i / w)};
  }

  T& operator()(int x, int z) { return data_[index(x, z)]; }
  const T& operator()(int x, int z) const { return data_[index(x, z)]; }
  T& operator[](Cell2 c) { return data_[index(c.x, c.z)]; }
  const T& operator[](Cell2 c) const { return data_[index(c.x, c.z)]; }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  friend bool operator==(const Grid2D&, const Grid2D&) = default;

 private:
  Rect2 area_{};
  std::vector<T> data_;
};

/// Boolean column mask. Stored as bytes so cells are addressable.
using Mask = Grid2D<std::uint8_t>;

}  // namespace settlegen
