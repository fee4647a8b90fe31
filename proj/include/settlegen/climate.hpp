#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace settlegen {

struct BiomeClimate {
  std::string name;
  double temperature = 0.8;
  double rainfall = 0.4;
};

/// Biome id -> climate values, loaded from assets/biomes.txt.
class BiomeTable {
 public:
  static BiomeTable parse(std::string_view text);
  static const BiomeTable& standard();

  /// Falls back to the table's `default` row for unknown ids.
  const BiomeClimate& lookup(int id) const;
  /// Biome id for a name; throws std::out_of_range when absent.
  int id_of(std::string_view name) const;

 private:
  BiomeClimate fallback_;
  std::map<int, BiomeClimate> entries_;
};

enum class Season { spring, summer, autumn, winter };

std::string_view to_string(Season s);
/// Accepts spring|summer|autumn|winter; throws std::invalid_argument otherwise.
Season parse_season(std::string_view s);

struct CropInfo {
  std::string block;
  double t_min = 0.0;
  double t_max = 0.0;
  double min_water = 0.0;
  bool arid = false;
  std::array<int, 3> ages{};  // spring, summer, autumn

  bool fits(double temperature, double water_fraction) const {
    return temperature >= t_min && temperature <= t_max && water_fraction >= min_water;
  }
  /// Block name with growth stage, empty for winter.
  std::string planted(Season s) const;
};

/// Crop compatibility rules, loaded from assets/crops.txt.
class CropTable {
 public:
  static CropTable parse(std::string_view text);
  static const CropTable& standard();

  const std::vector<CropInfo>& entries() const { return entries_; }
  /// Crops fitting the climate, in table order. When none fit, the single crop
  /// whose temperature band is nearest is returned.
  std::vector<const CropInfo*> compatible(double temperature, double water_fraction) const;

 private:
  std::vector<CropInfo> entries_;
};

}  // namespace settlegen
