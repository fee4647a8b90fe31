#include "settlegen/climate.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "settlegen/assets.hpp"

namespace settlegen {

namespace {

template <typename Fn>
void for_each_row(std::string_view text, Fn&& fn) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) continue;
    fn(line, first, fields);
  }
}

[[noreturn]] void bad_row(std::string_view table, int line) {
  throw std::runtime_error(std::string(table) + " line " + std::to_string(line) + ": malformed row");
}

}  // namespace

BiomeTable BiomeTable::parse(std::string_view text) {
  BiomeTable t;
  for_each_row(text, [&](int line, const std::string& key, std::istringstream& fields) {
    BiomeClimate c;
    if (!(fields >> c.name >> c.temperature >> c.rainfall)) bad_row("biome table", line);
    if (key == "default") {
      t.fallback_ = c;
      return;
    }
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(key, &used);
    } catch (const std::exception&) {
      bad_row("biome table", line);
    }
    if (used != key.size() || id < 0 || id > 255) bad_row("biome table", line);
    t.entries_[id] = c;
  });
  return t;
}

const BiomeTable& BiomeTable::standard() {
  static const BiomeTable table = parse(assets::biome_table());
  return table;
}

const BiomeClimate& BiomeTable::lookup(int id) const {
  auto it = entries_.find(id);
  return it == entries_.end() ? fallback_ : it->second;
}

int BiomeTable::id_of(std::string_view name) const {
  for (const auto& [id, c] : entries_) {
    if (c.name == name) return id;
  }
  throw std::out_of_range("unknown biome '" + std::string(name) + "'");
}

std::string_view to_string(Season s) {
  switch (s) {
    case Season::spring: return "spring";
    case Season::summer: return "summer";
    case Season::autumn: return "autumn";
    case Season::winter: return "winter";
  }
  return "spring";
}

Season parse_season(std::string_view s) {
  if (s == "spring") return Season::spring;
  if (s == "summer") return Season::summer;
  if (s == "autumn") return Season::autumn;
  if (s == "winter") return Season::winter;
  throw std::invalid_argument("unknown season '" + std::string(s) + "'");
}

std::string CropInfo::planted(Season s) const {
  if (s == Season::winter) return {};
  return block + "[age=" + std::to_string(ages[static_cast<int>(s)]) + "]";
}

CropTable CropTable::parse(std::string_view text) {
  CropTable t;
  for_each_row(text, [&](int line, const std::string& block, std::istringstream& fields) {
    CropInfo c;
    c.block = block;
    std::string arid;
    if (!(fields >> c.t_min >> c.t_max >> c.min_water >> arid >> c.ages[0] >> c.ages[1] >>
          c.ages[2])) {
      bad_row("crop table", line);
    }
    if (arid != "yes" && arid != "no") bad_row("crop table", line);
    c.arid = arid == "yes";
    t.entries_.push_back(std::move(c));
  });
  if (t.entries_.empty()) throw std::runtime_error("crop table is empty");
  return t;
}

const CropTable& CropTable::standard() {
  static const CropTable table = parse(assets::crop_table());
  return table;
}

std::vector<const CropInfo*> CropTable::compatible(double temperature,
                                                    double water_fraction) const {
  std::vector<const CropInfo*> out;
  for (const auto& c : entries_) {
    if (c.fits(temperature, water_fraction)) out.push_back(&c);
  }
  if (!out.empty()) return out;
  const CropInfo* best = nullptr;
  double best_gap = std::numeric_limits<double>::infinity();
  for (const auto& c : entries_) {
    const double gap = temperature < c.t_min ? c.t_min - temperature
                       : temperature > c.t_max ? temperature - c.t_max
                                               : 0.0;
    if (gap < best_gap) {
      best_gap = gap;
      best = &c;
    }
  }
  out.push_back(best);
  return out;
}

}  // namespace settlegen
