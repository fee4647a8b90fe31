#include "settlegen/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <deque>
#include <json.hpp>
#include <set>
#include <sstream>
#include <unordered_map>

#include "settlegen/generators.hpp"

namespace settlegen {

double shannon_entropy(const std::vector<std::uint64_t>& counts) {
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) return 0.0;
  double h = 0.0;
  for (auto c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h < 0.0 ? 0.0 : h;
}

NgramStats ngram_stats(const VoxelWorld& world, const BoundingBox& region, int n) {
  if (n < 1 || n > 3) throw std::invalid_argument("ngram_stats: n must be 1, 2 or 3");
  world.check_bounds(region);
  std::unordered_map<std::uint64_t, std::uint64_t> packed;
  static constexpr Coord kAxes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const Coord& step : kAxes) {
    const Coord span{step.x * (n - 1), step.y * (n - 1), step.z * (n - 1)};
    for (int y = region.min.y; y + span.y <= region.max.y; ++y) {
      for (int z = region.min.z; z + span.z <= region.max.z; ++z) {
        for (int x = region.min.x; x + span.x <= region.max.x; ++x) {
          std::uint64_t key = 0;
          Coord c{x, y, z};
          for (int k = 0; k < n; ++k) {
            key = (key << 16) | world.at(c).palette_index;
            c = c + step;
          }
          ++packed[key];
        }
      }
    }
  }

  NgramStats s;
  s.n = n;
  for (const auto& [key, count] : packed) {
    std::vector<std::string> names(static_cast<std::size_t>(n));
    std::uint64_t k = key;
    for (int i = n - 1; i >= 0; --i) {
      names[static_cast<std::size_t>(i)] = world.name(BlockId{static_cast<std::uint16_t>(k & 0xffff)});
      k >>= 16;
    }
    s.counts[std::move(names)] += count;
    s.total += count;
  }
  std::vector<std::uint64_t> counts;
  counts.reserve(s.counts.size());
  for (const auto& [_, c] : s.counts) counts.push_back(c);
  s.entropy = shannon_entropy(counts);
  return s;
}

double spatial_entropy(const TerrainMaps& maps, int window) {
  if (window < 2) throw std::invalid_argument("spatial_entropy: window must be at least 2");
  const Rect2 a = maps.area;
  if (a.empty()) return 0.0;
  int lo = maps.ground(a.x0, a.z0);
  int hi = lo;
  for (int v : maps.ground.data()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(hi - lo + 1));
  const auto window_entropy = [&](const Rect2& r) {
    std::fill(hist.begin(), hist.end(), 0);
    for (int z = r.z0; z <= r.z1; ++z) {
      for (int x = r.x0; x <= r.x1; ++x) ++hist[static_cast<std::size_t>(maps.ground(x, z) - lo)];
    }
    return shannon_entropy(hist);
  };
  if (a.width() < window || a.depth() < window) return window_entropy(a);
  double sum = 0.0;
  std::size_t count = 0;
  for (int z = a.z0; z + window - 1 <= a.z1; ++z) {
    for (int x = a.x0; x + window - 1 <= a.x1; ++x) {
      sum += window_entropy(Rect2::from_size(x, z, window, window));
      ++count;
    }
  }
  return sum / static_cast<double>(count);
}

namespace {

bool wet_front(const VoxelWorld& world, const TerrainMaps& maps, Cell2 f, int door_y) {
  const auto liquid_block = [&](Coord c) {
    if (!world.contains(c)) return false;
    const auto cat = world.category_at(c);
    return cat == BlockCategory::water || cat == BlockCategory::lava;
  };
  return (maps.contains(f) && (maps.water[f] || maps.lava[f])) ||
         liquid_block({f.x, door_y, f.z}) || liquid_block({f.x, door_y - 1, f.z});
}

}  // namespace

FunctionalityReport functionality_report(const VoxelWorld& world, const TerrainMaps& maps,
                                         const SettlementPlan& plan, const TraversalRules& rules) {
  TraversalRules walk = rules;
  Mask blocked(maps.area, 0);
  for (const PlacementRecord& p : plan.placements) {
    const Rect2 r = p.footprint().clipped(maps.area);
    for (int z = r.z0; z <= r.z1; ++z) {
      for (int x = r.x0; x <= r.x1; ++x) blocked(x, z) = 1;
    }
  }
  walk.blocked = std::move(blocked);

  Grid2D<int> label(maps.area, -1);
  int next_label = 0;
  std::deque<Cell2> queue;
  const auto flood = [&](Cell2 start) {
    label[start] = next_label;
    queue.push_back(start);
    while (!queue.empty()) {
      const Cell2 c = queue.front();
      queue.pop_front();
      static constexpr int kDx[] = {1, -1, 0, 0};
      static constexpr int kDz[] = {0, 0, 1, -1};
      for (int k = 0; k < 4; ++k) {
        const Cell2 n{c.x + kDx[k], c.z + kDz[k]};
        if (!maps.contains(n) || label[n] >= 0 || !walk.passable(maps, n)) continue;
        const int a = maps.surface[c];
        const int b = maps.surface[n];
        if (!walk.step_ok(a, b) || !walk.step_ok(b, a)) continue;
        label[n] = next_label;
        queue.push_back(n);
      }
    }
    ++next_label;
  };

  FunctionalityReport rep;
  std::vector<int> door_labels;
  for (const PlacementRecord& p : plan.placements) {
    for (const Coord& d : p.doors) {
      ++rep.doors;
      Cell2 f;
      try {
        f = door_front(p.box, d);
      } catch (const std::invalid_argument&) {
        door_labels.push_back(next_label++);
        continue;
      }
      if (wet_front(world, maps, f, d.y)) ++rep.doors_into_water;
      if (!maps.contains(f) || !walk.passable(maps, f)) {
        door_labels.push_back(next_label++);
        continue;
      }
      if (label[f] < 0) flood(f);
      door_labels.push_back(label[f]);
    }
  }
  if (rep.doors == 0) return rep;

  const std::size_t n = door_labels.size();
  std::uint64_t connected = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && door_labels[i] == door_labels[j]) ++connected;
    }
  }
  rep.reachability = n == 1 ? 1.0 : static_cast<double>(connected) / static_cast<double>(n * (n - 1));
  rep.components = static_cast<int>(std::set<int>(door_labels.begin(), door_labels.end()).size());
  return rep;
}

MetricsReport compute_metrics(const VoxelWorld& world, const SettlementPlan& plan,
                              const TraversalRules& rules, int window) {
  const TerrainMaps maps = compute_terrain(world);
  MetricsReport r;
  r.bigram_entropy = ngram_stats(world, world.bounds(), 2).entropy;
  r.trigram_entropy = ngram_stats(world, world.bounds(), 3).entropy;
  r.spatial_entropy = spatial_entropy(maps, window);
  const FunctionalityReport f = functionality_report(world, maps, plan, rules);
  r.reachability_fraction = f.reachability;
  r.disconnected_components = f.components;
  r.doors_into_water = f.doors_into_water;
  r.structure_count = static_cast<int>(plan.placements.size());
  r.road_cell_count = plan.road_cell_count();
  return r;
}

std::string metrics_json(const MetricsReport& r) {
  using nlohmann::json;
  const json reach = r.reachability_fraction ? json(*r.reachability_fraction) : json(nullptr);
  const json comps = r.disconnected_components ? json(*r.disconnected_components) : json(nullptr);
  json j;
  j["adaptability"] = {{"doors_into_water", r.doors_into_water}};
  j["functionality"] = {{"reachability_fraction", reach},
                        {"disconnected_components", comps},
                        {"road_cell_count", r.road_cell_count}};
  j["evocative_narrative"] = {{"structure_count", r.structure_count}};
  j["aesthetics"] = {{"bigram_entropy", r.bigram_entropy},
                     {"trigram_entropy", r.trigram_entropy},
                     {"spatial_entropy", r.spatial_entropy}};
  return j.dump(2) + "\n";
}

std::vector<RangeRow> expressive_range(const GeneratorFn& gen, const VoxelWorld& world, int k) {
  if (k < 1) throw std::invalid_argument("expressive_range: k must be at least 1");
  std::vector<RangeRow> rows;
  for (int s = 0; s < k; ++s) {
    RangeRow row;
    row.seed = static_cast<std::uint64_t>(s);
    try {
      VoxelWorld copy = world;
      const SettlementPlan plan = gen(copy, row.seed);
      row.report = compute_metrics(copy, plan);
    } catch (const std::exception& e) {
      row.error = e.what();
      if (row.error.empty()) row.error = "generation failed";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RangeRow> expressive_range(std::string_view generator_id, const VoxelWorld& world, int k,
                                       const Config& cfg, std::optional<Rect2> region) {
  if (find_generator(generator_id) == nullptr) {
    throw std::invalid_argument("unknown generator '" + std::string(generator_id) + "'");
  }
  const std::string id(generator_id);
  return expressive_range(
      [&](VoxelWorld& w, std::uint64_t seed) { return run_generator(id, w, cfg, seed, region); },
      world, k);
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

std::string range_csv(const std::vector<RangeRow>& rows) {
  std::ostringstream out;
  out << "seed,bigram_entropy,trigram_entropy,spatial_entropy,reachability,components,"
         "doors_into_water,structures,road_cells\n";
  for (const RangeRow& row : rows) {
    out << row.seed;
    if (!row.report) {
      for (int i = 0; i < 8; ++i) out << ",error";
      out << "\n";
      continue;
    }
    const MetricsReport& r = *row.report;
    out << ',' << num(r.bigram_entropy) << ',' << num(r.trigram_entropy) << ','
        << num(r.spatial_entropy) << ','
        << (r.reachability_fraction ? num(*r.reachability_fraction) : "NA") << ','
        << (r.disconnected_components ? std::to_string(*r.disconnected_components) : "NA") << ','
        << r.doors_into_water << ',' << r.structure_count << ',' << r.road_cell_count << "\n";
  }
  return out.str();
}

}  // namespace settlegen
