#include "settlegen/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "settlegen/config.hpp"
#include "settlegen/gdw.hpp"
#include "settlegen/generators.hpp"
#include "settlegen/metrics.hpp"
#include "settlegen/plan.hpp"
#include "settlegen/terrain.hpp"
#include "settlegen/testmaps.hpp"

namespace settlegen {

namespace {

/// Failure carrying the exit code it maps to.
struct CliFailure {
  int code;
  std::string message;
};

std::vector<int> parse_ints(const std::string& text, std::size_t count, const char* what) {
  std::vector<int> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CliFailure{kExitInput, std::string("bad ") + what + ": '" + text + "'"};
    }
  }
  if (v.size() != count) throw CliFailure{kExitInput, std::string("bad ") + what + ": '" + text + "'"};
  return v;
}

std::optional<Rect2> parse_region(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto v = parse_ints(text, 4, "--region (expected x0,z0,x1,z1)");
  const Rect2 r{v[0], v[1], v[2], v[3]};
  if (r.empty()) throw CliFailure{kExitInput, "--region is empty"};
  return r;
}

VoxelWorld load_world(const std::string& path) {
  try {
    return load_gdw(path);
  } catch (const std::exception& e) {
    throw CliFailure{kExitInput, path + ": " + e.what()};
  }
}

Config build_config(const std::string& file, const std::vector<std::string>& sets) {
  try {
    Config cfg = file.empty() ? Config{} : Config::load(file);
    for (const std::string& s : sets) cfg.apply(s);
    return cfg;
  } catch (const ConfigError& e) {
    throw CliFailure{kExitInput, std::string("config: ") + e.what()};
  }
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliFailure{kExitInput, "cannot write " + path};
  f << text;
  if (!f) throw CliFailure{kExitInput, "failed writing " + path};
}

void save_world(const VoxelWorld& world, const std::string& path) {
  try {
    save_gdw(world, path);
  } catch (const std::exception& e) {
    throw CliFailure{kExitInput, "cannot write " + path + ": " + e.what()};
  }
}

SettlementPlan generate(const std::string& gen, VoxelWorld& world, const Config& cfg,
                        std::uint64_t seed, std::optional<Rect2> region) {
  if (find_generator(gen) == nullptr) throw CliFailure{kExitInput, "unknown generator '" + gen + "'"};
  try {
    return run_generator(gen, world, cfg, seed, region);
  } catch (const ConfigError& e) {
    throw CliFailure{kExitInput, std::string("config: ") + e.what()};
  } catch (const GenerationError& e) {
    throw CliFailure{kExitGeneration, std::string("generation failed: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    throw CliFailure{kExitInput, e.what()};
  } catch (const std::exception& e) {
    throw CliFailure{kExitGeneration, std::string("generation failed: ") + e.what()};
  }
}

std::string analyze_json(const VoxelWorld& world, const BoundingBox& box) {
  using nlohmann::json;
  const SiteProfile site = census(world, box);
  const TerrainMaps maps = compute_terrain(world, box);
  const EdgeMap edges = compute_edges(maps, 1);
  const auto regions = buildable_regions(edges, maps.liquid());
  json j;
  j["size"] = {world.size_x(), world.size_y(), world.size_z()};
  j["region"] = {box.min.x, box.min.y, box.min.z, box.max.x, box.max.y, box.max.z};
  json biomes = json::object();
  for (const auto& [id, f] : site.biome_freq) biomes[std::to_string(id)] = f;
  j["census"] = {{"block_freq", site.block_freq},
                 {"wood_freq", site.wood_freq},
                 {"stone_freq", site.stone_freq},
                 {"biome_freq", biomes},
                 {"water_fraction", site.water_fraction},
                 {"fertile_fraction", site.fertile_fraction},
                 {"avg_temperature", site.avg_temperature},
                 {"avg_rainfall", site.avg_rainfall}};
  j["dominant_wood"] = site.dominant_wood();
  j["dominant_stone"] = site.dominant_stone();
  const auto ground = maps.ground.data();
  std::size_t edge_cells = 0;
  for (auto e : edges.edges.data()) edge_cells += e ? 1 : 0;
  j["terrain"] = {
      {"min_ground", ground.empty() ? 0 : *std::min_element(ground.begin(), ground.end())},
      {"max_ground", ground.empty() ? 0 : *std::max_element(ground.begin(), ground.end())},
      {"edge_fraction", ground.empty() ? 0.0 : static_cast<double>(edge_cells) / ground.size()},
      {"buildable_regions", regions.size()},
      {"largest_region", regions.empty() ? 0 : regions.front().cells.size()}};
  json diag = json::array();
  for (const Cell2& c : site.diagnostics) diag.push_back({c.x, c.z});
  j["diagnostics"] = std::move(diag);
  return j.dump(2) + "\n";
}

void write_pgm(const TerrainMaps& maps, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw CliFailure{kExitInput, "cannot write " + path};
  const auto g = maps.ground.data();
  const int hi = g.empty() ? 1 : std::max(1, *std::max_element(g.begin(), g.end()));
  f << "P5\n" << maps.area.width() << ' ' << maps.area.depth() << "\n" << hi << "\n";
  for (int v : g) {
    const int clamped = std::clamp(v, 0, 65535);
    f.put(static_cast<char>(clamped >> 8));
    f.put(static_cast<char>(clamped & 0xff));
  }
}

std::vector<std::pair<std::string, double>> parse_species(const std::string& text) {
  std::vector<std::pair<std::string, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    std::string name = item.substr(0, colon);
    double weight = 1.0;
    if (colon != std::string::npos) {
      try {
        weight = std::stod(item.substr(colon + 1));
      } catch (const std::exception&) {
        throw CliFailure{kExitInput, "bad --species entry '" + item + "'"};
      }
    }
    if (name.empty() || weight <= 0.0) throw CliFailure{kExitInput, "bad --species entry '" + item + "'"};
    out.emplace_back(std::move(name), weight);
  }
  if (out.empty()) throw CliFailure{kExitInput, "--species is empty"};
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Voxel settlement generation toolkit", "settlegen"};
  app.require_subcommand(1);

  std::string gen, config_file, out_path, plan_path, region_text, input, output, plan_in;
  std::vector<std::string> sets;
  std::uint64_t seed = 0;
  int k = 1;

  auto* g = app.add_subcommand("generate", "Generate a settlement into a world");
  g->add_option("input", input, "Input world (.gdw)")->required();
  g->add_option("output", output, "Output world (.gdw)");
  g->add_option("--gen", gen, "incremental|edgemap|partition|grid")->required();
  g->add_option("--seed", seed, "Random seed");
  g->add_option("--config", config_file, "key=value settings file");
  g->add_option("--set", sets, "key=value override (repeatable)")
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  g->add_option("--out", out_path, "Output world (alternative to the positional)");
  g->add_option("--plan", plan_path, "Plan JSON path (default <out>.plan.json)");
  g->add_option("--region", region_text, "Column region x0,z0,x1,z1");

  std::string pgm_path;
  auto* a = app.add_subcommand("analyze", "Report census and terrain statistics");
  a->add_option("input", input, "Input world (.gdw)")->required();
  a->add_option("--out", out_path, "JSON output path (default stdout)");
  a->add_option("--region", region_text, "Column region x0,z0,x1,z1");
  a->add_option("--pgm", pgm_path, "Also write the ground heightmap as a PGM image");

  auto* m = app.add_subcommand("metrics", "Compute the metrics report for a generated world");
  m->add_option("input", input, "Generated world (.gdw)")->required();
  m->add_option("plan", plan_in, "Plan JSON")->required();
  m->add_option("--out", out_path, "JSON output path (default stdout)");

  auto* r = app.add_subcommand("range", "Expressive-range sampling over seeds 0..k-1");
  r->add_option("input", input, "Input world (.gdw)")->required();
  r->add_option("--gen", gen, "incremental|edgemap|partition|grid")->required();
  r->add_option("--k", k, "Number of seeds")->check(CLI::PositiveNumber);
  r->add_option("--config", config_file, "key=value settings file");
  r->add_option("--set", sets, "key=value override (repeatable)")
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  r->add_option("--region", region_text, "Column region x0,z0,x1,z1");
  r->add_option("--out", out_path, "CSV output path (default stdout)");

  std::string map_kind, size_text, species_text;
  int biome = -1;
  double density = -1.0;
  auto* t = app.add_subcommand("make-testmap", "Write a synthetic test terrain");
  t->add_option("kind", map_kind, "flat|river|island")->required();
  t->add_option("output", output, "Output world (.gdw)");
  t->add_option("--out", out_path, "Output world (alternative to the positional)");
  t->add_option("--seed", seed, "Random seed");
  t->add_option("--size", size_text, "World size x,y,z (default 128,64,128)");
  t->add_option("--species", species_text, "Tree species weights, e.g. jungle:0.7,oak:0.3");
  t->add_option("--biome", biome, "Biome id for land columns");
  t->add_option("--tree-density", density, "Chance per land column of a tree");

  std::vector<const char*> argv{"settlegen"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (g->parsed()) {
      const std::string dest = !out_path.empty() ? out_path : output;
      if (dest.empty()) throw CliFailure{kExitInput, "generate needs an output path"};
      const std::string plan_dest = plan_path.empty() ? dest + ".plan.json" : plan_path;
      const Config cfg = build_config(config_file, sets);
      const auto region = parse_region(region_text);
      VoxelWorld world = load_world(input);
      const SettlementPlan plan = generate(gen, world, cfg, seed, region);
      save_world(world, dest);
      write_text(plan_dest, serialize_plan(plan), out);
      for (const std::string& note : plan.notes) err << "note: " << note << "\n";
      return kExitOk;
    }
    if (a->parsed()) {
      const VoxelWorld world = load_world(input);
      const auto region = parse_region(region_text);
      const Rect2 cols = region.value_or(world.columns()).clipped(world.columns());
      if (cols.empty()) throw CliFailure{kExitInput, "--region lies outside the world"};
      const BoundingBox box = column_box(world, cols);
      write_text(out_path, analyze_json(world, box), out);
      if (!pgm_path.empty()) write_pgm(compute_terrain(world, box), pgm_path);
      return kExitOk;
    }
    if (m->parsed()) {
      const VoxelWorld world = load_world(input);
      std::ifstream f(plan_in, std::ios::binary);
      if (!f) throw CliFailure{kExitInput, "cannot read " + plan_in};
      std::stringstream ss;
      ss << f.rdbuf();
      SettlementPlan plan;
      try {
        plan = parse_plan(ss.str());
      } catch (const std::exception& e) {
        throw CliFailure{kExitInput, plan_in + ": " + e.what()};
      }
      const std::string actual = hash_hex(world_hash(world));
      if (!plan.world_hash.empty() && plan.world_hash != actual) {
        throw CliFailure{kExitConsistency, "plan was generated for world " + plan.world_hash +
                                               " but the input world hashes to " + actual};
      }
      write_text(out_path, metrics_json(compute_metrics(world, plan)), out);
      return kExitOk;
    }
    if (r->parsed()) {
      const Config cfg = build_config(config_file, sets);
      const auto region = parse_region(region_text);
      const VoxelWorld world = load_world(input);
      if (find_generator(gen) == nullptr) throw CliFailure{kExitInput, "unknown generator '" + gen + "'"};
      const auto rows = expressive_range(gen, world, k, cfg, region);
      for (const RangeRow& row : rows) {
        if (!row.report) err << "seed " << row.seed << ": " << row.error << "\n";
      }
      write_text(out_path, range_csv(rows), out);
      return kExitOk;
    }
    if (t->parsed()) {
      const std::string dest = !out_path.empty() ? out_path : output;
      if (dest.empty()) throw CliFailure{kExitInput, "make-testmap needs an output path"};
      TestMapOptions opt;
      opt.seed = seed;
      if (!size_text.empty()) {
        const auto s = parse_ints(size_text, 3, "--size (expected x,y,z)");
        opt.size_x = s[0];
        opt.size_y = s[1];
        opt.size_z = s[2];
      }
      if (!species_text.empty()) opt.species = parse_species(species_text);
      if (biome >= 0) {
        if (biome > 255) throw CliFailure{kExitInput, "--biome must be 0..255"};
        opt.biome = static_cast<std::uint8_t>(biome);
      }
      if (density >= 0.0) opt.tree_density = density;
      TestMapKind kind;
      VoxelWorld world;
      try {
        kind = parse_test_map_kind(map_kind);
        world = make_test_map(kind, opt);
      } catch (const std::invalid_argument& e) {
        throw CliFailure{kExitInput, e.what()};
      }
      save_world(world, dest);
      return kExitOk;
    }
  } catch (const CliFailure& f) {
    err << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace settlegen
