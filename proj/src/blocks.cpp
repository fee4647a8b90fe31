#include "settlegen/blocks.hpp"

#include <sstream>
#include <stdexcept>

#include "settlegen/assets.hpp"

namespace settlegen {

std::string_view to_string(BlockCategory c) {
  switch (c) {
    case BlockCategory::solid: return "solid";
    case BlockCategory::vegetation: return "vegetation";
    case BlockCategory::water: return "water";
    case BlockCategory::lava: return "lava";
    case BlockCategory::air: return "air";
    case BlockCategory::crafted: return "crafted";
  }
  return "crafted";
}

namespace {

BlockCategory parse_category(const std::string& s, int line) {
  if (s == "solid") return BlockCategory::solid;
  if (s == "vegetation") return BlockCategory::vegetation;
  if (s == "water") return BlockCategory::water;
  if (s == "lava") return BlockCategory::lava;
  if (s == "air") return BlockCategory::air;
  if (s == "crafted") return BlockCategory::crafted;
  throw std::runtime_error("block table line " + std::to_string(line) + ": unknown category '" +
                           s + "'");
}

}  // namespace

BlockTable BlockTable::parse(std::string_view text) {
  BlockTable table;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::string name;
    std::string category;
    if (!(fields >> name)) continue;
    if (!(fields >> category)) {
      throw std::runtime_error("block table line " + std::to_string(line) + ": missing category");
    }
    BlockInfo info;
    info.category = parse_category(category, line);
    std::string tag;
    while (fields >> tag) {
      if (tag == "tree") {
        info.tree = true;
      } else if (tag == "fertile") {
        info.fertile = true;
      } else if (tag.starts_with("wood=")) {
        info.wood_species = tag.substr(5);
      } else if (tag.starts_with("stone=")) {
        info.stone_species = tag.substr(6);
      } else {
        throw std::runtime_error("block table line " + std::to_string(line) + ": unknown tag '" +
                                 tag + "'");
      }
    }
    if (!table.entries_.emplace(name, std::move(info)).second) {
      throw std::runtime_error("block table line " + std::to_string(line) + ": duplicate name '" +
                               name + "'");
    }
  }
  return table;
}

const BlockTable& BlockTable::standard() {
  static const BlockTable table = parse(assets::block_table());
  return table;
}

std::string_view base_name(std::string_view name) {
  if (!name.empty() && name.back() == ']') {
    if (auto open = name.find('['); open != std::string_view::npos) return name.substr(0, open);
  }
  return name;
}

const BlockInfo& BlockTable::classify(std::string_view name) const {
  static const BlockInfo kCrafted{};
  auto it = entries_.find(base_name(name));
  return it == entries_.end() ? kCrafted : it->second;
}

bool BlockTable::known(std::string_view name) const {
  return entries_.find(base_name(name)) != entries_.end();
}

}  // namespace settlegen
