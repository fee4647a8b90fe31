#pragma once

#include <string_view>

// Text tables shipped in assets/ and compiled into the library.
namespace settlegen::assets {

std::string_view block_table();
std::string_view biome_table();
std::string_view crop_table();

}  // namespace settlegen::assets
