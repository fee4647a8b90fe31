#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace settlegen {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Flat key=value settings. Blank lines and lines starting with '#' are
/// ignored; later assignments win.
class Config {
 public:
  Config() = default;
  explicit Config(const std::map<std::string, std::string>& entries)
      : entries_(entries.begin(), entries.end()) {}

  static Config parse(std::string_view text);
  static Config load(const std::filesystem::path& path);

  void set(std::string key, std::string value) { entries_[std::move(key)] = std::move(value); }
  /// Applies a single "key=value" override.
  void apply(std::string_view assignment);

  bool has(std::string_view key) const { return entries_.find(key) != entries_.end(); }
  std::string get_string(std::string_view key, std::string_view fallback) const;
  int get_int(std::string_view key, int fallback) const;
  std::uint64_t get_u64(std::string_view key, std::uint64_t fallback) const;
  double get_double(std::string_view key, double fallback) const;
  bool get_bool(std::string_view key, bool fallback) const;

  const std::map<std::string, std::string, std::less<>>& entries() const { return entries_; }
  std::map<std::string, std::string> snapshot() const { return {entries_.begin(), entries_.end()}; }

 private:
  std::map<std::string, std::string, std::less<>> entries_;
};

}  // namespace settlegen
