#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "graphscan/scenario.hpp"

namespace graphscan {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat `key = value` configuration file. `#` starts a comment, blank lines
/// are ignored, duplicate keys are rejected. Every entry remembers its line
/// so type and cross-field violations can point at the offending input.
class KeyValueConfig {
 public:
  KeyValueConfig() = default;

  static KeyValueConfig parse(std::istream& in, std::string source_name) {
    KeyValueConfig config;
    config.source_ = std::move(source_name);
    std::string line;
    std::uint64_t line_number = 0;
    while (std::getline(in, line)) {
      ++line_number;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const std::string trimmed = trim(line);
      if (trimmed.empty()) continue;
      const std::size_t eq = trimmed.find('=');
      if (eq == std::string::npos) {
        throw ConfigError(config.at_line(line_number) +
                          "expected `key = value`");
      }
      const std::string key = trim(trimmed.substr(0, eq));
      const std::string value = trim(trimmed.substr(eq + 1));
      if (key.empty()) {
        throw ConfigError(config.at_line(line_number) + "empty key");
      }
      if (config.entries_.count(key) != 0) {
        throw ConfigError(config.at_line(line_number) + "duplicate key `" +
                          key + "` (first set on line " +
                          std::to_string(config.entries_[key].line) + ")");
      }
      config.entries_[key] = Entry{value, line_number, false};
    }
    return config;
  }

  bool has(const std::string& key) const { return entries_.count(key) != 0; }

  std::optional<std::string> get_string(const std::string& key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    it->second.consumed = true;
    return it->second.value;
  }

  std::optional<double> get_double(const std::string& key) const {
    auto raw = get_string(key);
    if (!raw) return std::nullopt;
    try {
      std::size_t pos = 0;
      const double v = std::stod(*raw, &pos);
      if (pos != raw->size()) throw std::invalid_argument("trailing text");
      return v;
    } catch (const std::exception&) {
      throw ConfigError(at_key(key) + "expected a real number, got `" + *raw +
                        "`");
    }
  }

  std::optional<std::uint64_t> get_u64(const std::string& key) const {
    auto raw = get_string(key);
    if (!raw) return std::nullopt;
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(*raw, &pos);
      if (pos != raw->size()) throw std::invalid_argument("trailing text");
      return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw ConfigError(at_key(key) + "expected a nonnegative integer, got `" +
                        *raw + "`");
    }
  }

  std::optional<std::uint32_t> get_u32(const std::string& key) const {
    auto v = get_u64(key);
    if (!v) return std::nullopt;
    if (*v > 0xffffffffull) {
      throw ConfigError(at_key(key) + "value too large");
    }
    return static_cast<std::uint32_t>(*v);
  }

  /// Change point: a positive integer or `inf`.
  std::optional<std::uint64_t> get_change_point(const std::string& key) const {
    auto raw = get_string(key);
    if (!raw) return std::nullopt;
    if (*raw == "inf" || *raw == "Inf" || *raw == "INF") return kTauInfinity;
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(*raw, &pos);
      if (pos != raw->size() || v == 0) throw std::invalid_argument("bad");
      return static_cast<std::uint64_t>(v);
    } catch (const std::exception&) {
      throw ConfigError(at_key(key) +
                        "expected a positive integer or `inf`, got `" + *raw +
                        "`");
    }
  }

  std::optional<std::vector<std::uint32_t>> get_u32_list(
      const std::string& key) const {
    auto raw = get_string(key);
    if (!raw) return std::nullopt;
    std::vector<std::uint32_t> out;
    std::stringstream ss(*raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string t = trim(item);
      try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(t, &pos);
        if (pos != t.size() || v > 0xffffffffull) {
          throw std::invalid_argument("bad");
        }
        out.push_back(static_cast<std::uint32_t>(v));
      } catch (const std::exception&) {
        throw ConfigError(at_key(key) + "expected comma-separated indices");
      }
    }
    if (out.empty()) {
      throw ConfigError(at_key(key) + "expected a nonempty list");
    }
    return out;
  }

  std::optional<std::vector<double>> get_double_list(
      const std::string& key) const {
    auto raw = get_string(key);
    if (!raw) return std::nullopt;
    std::vector<double> out;
    std::stringstream ss(*raw);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const std::string t = trim(item);
      try {
        std::size_t pos = 0;
        const double v = std::stod(t, &pos);
        if (pos != t.size()) throw std::invalid_argument("bad");
        out.push_back(v);
      } catch (const std::exception&) {
        throw ConfigError(at_key(key) + "expected comma-separated reals");
      }
    }
    if (out.empty()) {
      throw ConfigError(at_key(key) + "expected a nonempty list");
    }
    return out;
  }

  /// Error anchored at a key's definition line (for cross-field checks).
  ConfigError error_at(const std::string& key,
                       const std::string& message) const {
    return ConfigError(at_key(key) + message);
  }

  /// Fails if any key was never consumed by a getter: catches typos early.
  void ensure_all_consumed() const {
    for (const auto& [key, entry] : entries_) {
      if (!entry.consumed) {
        throw ConfigError(at_line(entry.line) + "unknown key `" + key + "`");
      }
    }
  }

 private:
  struct Entry {
    std::string value;
    std::uint64_t line = 0;
    mutable bool consumed = false;
  };

  static std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
      --e;
    return s.substr(b, e - b);
  }

  std::string at_line(std::uint64_t line) const {
    return source_ + ":" + std::to_string(line) + ": ";
  }

  std::string at_key(const std::string& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? source_ + ": " : at_line(it->second.line);
  }

  std::string source_ = "<config>";
  std::map<std::string, Entry> entries_;
};

}  // namespace graphscan
