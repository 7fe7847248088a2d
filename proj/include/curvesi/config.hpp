#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "curvesi/error.hpp"
#include "curvesi/intersect.hpp"
#include "curvesi/reps.hpp"

namespace curvesi {

struct Config {
  Surface surface = Surface::torus;
  RepParams point1 = kFingerprintParams1;
  RepParams point2 = kFingerprintParams2;
  bool quotient_inversion = false;
  std::size_t workers = 1;
  std::filesystem::path out_dir = "curvesi-out";
  double tolerance = 1e-9;  // relative, float mode only

  void validate() const {
    const auto p1 = matrices_for_params<BigInt>(point1).second;
    const auto p2 = matrices_for_params<BigInt>(point2).second;
    if (p1 == p2) throw Error(ErrorCode::InvalidConfig, "fingerprint parameter triples give the same trace point");
    if (workers == 0) throw Error(ErrorCode::InvalidConfig, "workers must be positive");
    if (!(tolerance > 0.0)) throw Error(ErrorCode::InvalidConfig, "tolerance must be positive");
  }
};

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

/// Comma-separated numbers, e.g. "3,2,1".
template <class T>
std::vector<T> parse_number_list(std::string_view text, std::size_t expected) {
  std::vector<T> out;
  std::stringstream ss{std::string(text)};
  ss.imbue(std::locale::classic());
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(trim(item));
    is.imbue(std::locale::classic());
    T v{};
    if (!(is >> v) || !is.eof()) throw Error(ErrorCode::ParseError, "bad number '" + item + "' in '" + std::string(text) + "'");
    out.push_back(v);
  }
  if (out.size() != expected)
    throw Error(ErrorCode::ParseError, "expected " + std::to_string(expected) + " comma-separated values, got '" +
                                           std::string(text) + "'");
  return out;
}

inline RepParams parse_rep_params(std::string_view text) {
  const auto v = parse_number_list<std::int64_t>(text, 3);
  return {v[0], v[1], v[2]};
}

inline bool parse_bool(std::string_view text) {
  const std::string t = trim(text);
  if (t == "1" || t == "true" || t == "yes" || t == "on") return true;
  if (t == "0" || t == "false" || t == "no" || t == "off") return false;
  throw Error(ErrorCode::ParseError, "bad boolean '" + t + "'");
}

/// Applies "key = value" lines; '#' starts a comment.
inline void apply_config_text(Config& cfg, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorCode::InvalidConfig, "line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "surface")
      cfg.surface = parse_surface(value);
    else if (key == "point1")
      cfg.point1 = parse_rep_params(value);
    else if (key == "point2")
      cfg.point2 = parse_rep_params(value);
    else if (key == "quotient_inversion")
      cfg.quotient_inversion = parse_bool(value);
    else if (key == "workers")
      cfg.workers = parse_number_list<std::size_t>(value, 1)[0];
    else if (key == "out")
      cfg.out_dir = value;
    else if (key == "tolerance")
      cfg.tolerance = parse_number_list<double>(value, 1)[0];
    else
      throw Error(ErrorCode::InvalidConfig, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
}

inline void apply_config_file(Config& cfg, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot read config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  apply_config_text(cfg, buf.str());
}

inline constexpr const char* kWorkersEnv = "CURVESI_WORKERS";

/// Defaults, then the CURVESI_WORKERS environment variable.
inline Config default_config() {
  Config cfg;
  if (const char* env = std::getenv(kWorkersEnv); env && *env)
    cfg.workers = parse_number_list<std::size_t>(env, 1)[0];
  return cfg;
}

}  // namespace curvesi
