#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gratio/config.hpp"

// Grid/range parsing shared by the CLI subcommands.
//
// Accepted forms for numeric lists:
//   "0.1,0.25,1/3"   comma list, each entry a double or exact rational p/q
//   "1:10:1"         a:b:step inclusive range
//   "0..3"           integer range (int lists only)

namespace gratio::cli {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eed5eedULL;

struct RunSpec {
  std::string subcommand;
  std::vector<double> x_list;
  std::vector<double> t_list;
  std::vector<double> u_list;
  std::vector<int> m_list;
  int k_max = 6;
  long long n_max = 10'000;
  std::string format = "plain";  // csv | json | plain
  std::string output_path;       // empty = stdout
  std::uint64_t seed = kDefaultSeed;
  EvalConfig cfg;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

}  // namespace detail

/// One scalar: plain double or exact rational "p/q".
inline double parse_scalar(const std::string& token) {
  const std::string s = detail::trim(token);
  if (s.empty()) throw std::invalid_argument("empty numeric token");
  const auto slash = s.find('/');
  std::size_t pos = 0;
  if (slash != std::string::npos) {
    const double p = std::stod(s.substr(0, slash), &pos);
    if (pos != slash) throw std::invalid_argument("bad rational: " + s);
    const double q = std::stod(s.substr(slash + 1), &pos);
    if (pos != s.size() - slash - 1 || q == 0.0)
      throw std::invalid_argument("bad rational: " + s);
    return p / q;
  }
  const double v = std::stod(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
  return v;
}

/// Comma list or a:b:step range of doubles.
inline std::vector<double> parse_double_list(const std::string& text) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw std::invalid_argument("empty list");
  if (s.find(':') != std::string::npos) {
    const auto parts = detail::split(s, ':');
    if (parts.size() != 3) throw std::invalid_argument("range must be a:b:step: " + s);
    const double a = parse_scalar(parts[0]);
    const double b = parse_scalar(parts[1]);
    const double step = parse_scalar(parts[2]);
    if (!(step > 0)) throw std::invalid_argument("range step must be positive: " + s);
    if (b < a) throw std::invalid_argument("range end precedes start: " + s);
    std::vector<double> out;
    // i-based stepping keeps endpoints exact for representable grids
    const long long count = static_cast<long long>(std::floor((b - a) / step + 1e-9)) + 1;
    for (long long i = 0; i < count; ++i) out.push_back(a + static_cast<double>(i) * step);
    return out;
  }
  std::vector<double> out;
  for (const auto& tok : detail::split(s, ',')) out.push_back(parse_scalar(tok));
  return out;
}

/// Comma list or a..b range of integers.
inline std::vector<int> parse_int_list(const std::string& text) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw std::invalid_argument("empty list");
  const auto dots = s.find("..");
  if (dots != std::string::npos) {
    const int a = std::stoi(s.substr(0, dots));
    const int b = std::stoi(s.substr(dots + 2));
    if (b < a) throw std::invalid_argument("range end precedes start: " + s);
    std::vector<int> out;
    for (int i = a; i <= b; ++i) out.push_back(i);
    return out;
  }
  std::vector<int> out;
  for (const auto& tok : detail::split(s, ',')) {
    std::size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("bad integer: " + tok);
    out.push_back(v);
  }
  return out;
}

/// key=value config file; '#' starts a comment. Returns the parsed pairs.
inline std::map<std::string, std::string> parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string s = detail::trim(line);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("config line missing '=': " + s);
    kv[detail::trim(s.substr(0, eq))] = detail::trim(s.substr(eq + 1));
  }
  return kv;
}

/// Applies recognized config keys to the spec; unknown keys are an error.
inline void apply_config(RunSpec& spec, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    if (key == "abs_tol")
      spec.cfg.abs_tol = parse_scalar(value);
    else if (key == "rel_tol")
      spec.cfg.rel_tol = parse_scalar(value);
    else if (key == "quad_points")
      spec.cfg.quad_points = std::stoi(value);
    else if (key == "quad_cutoff")
      spec.cfg.quad_cutoff = parse_scalar(value);
    else if (key == "series_terms")
      spec.cfg.series_terms = std::stoll(value);
    else if (key == "product_terms")
      spec.cfg.product_terms = std::stoll(value);
    else if (key == "format")
      spec.format = value;
    else if (key == "output")
      spec.output_path = value;
    else if (key == "seed")
      spec.seed = std::stoull(value);
    else
      throw std::invalid_argument("unknown config key: " + key);
  }
}

}  // namespace gratio::cli
