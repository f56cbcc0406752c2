#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace gratio {

enum class RowStatus { kPass, kFail, kIndeterminate };

inline const char* to_string(RowStatus s) {
  switch (s) {
    case RowStatus::kPass: return "pass";
    case RowStatus::kFail: return "fail";
    default: return "indeterminate";
  }
}

/// One verification point. Fields that do not apply stay NaN / -1 and are
/// left empty in CSV, omitted in JSON.
struct GridRow {
  std::string label;  // family / suite / parameter tag
  double x = std::nan("");
  double t = std::nan("");
  int m = -1;
  long long n = -1;
  int k = -1;
  double h = std::nan("");
  double lower = std::nan("");
  double value = std::nan("");
  double upper = std::nan("");
  double margin_low = std::nan("");
  double margin_high = std::nan("");
  double noise_band = std::nan("");
  RowStatus status = RowStatus::kPass;
};

struct GridReport {
  std::vector<GridRow> rows;

  int failures() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const GridRow& r) {
      return r.status == RowStatus::kFail;
    }));
  }
  int indeterminates() const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const GridRow& r) {
      return r.status == RowStatus::kIndeterminate;
    }));
  }
  bool all_pass() const { return failures() == 0; }

  /// Most negative margin observed (0 if every margin is nonnegative).
  double max_violation() const {
    double worst = 0.0;
    for (const auto& r : rows) {
      if (!std::isnan(r.margin_low)) worst = std::min(worst, r.margin_low);
      if (!std::isnan(r.margin_high)) worst = std::min(worst, r.margin_high);
    }
    return worst;
  }

  void append(const GridReport& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  }

  void write_csv(std::ostream& os) const;
  void write_json(std::ostream& os) const;
  nlohmann::json to_json() const;
};

namespace detail {

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

inline std::string num_field(double v) {
  if (std::isnan(v)) return "";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string int_field(long long v) { return v < 0 ? "" : std::to_string(v); }

}  // namespace detail

inline void GridReport::write_csv(std::ostream& os) const {
  os << "label,x,t,m,n,k,h,lower,value,upper,margin_low,margin_high,noise_band,status\r\n";
  for (const auto& r : rows) {
    os << detail::csv_quote(r.label) << ',' << detail::num_field(r.x) << ','
       << detail::num_field(r.t) << ',' << detail::int_field(r.m) << ','
       << detail::int_field(r.n) << ',' << detail::int_field(r.k) << ','
       << detail::num_field(r.h) << ',' << detail::num_field(r.lower) << ','
       << detail::num_field(r.value) << ',' << detail::num_field(r.upper) << ','
       << detail::num_field(r.margin_low) << ',' << detail::num_field(r.margin_high) << ','
       << detail::num_field(r.noise_band) << ',' << to_string(r.status) << "\r\n";
  }
}

inline nlohmann::json GridReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json rec;
    rec["label"] = r.label;
    auto put = [&](const char* key, double v) {
      if (!std::isnan(v)) rec[key] = v;
    };
    put("x", r.x);
    put("t", r.t);
    if (r.m >= 0) rec["m"] = r.m;
    if (r.n >= 0) rec["n"] = r.n;
    if (r.k >= 0) rec["k"] = r.k;
    put("h", r.h);
    put("lower", r.lower);
    put("value", r.value);
    put("upper", r.upper);
    put("margin_low", r.margin_low);
    put("margin_high", r.margin_high);
    put("noise_band", r.noise_band);
    rec["status"] = to_string(r.status);
    arr.push_back(std::move(rec));
  }
  return arr;
}

inline void GridReport::write_json(std::ostream& os) const { os << to_json().dump(2) << '\n'; }

}  // namespace gratio
