// gratio: enclosures, verification sweeps, and function tables on the
// command line.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gratio/cli_parse.hpp"
#include "gratio/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Output stream selection: file when --output given, stdout otherwise.
struct Sink {
  std::unique_ptr<std::ofstream> file;
  std::ostream& stream(const std::string& path) {
    if (path.empty()) return std::cout;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw std::invalid_argument("cannot open output file: " + path);
    return *file;
  }
};

void emit_report(const gratio::GridReport& report, const gratio::cli::RunSpec& spec,
                 bool plain_all_rows) {
  Sink sink;
  std::ostream& os = sink.stream(spec.output_path);
  if (spec.format == "csv") {
    report.write_csv(os);
  } else if (spec.format == "json") {
    report.write_json(os);
  } else {
    for (const auto& r : report.rows) {
      if (!plain_all_rows && r.status == gratio::RowStatus::kPass) continue;
      os << r.label;
      if (!std::isnan(r.x)) os << " x=" << fmt_num(r.x);
      if (!std::isnan(r.t)) os << " t=" << fmt_num(r.t);
      if (r.m >= 0) os << " m=" << r.m;
      if (r.n >= 0) os << " n=" << r.n;
      if (r.k >= 0) os << " k=" << r.k;
      if (!std::isnan(r.lower)) os << " lower=" << fmt_num(r.lower);
      if (!std::isnan(r.value)) os << " value=" << fmt_num(r.value);
      if (!std::isnan(r.upper)) os << " upper=" << fmt_num(r.upper);
      os << " status=" << gratio::to_string(r.status) << '\n';
    }
  }
}

int run_bounds(const gratio::cli::RunSpec& spec, const std::string& kind_name, int m1, int m2) {
  const gratio::RatioKind kind =
      kind_name == "G" ? gratio::RatioKind::kG : gratio::RatioKind::kH;
  gratio::GridReport report;
  bool all_contained = true;
  for (double x : spec.x_list) {
    for (double t : spec.t_list) {
      const gratio::Enclosure e = gratio::enclose(kind, x, t, m1, m2);
      const gratio::ValueErr lo = kind == gratio::RatioKind::kG
                                      ? gratio::log_gamma_ratio_G(x, t, spec.cfg)
                                      : gratio::log_gamma_ratio_H(x, t, spec.cfg);
      const double oracle = std::exp(lo.value);
      const bool contained = e.lower <= oracle && oracle <= e.upper;
      all_contained = all_contained && contained;
      gratio::GridRow row;
      row.label = std::string("bounds:") + kind_name + " m1=" + std::to_string(m1) +
                  " m2=" + std::to_string(m2);
      row.x = x;
      row.t = t;
      row.lower = e.lower;
      row.value = oracle;
      row.upper = e.upper;
      row.margin_low = oracle - e.lower;
      row.margin_high = e.upper - oracle;
      row.status = contained ? gratio::RowStatus::kPass : gratio::RowStatus::kFail;
      report.rows.push_back(std::move(row));
    }
  }
  if (spec.format == "plain") {
    Sink sink;
    std::ostream& os = sink.stream(spec.output_path);
    for (const auto& r : report.rows)
      os << "kind=" << kind_name << " x=" << fmt_num(r.x) << " t=" << fmt_num(r.t)
         << " m1=" << m1 << " m2=" << m2 << " lower=" << fmt_num(r.lower)
         << " oracle=" << fmt_num(r.value) << " upper=" << fmt_num(r.upper) << " contained="
         << (r.status == gratio::RowStatus::kPass ? "true" : "false") << '\n';
  } else {
    emit_report(report, spec, true);
  }
  return all_contained ? kExitOk : kExitViolation;
}

int run_verify(const gratio::cli::RunSpec& spec, const std::string& suite) {
  gratio::GridReport report;
  if (suite == "sandwich")
    report = gratio::suites::sandwich(spec.x_list, spec.t_list, spec.m_list, spec.cfg);
  else if (suite == "signs")
    report = gratio::suites::signs(spec.cfg);
  else if (suite == "kernels")
    report = gratio::suites::kernels();
  else if (suite == "fourier")
    report = gratio::suites::fourier();
  else if (suite == "integrals")
    report = gratio::suites::integrals(spec.cfg);
  else if (suite == "cm")
    report = gratio::suites::cm(spec.m_list, spec.x_list, spec.t_list, spec.k_max, spec.cfg);
  else if (suite == "classical")
    report = gratio::suites::classical(spec.n_max, spec.cfg);
  else
    throw std::invalid_argument("unknown suite: " + suite);

  emit_report(report, spec, false);
  const int fails = report.failures();
  const int indet = report.indeterminates();
  std::cerr << "suite=" << suite << " rows=" << report.rows.size() << " failures=" << fails
            << " indeterminate=" << indet << '\n';
  return fails == 0 ? kExitOk : kExitViolation;
}

int run_table(const gratio::cli::RunSpec& spec, const std::string& fn, int m, int L) {
  gratio::GridReport report;
  auto add = [&](double x, double t, double value) {
    gratio::GridRow row;
    row.label = "table:" + fn;
    if (!std::isnan(x)) row.x = x;
    row.t = t;
    if (m >= 0) row.m = m;
    row.value = value;
    report.rows.push_back(std::move(row));
  };
  if (fn == "S") {
    if (spec.x_list.empty() || spec.u_list.empty())
      throw std::invalid_argument("table --fn S needs --x and --u");
    for (double x : spec.x_list)
      for (double u : spec.u_list) add(x, u, gratio::s_kernel({x, u, L}));
  } else if (fn == "G" || fn == "H") {
    if (spec.x_list.empty() || spec.t_list.empty() || m < 0)
      throw std::invalid_argument("table --fn G/H needs --m, --x and --t");
    for (double x : spec.x_list)
      for (double t : spec.t_list)
        add(x, t,
            fn == "G" ? gratio::residual_G(m, x, t, spec.cfg).value
                      : gratio::residual_H(m, x, t, spec.cfg).value);
  } else {
    static const std::map<std::string, gratio::LegacyFn> names = {
        {"F", gratio::LegacyFn::kF},
        {"U", gratio::LegacyFn::kU},
        {"V", gratio::LegacyFn::kV},
        {"mu", gratio::LegacyFn::kMu},
        {"nu", gratio::LegacyFn::kNu}};
    const auto it = names.find(fn);
    if (it == names.end()) throw std::invalid_argument("unknown function: " + fn);
    if (spec.t_list.empty() || m < 0)
      throw std::invalid_argument("table --fn " + fn + " needs --m and --t");
    for (double t : spec.t_list)
      add(std::nan(""), t, gratio::legacy(it->second, m, t, spec.cfg));
  }
  if (spec.format == "plain") {
    Sink sink;
    std::ostream& os = sink.stream(spec.output_path);
    for (const auto& r : report.rows) {
      os << "fn=" << fn;
      if (!std::isnan(r.x)) os << " x=" << fmt_num(r.x);
      os << " t=" << fmt_num(r.t) << " value=" << fmt_num(r.value) << '\n';
    }
  } else {
    emit_report(report, spec, true);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified gamma-ratio enclosures and verification sweeps"};
  app.require_subcommand(1);

  gratio::cli::RunSpec spec;
  std::string x_text, t_text, u_text, m_text, config_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", spec.format, "Output format: csv|json|plain")
        ->check(CLI::IsMember({"csv", "json", "plain"}))
        ->capture_default_str();
    sub->add_option("--output", spec.output_path, "Write output to this file (default stdout)");
    sub->add_option("--config", config_path, "key=value config file; flags override it");
    sub->add_option("--seed", spec.seed, "Grid sampling seed (fixed default, reproducible)")
        ->capture_default_str();
    sub->add_option("--abs-tol", spec.cfg.abs_tol, "Absolute tolerance for quadrature")
        ->capture_default_str();
    sub->add_option("--rel-tol", spec.cfg.rel_tol, "Relative tolerance for oracles")
        ->capture_default_str();
  };

  std::string kind = "H";
  int m1 = 0, m2 = 0;
  CLI::App* bounds = app.add_subcommand("bounds", "Two-sided enclosure vs oracle value");
  bounds->add_option("--kind", kind, "Ratio family: G|H")
      ->check(CLI::IsMember({"G", "H"}))
      ->capture_default_str();
  bounds->add_option("--x", x_text, "x values: comma list, a:b:step, rationals p/q")
      ->required();
  bounds->add_option("--t", t_text, "t values: comma list or a:b:step")->required();
  bounds->add_option("--m1", m1, "Lower-bound truncation order")->capture_default_str();
  bounds->add_option("--m2", m2, "Upper-bound truncation order")->capture_default_str();
  add_common(bounds);

  std::string suite;
  CLI::App* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("suite", suite,
                     "One of: sandwich signs kernels fourier integrals cm classical")
      ->required();
  verify->add_option("--x", x_text, "x grid override");
  verify->add_option("--t", t_text, "t grid override");
  verify->add_option("--m", m_text, "m list override, e.g. 0..3");
  verify->add_option("--k-max", spec.k_max, "Highest derivative order (cm suite)")
      ->capture_default_str();
  verify->add_option("--n-max", spec.n_max, "Largest n (classical suite)")
      ->capture_default_str();
  add_common(verify);

  std::string fn;
  int table_m = -1, table_L = 0;
  CLI::App* table = app.add_subcommand("table", "Tabulate a function over a grid");
  table->add_option("--fn", fn, "One of: G H F U V mu nu S")->required();
  table->add_option("--m", table_m, "Truncation order");
  table->add_option("--L", table_L, "Kernel index (fn S)")->capture_default_str();
  table->add_option("--x", x_text, "x values");
  table->add_option("--t", t_text, "t values");
  table->add_option("--u", u_text, "u values (fn S)");
  add_common(table);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!config_path.empty())
      gratio::cli::apply_config(spec, gratio::cli::parse_config_file(config_path));
    if (!x_text.empty()) spec.x_list = gratio::cli::parse_double_list(x_text);
    if (!t_text.empty()) spec.t_list = gratio::cli::parse_double_list(t_text);
    if (!u_text.empty()) spec.u_list = gratio::cli::parse_double_list(u_text);
    if (!m_text.empty()) spec.m_list = gratio::cli::parse_int_list(m_text);
    spec.cfg.validate();

    if (bounds->parsed()) return run_bounds(spec, kind, m1, m2);
    if (verify->parsed()) return run_verify(spec, suite);
    return run_table(spec, fn, table_m, table_L);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
