#pragma once

// Command-line front end: alpha, table, seven-cubes and verify subcommands
// with json, csv or text output. run() is the whole program; main() only
// forwards to it.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "primeap/errors.hpp"
#include "primeap/sevencubes.hpp"
#include "primeap/sievelab.hpp"
#include "primeap/solver.hpp"

namespace primeap::cli {

inline constexpr const char* kVersion = "0.1.0";

enum class Format { json, csv, text };

struct RunConfig {
  std::string command;
  Format format = Format::json;
  std::string output_path;
  unsigned workers = 1;
  bool full_precision = false;
  bool timestamp = false;
};

// A result in two shapes: a JSON object and a flat table for csv/text.
struct Payload {
  nlohmann::ordered_json json;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::ordered_json>> rows;
  bool success = true;
};

namespace detail {

inline double round_sig(double x, bool full) {
  if (full || !std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return std::strtod(buf, nullptr);
}

inline std::string format_number(double x, bool full) {
  char buf[40];
  std::snprintf(buf, sizeof buf, full ? "%.17g" : "%.6g", x);
  return buf;
}

inline std::string cell_text(const nlohmann::ordered_json& v, bool full) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) return format_number(v.get<double>(), full);
  if (v.is_null()) return "";
  return v.dump();
}

inline std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Rounds every float in a JSON tree to 6 significant digits.
inline void round_tree(nlohmann::ordered_json& j, bool full) {
  if (j.is_number_float()) {
    j = round_sig(j.get<double>(), full);
  } else if (j.is_structured()) {
    for (auto& x : j) round_tree(x, full);
  }
}

inline void render(const Payload& p, const RunConfig& cfg, std::ostream& os) {
  switch (cfg.format) {
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["command"] = cfg.command;
      doc["result"] = p.json;
      round_tree(doc["result"], cfg.full_precision);
      doc["metadata"] = {{"tool", "primeap"}, {"version", kVersion}};
      if (cfg.timestamp) {
        const std::time_t now = std::time(nullptr);
        std::ostringstream ts;
        ts << std::put_time(std::gmtime(&now), "%Y-%m-%dT%H:%M:%SZ");
        doc["metadata"]["generated_at"] = ts.str();
      }
      os << doc.dump(2) << "\n";
      break;
    }
    case Format::csv: {
      for (std::size_t i = 0; i < p.columns.size(); ++i) os << (i ? "," : "") << csv_quote(p.columns[i]);
      os << "\n";
      for (const auto& row : p.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_quote(cell_text(row[i], cfg.full_precision));
        os << "\n";
      }
      break;
    }
    case Format::text: {
      std::vector<std::size_t> width(p.columns.size());
      for (std::size_t i = 0; i < p.columns.size(); ++i) width[i] = p.columns[i].size();
      std::vector<std::vector<std::string>> cells;
      for (const auto& row : p.rows) {
        auto& c = cells.emplace_back();
        for (std::size_t i = 0; i < row.size(); ++i) {
          c.push_back(cell_text(row[i], cfg.full_precision));
          width[i] = std::max(width[i], c.back().size());
        }
      }
      auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "  " : "") << std::setw(static_cast<int>(width[i])) << r[i];
        os << "\n";
      };
      line(p.columns);
      for (const auto& c : cells) line(c);
      break;
    }
  }
}

inline nlohmann::ordered_json solution_json(const SolverSolution& s, double q0, double eps) {
  nlohmann::ordered_json j;
  j["q0"] = q0;
  j["eps"] = eps;
  j["u"] = s.u;
  j["m"] = s.m;
  j["H"] = s.H;
  j["alpha"] = s.alpha;
  j["residual"] = s.residual;
  const auto parts = s.breakdown.parts();
  nlohmann::ordered_json b;
  for (std::size_t i = 0; i < parts.size(); ++i)
    b["log10_r" + std::to_string(i + 1)] = parts[i].log_value() / std::log(10.0);
  b["log10_total"] = s.breakdown.total.log_value() / std::log(10.0);
  j["breakdown"] = b;
  return j;
}

inline std::vector<nlohmann::ordered_json> solution_row(const SolverSolution& s, double q0, double eps) {
  return {q0, eps, s.u, s.m, s.H, s.alpha};
}

inline const std::vector<std::string> kTableColumns{"q0", "eps", "u", "m", "H", "alpha"};

inline nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["parameters"] = r.parameters;
  j["max_deviation"] = r.max_deviation;
  j["bound"] = r.bound;
  j["witness"] = r.witness;
  j["pass"] = r.pass;
  return j;
}

inline std::vector<nlohmann::ordered_json> report_row(const VerificationReport& r) {
  return {r.name, r.max_deviation, r.bound, r.pass};
}

}  // namespace detail

struct AlphaOptions {
  double q0 = 0.0, eps = 0.0;
  std::optional<double> u, H;
  std::optional<int> m;
  double slack = 1e-6;
  std::string region = "full";
};

inline Payload cmd_alpha(const AlphaOptions& o, const RunConfig& cfg) {
  if (!(o.q0 >= 5e4)) throw DomainError("--q0 must be >= 5e4");
  if (!(o.eps > 0.0)) throw DomainError("--eps must be positive");
  if (!(o.slack >= 0.0 && o.slack < 1.0)) throw DomainError("--slack must be in [0, 1)");
  SolverConfig sc;
  sc.slack = o.slack;
  sc.workers = static_cast<int>(cfg.workers);
  SolverSolution s;
  if (o.region != "full") {
    if (o.u || o.m || o.H) throw DomainError("--u/--m/--H apply to the full region model only");
    const auto mode = o.region == "classical650" ? solver::ComparisonMode::classical_650
                                                 : solver::ComparisonMode::classical_965;
    s = solver::mccurley_comparison(o.q0, o.eps, mode, sc);
  } else if (o.m && o.H) {
    s = solver::solve_fixed(o.q0, o.eps, o.u.value_or(0.0), *o.m, *o.H, o.slack);
  } else if (o.u && o.m) {
    auto c = solver::solve_cell(o.q0, o.eps, *o.u, *o.m, sc);
    if (!c) throw InfeasibleError("the (u, m) cell is infeasible");
    s = *c;
  } else if (o.u || o.m || o.H) {
    throw DomainError("override either --m with --H, or --u with --m");
  } else {
    s = solver::optimize(o.q0, o.eps, sc);
  }
  Payload p;
  p.json = detail::solution_json(s, o.q0, o.eps);
  p.columns = detail::kTableColumns;
  p.rows.push_back(detail::solution_row(s, o.q0, o.eps));
  return p;
}

inline Payload cmd_table(const std::string& grid, const std::vector<double>& q0s, double slack, const RunConfig& cfg,
                         std::ostream& err) {
  if (grid != "paper") throw DomainError("--grid: only the 'paper' preset exists");
  SolverConfig sc;
  sc.slack = slack;
  sc.workers = static_cast<int>(cfg.workers);
  Payload p;
  p.columns = detail::kTableColumns;
  p.json = nlohmann::ordered_json::array();
  for (const auto& gp : solver::paper_grid()) {
    if (!q0s.empty() && std::find(q0s.begin(), q0s.end(), gp.q0) == q0s.end()) continue;
    err << "table: q0=" << gp.q0 << " eps=" << gp.eps << "\n";
    const auto s = solver::optimize(gp.q0, gp.eps, sc);
    p.json.push_back(detail::solution_json(s, gp.q0, gp.eps));
    p.rows.push_back(detail::solution_row(s, gp.q0, gp.eps));
  }
  return p;
}

inline Payload cmd_thresholds() {
  const auto r = sevencubes::threshold_report();
  Payload p;
  p.json = {{"clustering", r.clustering},
            {"inequality", r.inequality},
            {"kappa", r.kappa},
            {"modulus_c1_reading", r.modulus_c1},
            {"modulus_c2_reading", r.modulus_c2},
            {"combined", r.combined_c2},
            {"combined_c1_reading", r.combined_c1},
            {"headline", r.headline},
            {"margins",
             {{"clustering_at_68509", r.clustering_margin_at_68509},
              {"inequality_at_70341", r.inequality_margin_at_70341},
              {"log_kappa0_minus_eps_at_70341", r.log_kappa0_minus_eps_at_70341},
              {"log10_modulus_c1_at_70341", r.log10_modulus_c1_at_70341},
              {"log10_modulus_c2_at_70341", r.log10_modulus_c2_at_70341},
              {"repulsion_at_ln150", r.repulsion_margin_at_ln150},
              {"repulsion_at_headline", r.repulsion_margin_at_headline}}}};
  p.columns = {"key", "value"};
  for (const auto& [k, v] : p.json.items()) {
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items()) p.rows.push_back({k + "." + k2, v2});
    } else {
      p.rows.push_back({k, v});
    }
  }
  return p;
}

inline Payload cmd_cube_scan(std::uint64_t nmax, unsigned workers, std::ostream& err) {
  if (nmax < 455 || nmax > sevencubes::CubeCounter::kMaxN) throw DomainError("--nmax must be in [455, 1e8]");
  err << "cubes: tabulating minimal counts to " << std::min<std::uint64_t>(nmax, 1'000'000) << "\n";
  const sevencubes::CubeCounter cc(std::min<std::uint64_t>(nmax, 1'000'000), workers);
  const auto scan = cc.scan(455, nmax, 7, workers);
  VerificationReport r;
  r.name = "seven-cubes-range";
  r.parameters = {{"lo", 455.0}, {"hi", static_cast<double>(nmax)}};
  r.max_deviation = scan.max_count;
  r.bound = 7;
  r.witness = {{"worst_n", static_cast<double>(scan.worst_n)},
               {"over_cap", static_cast<double>(scan.over_cap.size())},
               {"min_cubes_23", static_cast<double>(cc.min_cubes(23).value_or(-1))},
               {"min_cubes_239", static_cast<double>(cc.min_cubes(239).value_or(-1))}};
  r.pass = scan.over_cap.empty() && cc.min_cubes(23) == 9 && cc.min_cubes(239) == 9;
  Payload p;
  p.json = detail::report_json(r);
  p.columns = {"name", "max_deviation", "bound", "pass"};
  p.rows.push_back(detail::report_row(r));
  p.success = r.pass;
  return p;
}

struct VerifyOptions {
  std::string suite;
  std::uint64_t qmax = 0;  // 0: suite default
  double xmax = 0.0;       // 0: suite default
  std::uint64_t nmax = 1'000'000;
};

inline Payload cmd_verify(const VerifyOptions& o, const RunConfig& cfg, std::ostream& err) {
  if (o.suite == "cubes") return cmd_cube_scan(o.nmax, cfg.workers, err);
  std::vector<VerificationReport> reports;
  const double xmax = o.xmax > 0.0 ? o.xmax : (o.suite == "aux" ? 1e6 : 1e7);
  if (xmax > static_cast<double>(sievelab::kSieveGuard)) throw DomainError("--xmax above the 1e9 sieve guard");
  if (o.suite != "theta" && o.suite != "least-prime" && o.suite != "aux")
    throw DomainError("unknown suite '" + o.suite + "' (theta, least-prime, aux, cubes)");
  if (o.suite == "aux" && xmax < 1e6) throw DomainError("--xmax must be >= 1e6 for aux");
  err << "verify: sieving to " << detail::format_number(xmax, false) << "\n";
  const auto s = sievelab::sieve(static_cast<std::uint64_t>(xmax), cfg.workers);
  if (o.suite == "theta") {
    err << "verify: theta deviation scan\n";
    reports.push_back(sievelab::theta_deviation_scan(o.qmax ? o.qmax : 72, xmax, s, cfg.workers).report);
  } else if (o.suite == "least-prime") {
    reports.push_back(sievelab::least_prime_survey(o.qmax ? o.qmax : 1000, s, 4.3060, cfg.workers).report);
  } else {
    reports = sievelab::auxiliary_constant_checks(s, cfg.workers);
  }
  Payload p;
  p.columns = {"name", "max_deviation", "bound", "pass"};
  p.json = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    p.json.push_back(detail::report_json(r));
    p.rows.push_back(detail::report_row(r));
    p.success = p.success && r.pass;
  }
  if (p.json.size() == 1) p.json = p.json[0];
  return p;
}

// Parses argv, runs one subcommand and writes the payload to out (or --out).
// Returns 0 on success, 1 when infeasible or a verification fails, 2 on
// usage errors.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Explicit least-prime exponents, seven-cubes thresholds and desk-scale verifications", "primeap"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  RunConfig cfg;
  std::string format = "json";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", cfg.output_path, "Write the payload to this file");
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--full-precision", cfg.full_precision, "Print 17 significant digits");
    sub->add_flag("--timestamp", cfg.timestamp, "Add generated_at to JSON metadata");
  };

  AlphaOptions ao;
  double u = 0.0, H = 0.0;
  int m = 0;
  auto* alpha = app.add_subcommand("alpha", "Solve for alpha at one (q0, eps)");
  alpha->add_option("--q0", ao.q0, "Modulus lower bound q0 (>= 5e4)")->required();
  alpha->add_option("--eps", ao.eps, "Interval width epsilon")->required();
  auto* u_opt = alpha->add_option("--u", u, "Fix u = r2/r1 instead of sweeping");
  auto* m_opt = alpha->add_option("--m", m, "Fix the weight order m")->check(CLI::Range(3, 200));
  auto* h_opt = alpha->add_option("--H", H, "Fix the zero-height split H");
  alpha->add_option("--slack", ao.slack, "Cond2 slack");
  alpha->add_option("--region", ao.region, "Zero-free region model")
      ->check(CLI::IsMember({"full", "classical650", "classical965"}));
  add_common(alpha);

  std::string grid = "paper";
  std::vector<double> table_q0;
  double table_slack = 1e-6;
  auto* table = app.add_subcommand("table", "Optimise alpha over a parameter grid");
  table->add_option("--grid", grid, "Grid preset")->check(CLI::IsMember({"paper"}));
  table->add_option("--q0", table_q0, "Restrict to these q0 values");
  table->add_option("--slack", table_slack, "Cond2 slack");
  add_common(table);

  bool thresholds = false;
  std::uint64_t cubes_nmax = 0;
  auto* cubes = app.add_subcommand("seven-cubes", "Seven-cubes thresholds on log n, or a small-n range check");
  cubes->add_flag("--thresholds", thresholds, "Threshold report (default)");
  cubes->add_option("--nmax", cubes_nmax, "Check every n in [455, nmax] is a sum of 7 cubes");
  add_common(cubes);

  VerifyOptions vo;
  double nmax_real = 1e6;
  auto* verify = app.add_subcommand("verify", "Run an empirical verification suite");
  verify->add_option("suite", vo.suite, "theta | least-prime | aux | cubes")->required();
  verify->add_option("--qmax", vo.qmax, "Largest modulus");
  verify->add_option("--xmax", vo.xmax, "Sieve / scan limit");
  verify->add_option("--nmax", nmax_real, "Upper end for the cubes suite");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  cfg.format = format == "csv" ? Format::csv : format == "text" ? Format::text : Format::json;
  Payload payload;
  try {
    if (*alpha) {
      cfg.command = "alpha";
      if (*u_opt) ao.u = u;
      if (*m_opt) ao.m = m;
      if (*h_opt) ao.H = H;
      payload = cmd_alpha(ao, cfg);
    } else if (*table) {
      cfg.command = "table";
      payload = cmd_table(grid, table_q0, table_slack, cfg, err);
    } else if (*cubes) {
      cfg.command = "seven-cubes";
      payload = cubes_nmax ? cmd_cube_scan(cubes_nmax, cfg.workers, err) : cmd_thresholds();
    } else {
      cfg.command = "verify";
      if (!(nmax_real >= 455.0 && nmax_real <= 1e8)) throw DomainError("--nmax must be in [455, 1e8]");
      vo.nmax = static_cast<std::uint64_t>(nmax_real);
      payload = cmd_verify(vo, cfg, err);
    }
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const NoRootError& e) {
    err << "infeasible: " << e.what() << "\n";
    return 1;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.output_path.empty()) {
    detail::render(payload, cfg, out);
  } else {
    std::ofstream f(cfg.output_path);
    if (!f) {
      err << "error: cannot open " << cfg.output_path << "\n";
      return 2;
    }
    detail::render(payload, cfg, f);
  }
  return payload.success ? 0 : 1;
}

}  // namespace primeap::cli
