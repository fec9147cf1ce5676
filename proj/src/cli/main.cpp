#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heatflux/analysis.hpp"
#include "heatflux/config.hpp"
#include "heatflux/constants.hpp"
#include "heatflux/errors.hpp"
#include "heatflux/materials.hpp"
#include "heatflux/stationary.hpp"
#include "heatflux/transient.hpp"
#include "heatflux/validation.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;
constexpr int kExitOracle = 4;

using heatflux::PhysicalConstants;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return buf;
}

struct Table {
  std::vector<std::pair<std::string, std::string>> meta;
  std::vector<std::string> columns;
  std::vector<bool> numeric; // per column, for typed JSON output
  std::vector<std::vector<std::string>> rows;
};

void write_output(const Table& t, const heatflux::RunConfig& cfg,
                  std::ostream& out) {
  if (cfg.output.format == "json") {
    nlohmann::json j;
    for (const auto& [k, v] : t.meta) j["meta"][k] = v;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json obj;
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (t.numeric[c]) {
          const double x = std::strtod(row[c].c_str(), nullptr);
          if (std::isfinite(x))
            obj[t.columns[c]] = x;
          else
            obj[t.columns[c]] = nullptr;
        } else {
          obj[t.columns[c]] = row[c];
        }
      }
      j["rows"].push_back(std::move(obj));
    }
    out << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : t.meta) out << "# " << k << "=" << v << "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c)
    out << (c ? "," : "") << t.columns[c];
  out << "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c)
      out << (c ? "," : "") << row[c];
    out << "\n";
  }
}

void emit(const Table& t, const heatflux::RunConfig& cfg) {
  if (cfg.output.path.empty()) {
    write_output(t, cfg, std::cout);
    return;
  }
  std::ofstream f(cfg.output.path, std::ios::binary);
  if (!f)
    throw heatflux::ConfigError("cannot open output file '" + cfg.output.path +
                                "'");
  write_output(t, cfg, f);
}

unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("HEATFLUX_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1)
      n = std::min<unsigned>(static_cast<unsigned>(parsed), 256u);
  }
  return n;
}

// Index-ordered parallel map: fn(i) fills slot i of some caller-owned
// storage, so the output ordering is deterministic regardless of scheduling.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= n || failed.load(std::memory_order_relaxed)) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
}

struct CommonOpts {
  std::string config_path;
  std::string preset;
  std::string output_path;
  std::string format;
  double rel_tol = 0.0; // 0 = keep config value
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "Path to a key = value config file");
  cmd->add_option("--preset", o.preset,
                  "Built-in scenario (sic-300k-nearfield, sic-300k-farfield, "
                  "sic-30k-nearfield, sic-30k-farfield)");
  cmd->add_option("--output", o.output_path, "Output file (default stdout)");
  cmd->add_option("--format", o.format, "Output format: csv or json");
  cmd->add_option("--rel-tol", o.rel_tol, "Quadrature relative tolerance");
}

heatflux::RunConfig resolve_config(const CommonOpts& o) {
  if (!o.config_path.empty() && !o.preset.empty())
    throw heatflux::ConfigError("--config and --preset are mutually exclusive");
  heatflux::RunConfig cfg;
  if (!o.config_path.empty())
    cfg = heatflux::load_config_file(o.config_path);
  else
    cfg = heatflux::preset_config(o.preset.empty() ? "sic-300k-nearfield"
                                                   : o.preset);
  if (o.rel_tol != 0.0) {
    if (!(o.rel_tol > 0.0) || o.rel_tol > 1e-2)
      throw heatflux::ConfigError("--rel-tol must be in (0, 1e-2]");
    cfg.quad.rel_tol = o.rel_tol;
  }
  if (!o.output_path.empty()) cfg.output.path = o.output_path;
  if (!o.format.empty()) {
    if (o.format != "csv" && o.format != "json")
      throw heatflux::ConfigError("--format must be csv or json");
    cfg.output.format = o.format;
  }
  return cfg;
}

void add_standard_meta(Table& t, const heatflux::RunConfig& cfg,
                       const char* equations) {
  char hash[24];
  std::snprintf(hash, sizeof(hash), "%016llx",
                static_cast<unsigned long long>(heatflux::config_hash(cfg)));
  t.meta.emplace_back("tool", std::string("heatflux ") + kVersion);
  t.meta.emplace_back("config_hash", hash);
  t.meta.emplace_back("equations", equations);
}

int cmd_stationary(const heatflux::RunConfig& cfg, double d_min, double d_max,
                   int points_per_decade) {
  const PhysicalConstants pc{};
  if (!(d_min > 0.0) || d_max < d_min)
    throw heatflux::ConfigError("stationary: requires 0 < d_min <= d_max");

  std::vector<double> ds;
  if (d_min == d_max) {
    ds.push_back(d_min);
  } else {
    if (points_per_decade < 1)
      throw heatflux::ConfigError("stationary: points_per_decade must be >= 1");
    const double decades = std::log10(d_max / d_min);
    const std::size_t n =
        1 + static_cast<std::size_t>(std::floor(decades * points_per_decade));
    for (std::size_t i = 0; i < n; ++i)
      ds.push_back(d_min *
                   std::pow(10.0, static_cast<double>(i) / points_per_decade));
    if (ds.back() < d_max) ds.push_back(d_max);
  }

  std::vector<heatflux::StationaryResult> results(ds.size());
  parallel_for(ds.size(), [&](std::size_t i) {
    heatflux::PairConfig pair = cfg.pair;
    pair.d = ds[i];
    results[i] = heatflux::stationary_flux(pair, false, cfg.quad.rel_tol, pc,
                                           cfg.quad.omega_max);
  });

  const auto scales = heatflux::thermal_scales(cfg.pair.T1, pc);
  Table t;
  add_standard_meta(t, cfg, "stationary-transfer-dipole-vacuum");
  t.meta.emplace_back("temperature_K", fmt17(cfg.pair.T1));
  t.meta.emplace_back("lambda_T_m", fmt17(scales.lambda_T));
  t.columns = {"d_m", "flux_norm_J_s-1_m-6", "frac_d2", "frac_d4", "frac_d6"};
  t.numeric = {true, true, true, true, true};
  for (std::size_t i = 0; i < ds.size(); ++i) {
    const auto& r = results[i];
    t.rows.push_back({fmt17(ds[i]), fmt17(r.value),
                      fmt17(r.channels[0] / r.value),
                      fmt17(r.channels[1] / r.value),
                      fmt17(r.channels[2] / r.value)});
  }
  emit(t, cfg);
  return kExitOk;
}

// Fit of the maxima model off the series' own refined maxima; empty when the
// series has no interior maxima.
std::optional<heatflux::FitParams> fit_from_series(
    const heatflux::TimeSeries& series, double h_st, double gamma,
    double period, double* raw_tau = nullptr, double* raw_phi = nullptr) {
  heatflux::ExtremaSet ex;
  try {
    ex = heatflux::find_extrema(series, heatflux::FluxChannel::total, period);
  } catch (const heatflux::TooCoarse&) {
    return std::nullopt;
  }
  if (ex.maxima.empty()) return std::nullopt;
  const auto best =
      std::max_element(ex.maxima.begin(), ex.maxima.end(),
                       [](const heatflux::ExtremumPoint& a,
                          const heatflux::ExtremumPoint& b) {
                         return a.value < b.value;
                       });
  if (raw_tau != nullptr || raw_phi != nullptr) {
    // Raw grid argmax, before parabolic refinement.
    std::size_t arg = 0;
    for (std::size_t i = 1; i < series.total.size(); ++i)
      if (series.total[i] > series.total[arg]) arg = i;
    if (raw_tau != nullptr) *raw_tau = series.taus[arg];
    if (raw_phi != nullptr) *raw_phi = series.total[arg];
  }
  try {
    return heatflux::fit_max_params(best->tau, best->value, h_st, gamma);
  } catch (const heatflux::DegenerateFit&) {
    return std::nullopt;
  }
}

int cmd_transient(const heatflux::RunConfig& cfg, double tau_min,
                  double tau_max, int samples_per_period) {
  const PhysicalConstants pc{};
  const auto series =
      heatflux::flux_series(cfg.pair, tau_min, tau_max, samples_per_period,
                            cfg.quad.rel_tol, pc, cfg.quad.omega_max);
  const double h_st =
      heatflux::stationary_flux(cfg.pair, false, cfg.quad.rel_tol, pc,
                                cfg.quad.omega_max)
          .value;
  const auto dm = heatflux::derived_material(cfg.pair.particle2);
  const double gamma = cfg.pair.particle2.material.gamma;
  const double period = 2.0 * heatflux::pi / dm.omega0_alpha;
  const double lambda_t = heatflux::thermal_scales(cfg.pair.T1, pc).lambda_T;
  const bool near_field = cfg.pair.d < lambda_t;

  std::optional<heatflux::FitParams> fit;
  if (near_field) fit = fit_from_series(series, h_st, gamma, period);

  Table t;
  add_standard_meta(t, cfg, "transient-flux-decomposition-vacuum");
  t.meta.emplace_back("d_over_c_delay_s", fmt17(cfg.pair.d / pc.c));
  t.meta.emplace_back("H_st_J_s-1_m-6", fmt17(h_st));
  t.meta.emplace_back("approx", near_field ? "near-field" : "far-field");
  if (fit) {
    t.meta.emplace_back("fit_a", fmt17(fit->a));
    t.meta.emplace_back("fit_b", fmt17(fit->b));
    t.meta.emplace_back("fit_tau_max_s", fmt17(fit->tau_max));
    t.meta.emplace_back("fit_phi_max", fmt17(fit->phi_max));
  }
  t.columns = {"tau_s", "total", "udot", "transfer", "avg_model", "approx"};
  t.numeric = {true, true, true, true, true, true};
  for (std::size_t i = 0; i < series.taus.size(); ++i) {
    const double tau = series.taus[i];
    const double avg = heatflux::flux_average_model(h_st, gamma, tau);
    double approx = std::numeric_limits<double>::quiet_NaN();
    if (near_field) {
      if (fit) approx = heatflux::near_field_approx(*fit, dm.omega0_alpha, tau);
    } else {
      approx =
          heatflux::far_field_approx(h_st, gamma, dm.omega0_alpha, tau).value;
    }
    t.rows.push_back({fmt17(tau), fmt17(series.total[i]),
                      fmt17(series.udot[i]), fmt17(series.transfer[i]),
                      fmt17(avg), fmt17(approx)});
  }
  emit(t, cfg);
  return kExitOk;
}

int cmd_spectrum(const heatflux::RunConfig& cfg, double tau, double omega_min,
                 double omega_max, int points_per_decade) {
  const PhysicalConstants pc{};
  const double gamma = cfg.pair.particle2.material.gamma;
  if (tau <= 0.0) tau = 1.0 / gamma;

  const auto q = heatflux::detail::make_pair_quad(cfg.pair, cfg.quad.rel_tol,
                                                  pc, cfg.quad.omega_max);
  if (omega_min <= 0.0) omega_min = q.spec.omega_min;
  if (omega_max <= 0.0) omega_max = q.spec.omega_max;
  if (!(omega_min < omega_max))
    throw heatflux::ConfigError("spectrum: requires omega_min < omega_max");
  if (points_per_decade < 1)
    throw heatflux::ConfigError("spectrum: points_per_decade must be >= 1");

  std::vector<double> ws;
  const double decades = std::log10(omega_max / omega_min);
  const std::size_t n =
      1 + static_cast<std::size_t>(std::floor(decades * points_per_decade));
  for (std::size_t i = 0; i < n; ++i)
    ws.push_back(omega_min *
                 std::pow(10.0, static_cast<double>(i) / points_per_decade));
  if (ws.back() < omega_max) ws.push_back(omega_max);

  const heatflux::TransientEvaluator ev(cfg.pair, cfg.quad.rel_tol, pc,
                                        cfg.quad.omega_max);
  std::vector<std::array<double, 3>> vals(ws.size());
  parallel_for(ws.size(), [&](std::size_t i) {
    vals[i] = {ev.udot_spectrum(ws[i], tau), ev.transfer_spectrum(ws[i], tau),
               heatflux::stationary_flux_spectrum(cfg.pair, ws[i], false, pc)};
  });

  Table t;
  add_standard_meta(t, cfg, "spectral-densities-vacuum");
  t.meta.emplace_back("tau_s", fmt17(tau));
  t.columns = {"omega_rad_s", "udot_spectrum", "transfer_spectrum",
               "stationary_spectrum"};
  t.numeric = {true, true, true, true};
  for (std::size_t i = 0; i < ws.size(); ++i)
    t.rows.push_back({fmt17(ws[i]), fmt17(vals[i][0]), fmt17(vals[i][1]),
                      fmt17(vals[i][2])});
  emit(t, cfg);
  return kExitOk;
}

heatflux::TimeSeries read_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw heatflux::ConfigError("extrema: cannot open input '" + path + "'");
  heatflux::TimeSeries s;
  std::string line;
  std::vector<int> col_of; // indices of tau_s,total,udot,transfer
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (col_of.empty()) {
      const char* names[4] = {"tau_s", "total", "udot", "transfer"};
      col_of.assign(4, -1);
      for (int k = 0; k < 4; ++k)
        for (std::size_t c = 0; c < cells.size(); ++c)
          if (cells[c] == names[k]) col_of[k] = static_cast<int>(c);
      for (int k = 0; k < 4; ++k)
        if (col_of[k] < 0)
          throw heatflux::ConfigError(
              "extrema: input CSV must have columns tau_s,total,udot,transfer");
      continue;
    }
    if (cells.size() <
        static_cast<std::size_t>(
            1 + *std::max_element(col_of.begin(), col_of.end())))
      throw heatflux::ConfigError("extrema: short CSV row");
    s.taus.push_back(std::strtod(cells[col_of[0]].c_str(), nullptr));
    s.total.push_back(std::strtod(cells[col_of[1]].c_str(), nullptr));
    s.udot.push_back(std::strtod(cells[col_of[2]].c_str(), nullptr));
    s.transfer.push_back(std::strtod(cells[col_of[3]].c_str(), nullptr));
  }
  if (s.taus.size() < 3)
    throw heatflux::ConfigError("extrema: input series too short");
  return s;
}

int cmd_extrema(const heatflux::RunConfig& cfg, const std::string& input,
                double tau_min, double tau_max, int samples_per_period) {
  const PhysicalConstants pc{};
  const auto dm = heatflux::derived_material(cfg.pair.particle2);
  const double gamma = cfg.pair.particle2.material.gamma;
  const double period = 2.0 * heatflux::pi / dm.omega0_alpha;

  heatflux::TimeSeries series;
  if (!input.empty()) {
    series = read_series_csv(input);
  } else {
    if (tau_min <= 0.0) tau_min = period / 64.0;
    if (tau_max <= 0.0) tau_max = 7.0 / gamma;
    series =
        heatflux::flux_series(cfg.pair, tau_min, tau_max, samples_per_period,
                              cfg.quad.rel_tol, pc, cfg.quad.omega_max);
  }
  const double h_st =
      heatflux::stationary_flux(cfg.pair, false, cfg.quad.rel_tol, pc,
                                cfg.quad.omega_max)
          .value;

  Table t;
  add_standard_meta(t, cfg, "extrema-and-maxima-fit");
  t.meta.emplace_back("H_st_J_s-1_m-6", fmt17(h_st));

  double raw_tau = 0.0, raw_phi = 0.0;
  const auto fit =
      fit_from_series(series, h_st, gamma, period, &raw_tau, &raw_phi);
  if (fit) {
    t.meta.emplace_back("fit_a", fmt17(fit->a));
    t.meta.emplace_back("fit_b", fmt17(fit->b));
    t.meta.emplace_back("fit_tau_max_s", fmt17(fit->tau_max));
    t.meta.emplace_back("fit_phi_max", fmt17(fit->phi_max));
    t.meta.emplace_back("fit_gamma_rad_s", fmt17(fit->gamma));
    t.meta.emplace_back("raw_tau_max_s", fmt17(raw_tau));
    t.meta.emplace_back("raw_phi_max", fmt17(raw_phi));
  }

  t.columns = {"channel", "kind", "tau_s", "value"};
  t.numeric = {false, false, true, true};
  const struct {
    heatflux::FluxChannel ch;
    const char* name;
  } channels[] = {{heatflux::FluxChannel::total, "total"},
                  {heatflux::FluxChannel::udot, "udot"},
                  {heatflux::FluxChannel::transfer, "transfer"}};
  for (const auto& c : channels) {
    const auto ex = heatflux::find_extrema(series, c.ch, period);
    for (const auto& p : ex.maxima)
      t.rows.push_back({c.name, "max", fmt17(p.tau), fmt17(p.value)});
    for (const auto& p : ex.minima)
      t.rows.push_back({c.name, "min", fmt17(p.tau), fmt17(p.value)});
    for (const auto& p : ex.averages)
      t.rows.push_back({c.name, "avg", fmt17(p.tau), fmt17(p.value)});
  }
  emit(t, cfg);
  return kExitOk;
}

int cmd_validate(const heatflux::RunConfig& cfg, std::uint64_t seed,
                 int n_samples) {
  const PhysicalConstants pc{};
  std::vector<heatflux::OracleReport> reports;
  if (n_samples > 0) {
    const auto n = static_cast<std::size_t>(n_samples);
    reports.push_back(heatflux::oracle_damped_integrals(n, seed));
    reports.push_back(heatflux::oracle_channel_reconstruction(n, seed));
    reports.push_back(heatflux::oracle_gf_traces(n, seed));
    const double taus[3] = {1e-14, 1e-13, 1e-12};
    reports.push_back(heatflux::oracle_stationary_limit(cfg.pair, pc));
    reports.push_back(heatflux::oracle_energy_derivative(cfg.pair, taus, pc));
  } else {
    reports = heatflux::run_all_oracles(cfg.pair, seed, pc);
  }
  const std::string text = heatflux::format_reports(reports);
  if (cfg.output.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.output.path, std::ios::binary);
    if (!f)
      throw heatflux::ConfigError("cannot open output file '" +
                                  cfg.output.path + "'");
    f << text;
  }
  for (const auto& r : reports)
    if (!r.pass) return kExitOracle;
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "heatflux: stationary and time-resolved radiative heat transfer "
      "between two small particles"};
  app.require_subcommand(1);

  CommonOpts stationary_opts;
  double d_min = 1e-8, d_max = 1e-1;
  int d_ppd = 20;
  auto* stationary =
      app.add_subcommand("stationary", "Distance sweep of the stationary transfer");
  add_common(stationary, stationary_opts);
  stationary->add_option("--d-min", d_min, "Smallest separation (m)");
  stationary->add_option("--d-max", d_max, "Largest separation (m)");
  stationary->add_option("--points-per-decade", d_ppd, "Sweep density");

  CommonOpts transient_opts;
  double tau_min = 1e-15, tau_max = 0.0;
  int spp = 64;
  auto* transient =
      app.add_subcommand("transient", "Time series of the flux decomposition");
  add_common(transient, transient_opts);
  transient->add_option("--tau-min", tau_min, "First retarded time (s)");
  transient->add_option("--tau-max", tau_max,
                        "Last retarded time (s, default 7/gamma)");
  transient->add_option("--samples-per-period", spp,
                        "Grid density per oscillation period");

  CommonOpts spectrum_opts;
  double sp_tau = 0.0, sp_wmin = 0.0, sp_wmax = 0.0;
  int sp_ppd = 200;
  auto* spectrum =
      app.add_subcommand("spectrum", "Spectral densities at one retarded time");
  add_common(spectrum, spectrum_opts);
  spectrum->add_option("--tau", sp_tau, "Retarded time (s, default 1/gamma)");
  spectrum->add_option("--omega-min", sp_wmin, "Grid start (rad/s, default auto)");
  spectrum->add_option("--omega-max", sp_wmax, "Grid end (rad/s, default auto)");
  spectrum->add_option("--points-per-decade", sp_ppd, "Grid density");

  CommonOpts extrema_opts;
  std::string ex_input;
  double ex_tau_min = 0.0, ex_tau_max = 0.0;
  int ex_spp = 64;
  auto* extrema = app.add_subcommand(
      "extrema", "Extrema, oscillation averages, and the maxima-model fit");
  add_common(extrema, extrema_opts);
  extrema->add_option("--input", ex_input,
                      "Existing series CSV (tau_s,total,udot,transfer)");
  extrema->add_option("--tau-min", ex_tau_min, "First retarded time (s)");
  extrema->add_option("--tau-max", ex_tau_max,
                      "Last retarded time (s, default 7/gamma)");
  extrema->add_option("--samples-per-period", ex_spp,
                      "Grid density per oscillation period");

  CommonOpts validate_opts;
  std::uint64_t seed = 0;
  int n_samples = 0;
  auto* validate =
      app.add_subcommand("validate", "Run the brute-force oracle suite");
  add_common(validate, validate_opts);
  validate->add_option("--seed", seed, "Sampling seed");
  validate->add_option("--samples", n_samples,
                       "Sample count override for the sweep oracles");

  CLI11_PARSE(app, argc, argv);

  try {
    if (stationary->parsed()) {
      const auto cfg = resolve_config(stationary_opts);
      return cmd_stationary(cfg, d_min, d_max, d_ppd);
    }
    if (transient->parsed()) {
      const auto cfg = resolve_config(transient_opts);
      const double gamma = cfg.pair.particle2.material.gamma;
      return cmd_transient(cfg, tau_min,
                           tau_max > 0.0 ? tau_max : 7.0 / gamma, spp);
    }
    if (spectrum->parsed()) {
      const auto cfg = resolve_config(spectrum_opts);
      return cmd_spectrum(cfg, sp_tau, sp_wmin, sp_wmax, sp_ppd);
    }
    if (extrema->parsed()) {
      const auto cfg = resolve_config(extrema_opts);
      return cmd_extrema(cfg, ex_input, ex_tau_min, ex_tau_max, ex_spp);
    }
    if (validate->parsed()) {
      const auto cfg = resolve_config(validate_opts);
      return cmd_validate(cfg, seed, n_samples);
    }
  } catch (const heatflux::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const heatflux::TooCoarse& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const heatflux::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const heatflux::NotConverged& e) {
    std::cerr << "convergence failure: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
