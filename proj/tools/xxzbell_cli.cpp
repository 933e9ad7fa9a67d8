// Command-line driver: single-point queries, parameter sweeps and sector
// boundaries for the periodic XXZ ring.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "xxzbell/errors.hpp"
#include "xxzbell/scan.hpp"

using namespace xxzbell;

namespace {

struct Flags {
  int n = 6;
  std::optional<double> jx;
  std::optional<double> b;
  std::optional<double> grid_min;
  std::optional<double> grid_max;
  int grid_count = 0;
  int restarts = 8;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out = "-";
  std::string outputs = "violation,concurrence";
  int threads = 1;
  int n_min = kMinAnalyticSites;
  int n_max = 43;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", f.out, "Output file ('-' for standard output)")
      ->capture_default_str();
}

void add_chain(CLI::App* cmd, Flags& f, bool need_jx, bool need_b) {
  cmd->add_option("--n", f.n, "Number of spins (3..12)")->capture_default_str();
  auto* jx = cmd->add_option("--jx", f.jx, "Transverse exchange Jx/Jz");
  auto* b = cmd->add_option("--b", f.b, "Field b/Jz");
  if (need_jx) jx->required();
  if (need_b) b->required();
}

void add_optimizer(CLI::App* cmd, Flags& f) {
  cmd->add_option("--restarts", f.restarts, "Nelder-Mead restarts")
      ->capture_default_str();
  cmd->add_option("--seed", f.seed, "Optimizer seed")->capture_default_str();
}

void add_grid(CLI::App* cmd, Flags& f, bool required) {
  auto* lo = cmd->add_option("--grid-min", f.grid_min, "Lower end of the swept ratio");
  auto* hi = cmd->add_option("--grid-max", f.grid_max, "Upper end of the swept ratio");
  auto* count = cmd->add_option("--grid-count", f.grid_count, "Number of grid points");
  if (required) {
    lo->required();
    hi->required();
    count->required();
  }
}

void add_sweep_extras(CLI::App* cmd, Flags& f) {
  cmd->add_option("--outputs", f.outputs,
                  "Comma list of violation,concurrence,sector,energy")
      ->capture_default_str();
  cmd->add_option("--threads", f.threads, "Worker threads (0: all cores)")
      ->capture_default_str();
}

SweepConfig base_config(const Flags& f, SweepMode mode) {
  SweepConfig cfg;
  cfg.mode = mode;
  cfg.n = f.n;
  if (f.jx) cfg.jx = *f.jx;
  if (f.b) cfg.b = *f.b;
  if (f.grid_min && f.grid_max) cfg.grid = Grid{*f.grid_min, *f.grid_max, f.grid_count};
  cfg.optimizer.restarts = f.restarts;
  cfg.optimizer.seed = f.seed;
  cfg.outputs = parse_outputs(f.outputs);
  cfg.threads = f.threads;
  cfg.n_min = f.n_min;
  cfg.n_max = f.n_max;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bell violation and GME concurrence of XXZ ring ground states"};
  app.require_subcommand(1);
  Flags f;

  auto* ground = app.add_subcommand("ground-state", "Global ground state at one (jx, b)");
  add_chain(ground, f, true, true);
  add_common(ground, f);

  auto* violation = app.add_subcommand("violation", "Maximal Bell violation at one (jx, b)");
  add_chain(violation, f, true, true);
  add_optimizer(violation, f);
  add_common(violation, f);

  auto* concurrence = app.add_subcommand("concurrence", "GME concurrence at one (jx, b)");
  add_chain(concurrence, f, true, true);
  add_common(concurrence, f);

  auto* scan_field = app.add_subcommand("scan-field", "Sweep b/Jz at fixed jx");
  add_chain(scan_field, f, true, false);
  add_grid(scan_field, f, true);
  add_optimizer(scan_field, f);
  add_sweep_extras(scan_field, f);
  add_common(scan_field, f);

  auto* scan_coupling = app.add_subcommand("scan-coupling", "Sweep Jx/Jz at fixed b");
  add_chain(scan_coupling, f, false, true);
  add_grid(scan_coupling, f, true);
  add_optimizer(scan_coupling, f);
  add_sweep_extras(scan_coupling, f);
  add_common(scan_coupling, f);

  auto* analytic = app.add_subcommand(
      "analytic-w", "Maximal closed-form violation of the single-excitation state per n");
  analytic->add_option("--n-min", f.n_min, "Smallest n (>= 4)")->capture_default_str();
  analytic->add_option("--n-max", f.n_max, "Largest n (<= 64)")->capture_default_str();
  add_optimizer(analytic, f);
  analytic->add_option("--threads", f.threads, "Worker threads (0: all cores)")
      ->capture_default_str();
  add_common(analytic, f);

  auto* boundaries = app.add_subcommand("boundaries", "Fields where the ground sector changes");
  add_chain(boundaries, f, true, false);
  add_grid(boundaries, f, false);
  add_common(boundaries, f);

  CLI11_PARSE(app, argc, argv);

  try {
    const Format format = parse_format(f.format);
    if (ground->parsed()) {
      const ChainParams p = ChainParams::make(f.n, *f.jx, *f.b);
      emit(global_ground(p), format, f.out, p);
    } else if (violation->parsed() || concurrence->parsed()) {
      f.outputs = violation->parsed() ? "violation" : "concurrence";
      const SweepConfig cfg = base_config(f, SweepMode::kPoint);
      emit(std::vector<ScanRecord>{run_point(cfg)}, format, f.out, cfg.outputs);
    } else if (scan_field->parsed()) {
      const SweepConfig cfg = base_config(f, SweepMode::kFieldSweep);
      emit(run_field_sweep(cfg), format, f.out, cfg.outputs);
    } else if (scan_coupling->parsed()) {
      const SweepConfig cfg = base_config(f, SweepMode::kCouplingSweep);
      emit(run_coupling_sweep(cfg), format, f.out, cfg.outputs);
    } else if (analytic->parsed()) {
      emit(run_analytic_w(base_config(f, SweepMode::kAnalyticW)), format, f.out);
    } else if (boundaries->parsed()) {
      const ChainParams p = ChainParams::make(f.n, *f.jx, 0.0);
      // All sector changes of the ferromagnetic ring lie within |b| <= |jx - jz|.
      const double reach = std::abs(p.jx - p.jz) + 0.5;
      const double lo = f.grid_min.value_or(-reach);
      const double hi = f.grid_max.value_or(reach);
      const int count = f.grid_count > 0 ? f.grid_count : 401;
      emit(find_boundaries(p, lo, hi, count), format, f.out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
