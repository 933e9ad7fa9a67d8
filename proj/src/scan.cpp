#include "xxzbell/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "xxzbell/errors.hpp"

namespace xxzbell {

namespace {

// Runs fn(0..count-1) on a small worker pool. Each index writes only its own
// output slot, so results do not depend on the number of workers.
template <class Fn>
void parallel_for(int count, int threads, Fn fn) {
  if (threads <= 0) {
    threads = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  }
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::mutex error_mutex;
  int error_index = count;
  std::exception_ptr error;
  std::vector<std::jthread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (i < error_index) {
            error_index = i;
            error = std::current_exception();
          }
        }
      }
    });
  }
  pool.clear();
  if (error) std::rethrow_exception(error);
}

void validate_grid(const Grid& g) {
  if (g.count < 2) throw ConfigError("grid count must be >= 2");
  if (!(g.min < g.max)) throw ConfigError("grid min must be < grid max");
}

std::string join_sites(const std::vector<int>& sites) {
  std::string out;
  for (std::size_t i = 0; i < sites.size(); ++i) {
    if (i) out += '+';
    out += std::to_string(sites[i]);
  }
  return out;
}

// JSON number carrying exactly the CSV precision.
double json_real(double v) { return std::strtod(format_real(v).c_str(), nullptr); }

}  // namespace

Outputs parse_outputs(const std::string& list) {
  Outputs out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "violation") {
      out.violation = true;
    } else if (item == "concurrence") {
      out.concurrence = true;
    } else if (item == "sector") {
      out.sector = true;
    } else if (item == "energy") {
      out.energy = true;
    } else {
      throw ConfigError("unknown output '" + item + "'");
    }
  }
  return out;
}

void validate(const SweepConfig& cfg) {
  const auto check_sites = [&] {
    if (cfg.n < kMinSites || cfg.n > kMaxSites) {
      throw ConfigError("n must lie in [3, 12], got " + std::to_string(cfg.n));
    }
  };
  switch (cfg.mode) {
    case SweepMode::kFieldSweep:
      check_sites();
      validate_grid(cfg.grid);
      break;
    case SweepMode::kCouplingSweep:
      check_sites();
      validate_grid(cfg.grid);
      if (cfg.grid.min <= 1.0 * (1.0 + 1e-12)) {
        throw ConfigError("coupling sweep requires jx > jz = 1 on the whole grid");
      }
      break;
    case SweepMode::kPoint:
      check_sites();
      break;
    case SweepMode::kAnalyticW:
      if (cfg.n_min < kMinAnalyticSites || cfg.n_max > kMaxAnalyticSites ||
          cfg.n_min > cfg.n_max) {
        throw ConfigError("analytic range must satisfy 4 <= n_min <= n_max <= 64");
      }
      break;
  }
  if (cfg.optimizer.restarts < 0) throw ConfigError("restarts must be >= 0");
}

ScanRecord analyze(const GroundState& g, double swept_value,
                   const Outputs& outputs, const OptimizerConfig& optimizer) {
  ScanRecord r;
  r.swept_value = swept_value;
  r.sector_k = g.sector();
  r.degenerate = g.degenerate;
  r.energy = g.energy;
  if (outputs.violation) {
    const ViolationResult v = maximize(g.state, optimizer);
    r.violation = v.value;
    r.angles = v.angles;
  }
  if (outputs.concurrence) {
    const ConcurrenceResult c = gme_concurrence(g.state);
    r.concurrence = c.value;
    r.min_partition = c.minimizing_partition.alpha;
  }
  return r;
}

std::vector<ScanRecord> run_field_sweep(const SweepConfig& cfg) {
  if (cfg.mode != SweepMode::kFieldSweep) throw ConfigError("not a field sweep");
  validate(cfg);
  const SectorGrounds grounds(ChainParams::make(cfg.n, cfg.jx, 0.0));
  std::vector<ScanRecord> records(cfg.grid.count);
  parallel_for(cfg.grid.count, cfg.threads, [&](int i) {
    const double b = cfg.grid.at(i);
    records[i] = analyze(grounds.ground_at(b), b, cfg.outputs, cfg.optimizer);
  });
  return records;
}

std::vector<ScanRecord> run_coupling_sweep(const SweepConfig& cfg) {
  if (cfg.mode != SweepMode::kCouplingSweep) throw ConfigError("not a coupling sweep");
  validate(cfg);
  std::vector<ScanRecord> records(cfg.grid.count);
  parallel_for(cfg.grid.count, cfg.threads, [&](int i) {
    const double jx = cfg.grid.at(i);
    const GroundState g = global_ground(ChainParams::make(cfg.n, jx, cfg.b));
    records[i] = analyze(g, jx, cfg.outputs, cfg.optimizer);
  });
  return records;
}

ScanRecord run_point(const SweepConfig& cfg) {
  if (cfg.mode != SweepMode::kPoint) throw ConfigError("not a single-point query");
  validate(cfg);
  const GroundState g = global_ground(ChainParams::make(cfg.n, cfg.jx, cfg.b));
  return analyze(g, cfg.b, cfg.outputs, cfg.optimizer);
}

std::vector<AnalyticRow> run_analytic_w(const SweepConfig& cfg) {
  if (cfg.mode != SweepMode::kAnalyticW) throw ConfigError("not an analytic-w run");
  validate(cfg);
  const int count = cfg.n_max - cfg.n_min + 1;
  std::vector<AnalyticRow> rows(count);
  parallel_for(count, cfg.threads, [&](int i) {
    const int n = cfg.n_min + i;
    const ViolationResult v = maximize_analytic(n, cfg.optimizer);
    rows[i] = AnalyticRow{n, v.value, v.angles};
  });
  return rows;
}

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  throw ConfigError("unknown format '" + name + "' (expected csv or json)");
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  std::string s(buf);
  if (s == "-0") s = "0";
  return s;
}

std::string render(const std::vector<ScanRecord>& records,
                   const Outputs& outputs, Format format) {
  if (records.empty()) throw DomainError("no records to emit");
  if (format == Format::kJson) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const ScanRecord& r : records) {
      nlohmann::ordered_json o;
      o["swept_value"] = json_real(r.swept_value);
      o["sector_k"] = r.sector_k;
      o["degenerate"] = r.degenerate;
      o["energy"] = json_real(r.energy);
      if (outputs.violation) {
        o["violation"] = json_real(r.violation.value());
        const auto t = r.angles.value().as_array();
        for (int i = 0; i < 4; ++i) o["theta" + std::to_string(i + 1)] = json_real(t[i]);
      }
      if (outputs.concurrence) {
        o["concurrence"] = json_real(r.concurrence.value());
        o["min_partition"] = join_sites(r.min_partition.value());
      }
      arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "swept_value,sector_k,degenerate,energy";
  if (outputs.violation) out << ",violation,theta1,theta2,theta3,theta4";
  if (outputs.concurrence) out << ",concurrence,min_partition";
  out << '\n';
  for (const ScanRecord& r : records) {
    out << format_real(r.swept_value) << ',' << r.sector_k << ','
        << (r.degenerate ? 1 : 0) << ',' << format_real(r.energy);
    if (outputs.violation) {
      out << ',' << format_real(r.violation.value());
      for (double t : r.angles.value().as_array()) out << ',' << format_real(t);
    }
    if (outputs.concurrence) {
      out << ',' << format_real(r.concurrence.value()) << ','
          << join_sites(r.min_partition.value());
    }
    out << '\n';
  }
  return out.str();
}

std::string render(const std::vector<AnalyticRow>& rows, Format format) {
  if (rows.empty()) throw DomainError("no rows to emit");
  if (format == Format::kJson) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const AnalyticRow& r : rows) {
      nlohmann::ordered_json o;
      o["n"] = r.n;
      o["violation"] = json_real(r.violation);
      const auto t = r.angles.as_array();
      for (int i = 0; i < 4; ++i) o["theta" + std::to_string(i + 1)] = json_real(t[i]);
      arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "n,violation,theta1,theta2,theta3,theta4\n";
  for (const AnalyticRow& r : rows) {
    out << r.n << ',' << format_real(r.violation);
    for (double t : r.angles.as_array()) out << ',' << format_real(t);
    out << '\n';
  }
  return out.str();
}

std::string render(const std::vector<SectorBoundary>& boundaries, Format format) {
  if (format == Format::kJson) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const SectorBoundary& s : boundaries) {
      nlohmann::ordered_json o;
      o["k_left"] = s.k_left;
      o["k_right"] = s.k_right;
      o["b"] = json_real(s.b);
      arr.push_back(std::move(o));
    }
    return arr.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "k_left,k_right,b\n";
  for (const SectorBoundary& s : boundaries) {
    out << s.k_left << ',' << s.k_right << ',' << format_real(s.b) << '\n';
  }
  return out.str();
}

std::string render(const GroundState& g, const ChainParams& p, Format format) {
  if (format == Format::kJson) {
    nlohmann::ordered_json o;
    o["n"] = p.n;
    o["jx"] = json_real(p.jx);
    o["b"] = json_real(p.b);
    o["sector_k"] = g.sector();
    o["degenerate"] = g.degenerate;
    o["energy"] = json_real(g.energy);
    o["gap"] = json_real(g.gap);
    nlohmann::ordered_json states = nlohmann::ordered_json::array();
    nlohmann::ordered_json amps = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.state.basis.size(); ++i) {
      states.push_back(g.state.basis[i]);
      amps.push_back(json_real(g.state.amplitudes[i]));
    }
    o["states"] = std::move(states);
    o["amplitudes"] = std::move(amps);
    return o.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "n,jx,b,sector_k,degenerate,energy,gap\n"
      << p.n << ',' << format_real(p.jx) << ',' << format_real(p.b) << ','
      << g.sector() << ',' << (g.degenerate ? 1 : 0) << ','
      << format_real(g.energy) << ',' << format_real(g.gap) << '\n';
  return out.str();
}

void write_output(const std::string& text, const std::string& destination) {
  if (destination.empty() || destination == "-") {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + destination + "' for writing");
  file << text;
  file.close();
  if (!file) throw IoError("failed writing '" + destination + "'");
}

}  // namespace xxzbell
