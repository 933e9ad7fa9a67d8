#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "xxzbell/bell_violation.hpp"
#include "xxzbell/eigensolver.hpp"
#include "xxzbell/gme_concurrence.hpp"

namespace xxzbell {

enum class SweepMode { kFieldSweep, kCouplingSweep, kAnalyticW, kPoint };

struct Grid {
  double min = 0.0;
  double max = 1.0;
  int count = 2;

  // Evenly spaced; the last point is exactly max.
  double at(int i) const {
    return i == count - 1 ? max : min + (max - min) * i / (count - 1);
  }
};

// Optional analyses per grid point. Sector and energy columns are always
// emitted; the flags exist so that selections may name them.
struct Outputs {
  bool violation = false;
  bool concurrence = false;
  bool sector = false;
  bool energy = false;
};

// Parses a comma-separated selection such as "violation,concurrence".
Outputs parse_outputs(const std::string& list);

struct SweepConfig {
  SweepMode mode = SweepMode::kFieldSweep;
  int n = 6;
  double jx = 2.0;  // fixed in field sweeps and single points
  double b = -0.8;  // fixed in coupling sweeps and single points
  Grid grid;
  int n_min = kMinAnalyticSites;  // analytic-w only
  int n_max = 43;
  OptimizerConfig optimizer;
  Outputs outputs;
  int threads = 1;  // 0: one per hardware thread
};

// Throws ConfigError on an invalid configuration.
void validate(const SweepConfig& cfg);

struct ScanRecord {
  double swept_value = 0.0;
  int sector_k = 0;
  bool degenerate = false;
  double energy = 0.0;
  std::optional<double> violation;
  std::optional<MeasurementAngles> angles;
  std::optional<double> concurrence;
  std::optional<std::vector<int>> min_partition;
};

struct AnalyticRow {
  int n = 0;
  double violation = 0.0;
  MeasurementAngles angles;
};

// Requested analyses of one ground state.
ScanRecord analyze(const GroundState& g, double swept_value,
                   const Outputs& outputs, const OptimizerConfig& optimizer);

std::vector<ScanRecord> run_field_sweep(const SweepConfig& cfg);
std::vector<ScanRecord> run_coupling_sweep(const SweepConfig& cfg);
ScanRecord run_point(const SweepConfig& cfg);
std::vector<AnalyticRow> run_analytic_w(const SweepConfig& cfg);

enum class Format { kCsv, kJson };
Format parse_format(const std::string& name);

// %.12g, with negative zero printed as 0.
std::string format_real(double v);

std::string render(const std::vector<ScanRecord>& records,
                   const Outputs& outputs, Format format);
std::string render(const std::vector<AnalyticRow>& rows, Format format);
std::string render(const std::vector<SectorBoundary>& boundaries, Format format);
std::string render(const GroundState& g, const ChainParams& p, Format format);

// Writes text to `destination`, or standard output when it is empty or "-".
// Throws IoError when the file cannot be written.
void write_output(const std::string& text, const std::string& destination);

template <class Rows, class... Extra>
void emit(const Rows& rows, Format format, const std::string& destination,
          const Extra&... extra) {
  write_output(render(rows, extra..., format), destination);
}

}  // namespace xxzbell
