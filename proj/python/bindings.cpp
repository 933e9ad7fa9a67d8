#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "xxzbell/bell_violation.hpp"
#include "xxzbell/eigensolver.hpp"
#include "xxzbell/errors.hpp"
#include "xxzbell/gme_concurrence.hpp"
#include "xxzbell/scan.hpp"

namespace py = pybind11;
using namespace xxzbell;

namespace {

std::string sweep(SweepConfig cfg, const std::string& outputs, const std::string& format) {
  cfg.outputs = parse_outputs(outputs);
  validate(cfg);
  const Format f = parse_format(format);
  if (cfg.mode == SweepMode::kFieldSweep) return render(run_field_sweep(cfg), cfg.outputs, f);
  return render(run_coupling_sweep(cfg), cfg.outputs, f);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact diagonalization, Bell violation and GME concurrence for XXZ rings";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<CapabilityError>(m, "CapabilityError", PyExc_ValueError);
  py::register_exception<BracketError>(m, "BracketError", PyExc_RuntimeError);
  py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<ChainParams>(m, "ChainParams")
      .def(py::init(&ChainParams::make), py::arg("n"), py::arg("jx"), py::arg("b"))
      .def_readonly("n", &ChainParams::n)
      .def_readonly("jx", &ChainParams::jx)
      .def_readonly("jz", &ChainParams::jz)
      .def_readonly("b", &ChainParams::b)
      .def("with_field", &ChainParams::with_field)
      .def("with_exchange", &ChainParams::with_exchange)
      .def("__repr__", [](const ChainParams& p) {
        return "ChainParams(n=" + std::to_string(p.n) + ", jx=" + format_real(p.jx) +
               ", b=" + format_real(p.b) + ")";
      });

  py::class_<GroundState>(m, "GroundState")
      .def_readonly("energy", &GroundState::energy)
      .def_readonly("degenerate", &GroundState::degenerate)
      .def_readonly("gap", &GroundState::gap)
      .def_property_readonly("sector", &GroundState::sector)
      .def_property_readonly("sites", &GroundState::sites)
      .def_property_readonly("states",
                             [](const GroundState& g) { return g.state.basis.states(); })
      .def_property_readonly("amplitudes",
                             [](const GroundState& g) { return g.state.amplitudes; })
      .def("to_dense", [](const GroundState& g) { return g.state.to_dense(); });

  py::class_<SectorBoundary>(m, "SectorBoundary")
      .def_readonly("k_left", &SectorBoundary::k_left)
      .def_readonly("k_right", &SectorBoundary::k_right)
      .def_readonly("b", &SectorBoundary::b);

  py::class_<MeasurementAngles>(m, "MeasurementAngles")
      .def(py::init<double, double, double, double>(), py::arg("theta1"), py::arg("theta2"),
           py::arg("theta3"), py::arg("theta4"))
      .def_readwrite("theta1", &MeasurementAngles::theta1)
      .def_readwrite("theta2", &MeasurementAngles::theta2)
      .def_readwrite("theta3", &MeasurementAngles::theta3)
      .def_readwrite("theta4", &MeasurementAngles::theta4)
      .def("as_tuple", [](const MeasurementAngles& a) {
        const auto t = a.as_array();
        return py::make_tuple(t[0], t[1], t[2], t[3]);
      });

  py::class_<OptimizerConfig>(m, "OptimizerConfig")
      .def(py::init<>())
      .def_readwrite("grid_points", &OptimizerConfig::grid_points)
      .def_readwrite("restarts", &OptimizerConfig::restarts)
      .def_readwrite("max_iterations", &OptimizerConfig::max_iterations)
      .def_readwrite("profile_seeding", &OptimizerConfig::profile_seeding)
      .def_readwrite("seed", &OptimizerConfig::seed);

  py::class_<ViolationResult>(m, "ViolationResult")
      .def_readonly("value", &ViolationResult::value)
      .def_readonly("angles", &ViolationResult::angles)
      .def_readonly("evaluations", &ViolationResult::evaluations)
      .def_readonly("sector", &ViolationResult::sector)
      .def_property_readonly("violated", &ViolationResult::violated);

  py::class_<ConcurrenceResult>(m, "ConcurrenceResult")
      .def_readonly("value", &ConcurrenceResult::value)
      .def_property_readonly("minimizing_partition", [](const ConcurrenceResult& c) {
        return c.minimizing_partition.alpha;
      });

  m.def("global_ground", &global_ground, py::arg("params"));
  m.def("sector_window_k1", &sector_window_k1, py::arg("params"));
  m.def("find_boundaries", &find_boundaries, py::arg("params"), py::arg("b_min"),
        py::arg("b_max"), py::arg("scan_points") = 401);
  m.def("analytic_w", &analytic_w, py::arg("n"), py::arg("angles"));
  m.def(
      "expectation",
      [](const GroundState& g, const MeasurementAngles& t) { return expectation(g.state, t); },
      py::arg("ground"), py::arg("angles"));
  m.def(
      "maximize",
      [](const GroundState& g, const OptimizerConfig& cfg) { return maximize(g.state, cfg); },
      py::arg("ground"), py::arg("config") = OptimizerConfig{},
      py::call_guard<py::gil_scoped_release>());
  m.def("maximize_analytic", &maximize_analytic, py::arg("n"),
        py::arg("config") = OptimizerConfig{}, py::call_guard<py::gil_scoped_release>());
  m.def(
      "gme_concurrence", [](const GroundState& g) { return gme_concurrence(g.state); },
      py::arg("ground"));

  m.def(
      "scan_field",
      [](int n, double jx, double grid_min, double grid_max, int grid_count,
         const std::string& outputs, const std::string& format, std::uint64_t seed) {
        SweepConfig cfg;
        cfg.mode = SweepMode::kFieldSweep;
        cfg.n = n;
        cfg.jx = jx;
        cfg.grid = {grid_min, grid_max, grid_count};
        cfg.optimizer.seed = seed;
        py::gil_scoped_release release;
        return sweep(cfg, outputs, format);
      },
      py::arg("n"), py::arg("jx"), py::arg("grid_min"), py::arg("grid_max"),
      py::arg("grid_count"), py::arg("outputs") = "violation,concurrence",
      py::arg("format") = "csv", py::arg("seed") = 0,
      "Field sweep at fixed jx, rendered as CSV or JSON text.");
  m.def(
      "scan_coupling",
      [](int n, double b, double grid_min, double grid_max, int grid_count,
         const std::string& outputs, const std::string& format, std::uint64_t seed) {
        SweepConfig cfg;
        cfg.mode = SweepMode::kCouplingSweep;
        cfg.n = n;
        cfg.b = b;
        cfg.grid = {grid_min, grid_max, grid_count};
        cfg.optimizer.seed = seed;
        py::gil_scoped_release release;
        return sweep(cfg, outputs, format);
      },
      py::arg("n"), py::arg("b"), py::arg("grid_min"), py::arg("grid_max"),
      py::arg("grid_count"), py::arg("outputs") = "violation,concurrence",
      py::arg("format") = "csv", py::arg("seed") = 0,
      "Coupling sweep at fixed b, rendered as CSV or JSON text.");
  m.def(
      "scan_analytic_w",
      [](int n_min, int n_max, const std::string& format) {
        SweepConfig cfg;
        cfg.mode = SweepMode::kAnalyticW;
        cfg.n_min = n_min;
        cfg.n_max = n_max;
        validate(cfg);
        py::gil_scoped_release release;
        return render(run_analytic_w(cfg), parse_format(format));
      },
      py::arg("n_min") = kMinAnalyticSites, py::arg("n_max") = 43, py::arg("format") = "csv");
}
