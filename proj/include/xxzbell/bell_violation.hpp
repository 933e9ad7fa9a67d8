#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "xxzbell/state.hpp"

namespace xxzbell {

// Measurement angles, radians in [0, pi]: (theta1, theta2) fix the site-1
// settings a, b; (theta3, theta4) fix the shared settings a', b' of sites 2..n.
struct MeasurementAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  double theta4 = 0.0;

  std::array<double, 4> as_array() const { return {theta1, theta2, theta3, theta4}; }
  static MeasurementAngles from_array(const std::array<double, 4>& t) {
    return {t[0], t[1], t[2], t[3]};
  }
  friend auto operator<=>(const MeasurementAngles&, const MeasurementAngles&) = default;
};

// Throws DomainError when any angle lies outside [0, pi].
void validate(const MeasurementAngles& t);

// Real single-qubit ket (component on |0>, component on |1>).
using Ket = std::array<double, 2>;

struct MeasurementVectors {
  Ket a, b, b_bar, a_prime, b_prime, b_prime_bar;
};

MeasurementVectors vectors_from_angles(const MeasurementAngles& t);

// Signed product of rank-1 projectors, one ket per site.
struct BellTerm {
  int sign = -1;
  std::vector<Ket> site_vectors;
};

// The 2n terms of the joint-measurement operator: the all-a term (+), n
// single-b terms (-), and n-1 terms pairing b_bar on site 1 with b_prime_bar
// on site j (-).
std::vector<BellTerm> bell_terms(int n, const MeasurementVectors& v);

// <phi_1 ... phi_n | s> for a real product state.
double product_overlap(const SectorState& s, std::span<const Ket> site_vectors);

// <s| H_bell |s> summed term by term through bell_terms / product_overlap.
double expectation(const SectorState& s, const MeasurementAngles& t);

// Same value as expectation(), computed in O(dim * n) per call with prefix
// and suffix products instead of materialising the terms.
class BellEvaluator {
 public:
  explicit BellEvaluator(SectorState state);
  double operator()(const MeasurementAngles& t) const;
  const SectorState& state() const noexcept { return state_; }

 private:
  SectorState state_;
  std::vector<std::uint8_t> bits_;  // dim x n site occupations
};

inline constexpr int kMinAnalyticSites = 4;
inline constexpr int kMaxAnalyticSites = 64;

// Closed-form expectation on the uniform single-excitation state of n sites.
double analytic_w(int n, const MeasurementAngles& t);

// Strict positivity threshold for declaring a violation.
inline constexpr double kViolationThreshold = 1e-9;

struct OptimizerConfig {
  int grid_points = 9;     // per angle, including both ends of [0, pi]
  int restarts = 8;        // seeds refined by Nelder-Mead, per seeding stage
  int max_iterations = 2000;
  double spread_tol = 1e-10;
  double value_tol = 1e-8;
  double step_jitter = 0.25;  // relative jitter of the initial simplex edge
  bool profile_seeding = true;
  int profile_grid_points = 33;  // per angle over (theta3, theta4)
  std::uint64_t seed = 0;
};

struct ViolationResult {
  double value = 0.0;
  MeasurementAngles angles;
  long evaluations = 0;
  std::uint64_t seed = 0;
  int sites = 0;
  int sector = -1;  // -1 for the closed-form target

  bool violated() const noexcept { return value > kViolationThreshold; }
};

using AngleObjective = std::function<double(const MeasurementAngles&)>;

// Maps an angle onto [0, pi]; values already inside are returned unchanged.
// Kets at theta and theta + pi differ only in sign, so every Bell expectation
// is pi-periodic in each angle.
double wrap_angle(double theta);

struct ProfilePoint {
  double value = 0.0;
  MeasurementAngles angles;
};

// For fixed (theta3, theta4) a Bell expectation splits into P(theta1) +
// Q(theta2), each of the form c0 + c1 cos 2t + c2 sin 2t. Recovers both from
// seven evaluations and returns the exact maximum over (theta1, theta2).
ProfilePoint profile_maximum(const AngleObjective& objective, double theta3,
                             double theta4);

// Multi-start Nelder-Mead maximisation over the periodic angle domain.
// Seeds come from a coarse 4-D grid and, when cfg.profile_seeding is set,
// from the best points of a (theta3, theta4) grid of profile_maximum, each
// refined on the 2-D profile first. The objective must be a Bell expectation
// (see profile_maximum). The result is the best value probed anywhere, ties
// broken by smaller angles.
ViolationResult maximize(const AngleObjective& objective,
                         const OptimizerConfig& cfg);
ViolationResult maximize(const SectorState& state, const OptimizerConfig& cfg);
ViolationResult maximize_analytic(int n, const OptimizerConfig& cfg);

}  // namespace xxzbell
