#include "xxzbell/bell_violation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "xxzbell/errors.hpp"
#include "xxzbell/nelder_mead.hpp"

namespace xxzbell {

using std::numbers::pi;

void validate(const MeasurementAngles& t) {
  for (double v : t.as_array()) {
    if (!(v >= 0.0 && v <= pi)) {
      std::ostringstream msg;
      msg << "measurement angle " << v << " outside [0, pi]";
      throw DomainError(msg.str());
    }
  }
}

MeasurementVectors vectors_from_angles(const MeasurementAngles& t) {
  validate(t);
  const double c1 = std::cos(t.theta1), s1 = std::sin(t.theta1);
  const double c2 = std::cos(t.theta2), s2 = std::sin(t.theta2);
  const double c3 = std::cos(t.theta3), s3 = std::sin(t.theta3);
  const double c4 = std::cos(t.theta4), s4 = std::sin(t.theta4);
  return MeasurementVectors{{c1, s1}, {c2, s2}, {s2, -c2},
                            {c3, s3}, {c4, s4}, {s4, -c4}};
}

std::vector<BellTerm> bell_terms(int n, const MeasurementVectors& v) {
  if (n < kMinSites) {
    throw DomainError("Bell operator needs n >= 3, got n=" + std::to_string(n));
  }
  std::vector<Ket> all_a(n, v.a_prime);
  all_a[0] = v.a;

  std::vector<BellTerm> terms;
  terms.reserve(2 * n);
  terms.push_back({+1, all_a});
  for (int j = 0; j < n; ++j) {
    BellTerm t{-1, all_a};
    t.site_vectors[j] = (j == 0) ? v.b : v.b_prime;
    terms.push_back(std::move(t));
  }
  for (int j = 1; j < n; ++j) {
    BellTerm t{-1, all_a};
    t.site_vectors[0] = v.b_bar;
    t.site_vectors[j] = v.b_prime_bar;
    terms.push_back(std::move(t));
  }
  return terms;
}

double product_overlap(const SectorState& s, std::span<const Ket> site_vectors) {
  const int n = s.sites();
  if (static_cast<int>(site_vectors.size()) != n) {
    throw DomainError("product state has " +
                      std::to_string(site_vectors.size()) +
                      " site vectors, state has n=" + std::to_string(n));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    const Config c = s.basis[i];
    double prod = s.amplitudes[i];
    for (int j = 0; j < n; ++j) prod *= site_vectors[j][(c >> j) & 1U];
    sum += prod;
  }
  return sum;
}

double expectation(const SectorState& s, const MeasurementAngles& t) {
  double value = 0.0;
  for (const BellTerm& term : bell_terms(s.sites(), vectors_from_angles(t))) {
    const double o = product_overlap(s, term.site_vectors);
    value += term.sign * o * o;
  }
  return value;
}

BellEvaluator::BellEvaluator(SectorState state) : state_(std::move(state)) {
  const int n = state_.sites();
  require_ed_sites(n);
  bits_.resize(state_.basis.size() * n);
  for (std::size_t i = 0; i < state_.basis.size(); ++i) {
    for (int j = 0; j < n; ++j) {
      bits_[i * n + j] = static_cast<std::uint8_t>((state_.basis[i] >> j) & 1U);
    }
  }
}

double BellEvaluator::operator()(const MeasurementAngles& t) const {
  const MeasurementVectors v = vectors_from_angles(t);
  const int n = state_.sites();
  // Overlaps: all-a, b on site 1, b' on site j, (b_bar, b'_bar) on (1, j).
  double all_a = 0.0;
  double b_first = 0.0;
  std::array<double, kMaxSites> single{};
  std::array<double, kMaxSites> paired{};
  std::array<double, kMaxSites + 1> prefix{};
  std::array<double, kMaxSites + 1> suffix{};

  for (std::size_t i = 0; i < state_.basis.size(); ++i) {
    const std::uint8_t* occ = &bits_[i * n];
    const double amp = state_.amplitudes[i];
    // prefix[j]: product of a' over sites 1..j-1 (0-based, site 0 excluded);
    // suffix[j]: product over sites j+1..n-1.
    prefix[1] = 1.0;
    for (int j = 1; j < n; ++j) prefix[j + 1] = prefix[j] * v.a_prime[occ[j]];
    suffix[n - 1] = 1.0;
    for (int j = n - 1; j > 1; --j) suffix[j - 1] = suffix[j] * v.a_prime[occ[j]];
    const double rest = prefix[n];

    all_a += amp * v.a[occ[0]] * rest;
    b_first += amp * v.b[occ[0]] * rest;
    const double amp_a = amp * v.a[occ[0]];
    const double amp_bbar = amp * v.b_bar[occ[0]];
    for (int j = 1; j < n; ++j) {
      const double others = prefix[j] * suffix[j];
      single[j] += amp_a * others * v.b_prime[occ[j]];
      paired[j] += amp_bbar * others * v.b_prime_bar[occ[j]];
    }
  }

  double value = all_a * all_a - b_first * b_first;
  for (int j = 1; j < n; ++j) {
    value -= single[j] * single[j] + paired[j] * paired[j];
  }
  return value;
}

double analytic_w(int n, const MeasurementAngles& t) {
  if (n < kMinAnalyticSites || n > kMaxAnalyticSites) {
    throw DomainError("closed-form violation defined for 4 <= n <= 64, got n=" +
                      std::to_string(n));
  }
  validate(t);
  const double s1 = std::sin(t.theta1), c1 = std::cos(t.theta1);
  const double s2 = std::sin(t.theta2), c2 = std::cos(t.theta2);
  const double s3 = std::sin(t.theta3), c3 = std::cos(t.theta3);
  const double s4 = std::sin(t.theta4), c4 = std::cos(t.theta4);
  const double N = n;
  const double c3_n1 = std::pow(c3, n - 1);
  const double c3_n2 = std::pow(c3, n - 2);
  const double c3_n3 = std::pow(c3, n - 3);

  const double first = s1 * c3_n1 + (N - 1) * s3 * c1 * c3_n2;
  const double second = s2 * c3_n1 + (N - 1) * s3 * c2 * c3_n2;
  const double third =
      s1 * c4 * c3_n2 + s4 * c1 * c3_n2 + (N - 2) * s3 * c1 * c4 * c3_n3;
  const double fourth =
      s4 * c2 * c3_n2 + s2 * c4 * c3_n2 - (N - 2) * s2 * s3 * s4 * c3_n3;

  return first * first / N - second * second / N -
         (N - 1) / N * third * third - (N - 1) / N * fourth * fourth;
}

double wrap_angle(double theta) {
  if (theta >= 0.0 && theta <= pi) return theta;
  double w = std::fmod(theta, pi);
  if (w < 0.0) w += pi;
  return w >= pi ? 0.0 : w;
}

ProfilePoint profile_maximum(const AngleObjective& objective, double theta3,
                             double theta4) {
  const auto at = [&](double t1, double t2) {
    return objective(MeasurementAngles{t1, t2, theta3, theta4});
  };
  const double f00 = at(0.0, 0.0);
  const double f_half_0 = at(pi / 2, 0.0);
  const double f_0_half = at(0.0, pi / 2);
  const double p1 = (f00 - f_half_0) / 2.0;
  const double p2 = (at(pi / 4, 0.0) - at(3 * pi / 4, 0.0)) / 2.0;
  const double q1 = (f00 - f_0_half) / 2.0;
  const double q2 = (at(0.0, pi / 4) - at(0.0, 3 * pi / 4)) / 2.0;
  const double constant = (f_half_0 + f_0_half) / 2.0;

  ProfilePoint out;
  out.value = constant + std::hypot(p1, p2) + std::hypot(q1, q2);
  out.angles = {wrap_angle(std::atan2(p2, p1) / 2.0),
                wrap_angle(std::atan2(q2, q1) / 2.0), theta3, theta4};
  return out;
}

namespace {

struct Probe {
  double value;
  MeasurementAngles angles;
};

// Higher value first; equal values resolved towards smaller angles.
bool better(const Probe& x, const Probe& y) {
  if (x.value != y.value) return x.value > y.value;
  return x.angles < y.angles;
}

MeasurementAngles wrapped(const std::array<double, 4>& x) {
  return {wrap_angle(x[0]), wrap_angle(x[1]), wrap_angle(x[2]), wrap_angle(x[3])};
}

// Objective wrapper remembering the best probe and the evaluation count.
class Tracker {
 public:
  explicit Tracker(const AngleObjective& f) : f_(f) {}

  double operator()(const MeasurementAngles& t) {
    const Probe p{f_(t), t};
    ++evaluations_;
    if (!seen_ || better(p, best_)) {
      best_ = p;
      seen_ = true;
    }
    return p.value;
  }
  const Probe& best() const { return best_; }
  long evaluations() const { return evaluations_; }

 private:
  const AngleObjective& f_;
  Probe best_{0.0, {}};
  bool seen_ = false;
  long evaluations_ = 0;
};

std::mt19937_64 start_rng(std::uint64_t seed, std::uint32_t stage,
                          std::size_t start) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), stage,
                    static_cast<std::uint32_t>(start)};
  return std::mt19937_64(seq);
}

template <std::size_t D>
std::array<double, D> jittered_steps(std::mt19937_64& rng, double base,
                                     double jitter) {
  std::uniform_real_distribution<double> dist(1.0 - jitter, 1.0 + jitter);
  std::array<double, D> steps;
  for (double& s : steps) s = base * dist(rng);
  return steps;
}

double grid_angle(int i, int points) {
  return (i == points - 1) ? pi : pi * i / (points - 1);
}

}  // namespace

ViolationResult maximize(const AngleObjective& objective,
                         const OptimizerConfig& cfg) {
  if (cfg.grid_points < 2 || cfg.restarts < 0 ||
      (cfg.profile_seeding && cfg.profile_grid_points < 2)) {
    throw DomainError("optimizer needs grid sizes >= 2 and restarts >= 0");
  }
  Tracker track(objective);
  NelderMeadOptions opt;
  opt.spread_tol = cfg.spread_tol;
  opt.max_iterations = cfg.max_iterations;
  const auto refine_4d = [&](const MeasurementAngles& start, double step,
                             std::uint32_t stage, std::size_t index) {
    auto rng = start_rng(cfg.seed, stage, index);
    nelder_mead_minimize<4>(
        [&](const std::array<double, 4>& x) { return -track(wrapped(x)); },
        start.as_array(), jittered_steps<4>(rng, step, cfg.step_jitter), opt);
  };

  // Stage 1: coarse grid over all four angles.
  const int g = cfg.grid_points;
  std::vector<Probe> grid;
  grid.reserve(static_cast<std::size_t>(g) * g * g * g);
  for (int i1 = 0; i1 < g; ++i1)
    for (int i2 = 0; i2 < g; ++i2)
      for (int i3 = 0; i3 < g; ++i3)
        for (int i4 = 0; i4 < g; ++i4) {
          const MeasurementAngles t{grid_angle(i1, g), grid_angle(i2, g),
                                    grid_angle(i3, g), grid_angle(i4, g)};
          grid.push_back({track(t), t});
        }
  std::stable_sort(grid.begin(), grid.end(), better);
  const std::size_t starts =
      std::min(grid.size(), static_cast<std::size_t>(cfg.restarts));
  for (std::size_t r = 0; r < starts; ++r) {
    refine_4d(grid[r].angles, pi / (g - 1), 1, r);
  }

  // Stage 2: exact inner maximum over (theta1, theta2) on a grid of
  // (theta3, theta4), refined on the 2-D profile and then in 4-D.
  if (cfg.profile_seeding && cfg.restarts > 0) {
    const AngleObjective tracked = [&](const MeasurementAngles& t) { return track(t); };
    const int h = cfg.profile_grid_points;
    std::vector<ProfilePoint> profile;
    profile.reserve(static_cast<std::size_t>(h) * h);
    for (int i3 = 0; i3 < h; ++i3)
      for (int i4 = 0; i4 < h; ++i4) {
        profile.push_back(
            profile_maximum(tracked, grid_angle(i3, h), grid_angle(i4, h)));
      }
    std::stable_sort(profile.begin(), profile.end(),
                     [](const ProfilePoint& x, const ProfilePoint& y) {
                       return better({x.value, x.angles}, {y.value, y.angles});
                     });
    const std::size_t profile_starts =
        std::min(profile.size(), static_cast<std::size_t>(cfg.restarts));
    const double step = pi / (h - 1);
    for (std::size_t r = 0; r < profile_starts; ++r) {
      auto rng = start_rng(cfg.seed, 2, r);
      ProfilePoint top = profile[r];
      const auto nm = nelder_mead_minimize<2>(
          [&](const std::array<double, 2>& x) {
            const ProfilePoint p =
                profile_maximum(tracked, wrap_angle(x[0]), wrap_angle(x[1]));
            if (p.value > top.value) top = p;
            return -p.value;
          },
          {profile[r].angles.theta3, profile[r].angles.theta4},
          jittered_steps<2>(rng, step, cfg.step_jitter), opt);
      (void)nm;
      track(top.angles);
      refine_4d(top.angles, step / 4.0, 3, r);
    }
  }

  ViolationResult out;
  out.value = track.best().value;
  out.angles = track.best().angles;
  out.evaluations = track.evaluations();
  out.seed = cfg.seed;
  return out;
}

ViolationResult maximize(const SectorState& state, const OptimizerConfig& cfg) {
  const BellEvaluator eval(state);
  ViolationResult r =
      maximize([&](const MeasurementAngles& t) { return eval(t); }, cfg);
  r.sites = state.sites();
  r.sector = state.excitations();
  return r;
}

ViolationResult maximize_analytic(int n, const OptimizerConfig& cfg) {
  if (n < kMinAnalyticSites || n > kMaxAnalyticSites) {
    throw DomainError("closed-form violation defined for 4 <= n <= 64, got n=" +
                      std::to_string(n));
  }
  ViolationResult r = maximize(
      [n](const MeasurementAngles& t) { return analytic_w(n, t); }, cfg);
  r.sites = n;
  return r;
}

}  // namespace xxzbell
