#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>

namespace xxzbell {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  double spread_tol = 1e-10;  // stop when max f - min f over the simplex drops below
  int max_iterations = 2000;
};

template <std::size_t D>
struct NelderMeadResult {
  std::array<double, D> x{};
  double f = 0.0;
  int iterations = 0;
  long evaluations = 0;
};

// Unconstrained Nelder-Mead minimisation; `steps` sets the initial simplex
// edges along each axis. Bounded or periodic domains are handled by the
// objective (e.g. by wrapping its argument).
template <std::size_t D, class F>
NelderMeadResult<D> nelder_mead_minimize(F&& f, std::array<double, D> start,
                                         std::array<double, D> steps,
                                         const NelderMeadOptions& opt = {}) {
  using Point = std::array<double, D>;
  NelderMeadResult<D> res;
  auto eval = [&](const Point& p) {
    ++res.evaluations;
    return f(p);
  };
  auto along = [](const Point& from, const Point& to, double t) {
    Point p;
    for (std::size_t i = 0; i < D; ++i) p[i] = from[i] + t * (to[i] - from[i]);
    return p;
  };

  std::array<Point, D + 1> x;
  std::array<double, D + 1> fx;
  x[0] = start;
  for (std::size_t i = 0; i < D; ++i) {
    Point p = x[0];
    p[i] += steps[i];
    x[i + 1] = p;
  }
  for (std::size_t i = 0; i <= D; ++i) fx[i] = eval(x[i]);

  std::array<std::size_t, D + 1> order;
  while (true) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[D - 1];
    if (fx[worst] - fx[best] < opt.spread_tol) break;
    if (res.iterations == opt.max_iterations) break;
    ++res.iterations;

    Point centroid{};
    for (std::size_t i = 0; i <= D; ++i) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < D; ++d) centroid[d] += x[i][d] / D;
    }

    const Point xr = along(centroid, x[worst], -opt.reflection);
    const double fr = eval(xr);
    if (fr < fx[best]) {
      const Point xe = along(centroid, xr, opt.expansion);
      const double fe = eval(xe);
      if (fe < fr) {
        x[worst] = xe;
        fx[worst] = fe;
      } else {
        x[worst] = xr;
        fx[worst] = fr;
      }
      continue;
    }
    if (fr < fx[second_worst]) {
      x[worst] = xr;
      fx[worst] = fr;
      continue;
    }
    const bool outside = fr < fx[worst];
    const Point xc = along(centroid, outside ? xr : x[worst], opt.contraction);
    const double fc = eval(xc);
    if (outside ? fc <= fr : fc < fx[worst]) {
      x[worst] = xc;
      fx[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= D; ++i) {
      if (i == best) continue;
      x[i] = along(x[best], x[i], opt.shrink);
      fx[i] = eval(x[i]);
    }
  }

  const auto best = static_cast<std::size_t>(
      std::min_element(fx.begin(), fx.end()) - fx.begin());
  res.x = x[best];
  res.f = fx[best];
  return res;
}

}  // namespace xxzbell
