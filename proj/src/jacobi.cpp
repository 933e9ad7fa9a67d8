#include "xxzbell/jacobi.hpp"

#include <cmath>

namespace xxzbell {

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

void rotate(DenseMatrix& a, DenseMatrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t dim = a.dim();

  for (std::size_t r = 0; r < dim; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    const double np = c * arp - s * arq;
    const double nq = s * arp + c * arq;
    a(r, p) = np;
    a(p, r) = np;
    a(r, q) = nq;
    a(q, r) = nq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t r = 0; r < dim; ++r) {
    const double vp = v(p, r);
    const double vq = v(q, r);
    v(p, r) = c * vp - s * vq;
    v(q, r) = s * vp + c * vq;
  }
}

}  // namespace

EigenSystem jacobi_eigensystem(DenseMatrix a, double rel_tol, int max_sweeps) {
  const std::size_t dim = a.dim();
  EigenSystem out;
  out.vectors = DenseMatrix(dim);
  for (std::size_t i = 0; i < dim; ++i) out.vectors(i, i) = 1.0;

  const double threshold = rel_tol * a.frobenius_norm();
  while (true) {
    if (off_diagonal_norm(a) <= threshold) {
      out.converged = true;
      break;
    }
    if (out.sweeps == max_sweeps) break;
    for (std::size_t p = 0; p + 1 < dim; ++p) {
      for (std::size_t q = p + 1; q < dim; ++q) {
        if (a(p, q) != 0.0) rotate(a, out.vectors, p, q);
      }
    }
    ++out.sweeps;
  }

  out.values.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) out.values[i] = a(i, i);
  return out;
}

}  // namespace xxzbell
