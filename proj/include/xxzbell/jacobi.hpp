#pragma once

#include <vector>

#include "xxzbell/dense_matrix.hpp"

namespace xxzbell {

struct EigenSystem {
  std::vector<double> values;  // unsorted, as left on the diagonal
  DenseMatrix vectors;         // row i is the unit eigenvector for values[i]
  int sweeps = 0;
  bool converged = false;
};

// Cyclic Jacobi rotations on a real symmetric matrix, sweeping until the
// off-diagonal Frobenius norm drops below rel_tol * ||a||_F.
EigenSystem jacobi_eigensystem(DenseMatrix a, double rel_tol = 1e-12,
                               int max_sweeps = 100);

}  // namespace xxzbell
