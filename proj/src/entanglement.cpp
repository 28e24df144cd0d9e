#include "unruh/entanglement.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace unruh {

Mat partial_transpose_alice(const DensityMatrix& rho8) {
  if (rho8.dim() != kReducedDim) {
    throw std::invalid_argument("partial transpose expects an 8-dim reduced state");
  }
  const Mat& in = rho8.mat();
  Mat out(kReducedDim, kReducedDim);
  for (int a = 0; a < 2; ++a)
    for (int pm = 0; pm < 4; ++pm)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int pm2 = 0; pm2 < 4; ++pm2) {
          out(a * 4 + pm, a2 * 4 + pm2) = in(a2 * 4 + pm, a * 4 + pm2);
        }
  return out;
}

Spectrum eigenvalues_symmetric(const Mat& m) {
  if (m.rows() != kReducedDim || m.cols() != kReducedDim) {
    throw std::invalid_argument("eigenvalues_symmetric expects an 8x8 matrix");
  }
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw std::invalid_argument("matrix is not symmetric (max asymmetry " +
                                std::to_string(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(m);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("symmetric eigendecomposition failed");
  }
  Spectrum spec;
  double residual = 0.0;
  for (int i = 0; i < kReducedDim; ++i) {
    spec.eigenvalues[i] = solver.eigenvalues()[i];  // ascending
    const Vec v = solver.eigenvectors().col(i);
    residual = std::max(residual,
                        (m * v - solver.eigenvalues()[i] * v).norm());
  }
  spec.residual = residual;
  return spec;
}

double negativity(const DensityMatrix& rho8) {
  const Spectrum spec = eigenvalues_symmetric(partial_transpose_alice(rho8));
  double neg_sum = 0.0;
  double abs_sum = 0.0;
  for (double ev : spec.eigenvalues) {
    abs_sum += std::abs(ev);
    if (ev < -kTolZero) neg_sum += -ev;
  }
  // trace-norm identity: |rho^T_A|_1 = 1 + 2N for a unit-trace input
  const double via_trace_norm = (abs_sum - rho8.trace()) / 2.0;
  if (std::abs(via_trace_norm - neg_sum) > 1e-9) {
    throw std::runtime_error("negativity self-check failed: eigenvalue sum " +
                             std::to_string(neg_sum) + " vs trace-norm " +
                             std::to_string(via_trace_norm));
  }
  return neg_sum;
}

double negativity(const ReducedState& reduced) { return negativity(reduced.rho); }

}  // namespace unruh
