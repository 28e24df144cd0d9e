#pragma once

#include <array>

#include "unruh/reduction.hpp"

namespace unruh {

// Eigenvalues below -kTolZero count as negative; anything in (-kTolZero, 0)
// is numerical noise and treated as zero.
inline constexpr double kTolZero = 1e-10;

struct Spectrum {
  std::array<double, kReducedDim> eigenvalues{};  // ascending
  double residual = 0.0;  // max_i |M v_i - lambda_i v_i|_2
};

// Transpose on Alice's index only:
//   out[(a,p,m),(a',p',m')] = in[(a',p,m),(a,p',m')].
// The result is symmetric and trace-preserving but generally indefinite,
// hence a plain matrix rather than a DensityMatrix.
Mat partial_transpose_alice(const DensityMatrix& rho8);

// Symmetric eigendecomposition with a residual certificate; rejects inputs
// whose asymmetry exceeds 1e-12.
Spectrum eigenvalues_symmetric(const Mat& m);

// Negativity N = sum of |negative eigenvalues| of the partial transpose.
// Cross-checked internally against the trace-norm identity
// (|rho^T_A|_1 - 1)/2 within 1e-9.
double negativity(const ReducedState& reduced);
double negativity(const DensityMatrix& rho8);

}  // namespace unruh
