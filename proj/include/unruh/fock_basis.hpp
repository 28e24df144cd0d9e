#pragma once

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace unruh {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Occupation-number label |a, pqmn>.  `a` is Alice's inertial qubit; the four
// Rindler bits follow the physical ordering |p>+_I |q>-_II |m>-_I |n>+_II
// (region-I particle, region-II antiparticle, region-I antiparticle,
// region-II particle).  Each field is 0 or 1.
struct BasisLabel {
  int a = 0;
  int p = 0;
  int q = 0;
  int m = 0;
  int n = 0;
};

inline constexpr int kModeDim = 16;    // |pqmn>
inline constexpr int kJointDim = 32;   // |a,pqmn>
inline constexpr int kReducedDim = 8;  // |a,p,m> after region II is traced out

// Linear index a*16 + p*8 + q*4 + m*2 + n; bits most-significant-first.
int index_of(const BasisLabel& label);
BasisLabel label_of(int index);

constexpr int mode_index(int p, int q, int m, int n) {
  return p * 8 + q * 4 + m * 2 + n;
}
constexpr int reduced_index(int a, int p, int m) { return a * 4 + p * 2 + m; }

// Unit-norm real amplitude vector over the 16-dim mode space or the 32-dim
// joint space.  All states handled here have real amplitudes, so no complex
// storage exists anywhere in the library.
class PureState {
 public:
  explicit PureState(Vec amplitudes);

  const Vec& amplitudes() const { return amp_; }
  int dim() const { return static_cast<int>(amp_.size()); }
  double operator[](int i) const { return amp_[i]; }

 private:
  Vec amp_;
};

// Real symmetric unit-trace matrix (8x8 reduced or 32x32 joint).  Positive
// semidefiniteness holds for every state built by this library but is only
// *checked* by the verification suites; partial transposes are plain `Mat`s
// precisely because they may be indefinite.
class DensityMatrix {
 public:
  explicit DensityMatrix(Mat entries);

  const Mat& mat() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }
  double trace() const { return m_.trace(); }
  // Smallest eigenvalue; an eigendecomposition, so meant for tests/verify.
  double min_eigenvalue() const;

 private:
  Mat m_;
};

// |psi><psi| on the joint space.  Rejects vectors whose norm deviates from 1
// by more than 1e-9.
DensityMatrix outer(const PureState& psi);

// Convex mixture sum_k w_k rho_k.  Weights must be nonnegative and sum to 1
// within 1e-12; dimensions must match.
DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& terms);

}  // namespace unruh
