#include "unruh/fock_basis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace unruh {

namespace {

void check_bit(int b, const char* name) {
  if (b != 0 && b != 1) {
    throw std::invalid_argument(std::string("basis label field ") + name +
                                " must be 0 or 1, got " + std::to_string(b));
  }
}

}  // namespace

int index_of(const BasisLabel& label) {
  check_bit(label.a, "a");
  check_bit(label.p, "p");
  check_bit(label.q, "q");
  check_bit(label.m, "m");
  check_bit(label.n, "n");
  return label.a * 16 + label.p * 8 + label.q * 4 + label.m * 2 + label.n;
}

BasisLabel label_of(int index) {
  if (index < 0 || index >= kJointDim) {
    throw std::invalid_argument("basis index out of range: " + std::to_string(index));
  }
  return BasisLabel{(index >> 4) & 1, (index >> 3) & 1, (index >> 2) & 1,
                    (index >> 1) & 1, index & 1};
}

PureState::PureState(Vec amplitudes) : amp_(std::move(amplitudes)) {
  const int d = static_cast<int>(amp_.size());
  if (d != kModeDim && d != kJointDim) {
    throw std::invalid_argument("pure state dimension must be 16 or 32, got " +
                                std::to_string(d));
  }
  const double norm = amp_.norm();
  if (std::abs(norm - 1.0) > 1e-9) {
    throw std::invalid_argument("pure state is not normalized: |v| = " +
                                std::to_string(norm));
  }
}

DensityMatrix::DensityMatrix(Mat entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) {
    throw std::invalid_argument("density matrix must be square");
  }
  const int d = static_cast<int>(m_.rows());
  if (d != kReducedDim && d != kJointDim) {
    throw std::invalid_argument("density matrix dimension must be 8 or 32, got " +
                                std::to_string(d));
  }
  const double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-14) {
    throw std::invalid_argument("density matrix is not symmetric (max asymmetry " +
                                std::to_string(asym) + ")");
  }
  if (std::abs(m_.trace() - 1.0) > 1e-12) {
    throw std::invalid_argument("density matrix trace deviates from 1 by " +
                                std::to_string(m_.trace() - 1.0));
  }
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Mat> solver(m_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

DensityMatrix outer(const PureState& psi) {
  if (psi.dim() != kJointDim) {
    throw std::invalid_argument("outer() expects a 32-dim joint-space state");
  }
  const Vec& v = psi.amplitudes();
  return DensityMatrix(v * v.transpose());
}

DensityMatrix mix(const std::vector<std::pair<double, DensityMatrix>>& terms) {
  if (terms.empty()) {
    throw std::invalid_argument("mix() needs at least one term");
  }
  const int d = terms.front().second.dim();
  double weight_sum = 0.0;
  for (const auto& [w, rho] : terms) {
    if (w < 0.0) {
      throw std::invalid_argument("mix() weights must be nonnegative");
    }
    if (rho.dim() != d) {
      throw std::invalid_argument("mix() dimension mismatch");
    }
    weight_sum += w;
  }
  if (std::abs(weight_sum - 1.0) > 1e-12) {
    throw std::invalid_argument("mix() weights sum to " + std::to_string(weight_sum) +
                                ", expected 1");
  }
  Mat acc = Mat::Zero(d, d);
  for (const auto& [w, rho] : terms) {
    acc += w * rho.mat();
  }
  return DensityMatrix(std::move(acc));
}

}  // namespace unruh
