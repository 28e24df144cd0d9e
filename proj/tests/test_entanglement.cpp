#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "oracle_values.hpp"
#include "unruh/entanglement.hpp"
#include "unruh/states.hpp"

using namespace unruh;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752;

using Mat8L = std::array<std::array<long double, 8>, 8>;

Mat8L to_long(const Mat& m) {
  Mat8L a{};
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) a[i][j] = static_cast<long double>(m(i, j));
  return a;
}

// Classical cyclic Jacobi in extended precision: rotations have no breakdown
// cases (unpivoted eliminations choke on the structurally zero diagonal
// entries these partial transposes carry), degenerate eigenvalues need no
// special handling, and it is a different algorithm from the library's
// tridiagonal-QR eigensolver, so it can serve as an independent reference.
std::array<double, 8> jacobi_eigenvalues(const Mat& m) {
  Mat8L a = to_long(m);
  constexpr int n = 8;
  for (int sweep = 0; sweep < 60; ++sweep) {
    long double off = 0.0L;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-36L) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-30L) continue;
        const long double theta = (a[q][q] - a[p][p]) / (2.0L * a[p][q]);
        long double t = 1.0L / (std::abs(theta) + std::sqrt(theta * theta + 1.0L));
        if (theta < 0.0L) t = -t;
        const long double c = 1.0L / std::sqrt(t * t + 1.0L);
        const long double s = t * c;
        const long double apq = a[p][q];
        a[p][p] -= t * apq;
        a[q][q] += t * apq;
        a[p][q] = a[q][p] = 0.0L;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const long double arp = a[r][p], arq = a[r][q];
          a[r][p] = a[p][r] = c * arp - s * arq;
          a[r][q] = a[q][r] = s * arp + c * arq;
        }
      }
    }
  }
  std::array<double, 8> out{};
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = static_cast<double>(a[i][i]);
  std::sort(out.begin(), out.end());
  return out;
}

DensityMatrix reduced_of(const char* family, double param, double gamma, double q_r) {
  const Family fam = family_from_string(family);
  StateParams p;
  p.gamma = gamma;
  p.q_r = q_r;
  if (is_pure(fam))
    p.alpha = param;
  else
    p.fidelity = param;
  return trace_out_region_II(joint_state(fam, p)).rho;
}

}  // namespace

TEST_CASE("partial transpose basics") {
  const DensityMatrix bell = reduced_of("phi_plus", kPi / 4, 0.0, 1.0);
  const Mat pt = partial_transpose_alice(bell);
  CHECK((pt - pt.transpose()).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK(std::abs(pt.trace() - 1.0) <= 1e-14);

  const Spectrum spec = eigenvalues_symmetric(pt);
  CHECK(spec.residual <= 1e-12);
  const double expected[] = {-0.5, 0, 0, 0, 0, 0.5, 0.5, 0.5};
  for (int i = 0; i < 8; ++i) {
    CHECK(std::abs(spec.eigenvalues[static_cast<size_t>(i)] - expected[i]) <= 1e-14);
  }

  // involution: transposing twice restores the matrix
  const DensityMatrix generic = reduced_of("phi_star", 0.9, 0.5, 0.8);
  const Mat once = partial_transpose_alice(generic);
  const DensityMatrix back(once);  // PT output is symmetric and unit trace
  CHECK((partial_transpose_alice(back) - generic.mat()).cwiseAbs().maxCoeff() <= 1e-15);
}

TEST_CASE("eigensolver agrees with extended-precision Jacobi") {
  struct Case {
    const char* family;
    double param, gamma, q_r;
  };
  const Case cases[] = {
      {"phi_plus", 0.6, 0.3, 0.8},
      {"phi_plus", kPi / 4, kPi / 4, kInvSqrt2},  // exactly degenerate pair
      {"phi_plus", kPi / 4, kPi / 4, 1.0},
      {"phi_minus", 1.0, 0.7, 0.9},
      {"phi_star", 0.653, 0.5, kInvSqrt2},
      {"werner", 0.47, 0.7, 0.609},
      {"werner", 0.50, 0.183657, kInvSqrt2},
      {"werner_like", 0.62, 0.571710, kInvSqrt2},
  };
  for (const Case& c : cases) {
    const Mat pt = partial_transpose_alice(reduced_of(c.family, c.param, c.gamma, c.q_r));
    const Spectrum lib = eigenvalues_symmetric(pt);
    const std::array<double, 8> ref = jacobi_eigenvalues(pt);
    double neg_sum = 0.0;
    for (size_t i = 0; i < 8; ++i) {
      CHECK(std::abs(lib.eigenvalues[i] - ref[i]) <= 1e-13);
      if (ref[i] < -kTolZero) neg_sum -= ref[i];
    }
    CHECK(std::abs(negativity(reduced_of(c.family, c.param, c.gamma, c.q_r)) - neg_sum) <=
          1e-12);
  }
}

TEST_CASE("frozen spot negativities") {
  for (const auto& s : oracle::kSpots) {
    const double n = negativity(reduced_of(s.family, s.param, s.gamma, s.q_r));
    CHECK(std::abs(n - s.negativity) <= 1e-12);
  }
}

TEST_CASE("exact quarter values") {
  CHECK(std::abs(negativity(reduced_of("phi_plus", kPi / 4, kPi / 4, 1.0)) -
                 oracle::kSingleModeEndpoint) <= 1e-12);
  CHECK(std::abs(negativity(reduced_of("phi_plus", kPi / 4, kPi / 4, kInvSqrt2)) - 0.25) <=
        1e-12);
  CHECK(std::abs(negativity(reduced_of("phi_plus", kPi / 6, 0.0, kInvSqrt2)) -
                 oracle::kInertialQuarterPoint) <= 1e-12);
  CHECK(std::abs(negativity(reduced_of("phi_plus", kPi / 4, 0.0, 1.0)) - 0.5) <= 1e-13);
}

TEST_CASE("product states have zero negativity") {
  for (double g : {0.0, 0.4, kPi / 4}) {
    for (double q : {0.6, 1.0}) {
      CHECK(negativity(reduced_of("phi_plus", 0.0, g, q)) == 0.0);
      CHECK(negativity(reduced_of("phi_star", kPi / 2, g, q)) == 0.0);
    }
  }
}

TEST_CASE("relabeling Bob's region-I modes preserves negativity") {
  // (a,p,m) -> (a,m,p) is a permutation acting on Bob's side only, so the
  // partial-transpose spectrum cannot change.
  const DensityMatrix rho = reduced_of("phi_plus", 0.6, 0.55, kInvSqrt2);
  Mat permuted = Mat::Zero(8, 8);
  auto swap_pm = [](int idx) {
    const int a = idx >> 2, p = (idx >> 1) & 1, m = idx & 1;
    return a * 4 + m * 2 + p;
  };
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) permuted(swap_pm(i), swap_pm(j)) = rho.mat()(i, j);
  CHECK(std::abs(negativity(DensityMatrix(permuted)) - negativity(rho)) <= 1e-12);
}

TEST_CASE("negativity stays within the fermionic bound") {
  for (int ai = 0; ai <= 6; ++ai) {
    for (int gi = 0; gi <= 6; ++gi) {
      for (double q : {0.3, kInvSqrt2, 1.0}) {
        const double n =
            negativity(reduced_of("phi_plus", ai * (kPi / 2) / 6, gi * (kPi / 4) / 6, q));
        CHECK(n >= 0.0);
        CHECK(n <= 0.5 + 1e-10);
      }
    }
  }
}

TEST_CASE("eigenvalues_symmetric rejects asymmetric input") {
  Mat bad = Mat::Zero(8, 8);
  bad(0, 1) = 1.0;  // bad(1,0) left at zero
  CHECK_THROWS_AS(eigenvalues_symmetric(bad), std::invalid_argument);
}
