#include "unruh/reduction.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace unruh {

namespace {

constexpr double kPi = std::numbers::pi;

// Diagonal of the reduced projector |a, 0_U><a, 0_U| over |a,p,m>:
// the vacuum has no q=n cross terms, so only squared amplitudes survive.
void add_vacuum_block(Mat& r, int a, double c, double s, double w) {
  const double y = s * s * c * c;
  r(reduced_index(a, 0, 0), reduced_index(a, 0, 0)) += w * c * c * c * c;
  r(reduced_index(a, 0, 1), reduced_index(a, 0, 1)) += w * y;
  r(reduced_index(a, 1, 0), reduced_index(a, 1, 0)) += w * y;
  r(reduced_index(a, 1, 1), reduced_index(a, 1, 1)) += w * s * s * s * s;
}

// Reduced projector |a, 1+_U><a, 1+_U|.
void add_one_particle_block(Mat& r, int a, double c, double s, double q_r,
                            double q_l, double w) {
  const double x = q_r * q_r * c * c + q_l * q_l * s * s;
  const int i00 = reduced_index(a, 0, 0);
  const int i10 = reduced_index(a, 1, 0);
  const int i11 = reduced_index(a, 1, 1);
  r(i00, i00) += w * q_l * q_l * c * c;
  r(i10, i10) += w * x;
  r(i11, i11) += w * q_r * q_r * s * s;
  r(i11, i00) += -w * q_r * q_l * s * c;
  r(i00, i11) += -w * q_r * q_l * s * c;
}

Mat closed_phi_plus(double alpha, double gamma, double q_r) {
  const double q_l = std::sqrt(1.0 - q_r * q_r);
  const double c = std::cos(gamma), s = std::sin(gamma);
  const double ca2 = std::cos(alpha) * std::cos(alpha);
  const double sa2 = std::sin(alpha) * std::sin(alpha);
  const double cross = std::cos(alpha) * std::sin(alpha);

  Mat r = Mat::Zero(kReducedDim, kReducedDim);
  add_vacuum_block(r, 0, c, s, ca2);
  add_one_particle_block(r, 1, c, s, q_r, q_l, sa2);
  // vacuum/one-particle coherences (alpha cross terms)
  const auto set_sym = [&r](int i, int j, double v) { r(i, j) = r(j, i) = v; };
  set_sym(reduced_index(0, 0, 0), reduced_index(1, 1, 0), cross * q_r * c * c * c);
  set_sym(reduced_index(0, 0, 1), reduced_index(1, 0, 0), -cross * q_l * s * c * c);
  set_sym(reduced_index(0, 0, 1), reduced_index(1, 1, 1), cross * q_r * s * s * c);
  set_sym(reduced_index(0, 1, 1), reduced_index(1, 1, 0), cross * q_l * s * s * s);
  return r;
}

Mat closed_phi_star(double alpha, double gamma, double q_r) {
  const double q_l = std::sqrt(1.0 - q_r * q_r);
  const double c = std::cos(gamma), s = std::sin(gamma);
  const double ca2 = std::cos(alpha) * std::cos(alpha);
  const double sa2 = std::sin(alpha) * std::sin(alpha);
  const double cross = std::cos(alpha) * std::sin(alpha);

  Mat r = Mat::Zero(kReducedDim, kReducedDim);
  add_one_particle_block(r, 0, c, s, q_r, q_l, ca2);
  add_vacuum_block(r, 1, c, s, sa2);
  const auto set_sym = [&r](int i, int j, double v) { r(i, j) = r(j, i) = v; };
  set_sym(reduced_index(0, 1, 0), reduced_index(1, 0, 0), cross * q_r * c * c * c);
  set_sym(reduced_index(0, 0, 0), reduced_index(1, 0, 1), -cross * q_l * s * c * c);
  set_sym(reduced_index(0, 1, 1), reduced_index(1, 0, 1), cross * q_r * s * s * c);
  set_sym(reduced_index(0, 1, 0), reduced_index(1, 1, 1), cross * q_l * s * s * s);
  return r;
}

Mat closed_werner(double f, double gamma, double q_r) {
  const double q_l = std::sqrt(1.0 - q_r * q_r);
  const double c = std::cos(gamma), s = std::sin(gamma);
  Mat r = f * closed_phi_plus(kPi / 4, gamma, q_r);
  for (int a : {0, 1}) {
    add_vacuum_block(r, a, c, s, (1.0 - f) / 4.0);
    add_one_particle_block(r, a, c, s, q_r, q_l, (1.0 - f) / 4.0);
  }
  return r;
}

Mat closed_werner_like(double f, double gamma, double q_r) {
  const double q_l = std::sqrt(1.0 - q_r * q_r);
  const double c = std::cos(gamma), s = std::sin(gamma);
  Mat r = f * closed_phi_plus(kPi / 4, gamma, q_r);
  add_one_particle_block(r, 0, c, s, q_r, q_l, (1.0 - f) / 2.0);
  add_vacuum_block(r, 1, c, s, (1.0 - f) / 2.0);
  return r;
}

const char* kDiagCorrectionPlus =
    "cos(2g) coefficient carries q_r^2, not q_l^2: the g->0 limit forces "
    "q_r^2 sin^2(alpha) on this diagonal";
const char* kDiagCorrectionStar =
    "cos(2g) coefficient carries q_r^2, not q_l^2: the g->0 limit forces "
    "q_r^2 cos^2(alpha) on this diagonal";
const char* kCoherenceCorrection =
    "coherence scales with cos^2(alpha), not sin^2(alpha): the alpha=0 "
    "product-state limit |0>|1+> fixes its weight";

}  // namespace

ReducedState trace_out_region_II(const DensityMatrix& rho32) {
  if (rho32.dim() != kJointDim) {
    throw std::invalid_argument("trace_out_region_II expects a 32-dim state");
  }
  const Mat& in = rho32.mat();
  Mat r = Mat::Zero(kReducedDim, kReducedDim);
  for (int a = 0; a < 2; ++a)
    for (int p = 0; p < 2; ++p)
      for (int m = 0; m < 2; ++m)
        for (int a2 = 0; a2 < 2; ++a2)
          for (int p2 = 0; p2 < 2; ++p2)
            for (int m2 = 0; m2 < 2; ++m2) {
              double acc = 0.0;
              for (int q = 0; q < 2; ++q)
                for (int n = 0; n < 2; ++n) {
                  // unweaving sign (-1)^(q*(m+m')), see header
                  const double sign = (q & (m ^ m2)) ? -1.0 : 1.0;
                  acc += sign * in(index_of({a, p, q, m, n}),
                                   index_of({a2, p2, q, m2, n}));
                }
              r(reduced_index(a, p, m), reduced_index(a2, p2, m2)) = acc;
            }
  return ReducedState{DensityMatrix(std::move(r)), Provenance::oracle, {}};
}

ReducedState closed_form_reduced(Family kind, const StateParams& params) {
  // Parameter validation (ranges, clamping) is delegated to the state
  // constructors so both paths reject identically.
  switch (kind) {
    case Family::phi_plus: {
      (void)phi_plus(params.alpha, params.gamma, params.q_r);
      Mat r = closed_phi_plus(params.alpha, params.gamma, params.q_r);
      return ReducedState{DensityMatrix(std::move(r)),
                          Provenance::closed_form,
                          {{6, 6, kDiagCorrectionPlus}}};
    }
    case Family::phi_star: {
      (void)phi_star(params.alpha, params.gamma, params.q_r);
      Mat r = closed_phi_star(params.alpha, params.gamma, params.q_r);
      return ReducedState{DensityMatrix(std::move(r)),
                          Provenance::closed_form,
                          {{2, 2, kDiagCorrectionStar}, {0, 3, kCoherenceCorrection}}};
    }
    case Family::werner: {
      (void)werner(params.fidelity, params.gamma, params.q_r);
      Mat r = closed_werner(params.fidelity, params.gamma, params.q_r);
      return ReducedState{DensityMatrix(std::move(r)), Provenance::closed_form, {}};
    }
    case Family::werner_like: {
      (void)werner_like(params.fidelity, params.gamma, params.q_r);
      Mat r = closed_werner_like(params.fidelity, params.gamma, params.q_r);
      return ReducedState{DensityMatrix(std::move(r)), Provenance::closed_form, {}};
    }
    case Family::phi_minus:
      throw std::invalid_argument(
          "no closed form for phi_minus; use the trace path");
  }
  throw std::logic_error("unreachable family");
}

double compare_reduced(const ReducedState& a, const ReducedState& b) {
  if (a.rho.dim() != b.rho.dim()) {
    throw std::invalid_argument("compare_reduced dimension mismatch");
  }
  return (a.rho.mat() - b.rho.mat()).cwiseAbs().maxCoeff();
}

std::string dump_reduced(const ReducedState& state) {
  std::string out = "# basis |a p m>, index = a*4 + p*2 + m, row-major\n";
  char buf[32];
  for (int i = 0; i < kReducedDim; ++i) {
    for (int j = 0; j < kReducedDim; ++j) {
      std::snprintf(buf, sizeof buf, "% .14e", state.rho.mat()(i, j));
      out += buf;
      out += (j + 1 < kReducedDim) ? ' ' : '\n';
    }
  }
  out += "# provenance: ";
  out += (state.provenance == Provenance::oracle) ? "oracle" : "closed_form";
  out += '\n';
  for (const auto& corr : state.corrections) {
    out += "# corrected (" + std::to_string(corr.row) + "," +
           std::to_string(corr.col) + "): " + corr.note + '\n';
  }
  return out;
}

}  // namespace unruh
