#include "unruh/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace unruh {

namespace {

constexpr double kPi = std::numbers::pi;

// Boundary inputs often arrive as shortened decimals (e.g. 0.7853981634 for
// pi/4), so ranges are enforced with a small tolerance and then clamped.
double require_range(double x, double lo, double hi, const char* name) {
  constexpr double tol = 1e-9;
  if (!(x >= lo - tol && x <= hi + tol)) {  // negated to also catch NaN
    throw std::invalid_argument(std::string(name) + " = " + std::to_string(x) +
                                " outside [" + std::to_string(lo) + ", " +
                                std::to_string(hi) + "]");
  }
  return std::clamp(x, lo, hi);
}

double check_alpha(double alpha) { return require_range(alpha, 0.0, kPi / 2, "alpha"); }
double check_gamma(double gamma) { return require_range(gamma, 0.0, kPi / 4, "gamma"); }
double check_qr(double q_r) { return require_range(q_r, 0.0, 1.0, "q_r"); }
double check_fidelity(double f) { return require_range(f, 0.0, 1.0, "fidelity"); }

// |a> (x) |mode>: joint index a*16 + mode index.
Vec lift(int a, const PureState& mode) {
  Vec v = Vec::Zero(kJointDim);
  v.segment(a * kModeDim, kModeDim) = mode.amplitudes();
  return v;
}

PureState two_branch(double alpha, const PureState& branch0, const PureState& branch1) {
  Vec v = std::cos(alpha) * lift(0, branch0) + std::sin(alpha) * lift(1, branch1);
  return PureState(std::move(v));
}

}  // namespace

bool is_pure(Family f) {
  return f == Family::phi_plus || f == Family::phi_minus || f == Family::phi_star;
}

std::string to_string(Family f) {
  switch (f) {
    case Family::phi_plus: return "phi_plus";
    case Family::phi_minus: return "phi_minus";
    case Family::phi_star: return "phi_star";
    case Family::werner: return "werner";
    case Family::werner_like: return "werner_like";
  }
  throw std::logic_error("unreachable family");
}

Family family_from_string(std::string_view name) {
  std::string s(name);
  std::replace(s.begin(), s.end(), '-', '_');
  if (s == "phi_plus") return Family::phi_plus;
  if (s == "phi_minus") return Family::phi_minus;
  if (s == "phi_star") return Family::phi_star;
  if (s == "werner") return Family::werner;
  if (s == "werner_like") return Family::werner_like;
  throw std::invalid_argument("unknown state family: " + std::string(name));
}

PureState unruh_vacuum(double gamma) {
  gamma = check_gamma(gamma);
  const double c = std::cos(gamma);
  const double s = std::sin(gamma);
  Vec v = Vec::Zero(kModeDim);
  v[mode_index(0, 0, 0, 0)] = c * c;
  v[mode_index(0, 0, 1, 1)] = -s * c;
  v[mode_index(1, 1, 0, 0)] = s * c;
  v[mode_index(1, 1, 1, 1)] = -s * s;
  return PureState(std::move(v));
}

PureState unruh_one_particle(OneParticleSign sign, double gamma, double q_r) {
  gamma = check_gamma(gamma);
  q_r = check_qr(q_r);
  const double q_l = std::sqrt(1.0 - q_r * q_r);
  const double c = std::cos(gamma);
  const double s = std::sin(gamma);
  Vec v = Vec::Zero(kModeDim);
  if (sign == OneParticleSign::plus) {
    v[mode_index(1, 0, 0, 0)] = q_r * c;
    v[mode_index(1, 0, 1, 1)] = -q_r * s;
    v[mode_index(1, 1, 0, 1)] = q_l * s;
    v[mode_index(0, 0, 0, 1)] = q_l * c;
  } else {
    v[mode_index(0, 1, 0, 0)] = q_l * c;
    v[mode_index(0, 1, 1, 1)] = -q_l * s;
    v[mode_index(1, 1, 1, 0)] = q_r * s;
    v[mode_index(0, 0, 1, 0)] = q_r * c;
  }
  return PureState(std::move(v));
}

PureState phi_plus(double alpha, double gamma, double q_r) {
  alpha = check_alpha(alpha);
  return two_branch(alpha, unruh_vacuum(gamma),
                    unruh_one_particle(OneParticleSign::plus, gamma, q_r));
}

PureState phi_minus(double alpha, double gamma, double q_r) {
  alpha = check_alpha(alpha);
  return two_branch(alpha, unruh_vacuum(gamma),
                    unruh_one_particle(OneParticleSign::minus, gamma, q_r));
}

PureState phi_star(double alpha, double gamma, double q_r) {
  alpha = check_alpha(alpha);
  return two_branch(alpha, unruh_one_particle(OneParticleSign::plus, gamma, q_r),
                    unruh_vacuum(gamma));
}

DensityMatrix werner(double fidelity, double gamma, double q_r) {
  const double f = check_fidelity(fidelity);
  const PureState vac = unruh_vacuum(gamma);
  const PureState one = unruh_one_particle(OneParticleSign::plus, gamma, q_r);
  std::vector<std::pair<double, DensityMatrix>> terms;
  terms.emplace_back(f, outer(phi_plus(kPi / 4, gamma, q_r)));
  for (int a : {0, 1}) {
    for (const PureState* b : {&vac, &one}) {
      terms.emplace_back((1.0 - f) / 4.0, outer(PureState(lift(a, *b))));
    }
  }
  return mix(terms);
}

DensityMatrix werner_like(double fidelity, double gamma, double q_r) {
  const double f = check_fidelity(fidelity);
  const PureState vac = unruh_vacuum(gamma);
  const PureState one = unruh_one_particle(OneParticleSign::plus, gamma, q_r);
  return mix({{f, outer(phi_plus(kPi / 4, gamma, q_r))},
              {(1.0 - f) / 2.0, outer(PureState(lift(0, one)))},
              {(1.0 - f) / 2.0, outer(PureState(lift(1, vac)))}});
}

DensityMatrix joint_state(Family family, const StateParams& p) {
  switch (family) {
    case Family::phi_plus: return outer(phi_plus(p.alpha, p.gamma, p.q_r));
    case Family::phi_minus: return outer(phi_minus(p.alpha, p.gamma, p.q_r));
    case Family::phi_star: return outer(phi_star(p.alpha, p.gamma, p.q_r));
    case Family::werner: return werner(p.fidelity, p.gamma, p.q_r);
    case Family::werner_like: return werner_like(p.fidelity, p.gamma, p.q_r);
  }
  throw std::logic_error("unreachable family");
}

}  // namespace unruh
