#include "unruh/analysis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace unruh {

namespace {

constexpr double kPi = std::numbers::pi;
// Forward differences smaller than this are treated as flat (noise), not as
// slope sign information.
constexpr double kSlopeDeadband = 1e-14;

double golden_section(const std::function<double(double)>& f, double a, double b,
                      bool minimize, double tol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double sgn = minimize ? 1.0 : -1.0;
  double c = b - (b - a) * invphi;
  double d = a + (b - a) * invphi;
  double fc = sgn * f(c);
  double fd = sgn * f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * invphi;
      fc = sgn * f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * invphi;
      fd = sgn * f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double negativity_at(Family family, StateParams params, double gamma) {
  params.gamma = gamma;
  return negativity(trace_out_region_II(joint_state(family, params)));
}

Curve negativity_curve(Family family, const StateParams& params, int grid_n) {
  if (grid_n < 3) {
    throw std::invalid_argument("grid_n must be at least 3");
  }
  Curve curve{family, params, {}, {}};
  curve.grid.resize(grid_n);
  curve.values.resize(grid_n);
  const double step = (kPi / 4) / (grid_n - 1);
  for (int i = 0; i < grid_n; ++i) {
    curve.grid[i] = i * step;
  }
  curve.grid.front() = 0.0;
  curve.grid.back() = kPi / 4;  // endpoints exact
  for (int i = 0; i < grid_n; ++i) {
    const double v = negativity_at(family, params, curve.grid[i]);
    if (v < 0.0 || v > 0.5 + 1e-10) {
      throw std::runtime_error("negativity " + std::to_string(v) +
                               " outside [0, 0.5] at gamma = " +
                               std::to_string(curve.grid[i]));
    }
    curve.values[i] = v;
  }
  return curve;
}

std::vector<VariationPoint> variation_points(const Curve& curve, double refine_tol) {
  if (refine_tol <= 0.0) {
    throw std::invalid_argument("refine_tol must be positive");
  }
  const auto f = [&curve](double g) {
    return negativity_at(curve.family, curve.params, g);
  };
  std::vector<VariationPoint> pts;
  const auto n = curve.values.size();
  int last = 0;
  std::size_t lastidx = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = curve.values[i + 1] - curve.values[i];
    const int s = d > kSlopeDeadband ? 1 : (d < -kSlopeDeadband ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) {
      const bool is_min = last < 0 && s > 0;
      const double lo = curve.grid[lastidx];
      const double hi = curve.grid[i + 1];
      const double gstar = golden_section(f, lo, hi, is_min, refine_tol);
      pts.push_back({gstar,
                     is_min ? ExtremumKind::local_min : ExtremumKind::local_max,
                     f(gstar)});
    }
    last = s;
    lastidx = i;
  }
  return pts;
}

AmplificationReport amplification_report(const Curve& curve, double refine_tol) {
  const std::vector<VariationPoint> pts = variation_points(curve, refine_tol);
  AmplificationReport report;
  report.variation_count = static_cast<int>(pts.size());
  for (const VariationPoint& pt : pts) {
    if (pt.kind != ExtremumKind::local_min) continue;
    if (!report.min_point || pt.value < report.min_point->value) {
      report.min_point = pt;
    }
  }
  if (report.min_point) {
    const double end = curve.values.back();  // N at gamma = pi/4
    report.amplified = end > report.min_point->value + kEpsAmp;
    if (report.amplified) {
      report.gain = end - report.min_point->value;
    }
  }
  return report;
}

ThresholdResult threshold_scan(const std::function<bool(double)>& predicate,
                               double lo, double hi, double tol) {
  if (!(tol > 0.0) || !(hi > lo)) {
    throw std::invalid_argument("threshold_scan needs hi > lo and tol > 0");
  }
  constexpr int kScanPoints = 64;
  std::vector<bool> flags(kScanPoints);
  const double step = (hi - lo) / (kScanPoints - 1);
  for (int i = 0; i < kScanPoints; ++i) {
    const double x = (i + 1 == kScanPoints) ? hi : lo + i * step;
    flags[i] = predicate(x);
  }
  int changes = 0;
  int first_flip = -1, last_flip = -1;
  for (int i = 0; i + 1 < kScanPoints; ++i) {
    if (flags[i] != flags[i + 1]) {
      ++changes;
      if (first_flip < 0) first_flip = i;
      last_flip = i;
    }
  }
  ThresholdResult result;
  result.tol = tol;
  if (changes == 0) {
    result.note = flags[0] ? "predicate true on entire scan; no threshold in bracket"
                           : "predicate false on entire scan; no threshold in bracket";
    return result;
  }
  if (changes > 1) {
    result.non_monotone_bracket = {lo + first_flip * step,
                                   lo + (last_flip + 1) * step};
    result.note = "predicate is not monotone on the 64-point scan";
    return result;
  }
  double a = lo, b = hi;
  const bool fa = flags.front();
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (predicate(mid) == fa) {
      a = mid;
    } else {
      b = mid;
    }
  }
  result.alpha_star = 0.5 * (a + b);
  return result;
}

ThresholdResult amplification_threshold(Family family, double q_r, double tol_alpha,
                                        int grid_n) {
  if (!is_pure(family)) {
    throw std::invalid_argument(
        "amplification_threshold bisects alpha; only pure families apply");
  }
  const auto predicate = [family, q_r, grid_n](double alpha) {
    StateParams params;
    params.alpha = alpha;
    params.q_r = q_r;
    return amplification_report(negativity_curve(family, params, grid_n)).amplified;
  };
  return threshold_scan(predicate, 0.01, kPi / 4, tol_alpha);
}

double gamma_of_acceleration(double a, double omega, double c) {
  if (!(a > 0.0) || !(omega > 0.0) || !(c > 0.0)) {
    throw std::invalid_argument("gamma_of_acceleration needs positive a, Omega, c");
  }
  const double x = std::exp(-2.0 * kPi * omega * c / a);
  return std::acos(1.0 / std::sqrt(x + 1.0));
}

}  // namespace unruh
