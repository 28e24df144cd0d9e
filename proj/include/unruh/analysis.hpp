#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "unruh/entanglement.hpp"

namespace unruh {

inline constexpr int kDefaultGridN = 2001;
// Minimum endpoint gain over the deepest local minimum for a curve to count
// as amplified; one order above the eigensolver residual contract.
inline constexpr double kEpsAmp = 1e-9;

struct Curve {
  Family family = Family::phi_plus;
  StateParams params;            // gamma field unused (swept)
  std::vector<double> grid;      // uniform on [0, pi/4], endpoints exact
  std::vector<double> values;    // negativity at each grid point
};

enum class ExtremumKind { local_min, local_max };

struct VariationPoint {
  double gamma_star = 0.0;  // interior: 0 < gamma_star < pi/4
  ExtremumKind kind = ExtremumKind::local_min;
  double value = 0.0;       // negativity at gamma_star
};

struct AmplificationReport {
  bool amplified = false;
  std::optional<VariationPoint> min_point;  // deepest local minimum, if any
  double gain = 0.0;        // N(pi/4) - N(min) when amplified
  int variation_count = 0;
};

// Threshold search outcome.  `alpha_star` is empty when the predicate never
// flips on the scan (no threshold inside the bracket) or when the scan shows
// the predicate is not monotone, in which case `non_monotone_bracket` spans
// the offending flips.
struct ThresholdResult {
  std::optional<double> alpha_star;
  double tol = 0.0;
  std::optional<std::pair<double, double>> non_monotone_bracket;
  std::string note;
};

// Negativity at a single (family, params) point: build joint state, trace
// out region II, take the negativity.  Shared by curves and refinement.
double negativity_at(Family family, StateParams params, double gamma);

// Sweep gamma over a uniform grid_n-point grid on [0, pi/4] (grid_n >= 3).
Curve negativity_curve(Family family, const StateParams& params, int grid_n = kDefaultGridN);

// Interior extrema of the curve: every sign change of the forward difference
// is refined by golden-section search on the true negativity (no
// interpolation) until the bracket is narrower than refine_tol.  Sorted by
// gamma_star; empty for monotone curves.
std::vector<VariationPoint> variation_points(const Curve& curve, double refine_tol = 1e-8);

// Amplified iff some local minimum sits at least kEpsAmp below N(pi/4).
AmplificationReport amplification_report(const Curve& curve, double refine_tol = 1e-8);

// Bisect the amplification predicate in alpha over [0.01, pi/4] after a
// 64-point monotonicity pre-scan.  Only defined for the pure families (the
// predicate is over alpha).
ThresholdResult amplification_threshold(Family family, double q_r,
                                        double tol_alpha = 1e-4,
                                        int grid_n = kDefaultGridN);

// Scan/bisection core, parameterized by an arbitrary predicate so the
// non-monotone reporting path is testable in isolation.
ThresholdResult threshold_scan(const std::function<bool(double)>& predicate,
                               double lo, double hi, double tol);

// gamma = arccos((exp(-2*pi*Omega*c/a) + 1)^(-1/2)); rejects non-positive
// inputs.  a -> infinity gives pi/4, a -> 0+ underflows to 0.
double gamma_of_acceleration(double a, double omega, double c);

}  // namespace unruh
