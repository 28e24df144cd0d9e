#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oracle_values.hpp"
#include "unruh/analysis.hpp"

using namespace unruh;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInvSqrt2 = 0.70710678118654752;

StateParams pure_params(double alpha, double q_r) {
  StateParams p;
  p.alpha = alpha;
  p.q_r = q_r;
  return p;
}

StateParams mixed_params(double fidelity, double q_r) {
  StateParams p;
  p.fidelity = fidelity;
  p.q_r = q_r;
  return p;
}
}  // namespace

TEST_CASE("curve grid and endpoints") {
  const Curve c = negativity_curve(Family::phi_plus, pure_params(kPi / 4, 1.0), 101);
  REQUIRE(c.grid.size() == 101);
  REQUIRE(c.values.size() == 101);
  CHECK(c.grid.front() == 0.0);
  CHECK(c.grid.back() == kPi / 4);
  const double step = (kPi / 4) / 100;
  for (size_t i = 1; i < c.grid.size(); ++i) {
    CHECK(std::abs(c.grid[i] - c.grid[i - 1] - step) <= 1e-15);
  }
  CHECK(std::abs(negativity_at(Family::phi_plus, pure_params(kPi / 4, 1.0), c.grid[37]) -
                 c.values[37]) == 0.0);

  CHECK_THROWS_AS(negativity_curve(Family::phi_plus, pure_params(kPi / 4, 1.0), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(negativity_curve(Family::phi_plus, pure_params(7.0, 1.0), 11),
                  std::invalid_argument);
}

TEST_CASE("single-mode curves decay monotonically") {
  for (double alpha : {0.2, 0.6, kPi / 4}) {
    const Curve c = negativity_curve(Family::phi_plus, pure_params(alpha, 1.0), 401);
    CHECK(std::abs(c.values.front() - 0.5 * std::sin(2 * alpha)) <= 1e-12);
    for (size_t i = 1; i < c.values.size(); ++i) {
      CHECK(c.values[i] <= c.values[i - 1] + 1e-14);
    }
    CHECK(c.values.back() > 0.0);

    const AmplificationReport rep = amplification_report(c);
    CHECK(!rep.amplified);
    CHECK(rep.variation_count == 0);
    CHECK(!rep.min_point.has_value());
  }
  const Curve quarter = negativity_curve(Family::phi_plus, pure_params(kPi / 4, 1.0), 401);
  CHECK(std::abs(quarter.values.back() - oracle::kSingleModeEndpoint) <= 1e-12);
}

TEST_CASE("beyond the single mode the curve dips and recovers") {
  const Curve c =
      negativity_curve(Family::phi_plus, pure_params(kPi / 4, kInvSqrt2), kDefaultGridN);
  CHECK(std::abs(c.values.front() - 0.25) <= 1e-12);
  const double min_val = *std::min_element(c.values.begin(), c.values.end());
  CHECK(min_val < c.values.front() - 1e-3);
  CHECK(c.values.back() > min_val + 1e-3);
}

TEST_CASE("frozen amplification cases") {
  for (const auto& a : oracle::kAmplificationCases) {
    const Curve c =
        negativity_curve(Family::phi_plus, pure_params(a.alpha, kInvSqrt2), kDefaultGridN);
    CHECK(std::abs(c.values.back() - a.end_value) <= 1e-12);

    const AmplificationReport rep = amplification_report(c);
    CHECK(rep.amplified);
    CHECK(rep.variation_count >= 1);
    REQUIRE(rep.min_point.has_value());
    CHECK(rep.min_point->kind == ExtremumKind::local_min);
    CHECK(std::abs(rep.min_point->gamma_star - a.min_gamma) <= 5e-6);
    CHECK(std::abs(rep.min_point->value - a.min_value) <= 1e-9);
    CHECK(std::abs(rep.gain - (a.end_value - a.min_value)) <= 1e-9);
  }
}

TEST_CASE("frozen variation-point cases") {
  for (const auto& vc : oracle::kVariationCases) {
    const Family fam = family_from_string(vc.family);
    const Curve c = negativity_curve(fam, mixed_params(vc.fidelity, vc.q_r), kDefaultGridN);
    const std::vector<VariationPoint> pts = variation_points(c);
    REQUIRE(pts.size() == 2);
    for (int i = 0; i < 2; ++i) {
      const auto& expect = vc.points[i];
      const auto& got = pts[static_cast<size_t>(i)];
      CHECK(std::abs(got.gamma_star - expect.gamma_star) <= 5e-6);
      CHECK((got.kind == ExtremumKind::local_min) == expect.is_min);
      CHECK(std::abs(got.value - expect.value) <= 1e-9);
      CHECK(got.gamma_star > 0.0);
      CHECK(got.gamma_star < kPi / 4);
    }
    CHECK(pts[0].gamma_star < pts[1].gamma_star);
  }
}

TEST_CASE("variation points are genuine extrema") {
  const Curve c =
      negativity_curve(Family::werner, mixed_params(0.49, kInvSqrt2), kDefaultGridN);
  for (const VariationPoint& p : variation_points(c)) {
    const double delta = 1e-4;
    const double at = negativity_at(c.family, c.params, p.gamma_star);
    const double left = negativity_at(c.family, c.params, p.gamma_star - delta);
    const double right = negativity_at(c.family, c.params, p.gamma_star + delta);
    CHECK(std::abs(at - p.value) <= 1e-9);
    if (p.kind == ExtremumKind::local_min) {
      CHECK(left >= at - 1e-12);
      CHECK(right >= at - 1e-12);
    } else {
      CHECK(left <= at + 1e-12);
      CHECK(right <= at + 1e-12);
    }
  }
}

TEST_CASE("refinement is grid independent") {
  const StateParams p = mixed_params(0.62, kInvSqrt2);
  const auto coarse = variation_points(negativity_curve(Family::werner_like, p, 1001));
  const auto fine = variation_points(negativity_curve(Family::werner_like, p, 4001));
  REQUIRE(coarse.size() == fine.size());
  for (size_t i = 0; i < coarse.size(); ++i) {
    CHECK(std::abs(coarse[i].gamma_star - fine[i].gamma_star) <= 1e-5);
    CHECK(std::abs(coarse[i].value - fine[i].value) <= 1e-10);
    CHECK(coarse[i].kind == fine[i].kind);
  }
}

TEST_CASE("phi_minus tracks phi_plus") {
  for (double alpha : {0.3, 0.785, 1.2}) {
    for (double g : {0.0, 0.41, kPi / 4}) {
      for (double q : {kInvSqrt2, 0.9}) {
        const double plus = negativity_at(Family::phi_plus, pure_params(alpha, q), g);
        const double minus = negativity_at(Family::phi_minus, pure_params(alpha, q), g);
        CHECK(std::abs(plus - minus) <= 1e-10);
      }
    }
  }
}

TEST_CASE("phi_star global maximum sits at the endpoint") {
  const Curve c =
      negativity_curve(Family::phi_star, pure_params(0.653, kInvSqrt2), kDefaultGridN);
  const auto max_it = std::max_element(c.values.begin(), c.values.end());
  CHECK(max_it == c.values.end() - 1);
  CHECK(std::abs(*max_it - oracle::kPhiStarMaxValue) <= 1e-12);
}

TEST_CASE("amplification threshold at q_R = 1/sqrt2") {
  const ThresholdResult r = amplification_threshold(Family::phi_plus, kInvSqrt2, 1e-4);
  REQUIRE(r.alpha_star.has_value());
  CHECK(std::abs(*r.alpha_star - oracle::kThresholdQrInvSqrt2) <= 1e-4);
  CHECK(r.tol == 1e-4);
  CHECK(!r.non_monotone_bracket.has_value());
}

TEST_CASE("threshold degenerate predicates") {
  // Single-mode curves never amplify: the predicate is false on the whole
  // bracket and there is no threshold to report.
  const ThresholdResult never = amplification_threshold(Family::phi_plus, 1.0, 1e-4, 401);
  CHECK(!never.alpha_star.has_value());
  CHECK(!never.non_monotone_bracket.has_value());
  CHECK(!never.note.empty());

  // At q_R = 0.609 the gain is positive down to alpha ~ 4e-4, below the scan
  // bracket: the predicate is true everywhere on [0.01, pi/4].
  const ThresholdResult always =
      amplification_threshold(Family::phi_plus, 0.609, 1e-4, 401);
  CHECK(!always.alpha_star.has_value());
  CHECK(!always.non_monotone_bracket.has_value());
  CHECK(!always.note.empty());

  CHECK_THROWS_AS(amplification_threshold(Family::werner, kInvSqrt2), std::invalid_argument);
}

TEST_CASE("threshold_scan core") {
  const ThresholdResult mono =
      threshold_scan([](double x) { return x > 0.42; }, 0.0, 1.0, 1e-6);
  REQUIRE(mono.alpha_star.has_value());
  CHECK(std::abs(*mono.alpha_star - 0.42) <= 1e-6);

  const ThresholdResult bump =
      threshold_scan([](double x) { return x > 0.3 && x < 0.6; }, 0.0, 1.0, 1e-6);
  CHECK(!bump.alpha_star.has_value());
  REQUIRE(bump.non_monotone_bracket.has_value());
  CHECK(bump.non_monotone_bracket->first <= 0.32);
  CHECK(bump.non_monotone_bracket->second >= 0.58);
  CHECK(bump.non_monotone_bracket->first >= 0.25);
  CHECK(bump.non_monotone_bracket->second <= 0.65);
}

TEST_CASE("gamma_of_acceleration") {
  // exp(-2 pi / a) = 1/3 at a = 2 pi / ln 3, so cos(gamma) = sqrt(3)/2.
  CHECK(std::abs(gamma_of_acceleration(2 * kPi / std::log(3.0), 1.0, 1.0) - kPi / 6) <=
        1e-12);
  CHECK(std::abs(gamma_of_acceleration(1e12, 1.0, 1.0) - kPi / 4) <= 1e-6);
  CHECK(gamma_of_acceleration(1e-3, 1.0, 1.0) >= 0.0);
  CHECK(gamma_of_acceleration(1e-3, 1.0, 1.0) <= 1e-100);
  CHECK_THROWS_AS(gamma_of_acceleration(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_of_acceleration(1.0, -1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_of_acceleration(1.0, 1.0, 0.0), std::invalid_argument);
}
