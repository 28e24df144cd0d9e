#include "unruh/verify.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "unruh/analysis.hpp"

namespace unruh {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kSeed = 0x75e1f;  // fixed: verification is deterministic

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

PureState random_joint_state(std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  Vec v(kJointDim);
  for (int i = 0; i < kJointDim; ++i) v[i] = gauss(rng);
  v.normalize();
  return PureState(std::move(v));
}

StateParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni;
  StateParams p;
  p.alpha = uni(rng) * kPi / 2;
  p.gamma = uni(rng) * kPi / 4;
  p.q_r = uni(rng);
  p.fidelity = uni(rng);
  return p;
}

void verify_fock_basis(VerifyReport& report) {
  bool bijective = true;
  for (int i = 0; i < kJointDim; ++i) {
    bijective = bijective && index_of(label_of(i)) == i;
  }
  report.expect(bijective, "fock_basis: index_of(label_of(i)) == i on 0..31");

  std::mt19937_64 rng(kSeed);
  const PureState psi = random_joint_state(rng);
  const DensityMatrix rho = outer(psi);
  Eigen::SelfAdjointEigenSolver<Mat> solver(rho.mat(), Eigen::EigenvaluesOnly);
  const Vec evs = solver.eigenvalues();
  report.expect(std::abs(rho.trace() - 1.0) <= 1e-12 &&
                    std::abs(evs.maxCoeff() - 1.0) <= 1e-10 &&
                    std::abs(evs.head(kJointDim - 1).cwiseAbs().maxCoeff()) <= 1e-10,
                "fock_basis: outer() is a unit-trace rank-1 projector");

  const DensityMatrix mixed =
      mix({{0.25, rho}, {0.75, outer(random_joint_state(rng))}});
  const double asym = (mixed.mat() - mixed.mat().transpose()).cwiseAbs().maxCoeff();
  report.expect(std::abs(mixed.trace() - 1.0) <= 1e-14 && asym <= 1e-14,
                "fock_basis: mix() preserves trace and symmetry");
}

void verify_states(VerifyReport& report) {
  double worst_norm = 0.0;
  double worst_ortho = 0.0;
  for (int gi = 0; gi <= 16; ++gi) {
    const double g = gi * (kPi / 4) / 16;
    const Vec vac = unruh_vacuum(g).amplitudes();
    worst_norm = std::max(worst_norm, std::abs(vac.norm() - 1.0));
    for (int qi = 0; qi <= 4; ++qi) {
      const double q_r = qi / 4.0;
      const Vec plus = unruh_one_particle(OneParticleSign::plus, g, q_r).amplitudes();
      const Vec minus = unruh_one_particle(OneParticleSign::minus, g, q_r).amplitudes();
      worst_norm = std::max({worst_norm, std::abs(plus.norm() - 1.0),
                             std::abs(minus.norm() - 1.0)});
      worst_ortho = std::max({worst_ortho, std::abs(vac.dot(plus)),
                              std::abs(vac.dot(minus)), std::abs(plus.dot(minus))});
    }
  }
  report.expect(worst_norm <= 1e-12,
                "states: unit norms on the (gamma, q_r) grid, worst " + fmt(worst_norm));
  report.expect(worst_ortho <= 1e-12,
                "states: Unruh states orthogonal on the grid, worst " + fmt(worst_ortho));

  const Vec sm = unruh_one_particle(OneParticleSign::plus, 0.61, 1.0).amplitudes();
  double off_support = 0.0;
  for (int i = 0; i < kModeDim; ++i) {
    if (i != mode_index(1, 0, 0, 0) && i != mode_index(1, 0, 1, 1)) {
      off_support = std::max(off_support, std::abs(sm[i]));
    }
  }
  report.expect(off_support == 0.0,
                "states: q_r=1 one-particle state lives on {|1000>, |1011>}");

  double worst_psd = 0.0, worst_trace = 0.0;
  for (double f : {0.0, 0.3, 0.7, 1.0}) {
    for (double g : {0.0, 0.5, kPi / 4}) {
      for (const DensityMatrix& rho :
           {werner(f, g, 0.8), werner_like(f, g, 0.8)}) {
        worst_psd = std::min(worst_psd, rho.min_eigenvalue());
        worst_trace = std::max(worst_trace, std::abs(rho.trace() - 1.0));
      }
    }
  }
  report.expect(worst_psd >= -1e-10 && worst_trace <= 1e-12,
                "states: mixed families PSD and unit trace, min eig " + fmt(worst_psd));
}

void verify_reduction(VerifyReport& report) {
  std::mt19937_64 rng(kSeed + 1);
  const Family kinds[] = {Family::phi_plus, Family::phi_star, Family::werner,
                          Family::werner_like};
  double worst_gap = 0.0, worst_trace = 0.0, worst_psd = 0.0;
  for (int draw = 0; draw < 200; ++draw) {
    const StateParams p = random_params(rng);
    const Family kind = kinds[draw % 4];
    const ReducedState traced = trace_out_region_II(joint_state(kind, p));
    worst_gap = std::max(worst_gap, compare_reduced(traced, closed_form_reduced(kind, p)));
    worst_trace = std::max(worst_trace, std::abs(traced.rho.trace() - 1.0));
    worst_psd = std::min(worst_psd, traced.rho.min_eigenvalue());
  }
  report.expect(worst_gap <= 1e-12,
                "reduction: oracle vs closed form on 200 draws, worst " + fmt(worst_gap));
  report.expect(worst_trace <= 1e-14,
                "reduction: partial trace preserves trace, worst " + fmt(worst_trace));
  report.expect(worst_psd >= -1e-10,
                "reduction: traced states PSD, min eig " + fmt(worst_psd));

  // linearity against mix()
  const StateParams pa = random_params(rng);
  const StateParams pb = random_params(rng);
  const DensityMatrix ja = joint_state(Family::phi_plus, pa);
  const DensityMatrix jb = joint_state(Family::werner, pb);
  const Mat lhs = trace_out_region_II(mix({{0.4, ja}, {0.6, jb}})).rho.mat();
  const Mat rhs = 0.4 * trace_out_region_II(ja).rho.mat() +
                  0.6 * trace_out_region_II(jb).rho.mat();
  report.expect((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-13,
                "reduction: partial trace is linear");

  // no Rindler excitation inertially: rank <= 2 at gamma = 0
  double third_largest = 0.0;
  for (Family fam : {Family::phi_plus, Family::phi_minus, Family::phi_star}) {
    StateParams p = random_params(rng);
    p.gamma = 0.0;
    const ReducedState red = trace_out_region_II(joint_state(fam, p));
    Eigen::SelfAdjointEigenSolver<Mat> solver(red.rho.mat(), Eigen::EigenvaluesOnly);
    third_largest = std::max(third_largest, solver.eigenvalues()[kReducedDim - 3]);
  }
  report.expect(third_largest <= 1e-10,
                "reduction: pure states reduce to rank <= 2 at gamma = 0");
}

void verify_entanglement(VerifyReport& report) {
  std::mt19937_64 rng(kSeed + 2);

  // inertial Bell pair: PT spectrum {-1/2, 1/2 x3, 0 x4}, negativity 1/2
  StateParams bell;
  bell.alpha = kPi / 4;
  const ReducedState red = trace_out_region_II(joint_state(Family::phi_plus, bell));
  const Spectrum spec = eigenvalues_symmetric(partial_transpose_alice(red.rho));
  const double want[kReducedDim] = {-0.5, 0, 0, 0, 0, 0.5, 0.5, 0.5};
  double worst = 0.0;
  for (int i = 0; i < kReducedDim; ++i) {
    worst = std::max(worst, std::abs(spec.eigenvalues[i] - want[i]));
  }
  report.expect(worst <= 1e-12 && std::abs(negativity(red) - 0.5) <= 1e-12,
                "entanglement: inertial Bell spectrum and negativity 1/2");

  double worst_residual = 0.0, worst_sum = 0.0, worst_invol = 0.0, worst_swap = 0.0;
  for (int draw = 0; draw < 50; ++draw) {
    const ReducedState state =
        trace_out_region_II(joint_state(Family::werner, random_params(rng)));
    const Mat pt = partial_transpose_alice(state.rho);
    worst_invol = std::max(
        worst_invol,
        (partial_transpose_alice(DensityMatrix(pt)) - state.rho.mat())
            .cwiseAbs()
            .maxCoeff());
    const Spectrum s = eigenvalues_symmetric(pt);
    worst_residual = std::max(worst_residual, s.residual);
    double sum = 0.0;
    for (double ev : s.eigenvalues) sum += ev;
    worst_sum = std::max(worst_sum, std::abs(sum - state.rho.trace()));

    // swapping Bob's two region-I modes is local, so negativity is unchanged
    Mat swapped(kReducedDim, kReducedDim);
    for (int i = 0; i < kReducedDim; ++i)
      for (int j = 0; j < kReducedDim; ++j) {
        const auto remap = [](int k) {
          const int a = k >> 2, p = (k >> 1) & 1, m = k & 1;
          return reduced_index(a, m, p);
        };
        swapped(remap(i), remap(j)) = state.rho.mat()(i, j);
      }
    worst_swap = std::max(worst_swap, std::abs(negativity(DensityMatrix(swapped)) -
                                               negativity(state)));
  }
  report.expect(worst_invol <= 1e-15, "entanglement: partial transpose is an involution");
  report.expect(worst_residual <= 1e-10,
                "entanglement: eigensolver residual, worst " + fmt(worst_residual));
  report.expect(worst_sum <= 1e-10,
                "entanglement: eigenvalue sum matches trace, worst " + fmt(worst_sum));
  report.expect(worst_swap <= 1e-12,
                "entanglement: negativity invariant under p<->m relabeling");
}

void verify_analysis(VerifyReport& report) {
  // inertial limits: exact laws at gamma = 0 (q_r-dependent for q_r < 1)
  double worst_pure = 0.0;
  for (int ai = 0; ai <= 12; ++ai) {
    const double alpha = ai * (kPi / 2) / 12;
    const double s2 = std::sin(alpha) * std::sin(alpha);
    const double c2 = std::cos(alpha) * std::cos(alpha);
    const double s2a = std::sin(2 * alpha) * std::sin(2 * alpha);
    for (double q_r : {1.0, 0.9, 1 / std::sqrt(2.0), 0.609}) {
      const double ql2 = 1 - q_r * q_r;
      const double law_plus =
          0.5 * (std::sqrt(ql2 * ql2 * s2 * s2 + q_r * q_r * s2a) - ql2 * s2);
      const double law_star =
          0.5 * (std::sqrt(ql2 * ql2 * c2 * c2 + q_r * q_r * s2a) - ql2 * c2);
      StateParams p;
      p.alpha = alpha;
      p.q_r = q_r;
      worst_pure = std::max(
          {worst_pure,
           std::abs(negativity_at(Family::phi_plus, p, 0.0) - law_plus),
           std::abs(negativity_at(Family::phi_minus, p, 0.0) - law_plus),
           std::abs(negativity_at(Family::phi_star, p, 0.0) - law_star)});
    }
  }
  report.expect(worst_pure <= 1e-10,
                "analysis: inertial negativity laws, worst " + fmt(worst_pure));

  double worst_werner = 0.0;
  for (int fi = 0; fi <= 10; ++fi) {
    StateParams p;
    p.fidelity = fi / 10.0;
    p.q_r = 1.0;
    const double law = std::max(0.0, (3 * p.fidelity - 1) / 4);
    worst_werner =
        std::max(worst_werner, std::abs(negativity_at(Family::werner, p, 0.0) - law));
  }
  report.expect(worst_werner <= 1e-10,
                "analysis: inertial Werner law (3F-1)/4 at q_r=1, worst " +
                    fmt(worst_werner));

  double worst_equiv = 0.0;
  const double alphas[] = {0.25, 0.6, kPi / 4, 1.1, kPi / 2};
  const double qrs[] = {1.0, 0.85, 1 / std::sqrt(2.0), 0.7, 0.609};
  for (int k = 0; k < 5; ++k) {
    StateParams p;
    p.alpha = alphas[k];
    p.q_r = qrs[k];
    for (int gi = 0; gi <= 80; ++gi) {
      const double g = gi * (kPi / 4) / 80;
      worst_equiv = std::max(worst_equiv,
                             std::abs(negativity_at(Family::phi_plus, p, g) -
                                      negativity_at(Family::phi_minus, p, g)));
    }
  }
  report.expect(worst_equiv <= 1e-10,
                "analysis: phi_plus/phi_minus equivalence, worst " + fmt(worst_equiv));

  // variation points satisfy the extremum property when re-evaluated
  StateParams wp;
  wp.fidelity = 0.50;
  wp.q_r = 1 / std::sqrt(2.0);
  const Curve curve = negativity_curve(Family::werner, wp, 801);
  const std::vector<VariationPoint> pts = variation_points(curve);
  bool extrema_ok = !pts.empty();
  for (const VariationPoint& pt : pts) {
    const double at = pt.value;
    const double left = negativity_at(curve.family, curve.params, pt.gamma_star - 1e-6);
    const double right = negativity_at(curve.family, curve.params, pt.gamma_star + 1e-6);
    extrema_ok = extrema_ok && 0.0 < pt.gamma_star && pt.gamma_star < kPi / 4;
    if (pt.kind == ExtremumKind::local_min) {
      extrema_ok = extrema_ok && at <= left + 1e-12 && at <= right + 1e-12;
    } else {
      extrema_ok = extrema_ok && at >= left - 1e-12 && at >= right - 1e-12;
    }
  }
  report.expect(extrema_ok, "analysis: variation points are interior extrema");

  const double g3 = gamma_of_acceleration(2 * kPi / std::log(3.0), 1.0, 1.0);
  report.expect(std::abs(g3 - kPi / 6) <= 1e-12 &&
                    std::abs(gamma_of_acceleration(1e12, 1.0, 1.0) - kPi / 4) <= 1e-6 &&
                    gamma_of_acceleration(1e-3, 1.0, 1.0) <= 1e-100,
                "analysis: acceleration map closed-form values");
}

}  // namespace

void VerifyReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) {
    ++failures;
    messages.push_back(what);
  }
}

VerifyReport run_verification() {
  VerifyReport report;
  verify_fock_basis(report);
  verify_states(report);
  verify_reduction(report);
  verify_entanglement(report);
  verify_analysis(report);
  return report;
}

}  // namespace unruh
