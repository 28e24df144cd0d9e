#pragma once

#include <string>
#include <string_view>

#include "unruh/fock_basis.hpp"

namespace unruh {

// Parameters of the two-party states.
//   alpha    — entanglement angle of the inertial preparation, [0, pi/2]
//   gamma    — acceleration parameter, [0, pi/4]; cos(gamma) =
//              (exp(-2*pi*Omega*c/a) + 1)^(-1/2), so pi/4 is the infinite-
//              acceleration limit and 0 the inertial one
//   q_r      — Unruh right-mode weight, [0, 1]; q_l = +sqrt(1 - q_r^2).
//              q_r = 1 is the single-mode approximation
//   fidelity — Werner mixing weight F, [0, 1]
struct StateParams {
  double alpha = 0.0;
  double gamma = 0.0;
  double q_r = 1.0;
  double fidelity = 1.0;
};

enum class Family { phi_plus, phi_minus, phi_star, werner, werner_like };

bool is_pure(Family f);
std::string to_string(Family f);
// Accepts "phi_plus"/"phi-plus" spellings; throws on anything else.
Family family_from_string(std::string_view name);

// Unruh vacuum |0>_U:
//   cos^2(g)|0000> - sin(g)cos(g)|0011> + sin(g)cos(g)|1100> - sin^2(g)|1111>
PureState unruh_vacuum(double gamma);

enum class OneParticleSign { plus, minus };

// One-particle Unruh states.
//   |1+>_U = qR( cos(g)|1000> - sin(g)|1011> ) + qL( sin(g)|1101> + cos(g)|0001> )
//   |1->_U = qL( cos(g)|0100> - sin(g)|0111> ) + qR( sin(g)|1110> + cos(g)|0010> )
PureState unruh_one_particle(OneParticleSign sign, double gamma, double q_r);

// Joint Alice-Bob pure states on the 32-dim space:
//   phi_plus  = cos(a)|0>|0>_U   + sin(a)|1>|1+>_U
//   phi_minus = cos(a)|0>|0>_U   + sin(a)|1>|1->_U
//   phi_star  = cos(a)|0>|1+>_U  + sin(a)|1>|0>_U
PureState phi_plus(double alpha, double gamma, double q_r);
PureState phi_minus(double alpha, double gamma, double q_r);
PureState phi_star(double alpha, double gamma, double q_r);

// Werner state F|phi+(pi/4)><phi+(pi/4)| + (1-F)/4 * I, where the inertial
// identity is lifted branch-by-branch: I -> sum over the four products
// {|a>|0>_U, |a>|1+>_U : a in {0,1}} of their projectors.
DensityMatrix werner(double fidelity, double gamma, double q_r);

// Werner-like state F|phi+(pi/4)><phi+(pi/4)|
//   + (1-F)/2 (|0,1+><0,1+| + |1,0_U><1,0_U|).
DensityMatrix werner_like(double fidelity, double gamma, double q_r);

// Dispatcher: the joint 32x32 density matrix of any family (pure families go
// through outer()).
DensityMatrix joint_state(Family family, const StateParams& params);

}  // namespace unruh
