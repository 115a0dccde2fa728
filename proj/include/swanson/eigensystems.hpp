// SPDX-License-Identifier: Apache-2.0

#ifndef SWANSON_EIGENSYSTEMS_HPP
#define SWANSON_EIGENSYSTEMS_HPP

#include <string_view>
#include <vector>
#include "swanson/core.hpp"
#include "swanson/generalized_function.hpp"

namespace swanson
{

enum class Branch
{
  None,
  Plus,
  Minus
};

std::string_view branch_name(Branch b);  // "none", "plus", "minus"

// A right eigenfunction of H and its biorthogonal partner, an eigenfunction of H_c.
struct EigenstateSpec
{
  Region region = Region::RegionI;
  int n = 0;
  Branch branch = Branch::None;
  complex energy;       // H right_fn = energy right_fn
  complex dual_energy;  // H_c left_fn = dual_energy left_fn
  GeneralizedFunction right_fn;
  GeneralizedFunction left_fn;
  bool evanescent = false;
};

// Regions I/III: n_max + 1 states. Regions II/IV and boundary I-III: the plus
// branch n = 0..n_max, then the minus branch.
//
// Region II/IV plus branch: right function Upsilon^{-1} N e^{-i s^2 y^2/2} H_n(e^{i pi/4} s y)
// with energy +i hbar|Omega|(n+1/2) in Region II and its negative in Region IV.
// Boundary I-III plus branch: tau^{-1} y^n / sqrt(n!) with energy hbar(alpha-beta)(n+1/2);
// minus branch: delta^(n) type with the opposite energy.
// Throws RegionError on the Omega = 0 boundaries and the corner.
std::vector<EigenstateSpec> discrete_states(const ModelParams &params, int n_max);

// E = 0 pair on the Omega = 0 boundaries:
// right (c1 x + c0) e^{g x^2/(2 b0^2)}, left (d1 x + d0) e^{-g x^2/(2 b0^2)},
// g = -(omega + 2 beta)/(omega - 2 beta).
EigenstateSpec ep_states(const ModelParams &params, complex c0, complex c1, complex d0, complex d1);

// (A e^{ikx} + B e^{-ikx}) e^{g x^2/(2 b0^2)} on the Omega = 0 boundaries, k = sqrt(2E/(hbar D b0^2)).
// The dual carries the same amplitudes and the opposite Gaussian.
EigenstateSpec free_particle_states(const ModelParams &params, double energy, complex amp_plus,
                                    complex amp_minus);

// Gaussian coefficient -(omega + 2 beta)/(omega - 2 beta) of the EP functions.
complex ep_gauss(const ModelParams &params);

}  // namespace swanson

#endif  // SWANSON_EIGENSYSTEMS_HPP
