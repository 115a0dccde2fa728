// SPDX-License-Identifier: Apache-2.0

#ifndef SWANSON_DYNAMICS_HPP
#define SWANSON_DYNAMICS_HPP

#include <string_view>
#include <vector>
#include "swanson/core.hpp"
#include "swanson/generalized_function.hpp"

namespace swanson
{

enum class ObservableKind
{
  X,
  P,
  X2,
  P2
};

std::string_view observable_name(ObservableKind kind);  // "X", "P", "X2", "P2"

// Throws InvalidParameters for anything else.
ObservableKind parse_observable(std::string_view name);

// X = x and P = -i hbar (d/dx - c x / b0^2), c = (alpha - beta)/(omega - alpha - beta):
// the position and momentum of the reduced oscillator carried over to the eigenbasis of H.
std::vector<complex> apply_observable(const ModelParams &params, ObservableKind kind,
                                      const GeneralizedFunction &f, const std::vector<double> &grid);

// <dual_m | O | right_n> from the ladder formulas with oscillator length b0/s.
// Regions I and III only.
complex matrix_element(ObservableKind kind, int m, int n, const ModelParams &params);

// Coefficients over right_n, n = 0..size-1, of a Region I/III state.
struct StateVector
{
  Region region = Region::RegionI;
  std::vector<complex> coeffs;
  bool normalized = false;
};

// Builds a state, rescaling coeffs to unit metric norm when normalize is set.
StateVector make_state(const ModelParams &params, std::vector<complex> coeffs, bool normalize = true);

// sum_mn conj(c_m) c_n <right_m|U|right_n>, with the metric gram computed by quadrature.
double metric_norm(const StateVector &state, const ModelParams &params);

// sum_mn conj(c_m) c_n e^{i (E_m - E_n) t / hbar} O_mn.
complex evolve_expectation(const StateVector &state, ObservableKind kind, const ModelParams &params,
                           double t);

// Metric norm of the evolved state; constant because the spectrum is real.
double evolved_norm(const StateVector &state, const ModelParams &params, double t);

struct SectorEvolution
{
  std::vector<complex> values;  // xi(x, t) e^{-log_scale}
  double log_scale = 0.0;       // nonzero only when the growth factors overflow
  bool overflow = false;
};

// xi(x, t) = sum_n c_n right_n(x) e^{i E_n t / hbar} over both branches of Region II or IV.
// In Region II the plus branch (E_n = i hbar|Omega|(n+1/2)) decays as e^{-|Omega|(n+1/2) t}
// and the minus branch grows; Region IV swaps the roles.
SectorEvolution evolve_sector(const ModelParams &params, const std::vector<complex> &minus_coeffs,
                              const std::vector<complex> &plus_coeffs, double t,
                              const std::vector<double> &grid);

}  // namespace swanson

#endif  // SWANSON_DYNAMICS_HPP
