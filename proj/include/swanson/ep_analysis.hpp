// SPDX-License-Identifier: Apache-2.0

#ifndef SWANSON_EP_ANALYSIS_HPP
#define SWANSON_EP_ANALYSIS_HPP

#include <utility>
#include <vector>
#include "swanson/core.hpp"
#include "swanson/eigensystems.hpp"
#include "swanson/generalized_function.hpp"

namespace swanson
{

struct LimitSweepReport
{
  std::vector<double> parameter_values;  // G or eps
  std::vector<double> distances;
  std::vector<complex> energies;
  // Minus-branch boundary sweeps only: unit-normalised pairings with the test battery, one row per sample.
  std::vector<std::vector<complex>> battery;
};

// sqrt(2 - 2 |<f, g>|) for f, g normalised in L2 with weight exp(-x^2/b0^2) on |x| <= 8 b0.
double weighted_distance(const GeneralizedFunction &f, const GeneralizedFunction &g,
                         const ModelParams &params);

// Gaussians exp(-(x - a)^2), a in {-1, -0.5, 0, 0.5, 1}.
std::vector<GeneralizedFunction> test_battery(const ModelParams &params);

// Pairings pair(t_a, f) over the battery, scaled to unit Euclidean norm.
std::vector<complex> battery_profile(const GeneralizedFunction &f, const ModelParams &params);

// Distance between two unit battery profiles, insensitive to a common phase.
double profile_distance(const std::vector<complex> &a, const std::vector<complex> &b);

// Profile distance between the last two samples.
double cauchy_tail(const LimitSweepReport &report);

// Roots eps_+ > eps_- of r(eps) = G |eps| with eps = omega - alpha - beta and
// r^2 = (alpha - beta)^2 + 2 eps (alpha + beta) + eps^2. Needs G > 1.
std::pair<double, double> boundary_roots(double alpha, double beta, double G);

// Region I (plus, eps_+) or Region III (minus, eps_-) states followed to the boundary I-III.
// plus: weighted distance of right_n to the monomial limit tau^{-1} y^n.
// minus: battery distance of right_n to the delta-derivative limit.
// Throws InvalidParameters for alpha = beta, G <= 1 or a non-increasing G list.
LimitSweepReport sweep_to_boundary_I_III(double alpha, double beta, int n, Branch branch,
                                         const std::vector<double> &G_values,
                                         const ModelParams &base = {});

enum class EpSide
{
  I,   // Omega^2 = +eps^2 (Region I or III)
  II   // Omega^2 = -eps^2 (Region II or IV), plus branch
};

// Parameters on the chosen side: alpha = (omega^2 -+ eps^2) / (4 beta).
ModelParams ep_side_params(double omega, double beta, double eps, EpSide side,
                           const ModelParams &base = {});

// (c0 + c1 x) exp(g x^2/(2 b0^2)), g = -(omega + 2 beta)/(omega - 2 beta); c1 = 0 for even n, c0 = 0 for odd n.
GeneralizedFunction ep_limit_function(double omega, double beta, int n, const ModelParams &base = {});

// Throws SingularParameters at omega = 2 beta, InvalidParameters for beta = 0 or a list that
// is not positive and decreasing.
LimitSweepReport sweep_to_EP(double omega, double beta, int n, EpSide side,
                             const std::vector<double> &eps_values, const ModelParams &base = {});

struct SpectrumFlowRow
{
  double eps = 0.0;
  int n = 0;
  complex energy_side_i;
  complex energy_side_ii_plus;
  complex energy_side_ii_minus;
};

std::vector<SpectrumFlowRow> ep_spectrum_flow(double omega, double beta, int n_max,
                                              const std::vector<double> &eps_values,
                                              const ModelParams &base = {});

}  // namespace swanson

#endif  // SWANSON_EP_ANALYSIS_HPP
