// SPDX-License-Identifier: Apache-2.0

#ifndef SWANSON_CONTINUUM_HPP
#define SWANSON_CONTINUUM_HPP

#include <vector>
#include "swanson/core.hpp"
#include "swanson/eigensystems.hpp"
#include "swanson/generalized_function.hpp"

namespace swanson
{

enum class ContinuumKind
{
  Phi,       // C Gamma(nu+1) D_{-nu-1}(-+ sqrt(2i) s x/b0), eigenfunction of h
  Eta,       // conj(Phi)
  PhiTilde,  // Upsilon^{-1} Phi, eigenfunction of H
  PsiBar     // Upsilon Eta, eigenfunction of H_c; int PsiBar^E PhiTilde^E' dx = delta(E - E') at E = 0
};

// nu = +i E/(hbar|Omega|) - 1/2 in Region II, -i E/(hbar|Omega|) - 1/2 in Region IV.
complex continuum_nu(const ModelParams &params, double energy);

// Continuum state at real energy on side +1 or -1. Throws RegionError outside Regions II/IV.
GeneralizedFunction continuum_state(const ModelParams &params, double energy, int side,
                                    ContinuumKind kind);

// C = kContinuumConstantScaled * sqrt(s / (b0 hbar |Omega|)), calibrated by the delta probe
// (extrapolated to zero window at E = 0).
inline constexpr double kContinuumConstantScaled = 0.18927160838934834;
double continuum_constant(const ModelParams &params);

// Recompute the scaled constant from delta_normalization_probe windows 0.2 and 0.1.
double calibrate_continuum_constant();

// int dx conj(Phi_0) Phi_1 / int dE b^2 for wave packets Phi_j = int dE b((E - E_j)/(hbar|Omega|)) Phi^E,
// b(u) = exp(-u^2 / (2 w^2)), w = window/(hbar|Omega|). Tends to 1 at E0 = E1 = 0 as the window
// shrinks. Near-field on |y| <= 20 by quadrature; far field from the asymptotic amplitudes.
complex delta_normalization_probe(const ModelParams &params, double e0, double window,
                                  double e1);
complex delta_normalization_probe(const ModelParams &params, double e0, double window);

struct PoleScanReport
{
  std::vector<double> energies_imag;  // Im E / (hbar |Omega|)
  std::vector<double> log_gamma_magnitude;
  std::vector<double> detected_poles;
};

// log|Gamma(nu+1)| along E = i s hbar|Omega|, s in (0, n_scan + 1] (Region II) or
// [-(n_scan + 1), 0) (Region IV); grid s = (k - 1/2)/samples_per_unit, maxima refined by a parabola.
PoleScanReport pole_scan(const ModelParams &params, int n_scan, int samples_per_unit);

struct ResonantExpansion
{
  std::vector<complex> coefficients;
  double sup_error = 0.0;
};

// Coefficients c_n = pair(dual_n, target) against the duals of the chosen branch, and the
// grid error of sum c_n right_n. A target from the other sector has no convergent pairing
// and raises NonConvergent.
ResonantExpansion resonant_expansion(const ModelParams &params, const GeneralizedFunction &target,
                                     int n_max, Branch sector, const std::vector<double> &grid);

// sum_n E_n c_n right_n(x): the truncated spectral resolution of H applied to target.
std::vector<complex> spectral_apply(const ModelParams &params, const GeneralizedFunction &target,
                                    int n_max, Branch sector, const std::vector<double> &grid);

}  // namespace swanson

#endif  // SWANSON_CONTINUUM_HPP
