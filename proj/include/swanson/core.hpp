// SPDX-License-Identifier: Apache-2.0

#ifndef SWANSON_CORE_HPP
#define SWANSON_CORE_HPP

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

namespace swanson
{

using complex = std::complex<double>;

// H = hbar omega (a^+ a + 1/2) + hbar alpha a^2 + hbar beta a^+^2, with a = (x/b0 + i b0 p/hbar)/sqrt(2).
struct ModelParams
{
  double omega = 1.0;
  double alpha = 0.0;
  double beta = 0.0;
  double b0 = 1.0;
  double hbar = 1.0;

  // Throws InvalidParameters.
  void validate() const;

  // The adjoint Hamiltonian H_c(omega, alpha, beta) = H(omega, beta, alpha).
  ModelParams adjoint() const;
};

enum class Region
{
  RegionI,
  RegionII,
  RegionIII,
  RegionIV,
  BoundaryI_II,
  BoundaryIII_IV,
  BoundaryI_III,
  CornerDegenerate
};

// Identifier form, e.g. "RegionII", "BoundaryI_III".
std::string_view region_id(Region region);

// Human form, e.g. "Region II", "Boundary I-III".
std::string_view region_name(Region region);

struct DerivedQuantities
{
  double omega_sq = 0.0;  // omega^2 - 4 alpha beta
  complex omega_cap;      // sqrt(omega_sq), i|Omega| when omega_sq < 0
  double detuning = 0.0;  // omega - alpha - beta
  std::optional<double> m_eff;
  std::optional<double> k_stiff;
  std::optional<double> sigma;          // sqrt(|m Omega| / hbar) b0
  std::optional<double> upsilon_coeff;  // (alpha - beta) / (omega - alpha - beta)
  std::optional<double> tau_coeff;      // (alpha + beta) / (alpha - beta)

  // True on the Hermitian line alpha = beta where the similarity transform is the identity.
  bool upsilon_is_identity() const { return upsilon_coeff && *upsilon_coeff == 0.0; }
  double abs_omega() const;
};

DerivedQuantities derive(const ModelParams &params);

inline constexpr double kDefaultClassifyTol = 1e-12;

// tol is relative: |omega - alpha - beta| <= tol s and |Omega^2| <= tol s^2 with
// s = max(|omega|, |alpha|, |beta|).
Region classify(const ModelParams &params, double tol = kDefaultClassifyTol);

struct SurfacePoint
{
  double alpha_over_omega = 0.0;
  double beta_over_omega = 0.0;
  double omega_sq = 0.0;             // in units of omega^2
  std::optional<double> mass;        // in units of hbar / (omega b0^2)
  std::optional<double> upsilon_coeff;
  Region region = Region::RegionI;
};

// Row-major n x n grid over [-range, range]^2 in (alpha/omega, beta/omega), alpha outer.
std::vector<SurfacePoint> surface_grid(double range, int n);

}  // namespace swanson

#endif  // SWANSON_CORE_HPP
