// SPDX-License-Identifier: Apache-2.0

#include "swanson/core.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include "swanson/errors.hpp"

namespace swanson
{

void ModelParams::validate() const
{
  if (!std::isfinite(omega) || !std::isfinite(alpha) || !std::isfinite(beta))
  {
    throw InvalidParameters("omega, alpha and beta must be finite");
  }
  if (!(b0 > 0.0) || !std::isfinite(b0))
  {
    throw InvalidParameters("b0 must be a positive finite length");
  }
  if (!(hbar > 0.0) || !std::isfinite(hbar))
  {
    throw InvalidParameters("hbar must be positive and finite");
  }
}

ModelParams ModelParams::adjoint() const
{
  ModelParams p = *this;
  std::swap(p.alpha, p.beta);
  return p;
}

std::string_view region_id(Region region)
{
  switch (region)
  {
    case Region::RegionI:
      return "RegionI";
    case Region::RegionII:
      return "RegionII";
    case Region::RegionIII:
      return "RegionIII";
    case Region::RegionIV:
      return "RegionIV";
    case Region::BoundaryI_II:
      return "BoundaryI_II";
    case Region::BoundaryIII_IV:
      return "BoundaryIII_IV";
    case Region::BoundaryI_III:
      return "BoundaryI_III";
    case Region::CornerDegenerate:
      return "CornerDegenerate";
  }
  return "unknown";
}

std::string_view region_name(Region region)
{
  switch (region)
  {
    case Region::RegionI:
      return "Region I";
    case Region::RegionII:
      return "Region II";
    case Region::RegionIII:
      return "Region III";
    case Region::RegionIV:
      return "Region IV";
    case Region::BoundaryI_II:
      return "Boundary I-II";
    case Region::BoundaryIII_IV:
      return "Boundary III-IV";
    case Region::BoundaryI_III:
      return "Boundary I-III";
    case Region::CornerDegenerate:
      return "Corner (Omega = 0 and omega = alpha + beta)";
  }
  return "unknown";
}

double DerivedQuantities::abs_omega() const
{
  return std::sqrt(std::abs(omega_sq));
}

namespace
{

// fma keeps omega^2 - 4 alpha beta accurate near the exceptional surface and
// exactly symmetric under alpha <-> beta.
double omega_squared(const ModelParams &p)
{
  return std::fma(-4.0 * p.alpha, p.beta, p.omega * p.omega);
}

double detuning(const ModelParams &p)
{
  return p.omega - (p.alpha + p.beta);
}

}  // namespace

DerivedQuantities derive(const ModelParams &params)
{
  params.validate();
  DerivedQuantities d;
  d.omega_sq = omega_squared(params);
  d.omega_cap = d.omega_sq >= 0.0 ? complex(std::sqrt(d.omega_sq), 0.0)
                                  : complex(0.0, std::sqrt(-d.omega_sq));
  d.detuning = detuning(params);
  if (d.detuning != 0.0)
  {
    const double m = params.hbar / (d.detuning * params.b0 * params.b0);
    d.m_eff = m;
    d.k_stiff = m * d.omega_sq;
    d.upsilon_coeff = (params.alpha - params.beta) / d.detuning;
    if (d.omega_sq != 0.0)
    {
      d.sigma = std::sqrt(std::sqrt(std::abs(d.omega_sq)) / std::abs(d.detuning));
    }
  }
  if (params.alpha != params.beta)
  {
    d.tau_coeff = (params.alpha + params.beta) / (params.alpha - params.beta);
  }
  return d;
}

Region classify(const ModelParams &params, double tol)
{
  params.validate();
  if (!(tol > 0.0))
  {
    throw InvalidParameters("classification tolerance must be positive");
  }
  const double scale =
      std::max({std::abs(params.omega), std::abs(params.alpha), std::abs(params.beta)});
  const double w2 = omega_squared(params);
  const double det = detuning(params);
  const bool on_ep = std::abs(w2) <= tol * scale * scale;
  const bool on_i_iii = std::abs(det) <= tol * scale;
  if (on_ep && on_i_iii)
  {
    return Region::CornerDegenerate;
  }
  if (on_i_iii)
  {
    return Region::BoundaryI_III;
  }
  const bool positive_mass = det > 0.0;
  if (on_ep)
  {
    return positive_mass ? Region::BoundaryI_II : Region::BoundaryIII_IV;
  }
  if (positive_mass)
  {
    return w2 > 0.0 ? Region::RegionI : Region::RegionII;
  }
  return w2 > 0.0 ? Region::RegionIII : Region::RegionIV;
}

std::vector<SurfacePoint> surface_grid(double range, int n)
{
  if (n < 2 || !(range > 0.0) || !std::isfinite(range))
  {
    throw InvalidParameters("surface grid needs n >= 2 and range > 0");
  }
  std::vector<SurfacePoint> rows;
  rows.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  const double step = 2.0 * range / (n - 1);
  for (int i = 0; i < n; i++)
  {
    // Symmetric index arithmetic so the centre row lands exactly on 0.
    const double a = (2 * i - (n - 1)) * (step / 2.0);
    for (int j = 0; j < n; j++)
    {
      const double b = (2 * j - (n - 1)) * (step / 2.0);
      ModelParams p{1.0, a, b, 1.0, 1.0};
      const DerivedQuantities d = derive(p);
      SurfacePoint row;
      row.alpha_over_omega = a;
      row.beta_over_omega = b;
      row.omega_sq = d.omega_sq;
      row.region = classify(p);
      // Points on the line alpha + beta = omega (within tolerance) carry no mass.
      const bool on_line =
          row.region == Region::BoundaryI_III || row.region == Region::CornerDegenerate;
      row.mass = on_line ? std::nullopt : d.m_eff;
      row.upsilon_coeff = on_line ? std::nullopt : d.upsilon_coeff;
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace swanson
