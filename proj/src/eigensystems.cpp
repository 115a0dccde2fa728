// SPDX-License-Identifier: Apache-2.0

#include "swanson/eigensystems.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include "swanson/errors.hpp"

namespace swanson
{

namespace
{

constexpr double kPi = std::numbers::pi;

std::vector<EigenstateSpec> oscillator_states(const ModelParams &p, const DerivedQuantities &d,
                                              Region region, int n_max)
{
  const double s = *d.sigma;
  const double c = *d.upsilon_coeff;
  const double sign = region == Region::RegionI ? 1.0 : -1.0;
  const complex norm = std::sqrt(s / (p.b0 * std::sqrt(kPi)));
  std::vector<EigenstateSpec> out;
  for (int n = 0; n <= n_max; n++)
  {
    EigenstateSpec st;
    st.region = region;
    st.n = n;
    st.energy = sign * p.hbar * d.abs_omega() * (n + 0.5);
    st.dual_energy = st.energy;
    st.right_fn = GaussHermite{c - s * s, s, n, norm};
    st.left_fn = GaussHermite{-c - s * s, s, n, norm};
    out.push_back(std::move(st));
  }
  return out;
}

std::vector<EigenstateSpec> resonant_states(const ModelParams &p, const DerivedQuantities &d,
                                            Region region, int n_max)
{
  const double s = *d.sigma;
  const double c = *d.upsilon_coeff;
  const complex i(0.0, 1.0);
  const complex rot = std::polar(1.0, kPi / 4);
  // N^2 = e^{i pi/4} s / (b0 sqrt(pi)); the rotated contour turns the product into Hermite orthogonality.
  const complex norm = std::sqrt(rot * s / (p.b0 * std::sqrt(kPi)));
  const double sign = region == Region::RegionII ? 1.0 : -1.0;
  std::vector<EigenstateSpec> out;
  for (Branch b : {Branch::Plus, Branch::Minus})
  {
    const double bs = b == Branch::Plus ? 1.0 : -1.0;
    for (int n = 0; n <= n_max; n++)
    {
      // phi^+ = N e^{-i s^2 y^2/2} H_n(e^{i pi/4} s y), phi^- = conj(phi^+)
      const GaussHermite phi_b = bs > 0 ? GaussHermite{-i * s * s, rot * s, n, norm}
                                        : GaussHermite{i * s * s, std::conj(rot) * s, n, std::conj(norm)};
      const GaussHermite phi_other = bs > 0 ? GaussHermite{i * s * s, std::conj(rot) * s, n, std::conj(norm)}
                                            : GaussHermite{-i * s * s, rot * s, n, norm};
      EigenstateSpec st;
      st.region = region;
      st.n = n;
      st.branch = b;
      st.energy = sign * bs * i * p.hbar * d.abs_omega() * (n + 0.5);
      st.dual_energy = std::conj(st.energy);
      st.right_fn = dress(phi_b, c);
      st.left_fn = dress(phi_other, -c);
      out.push_back(std::move(st));
    }
  }
  return out;
}

std::vector<EigenstateSpec> anti_pseudo_hermitian_states(const ModelParams &p,
                                                         const DerivedQuantities &d, int n_max)
{
  const double ct = *d.tau_coeff;
  const double a = p.alpha - p.beta;
  std::vector<EigenstateSpec> out;
  for (Branch b : {Branch::Plus, Branch::Minus})
  {
    for (int n = 0; n <= n_max; n++)
    {
      const double inv = 1.0 / std::sqrt(std::tgamma(n + 1.0));
      const double alt = n % 2 == 0 ? inv : -inv;
      EigenstateSpec st;
      st.region = Region::BoundaryI_III;
      st.n = n;
      st.branch = b;
      if (b == Branch::Plus)
      {
        st.energy = p.hbar * a * (n + 0.5);
        st.right_fn = GaussMonomial{-ct, n, inv};
        st.left_fn = DeltaDeriv{ct, n, alt};
      }
      else
      {
        st.energy = -p.hbar * a * (n + 0.5);
        st.right_fn = DeltaDeriv{-ct, n, alt};
        st.left_fn = GaussMonomial{ct, n, inv};
      }
      st.dual_energy = st.energy;
      out.push_back(std::move(st));
    }
  }
  return out;
}

void require_omega_zero_boundary(Region r)
{
  if (r != Region::BoundaryI_II && r != Region::BoundaryIII_IV)
  {
    throw RegionError("needs a point on Boundary I-II or III-IV, got " +
                      std::string(region_name(r)));
  }
}

}  // namespace

std::string_view branch_name(Branch b)
{
  switch (b)
  {
    case Branch::Plus:
      return "plus";
    case Branch::Minus:
      return "minus";
    case Branch::None:
      break;
  }
  return "none";
}

std::vector<EigenstateSpec> discrete_states(const ModelParams &params, int n_max)
{
  if (n_max < 0)
  {
    throw InvalidParameters("n_max must be non-negative");
  }
  const Region r = classify(params);
  const DerivedQuantities d = derive(params);
  switch (r)
  {
    case Region::RegionI:
    case Region::RegionIII:
      return oscillator_states(params, d, r, n_max);
    case Region::RegionII:
    case Region::RegionIV:
      return resonant_states(params, d, r, n_max);
    case Region::BoundaryI_III:
      if (!d.tau_coeff)
      {
        throw SingularParameters("alpha = beta on Boundary I-III");
      }
      return anti_pseudo_hermitian_states(params, d, n_max);
    case Region::BoundaryI_II:
    case Region::BoundaryIII_IV:
      throw RegionError(std::string(region_name(r)) +
                        " has only the E = 0 exceptional pair; use ep_states");
    case Region::CornerDegenerate:
      break;
  }
  throw RegionError(std::string(region_name(r)) + " is not supported");
}

complex ep_gauss(const ModelParams &params)
{
  const double den = params.omega - 2.0 * params.beta;
  if (den == 0.0)
  {
    throw SingularParameters("omega = 2 beta makes the exceptional-point Gaussian singular");
  }
  return -(params.omega + 2.0 * params.beta) / den;
}

EigenstateSpec ep_states(const ModelParams &params, complex c0, complex c1, complex d0, complex d1)
{
  const Region r = classify(params);
  require_omega_zero_boundary(r);
  const complex g = ep_gauss(params);
  EigenstateSpec st;
  st.region = r;
  st.right_fn = GeneralizedFunction(GaussMonomial{g, 0, c0}) +
                GeneralizedFunction(GaussMonomial{g, 1, c1 * params.b0});
  st.left_fn = GeneralizedFunction(GaussMonomial{-g, 0, d0}) +
               GeneralizedFunction(GaussMonomial{-g, 1, d1 * params.b0});
  return st;
}

EigenstateSpec free_particle_states(const ModelParams &params, double energy, complex amp_plus,
                                    complex amp_minus)
{
  const Region r = classify(params);
  require_omega_zero_boundary(r);
  const complex g = ep_gauss(params);
  const double d = params.omega - params.alpha - params.beta;
  const complex k =
      std::sqrt(complex(2.0 * energy / (params.hbar * d * params.b0 * params.b0), 0.0));
  EigenstateSpec st;
  st.region = r;
  st.energy = energy;
  st.dual_energy = energy;
  st.evanescent = k.imag() != 0.0;
  st.right_fn = PlaneWaveGauss{g, k, amp_plus, amp_minus};
  st.left_fn = PlaneWaveGauss{-g, k, amp_plus, amp_minus};
  return st;
}

}  // namespace swanson
