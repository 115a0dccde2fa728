// SPDX-License-Identifier: Apache-2.0

#include "swanson/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include "swanson/errors.hpp"
#include "swanson/pairing.hpp"
#include "swanson/specfun.hpp"

namespace swanson
{

namespace
{

constexpr double kPi = std::numbers::pi;
const complex kI(0.0, 1.0);

// +1 in Region II, -1 in Region IV.
double region_sign(const ModelParams &params)
{
  const Region r = classify(params);
  if (r == Region::RegionII)
  {
    return 1.0;
  }
  if (r == Region::RegionIV)
  {
    return -1.0;
  }
  throw RegionError("continuum states need Region II or IV, got " + std::string(region_name(r)));
}

//
// Delta-normalization probe in scaled units: s = 1, energies in hbar|Omega|, y = x/b0.
// f_e(y) = Gamma(1/2 + i e) D_{-1/2 - i e}(-sqrt(2) e^{i pi/4} y).
//

constexpr double kNearField = 20.0;
constexpr double kPanel = 0.25;
constexpr int kPanelPoints = 10;
constexpr int kEnergyNodes = 96;

struct Packet
{
  std::vector<double> energies;
  std::vector<double> weights;
};

// b(e) = exp(-(e - centre)^2 / (2 w^2)) folded into Gauss-Hermite weights.
Packet make_packet(double centre, double w)
{
  const QuadratureRule &gh = gauss_hermite(kEnergyNodes);
  Packet p;
  for (int i = 0; i < gh.order; i++)
  {
    p.energies.push_back(centre + std::sqrt(2.0) * w * gh.nodes[i]);
    p.weights.push_back(std::sqrt(2.0) * w * gh.weights[i]);
  }
  return p;
}

struct Panels
{
  std::vector<double> nodes;
  std::vector<double> weights;
};

Panels panels(double a, double b, double width)
{
  const QuadratureRule &gl = gauss_legendre(kPanelPoints);
  Panels out;
  const int n = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
  const double h = (b - a) / n;
  for (int k = 0; k < n; k++)
  {
    const double mid = a + (k + 0.5) * h;
    for (int i = 0; i < gl.order; i++)
    {
      out.nodes.push_back(mid + 0.5 * h * gl.nodes[i]);
      out.weights.push_back(0.5 * h * gl.weights[i]);
    }
  }
  return out;
}

// Packet values on the near-field nodes. y < 0 lies on the ray arg z = pi/4,
// y > 0 on arg z = -3 pi/4.
std::vector<complex> near_field(const Packet &pk, const std::vector<double> &ys, double theta)
{
  std::vector<double> radii;
  radii.reserve(ys.size());
  for (double y : ys)
  {
    radii.push_back(std::sqrt(2.0) * y);
  }
  std::vector<complex> sum(ys.size());
  for (std::size_t i = 0; i < pk.energies.size(); i++)
  {
    const double e = pk.energies[i];
    const complex mu(-0.5, -e);
    const complex gamma = std::exp(log_gamma(complex(0.5, e)));
    const std::vector<CylinderJet> d = parabolic_cylinder_D_ray(mu, theta, radii);
    for (std::size_t k = 0; k < ys.size(); k++)
    {
      sum[k] += pk.weights[i] * gamma * d[k].value * std::exp(d[k].exponent);
    }
  }
  return sum;
}

// Chirp-free far-field amplitudes times sqrt(y) at t = ln y, for the e^{-z^2/4}
// (which = 1) and e^{+z^2/4} (which = 2) components of D_mu(z), z = sqrt(2) y e^{i theta}.
complex far_amplitude(double e, double t, double theta, int which)
{
  const complex mu(-0.5, -e);
  const complex logz(0.5 * std::log(2.0) + t, theta);
  const complex inv_z2 = std::exp(-2.0 * logz);
  const complex gamma = std::exp(log_gamma(complex(0.5, e)));
  // The common factor e^{-t/2} is removed from z^mu and z^{-mu-1}.
  if (which == 1)
  {
    const complex s = 1.0 - mu * (mu - 1.0) / 2.0 * inv_z2 +
                      mu * (mu - 1.0) * (mu - 2.0) * (mu - 3.0) / 8.0 * inv_z2 * inv_z2;
    return gamma * std::exp(mu * logz + 0.5 * t) * s;
  }
  const complex s = 1.0 + (mu + 1.0) * (mu + 2.0) / 2.0 * inv_z2 +
                    (mu + 1.0) * (mu + 2.0) * (mu + 3.0) * (mu + 4.0) / 8.0 * inv_z2 * inv_z2;
  // Gamma(nu + 1) / Gamma(-mu) = 1
  const double sgn = theta < 0 ? -1.0 : 1.0;
  return -std::sqrt(2.0 * kPi) * std::exp(sgn * kI * kPi * mu) *
         std::exp((-mu - 1.0) * logz + 0.5 * t) * s;
}

complex far_packet(const Packet &pk, double t, double theta, int which)
{
  complex s;
  for (std::size_t i = 0; i < pk.energies.size(); i++)
  {
    s += pk.weights[i] * far_amplitude(pk.energies[i], t, theta, which);
  }
  return s;
}

// int dy conj(P0) P1 / int b^2 de, scaled units.
complex probe_scaled(double e0, double e1, double w)
{
  const Packet p0 = make_packet(e0, w);
  const Packet p1 = make_packet(e1, w);
  const bool same = e0 == e1;
  const Panels inner = panels(0.0, kNearField, kPanel);
  complex total;
  for (double theta : {kPi / 4, -3 * kPi / 4})
  {
    const std::vector<complex> a0 = near_field(p0, inner.nodes, theta);
    const std::vector<complex> a1 = same ? a0 : near_field(p1, inner.nodes, theta);
    for (std::size_t k = 0; k < inner.nodes.size(); k++)
    {
      total += inner.weights[k] * std::conj(a0[k]) * a1[k];
    }
  }
  // Far field in t = ln y; cross terms between opposite chirps oscillate like e^{i y^2} and drop out.
  const double t0 = std::log(kNearField);
  const Panels outer = panels(t0, t0 + 8.0 / w, kPanel);
  for (std::size_t k = 0; k < outer.nodes.size(); k++)
  {
    const double t = outer.nodes[k];
    complex s;
    for (auto [theta, which] : {std::pair{kPi / 4, 1}, std::pair{-3 * kPi / 4, 1},
                                std::pair{-3 * kPi / 4, 2}})
    {
      const complex f0 = far_packet(p0, t, theta, which);
      const complex f1 = same ? f0 : far_packet(p1, t, theta, which);
      s += std::conj(f0) * f1;
    }
    total += outer.weights[k] * s;
  }
  return total / (w * std::sqrt(kPi));
}

}  // namespace

complex continuum_nu(const ModelParams &params, double energy)
{
  const double sgn = region_sign(params);
  const double w = derive(params).abs_omega();
  return sgn * kI * energy / (params.hbar * w) - 0.5;
}

double continuum_constant(const ModelParams &params)
{
  const DerivedQuantities d = derive(params);
  if (!d.sigma)
  {
    throw RegionError("continuum constant needs Omega != 0 and omega != alpha + beta");
  }
  return kContinuumConstantScaled * std::sqrt(*d.sigma / (params.b0 * params.hbar * d.abs_omega()));
}

GeneralizedFunction continuum_state(const ModelParams &params, double energy, int side,
                                    ContinuumKind kind)
{
  if (side != 1 && side != -1)
  {
    throw InvalidParameters("side must be +1 or -1");
  }
  const complex nu = continuum_nu(params, energy);
  const DerivedQuantities d = derive(params);
  CylinderState st;
  st.gauss = 0.0;
  st.nu = nu;
  st.arg_scale = -double(side) * std::sqrt(2.0) * std::polar(1.0, kPi / 4) * *d.sigma;
  st.side = side;
  st.norm = continuum_constant(params) * std::exp(log_gamma(nu + 1.0));
  GeneralizedFunction f(st);
  const double c = *d.upsilon_coeff;
  switch (kind)
  {
    case ContinuumKind::Phi:
      return f;
    case ContinuumKind::Eta:
      return conjugate(f);
    case ContinuumKind::PhiTilde:
      return dress(f, c);
    case ContinuumKind::PsiBar:
      return dress(conjugate(f), -c);
  }
  return f;
}

complex delta_normalization_probe(const ModelParams &params, double e0, double window, double e1)
{
  const double sgn = region_sign(params);
  const double unit = params.hbar * derive(params).abs_omega();
  if (!(window > 0.0))
  {
    throw InvalidParameters("probe window must be positive");
  }
  const double w = window / unit;
  if (w > 2.0 || w < 0.02)
  {
    throw NonConvergent("probe window outside the supported range 0.02..2 hbar|Omega|");
  }
  // Region IV maps onto Region II with E -> -E.
  const complex q = probe_scaled(sgn * e0 / unit, sgn * e1 / unit, w);
  return kContinuumConstantScaled * kContinuumConstantScaled * q;
}

complex delta_normalization_probe(const ModelParams &params, double e0, double window)
{
  return delta_normalization_probe(params, e0, window, e0);
}

double calibrate_continuum_constant()
{
  const double q2 = probe_scaled(0.0, 0.0, 0.2).real();
  const double q1 = probe_scaled(0.0, 0.0, 0.1).real();
  // the window bias is even in w: q(w) = q(0) (1 + O(w^2))
  const double q0 = (4.0 * q1 - q2) / 3.0;
  return 1.0 / std::sqrt(q0);
}

PoleScanReport pole_scan(const ModelParams &params, int n_scan, int samples_per_unit)
{
  const double sgn = region_sign(params);
  if (n_scan < 0 || samples_per_unit < 2)
  {
    throw InvalidParameters("pole_scan needs n_scan >= 0 and samples_per_unit >= 2");
  }
  PoleScanReport rep;
  const int count = (n_scan + 1) * samples_per_unit;
  for (int k = 1; k <= count; k++)
  {
    const double s = sgn * (k - 0.5) / samples_per_unit;
    // E = i s hbar|Omega|  =>  nu + 1 = 1/2 - sgn s
    const complex z(0.5 - sgn * s, 0.0);
    rep.energies_imag.push_back(s);
    rep.log_gamma_magnitude.push_back(log_gamma(z).real());
  }
  const std::vector<double> &v = rep.log_gamma_magnitude;
  const double h = 1.0 / samples_per_unit;
  for (int k = 1; k + 1 < count; k++)
  {
    if (v[k] > v[k - 1] && v[k] >= v[k + 1])
    {
      const double den = v[k - 1] - 2.0 * v[k] + v[k + 1];
      const double shift = den != 0.0 ? 0.5 * (v[k - 1] - v[k + 1]) / den : 0.0;
      rep.detected_poles.push_back(rep.energies_imag[k] + sgn * std::clamp(shift, -0.5, 0.5) * h);
    }
  }
  return rep;
}

namespace
{

std::vector<EigenstateSpec> sector_states(const ModelParams &params, int n_max, Branch sector)
{
  region_sign(params);
  if (sector == Branch::None)
  {
    throw InvalidParameters("sector must be plus or minus");
  }
  std::vector<EigenstateSpec> out;
  for (EigenstateSpec &s : discrete_states(params, n_max))
  {
    if (s.branch == sector)
    {
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace

ResonantExpansion resonant_expansion(const ModelParams &params, const GeneralizedFunction &target,
                                     int n_max, Branch sector, const std::vector<double> &grid)
{
  const std::vector<EigenstateSpec> states = sector_states(params, n_max, sector);
  ResonantExpansion out;
  for (const EigenstateSpec &s : states)
  {
    out.coefficients.push_back(pair(s.left_fn, target, params));
  }
  for (double x : grid)
  {
    complex sum;
    for (std::size_t n = 0; n < states.size(); n++)
    {
      sum += out.coefficients[n] * evaluate(states[n].right_fn, x, params);
    }
    out.sup_error = std::max(out.sup_error, std::abs(sum - evaluate(target, x, params)));
  }
  return out;
}

std::vector<complex> spectral_apply(const ModelParams &params, const GeneralizedFunction &target,
                                    int n_max, Branch sector, const std::vector<double> &grid)
{
  const std::vector<EigenstateSpec> states = sector_states(params, n_max, sector);
  std::vector<complex> coeff;
  for (const EigenstateSpec &s : states)
  {
    coeff.push_back(s.energy * pair(s.left_fn, target, params));
  }
  std::vector<complex> out;
  for (double x : grid)
  {
    complex sum;
    for (std::size_t n = 0; n < states.size(); n++)
    {
      sum += coeff[n] * evaluate(states[n].right_fn, x, params);
    }
    out.push_back(sum);
  }
  return out;
}

}  // namespace swanson
