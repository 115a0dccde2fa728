// SPDX-License-Identifier: Apache-2.0

#include "swanson/ep_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include "swanson/errors.hpp"
#include "swanson/pairing.hpp"
#include "swanson/specfun.hpp"

namespace swanson
{

namespace
{

constexpr double kBox = 8.0;
constexpr int kPanels = 128;

void require_increasing(const std::vector<double> &v, const char *what)
{
  if (v.empty())
  {
    throw InvalidParameters(std::string(what) + " must not be empty");
  }
  for (std::size_t i = 1; i < v.size(); i++)
  {
    if (!(v[i] > v[i - 1]))
    {
      throw InvalidParameters(std::string(what) + " must be strictly increasing");
    }
  }
}

const EigenstateSpec &find_state(const std::vector<EigenstateSpec> &states, int n, Branch branch)
{
  for (const EigenstateSpec &s : states)
  {
    if (s.n == n && (s.branch == branch || s.branch == Branch::None))
    {
      return s;
    }
  }
  throw InvalidParameters("state n = " + std::to_string(n) + " not generated");
}

}  // namespace

double weighted_distance(const GeneralizedFunction &f, const GeneralizedFunction &g,
                         const ModelParams &params)
{
  const QuadratureRule &gl = gauss_legendre(10);
  const double h = 2.0 * kBox / kPanels;
  double ff = 0.0;
  double gg = 0.0;
  complex fg;
  for (int k = 0; k < kPanels; k++)
  {
    const double mid = -kBox + (k + 0.5) * h;
    for (int i = 0; i < gl.order; i++)
    {
      const double y = mid + 0.5 * h * gl.nodes[i];
      const double w = 0.5 * h * gl.weights[i] * std::exp(-y * y);
      const complex a = evaluate(f, y * params.b0, params);
      const complex b = evaluate(g, y * params.b0, params);
      ff += w * std::norm(a);
      gg += w * std::norm(b);
      fg += w * std::conj(a) * b;
    }
  }
  const double overlap = std::min(1.0, std::abs(fg) / std::sqrt(ff * gg));
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * overlap));
}

std::vector<GeneralizedFunction> test_battery(const ModelParams &params)
{
  std::vector<GeneralizedFunction> out;
  for (double a : {-1.0, -0.5, 0.0, 0.5, 1.0})
  {
    // e^{-(x - a)^2} = e^{-(y - a/b0)^2 b0^2}
    out.push_back(gaussian_target(a, 1.0 / params.b0, params));
  }
  return out;
}

std::vector<complex> battery_profile(const GeneralizedFunction &f, const ModelParams &params)
{
  std::vector<complex> v;
  double norm = 0.0;
  for (const GeneralizedFunction &t : test_battery(params))
  {
    v.push_back(pair(t, f, params));
    norm += std::norm(v.back());
  }
  if (norm == 0.0)
  {
    throw NonConvergent("function is orthogonal to the whole test battery");
  }
  for (complex &c : v)
  {
    c /= std::sqrt(norm);
  }
  return v;
}

double profile_distance(const std::vector<complex> &a, const std::vector<complex> &b)
{
  complex dot;
  for (std::size_t i = 0; i < a.size(); i++)
  {
    dot += std::conj(a[i]) * b[i];
  }
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::min(1.0, std::abs(dot))));
}

double cauchy_tail(const LimitSweepReport &report)
{
  const std::size_t m = report.battery.size();
  if (m < 2)
  {
    throw InvalidParameters("cauchy_tail needs at least two battery samples");
  }
  return profile_distance(report.battery[m - 2], report.battery[m - 1]);
}

std::pair<double, double> boundary_roots(double alpha, double beta, double G)
{
  if (!(G > 1.0))
  {
    throw InvalidParameters("boundary sweep needs G > 1");
  }
  const double g2 = G * G - 1.0;
  const double disc = 4.0 * alpha * beta + G * G * (alpha - beta) * (alpha - beta);
  if (disc < 0.0)
  {
    throw InvalidParameters("no real root for this G");
  }
  const double s = std::sqrt(disc);
  return {(alpha + beta + s) / g2, (alpha + beta - s) / g2};
}

LimitSweepReport sweep_to_boundary_I_III(double alpha, double beta, int n, Branch branch,
                                         const std::vector<double> &G_values, const ModelParams &base)
{
  if (alpha == beta)
  {
    throw InvalidParameters("boundary I-III sweep needs alpha != beta");
  }
  if (branch == Branch::None || n < 0)
  {
    throw InvalidParameters("boundary sweep needs n >= 0 and branch plus or minus");
  }
  require_increasing(G_values, "G values");
  ModelParams boundary = base;
  boundary.alpha = alpha;
  boundary.beta = beta;
  boundary.omega = alpha + beta;
  const std::vector<EigenstateSpec> limit_states = discrete_states(boundary, n);
  const EigenstateSpec &limit = find_state(limit_states, n, branch);
  std::vector<complex> limit_profile;
  if (branch == Branch::Minus)
  {
    limit_profile = battery_profile(limit.right_fn, boundary);
  }

  LimitSweepReport rep;
  for (double G : G_values)
  {
    const auto [ep, em] = boundary_roots(alpha, beta, G);
    ModelParams p = boundary;
    p.omega = alpha + beta + (branch == Branch::Plus ? ep : em);
    const Region r = classify(p);
    const Region want = branch == Branch::Plus ? Region::RegionI : Region::RegionIII;
    if (r != want)
    {
      throw InvalidParameters("G = " + std::to_string(G) + " lands in " + std::string(region_name(r)) +
                              ", not " + std::string(region_name(want)));
    }
    const std::vector<EigenstateSpec> st = discrete_states(p, n);
    const EigenstateSpec &s = st[static_cast<std::size_t>(n)];
    rep.parameter_values.push_back(G);
    rep.energies.push_back(s.energy);
    if (branch == Branch::Plus)
    {
      rep.distances.push_back(weighted_distance(s.right_fn, limit.right_fn, p));
    }
    else
    {
      rep.battery.push_back(battery_profile(s.right_fn, p));
      rep.distances.push_back(profile_distance(rep.battery.back(), limit_profile));
    }
  }
  return rep;
}

ModelParams ep_side_params(double omega, double beta, double eps, EpSide side, const ModelParams &base)
{
  if (beta == 0.0)
  {
    throw InvalidParameters("exceptional-point sweep needs beta != 0");
  }
  ModelParams p = base;
  p.omega = omega;
  p.beta = beta;
  const double sign = side == EpSide::I ? -1.0 : 1.0;
  p.alpha = (omega * omega + sign * eps * eps) / (4.0 * beta);
  return p;
}

GeneralizedFunction ep_limit_function(double omega, double beta, int n, const ModelParams &base)
{
  ModelParams p = base;
  p.omega = omega;
  p.beta = beta;
  return GaussMonomial{ep_gauss(p), n % 2, 1.0};
}

LimitSweepReport sweep_to_EP(double omega, double beta, int n, EpSide side,
                             const std::vector<double> &eps_values, const ModelParams &base)
{
  if (n < 0)
  {
    throw InvalidParameters("n must be >= 0");
  }
  for (std::size_t i = 0; i < eps_values.size(); i++)
  {
    if (!(eps_values[i] > 0.0) || (i > 0 && !(eps_values[i] < eps_values[i - 1])))
    {
      throw InvalidParameters("eps values must be positive and decreasing");
    }
  }
  const GeneralizedFunction limit = ep_limit_function(omega, beta, n, base);
  LimitSweepReport rep;
  for (double eps : eps_values)
  {
    const ModelParams p = ep_side_params(omega, beta, eps, side, base);
    const std::vector<EigenstateSpec> st = discrete_states(p, n);
    const EigenstateSpec &s = find_state(st, n, Branch::Plus);
    rep.parameter_values.push_back(eps);
    rep.energies.push_back(s.energy);
    rep.distances.push_back(weighted_distance(s.right_fn, limit, p));
  }
  return rep;
}

std::vector<SpectrumFlowRow> ep_spectrum_flow(double omega, double beta, int n_max,
                                              const std::vector<double> &eps_values,
                                              const ModelParams &base)
{
  ep_gauss(ModelParams{omega, 0.0, beta, base.b0, base.hbar});
  std::vector<SpectrumFlowRow> rows;
  for (double eps : eps_values)
  {
    const std::vector<EigenstateSpec> one = discrete_states(ep_side_params(omega, beta, eps, EpSide::I, base), n_max);
    const std::vector<EigenstateSpec> two = discrete_states(ep_side_params(omega, beta, eps, EpSide::II, base), n_max);
    for (int n = 0; n <= n_max; n++)
    {
      rows.push_back({eps, n, find_state(one, n, Branch::None).energy,
                      find_state(two, n, Branch::Plus).energy, find_state(two, n, Branch::Minus).energy});
    }
  }
  return rows;
}

}  // namespace swanson
