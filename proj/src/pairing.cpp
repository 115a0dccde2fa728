// SPDX-License-Identifier: Apache-2.0

#include "swanson/pairing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include "swanson/eigensystems.hpp"
#include "swanson/errors.hpp"
#include "swanson/specfun.hpp"

namespace swanson
{

namespace
{

constexpr double kPi = std::numbers::pi;

int atom_degree(const Atom &a)
{
  if (const auto *h = std::get_if<GaussHermite>(&a))
  {
    return h->n;
  }
  if (const auto *m = std::get_if<GaussMonomial>(&a))
  {
    return m->n;
  }
  return -1;
}

// Running sum of exp(log_scale) * value without intermediate overflow.
struct LogSum
{
  double top = -std::numeric_limits<double>::infinity();
  complex acc;

  void add(double log_scale, complex value)
  {
    if (value == 0.0)
    {
      return;
    }
    if (log_scale > top)
    {
      acc *= std::exp(top - log_scale);
      top = log_scale;
    }
    acc += value * std::exp(log_scale - top);
  }
  complex result() const { return std::isinf(top) ? complex(0.0) : acc * std::exp(top); }
};

// Entire part of conj(left) continued off the real line: conj(R(conj y)).
RestJet conj_rest(const Atom &a, complex y, double b0)
{
  RestJet r = atom_rest(a, std::conj(y), b0);
  return {std::conj(r.value), std::conj(r.d1), std::conj(r.d2), r.log_scale};
}

// (-1)^n norm d^n/dy^n [exp(G y^2/2) smooth(y)] at 0 by a Cauchy integral.
template <class Smooth>
complex delta_action(int n, complex norm, complex G, Smooth smooth)
{
  const int m = std::max(64, 4 * n + 32);
  const double r = 1.0;
  LogSum sum;
  for (int k = 0; k < m; k++)
  {
    const double t = 2.0 * kPi * k / m;
    const complex y = std::polar(r, t);
    const RestJet s = smooth(y);
    const complex e = G * (y * y / 2.0);
    sum.add(e.real() + s.log_scale, s.value * std::polar(1.0, e.imag() - n * t));
  }
  const double scale = std::exp(std::lgamma(n + 1.0) - n * std::log(r)) / m;
  const complex dn = sum.result() * scale;
  return (n % 2 == 0 ? 1.0 : -1.0) * norm * dn;
}

complex pair_distributional(const Atom &left, const Atom &right, double b0)
{
  const auto *dl = std::get_if<DeltaDeriv>(&left);
  const auto *dr = std::get_if<DeltaDeriv>(&right);
  if (dl && dr)
  {
    throw NonConvergent("pairing of two delta-derivative functionals is undefined");
  }
  if (dl)
  {
    const complex G = std::conj(dl->gauss) + atom_gauss(right);
    return delta_action(dl->n, std::conj(dl->norm), G,
                        [&](complex y) { return atom_rest(right, y, b0); });
  }
  const complex G = std::conj(atom_gauss(left)) + dr->gauss;
  return delta_action(dr->n, dr->norm, G, [&](complex y) { return conj_rest(left, y, b0); });
}

complex pair_quadrature(const Atom &left, const Atom &right, double b0,
                        const PairingStrategy &strategy)
{
  const complex G = std::conj(atom_gauss(left)) + atom_gauss(right);
  const complex a = -G / 2.0;
  const double tiny = 1e-14 * std::abs(a);
  if (std::abs(a) == 0.0 || a.real() < -tiny)
  {
    throw NonConvergent("combined Gaussian exponent does not decay (Re a = " +
                        std::to_string(a.real()) + ")");
  }
  double theta = 0.0;
  switch (strategy.kind)
  {
    case PairingStrategy::Kind::RotatedContour:
      theta = strategy.theta;
      break;
    case PairingStrategy::Kind::DirectGaussHermite:
      theta = 0.0;
      break;
    default:
      theta = a.imag() == 0.0 ? 0.0 : -std::arg(a) / 2.0;
      break;
  }
  if (!(std::abs(theta) < kPi / 2))
  {
    throw NonConvergent("rotation angle outside (-pi/2, pi/2)");
  }
  const complex ar = a * std::polar(1.0, 2.0 * theta);
  const double kappa = ar.real();
  if (!(kappa > tiny))
  {
    throw NonConvergent("rotated Gaussian does not decay for this angle");
  }
  const double chirp = std::abs(ar.imag()) <= tiny ? 0.0 : ar.imag() / kappa;

  int order = strategy.order;
  if (order <= 0)
  {
    const int dl = atom_degree(left);
    const int dr = atom_degree(right);
    order = (dl < 0 || dr < 0 || chirp != 0.0) ? 200 : 4 * std::max(dl, dr) + 40;
  }
  const QuadratureRule &rule = gauss_hermite(order);
  const complex dir = std::polar(1.0, theta) / std::sqrt(kappa);
  LogSum sum;
  for (int i = 0; i < rule.order; i++)
  {
    const double t = rule.nodes[i];
    const complex y = dir * t;
    const RestJet rl = conj_rest(left, y, b0);
    const RestJet rr = atom_rest(right, y, b0);
    const double lw = std::log(rule.scaled_weights[i]) - t * t;
    sum.add(lw + rl.log_scale + rr.log_scale,
            rl.value * rr.value * std::polar(1.0, -chirp * t * t));
  }
  return sum.result() * dir * b0;
}

complex pair_atoms(const Atom &left, const Atom &right, double b0, const PairingStrategy &s)
{
  const bool delta =
      std::holds_alternative<DeltaDeriv>(left) || std::holds_alternative<DeltaDeriv>(right);
  if (delta)
  {
    if (s.kind != PairingStrategy::Kind::Auto &&
        s.kind != PairingStrategy::Kind::DistributionalExact)
    {
      throw NonConvergent("delta-derivative functionals need the distributional strategy");
    }
    return pair_distributional(left, right, b0);
  }
  if (s.kind == PairingStrategy::Kind::DistributionalExact)
  {
    throw NonConvergent("distributional strategy needs a delta-derivative side");
  }
  return pair_quadrature(left, right, b0, s);
}

bool two_branch(Region r)
{
  return r == Region::RegionII || r == Region::RegionIV || r == Region::BoundaryI_III;
}

}  // namespace

complex pair(const GeneralizedFunction &left, const GeneralizedFunction &right,
             const ModelParams &params, PairingStrategy strategy)
{
  params.validate();
  complex total;
  for (const Atom &l : left.terms)
  {
    for (const Atom &r : right.terms)
    {
      total += pair_atoms(l, r, params.b0, strategy);
    }
  }
  return total;
}

complex metric_pair(const GeneralizedFunction &a, const GeneralizedFunction &b,
                    const ModelParams &params, PairingStrategy strategy)
{
  const DerivedQuantities d = derive(params);
  if (!d.upsilon_coeff)
  {
    throw SingularParameters("metric undefined for omega = alpha + beta");
  }
  return pair(dress(a, -2.0 * *d.upsilon_coeff), b, params, strategy);
}

GramReport gram(const ModelParams &params, int n_max, GramKind which)
{
  const std::vector<EigenstateSpec> states = discrete_states(params, n_max);
  const Region region = states.front().region;
  GramReport rep;
  rep.n_max = n_max;
  rep.blocks = two_branch(region) ? 2 : 1;
  if (which == GramKind::Metric && rep.blocks != 1)
  {
    throw RegionError("metric gram needs Region I or III, got " + std::string(region_name(region)));
  }
  const int dim = rep.dim();
  rep.matrix.assign(static_cast<std::size_t>(dim * dim), complex(0.0));
  for (int i = 0; i < dim; i++)
  {
    for (int j = 0; j < dim; j++)
    {
      if (states[i].branch != states[j].branch)
      {
        continue;
      }
      const complex v = which == GramKind::Metric
                            ? metric_pair(states[i].right_fn, states[j].right_fn, params)
                            : pair(states[i].left_fn, states[j].right_fn, params);
      rep.matrix[static_cast<std::size_t>(i * dim + j)] = v;
      if (i == j)
      {
        rep.max_diag_err = std::max(rep.max_diag_err, std::abs(v - 1.0));
      }
      else
      {
        rep.max_offdiag = std::max(rep.max_offdiag, std::abs(v));
      }
    }
  }
  return rep;
}

Reconstruction reconstruct(const ModelParams &params, const GeneralizedFunction &target, int n_max,
                           const std::vector<double> &grid)
{
  const Region r = classify(params);
  if (r != Region::RegionI && r != Region::RegionIII)
  {
    throw RegionError("reconstruct needs Region I or III, got " + std::string(region_name(r)));
  }
  // Upsilon * target must decay for the Hermite expansion to converge.
  const double c = *derive(params).upsilon_coeff;
  for (const Atom &a : target.terms)
  {
    if (!((atom_gauss(a) - c).real() < 0.0))
    {
      throw NonConvergent("target decays too slowly against the dual basis");
    }
  }
  const std::vector<EigenstateSpec> states = discrete_states(params, n_max);
  Reconstruction out;
  for (const EigenstateSpec &st : states)
  {
    out.coefficients.push_back(pair(st.left_fn, target, params));
  }
  for (double x : grid)
  {
    complex s;
    for (std::size_t n = 0; n < states.size(); n++)
    {
      s += out.coefficients[n] * evaluate(states[n].right_fn, x, params);
    }
    out.sup_error = std::max(out.sup_error, std::abs(s - evaluate(target, x, params)));
  }
  return out;
}

GeneralizedFunction gaussian_target(double shift, double width, const ModelParams &params)
{
  const double a = shift / params.b0;
  const double w2 = width * width;
  const double k = 2.0 * a / w2;
  GaussProfile p;
  p.gauss = -2.0 / w2;
  p.label = "gaussian";
  p.rest = [a, w2, k](complex y) {
    const complex v = std::exp(k * y - a * a / w2);
    return RestJet{v, k * v, k * k * v, 0.0};
  };
  return GeneralizedFunction(std::move(p));
}

}  // namespace swanson
