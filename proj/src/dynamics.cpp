// SPDX-License-Identifier: Apache-2.0

#include "swanson/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include "swanson/eigensystems.hpp"
#include "swanson/errors.hpp"
#include "swanson/pairing.hpp"

namespace swanson
{

namespace
{

const complex kI(0.0, 1.0);

void require_oscillator(const ModelParams &params, const char *what)
{
  const Region r = classify(params);
  if (r != Region::RegionI && r != Region::RegionIII)
  {
    throw RegionError(std::string(what) + " needs Region I or III, got " +
                      std::string(region_name(r)));
  }
}

// E_n = +-hbar|Omega|(n + 1/2)
double level(const ModelParams &params, int n)
{
  const double sign = classify(params) == Region::RegionI ? 1.0 : -1.0;
  return sign * params.hbar * derive(params).abs_omega() * (n + 0.5);
}

}  // namespace

std::string_view observable_name(ObservableKind kind)
{
  switch (kind)
  {
    case ObservableKind::X:
      return "X";
    case ObservableKind::P:
      return "P";
    case ObservableKind::X2:
      return "X2";
    case ObservableKind::P2:
      return "P2";
  }
  return "?";
}

ObservableKind parse_observable(std::string_view name)
{
  for (ObservableKind k : {ObservableKind::X, ObservableKind::P, ObservableKind::X2, ObservableKind::P2})
  {
    if (observable_name(k) == name)
    {
      return k;
    }
  }
  throw InvalidParameters("unknown observable '" + std::string(name) + "' (X, P, X2, P2)");
}

std::vector<complex> apply_observable(const ModelParams &params, ObservableKind kind,
                                      const GeneralizedFunction &f, const std::vector<double> &grid)
{
  const DerivedQuantities d = derive(params);
  if (!d.upsilon_coeff)
  {
    throw SingularParameters("momentum undefined for omega = alpha + beta");
  }
  const double s = *d.upsilon_coeff / (params.b0 * params.b0);
  const double hb = params.hbar;
  std::vector<complex> out;
  out.reserve(grid.size());
  for (double x : grid)
  {
    const PointJet j = evaluate_jet(f, x, params);
    switch (kind)
    {
      case ObservableKind::X:
        out.push_back(x * j.value);
        break;
      case ObservableKind::X2:
        out.push_back(x * x * j.value);
        break;
      case ObservableKind::P:
        out.push_back(-kI * hb * (j.dx - s * x * j.value));
        break;
      case ObservableKind::P2:
        // (d/dx - s x)^2 f = f'' - 2 s x f' - s f + s^2 x^2 f
        out.push_back(-hb * hb * (j.dxx - 2.0 * s * x * j.dx - s * j.value + s * s * x * x * j.value));
        break;
    }
  }
  return out;
}

complex matrix_element(ObservableKind kind, int m, int n, const ModelParams &params)
{
  require_oscillator(params, "matrix_element");
  if (m < 0 || n < 0)
  {
    throw InvalidParameters("matrix_element needs m, n >= 0");
  }
  const double sigma = *derive(params).sigma;
  const double len = params.b0 / sigma;
  const double up = m == n + 1 ? std::sqrt(n + 1.0) : 0.0;
  const double down = m == n - 1 ? std::sqrt(double(n)) : 0.0;
  const double up2 = m == n + 2 ? std::sqrt((n + 1.0) * (n + 2.0)) : 0.0;
  const double down2 = m == n - 2 ? std::sqrt(double(n) * (n - 1.0)) : 0.0;
  const double diag = m == n ? 2.0 * n + 1.0 : 0.0;
  const double pk = params.hbar / len;
  switch (kind)
  {
    case ObservableKind::X:
      return len / std::sqrt(2.0) * (up + down);
    case ObservableKind::P:
      return kI * pk / std::sqrt(2.0) * (up - down);
    case ObservableKind::X2:
      return len * len / 2.0 * (diag + up2 + down2);
    case ObservableKind::P2:
      return pk * pk / 2.0 * (diag - up2 - down2);
  }
  return 0.0;
}

StateVector make_state(const ModelParams &params, std::vector<complex> coeffs, bool normalize)
{
  require_oscillator(params, "StateVector");
  if (coeffs.empty())
  {
    throw InvalidParameters("state needs at least one coefficient");
  }
  StateVector s{classify(params), std::move(coeffs), false};
  if (normalize)
  {
    double norm = 0.0;
    for (const complex &c : s.coeffs)
    {
      norm += std::norm(c);
    }
    if (norm == 0.0)
    {
      throw InvalidParameters("zero state cannot be normalized");
    }
    for (complex &c : s.coeffs)
    {
      c /= std::sqrt(norm);
    }
    s.normalized = true;
  }
  return s;
}

double metric_norm(const StateVector &state, const ModelParams &params)
{
  const int n_max = static_cast<int>(state.coeffs.size()) - 1;
  const GramReport g = gram(params, n_max, GramKind::Metric);
  complex s;
  for (int m = 0; m <= n_max; m++)
  {
    for (int n = 0; n <= n_max; n++)
    {
      s += std::conj(state.coeffs[m]) * state.coeffs[n] * g.at(m, n);
    }
  }
  return s.real();
}

complex evolve_expectation(const StateVector &state, ObservableKind kind, const ModelParams &params,
                           double t)
{
  require_oscillator(params, "evolve_expectation");
  const int size = static_cast<int>(state.coeffs.size());
  complex s;
  for (int m = 0; m < size; m++)
  {
    for (int n = std::max(0, m - 2); n < std::min(size, m + 3); n++)
    {
      const complex o = matrix_element(kind, m, n, params);
      if (o == 0.0)
      {
        continue;
      }
      const double phase = (level(params, m) - level(params, n)) * t / params.hbar;
      s += std::conj(state.coeffs[m]) * state.coeffs[n] * std::polar(1.0, phase) * o;
    }
  }
  return s;
}

double evolved_norm(const StateVector &state, const ModelParams &params, double t)
{
  StateVector moved = state;
  for (std::size_t n = 0; n < moved.coeffs.size(); n++)
  {
    moved.coeffs[n] *= std::polar(1.0, -level(params, static_cast<int>(n)) * t / params.hbar);
  }
  return metric_norm(moved, params);
}

SectorEvolution evolve_sector(const ModelParams &params, const std::vector<complex> &minus_coeffs,
                              const std::vector<complex> &plus_coeffs, double t,
                              const std::vector<double> &grid)
{
  const Region r = classify(params);
  if (r != Region::RegionII && r != Region::RegionIV)
  {
    throw RegionError("evolve_sector needs Region II or IV, got " + std::string(region_name(r)));
  }
  const int n_max =
      static_cast<int>(std::max(minus_coeffs.size(), plus_coeffs.size())) - 1;
  SectorEvolution out;
  out.values.assign(grid.size(), complex(0.0));
  if (n_max < 0)
  {
    return out;
  }
  struct Term
  {
    complex coeff;
    double log_growth;
    const GeneralizedFunction *fn;
  };
  const std::vector<EigenstateSpec> states = discrete_states(params, n_max);
  std::vector<Term> terms;
  for (const EigenstateSpec &st : states)
  {
    const std::vector<complex> &c = st.branch == Branch::Plus ? plus_coeffs : minus_coeffs;
    if (st.n >= static_cast<int>(c.size()) || c[st.n] == 0.0)
    {
      continue;
    }
    // e^{i E t / hbar} with E purely imaginary
    const complex x = kI * st.energy * t / params.hbar;
    terms.push_back({c[st.n] * std::polar(1.0, x.imag()), x.real(), &st.right_fn});
  }
  double top = -std::numeric_limits<double>::infinity();
  for (const Term &tm : terms)
  {
    top = std::max(top, tm.log_growth);
  }
  const double limit = std::log(std::numeric_limits<double>::max()) - 40.0;
  if (top > limit)
  {
    out.overflow = true;
    out.log_scale = top;
  }
  for (const Term &tm : terms)
  {
    const complex f = tm.coeff * std::exp(tm.log_growth - out.log_scale);
    for (std::size_t i = 0; i < grid.size(); i++)
    {
      out.values[i] += f * evaluate(*tm.fn, grid[i], params);
    }
  }
  return out;
}

}  // namespace swanson
