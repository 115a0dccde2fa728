// SPDX-License-Identifier: Apache-2.0

#include "swanson/generalized_function.hpp"

#include <cmath>
#include <type_traits>
#include "swanson/errors.hpp"
#include "swanson/specfun.hpp"

namespace swanson
{

namespace
{

template <class... Ts>
struct Overloaded : Ts...
{
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

RestJet hermite_rest(const GaussHermite &a, complex y)
{
  const int n = a.n;
  const std::vector<complex> h = hermite_normalized(n, a.scale * y);
  RestJet j;
  j.value = a.norm * h[n];
  // H_n' = 2n H_{n-1}, so in normalized form h_n' = sqrt(2n) h_{n-1}.
  if (n >= 1)
  {
    j.d1 = a.norm * a.scale * std::sqrt(2.0 * n) * h[n - 1];
  }
  if (n >= 2)
  {
    j.d2 = a.norm * a.scale * a.scale * 2.0 * std::sqrt(double(n) * (n - 1)) * h[n - 2];
  }
  return j;
}

RestJet monomial_rest(const GaussMonomial &a, complex y)
{
  const int n = a.n;
  RestJet j;
  j.value = a.norm * (n == 0 ? complex(1.0) : std::pow(y, n));
  if (n >= 1)
  {
    j.d1 = a.norm * double(n) * std::pow(y, n - 1);
  }
  if (n >= 2)
  {
    j.d2 = a.norm * (double(n) * (n - 1)) * std::pow(y, n - 2);
  }
  return j;
}

RestJet plane_wave_rest(const PlaneWaveGauss &a, complex y, double b0)
{
  const complex ik = complex(0.0, 1.0) * a.k_wave * b0;
  const complex ep = a.amp_plus * std::exp(ik * y);
  const complex em = a.amp_minus * std::exp(-ik * y);
  return {ep + em, ik * (ep - em), ik * ik * (ep + em), 0.0};
}

RestJet cylinder_rest(const CylinderState &a, complex y)
{
  const complex yy = a.conjugated ? std::conj(y) : y;
  const complex mu = -a.nu - 1.0;
  const complex z = a.arg_scale * yy;
  const CylinderJet cj = parabolic_cylinder_D_jet(mu, z);
  // Weber equation: D'' = (z^2/4 - mu - 1/2) D.
  RestJet j;
  j.value = a.norm * cj.value;
  j.d1 = a.norm * a.arg_scale * cj.derivative;
  j.d2 = a.norm * a.arg_scale * a.arg_scale * (z * z / 4.0 - mu - 0.5) * cj.value;
  j.log_scale = cj.exponent;
  if (a.conjugated)
  {
    j.value = std::conj(j.value);
    j.d1 = std::conj(j.d1);
    j.d2 = std::conj(j.d2);
  }
  return j;
}

}  // namespace

bool GeneralizedFunction::is_distribution() const
{
  for (const Atom &a : terms)
  {
    if (std::holds_alternative<DeltaDeriv>(a))
    {
      return true;
    }
  }
  return false;
}

std::string GeneralizedFunction::variant_name() const
{
  static const char *const names[] = {"GaussHermite",   "GaussMonomial", "DeltaDeriv",
                                      "PlaneWaveGauss", "CylinderState", "GaussProfile"};
  if (terms.empty())
  {
    return "Zero";
  }
  const std::size_t k = terms.front().index();
  for (const Atom &a : terms)
  {
    if (a.index() != k)
    {
      return "Sum";
    }
  }
  return names[k];
}

GeneralizedFunction operator+(GeneralizedFunction a, const GeneralizedFunction &b)
{
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a;
}

GeneralizedFunction operator*(complex s, GeneralizedFunction f)
{
  for (Atom &atom : f.terms)
  {
    std::visit(Overloaded{
                   [&](PlaneWaveGauss &a) {
                     a.amp_plus *= s;
                     a.amp_minus *= s;
                   },
                   [&](GaussProfile &a) {
                     auto inner = a.rest;
                     a.rest = [inner, s](complex y) {
                       RestJet j = inner(y);
                       j.value *= s;
                       j.d1 *= s;
                       j.d2 *= s;
                       return j;
                     };
                   },
                   [&](auto &a) { a.norm *= s; },
               },
               atom);
  }
  return f;
}

GeneralizedFunction dress(GeneralizedFunction f, complex delta_g)
{
  for (Atom &atom : f.terms)
  {
    std::visit([&](auto &a) { a.gauss += delta_g; }, atom);
  }
  return f;
}

GeneralizedFunction conjugate(GeneralizedFunction f)
{
  for (Atom &atom : f.terms)
  {
    std::visit(Overloaded{
                   [](GaussHermite &a) {
                     a.gauss = std::conj(a.gauss);
                     a.scale = std::conj(a.scale);
                     a.norm = std::conj(a.norm);
                   },
                   [](GaussMonomial &a) {
                     a.gauss = std::conj(a.gauss);
                     a.norm = std::conj(a.norm);
                   },
                   [](DeltaDeriv &a) {
                     a.gauss = std::conj(a.gauss);
                     a.norm = std::conj(a.norm);
                   },
                   [](PlaneWaveGauss &a) {
                     // conj(A e^{ikx} + B e^{-ikx}) = conj(B) e^{i conj(k) x} + conj(A) e^{-i conj(k) x}
                     a.gauss = std::conj(a.gauss);
                     a.k_wave = std::conj(a.k_wave);
                     const complex p = a.amp_plus;
                     a.amp_plus = std::conj(a.amp_minus);
                     a.amp_minus = std::conj(p);
                   },
                   [](CylinderState &a) {
                     // the conjugated rest already covers norm
                     a.gauss = std::conj(a.gauss);
                     a.conjugated = !a.conjugated;
                   },
                   [](GaussProfile &a) {
                     a.gauss = std::conj(a.gauss);
                     auto inner = a.rest;
                     a.rest = [inner](complex y) {
                       const RestJet r = inner(std::conj(y));
                       return RestJet{std::conj(r.value), std::conj(r.d1), std::conj(r.d2), r.log_scale};
                     };
                   },
               },
               atom);
  }
  return f;
}

complex atom_gauss(const Atom &atom)
{
  return std::visit([](const auto &a) { return a.gauss; }, atom);
}

RestJet atom_rest(const Atom &atom, complex y, double b0)
{
  return std::visit(Overloaded{
                        [&](const GaussHermite &a) { return hermite_rest(a, y); },
                        [&](const GaussMonomial &a) { return monomial_rest(a, y); },
                        [&](const DeltaDeriv &) -> RestJet {
                          throw DeltaDerivNotEvaluable(
                              "delta-derivative functionals have no pointwise values");
                        },
                        [&](const PlaneWaveGauss &a) { return plane_wave_rest(a, y, b0); },
                        [&](const CylinderState &a) { return cylinder_rest(a, y); },
                        [&](const GaussProfile &a) { return a.rest(y); },
                    },
                    atom);
}

PointJet evaluate_jet(const GeneralizedFunction &f, double x, const ModelParams &params)
{
  const double b0 = params.b0;
  const double y = x / b0;
  PointJet out;
  for (const Atom &atom : f.terms)
  {
    const complex g = atom_gauss(atom);
    const RestJet r = atom_rest(atom, y, b0);
    const complex e = std::exp(g * (y * y / 2.0) + r.log_scale);
    out.value += e * r.value;
    out.dx += e * (g * y * r.value + r.d1) / b0;
    out.dxx += e * ((g + g * g * y * y) * r.value + 2.0 * g * y * r.d1 + r.d2) / (b0 * b0);
  }
  return out;
}

complex evaluate(const GeneralizedFunction &f, double x, const ModelParams &params)
{
  const double y = x / params.b0;
  complex sum;
  for (const Atom &atom : f.terms)
  {
    const RestJet r = atom_rest(atom, y, params.b0);
    sum += std::exp(atom_gauss(atom) * (y * y / 2.0) + r.log_scale) * r.value;
  }
  return sum;
}

std::vector<complex> apply_hamiltonian(const ModelParams &params, const GeneralizedFunction &f,
                                       const std::vector<double> &grid)
{
  params.validate();
  const double hb = params.hbar;
  const double b0 = params.b0;
  const double s = params.omega + params.alpha + params.beta;
  const double d = params.omega - params.alpha - params.beta;
  const double a = params.alpha - params.beta;
  std::vector<complex> out;
  out.reserve(grid.size());
  for (double x : grid)
  {
    const PointJet j = evaluate_jet(f, x, params);
    const double y = x / b0;
    out.push_back(hb * (0.5 * s * y * y * j.value - 0.5 * d * b0 * b0 * j.dxx +
                        0.5 * a * (2.0 * x * j.dx + j.value)));
  }
  return out;
}

std::vector<complex> apply_adjoint_hamiltonian(const ModelParams &params,
                                               const GeneralizedFunction &f,
                                               const std::vector<double> &grid)
{
  return apply_hamiltonian(params.adjoint(), f, grid);
}

std::vector<complex> apply_reduced_hamiltonian(const ModelParams &params,
                                               const GeneralizedFunction &f,
                                               const std::vector<double> &grid)
{
  params.validate();
  const double hb = params.hbar;
  const double b0 = params.b0;
  const double d = params.omega - params.alpha - params.beta;
  if (d == 0.0)
  {
    throw SingularParameters("reduced Hamiltonian undefined for omega = alpha + beta");
  }
  const double w2 = std::fma(-4.0 * params.alpha, params.beta, params.omega * params.omega);
  std::vector<complex> out;
  out.reserve(grid.size());
  for (double x : grid)
  {
    const PointJet j = evaluate_jet(f, x, params);
    const double y = x / b0;
    out.push_back(hb * (-0.5 * d * b0 * b0 * j.dxx + 0.5 * (w2 / d) * y * y * j.value));
  }
  return out;
}

GeneralizedFunction multiply_by_x(const GeneralizedFunction &f, const ModelParams &params)
{
  const double b0 = params.b0;
  GeneralizedFunction out;
  for (const Atom &atom : f.terms)
  {
    if (std::holds_alternative<DeltaDeriv>(atom))
    {
      // y delta^(n) = -n delta^(n-1)
      DeltaDeriv d = std::get<DeltaDeriv>(atom);
      if (d.n == 0)
      {
        continue;
      }
      if (d.gauss != 0.0)
      {
        throw DeltaDerivNotEvaluable("x times a Gaussian-dressed delta derivative is not an atom");
      }
      d.norm *= -double(d.n) * b0;
      d.n -= 1;
      out.terms.push_back(d);
      continue;
    }
    GaussProfile p;
    p.gauss = atom_gauss(atom);
    p.label = "x*" + GeneralizedFunction(atom).variant_name();
    p.rest = [atom, b0](complex y) {
      const RestJet r = atom_rest(atom, y, b0);
      // (y R)' = R + y R', (y R)'' = 2 R' + y R''
      return RestJet{b0 * y * r.value, b0 * (r.value + y * r.d1), b0 * (2.0 * r.d1 + y * r.d2),
                     r.log_scale};
    };
    out.terms.push_back(std::move(p));
  }
  return out;
}

std::vector<double> uniform_grid(double half_width, int n)
{
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; i++)
  {
    g[i] = n == 1 ? 0.0 : -half_width + 2.0 * half_width * i / (n - 1);
  }
  return g;
}

}  // namespace swanson
