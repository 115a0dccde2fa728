// SPDX-License-Identifier: Apache-2.0

#ifndef SWANSON_GENERALIZED_FUNCTION_HPP
#define SWANSON_GENERALIZED_FUNCTION_HPP

#include <functional>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>
#include "swanson/core.hpp"

namespace swanson
{

// All atoms live in the scaled coordinate y = x / b0 and carry a Gaussian
// factor exp(gauss * y^2 / 2). The remaining "rest" factor is entire in y.

// norm * exp(g y^2/2) * H_n(scale * y) / sqrt(2^n n!)
struct GaussHermite
{
  complex gauss;
  complex scale;
  int n = 0;
  complex norm;
};

// norm * exp(g y^2/2) * y^n
struct GaussMonomial
{
  complex gauss;
  int n = 0;
  complex norm;
};

// The functional f -> norm * (-1)^n d^n/dy^n [exp(g y^2/2) f(b0 y)] at y = 0,
// i.e. norm * exp(g y^2/2) delta^(n)(y). Only usable through pairings.
struct DeltaDeriv
{
  complex gauss;
  int n = 0;
  complex norm;
};

// exp(g y^2/2) * (A e^{i k x} + B e^{-i k x}); k is a wavenumber (1/length),
// complex when evanescent.
struct PlaneWaveGauss
{
  complex gauss;
  complex k_wave;
  complex amp_plus;
  complex amp_minus;
};

// norm * exp(g y^2/2) * D_{-nu-1}(arg_scale * y), or its complex conjugate on the
// real line when conjugated (continued analytically as conj(f(conj y))).
struct CylinderState
{
  complex gauss;
  complex nu;
  complex arg_scale;
  int side = +1;
  bool conjugated = false;
  complex norm;
};

// Rest factor and its first two y-derivatives, all times exp(log_scale).
struct RestJet
{
  complex value;
  complex d1;
  complex d2;
  double log_scale = 0.0;
};

// exp(g y^2/2) * rest(y) for a user-supplied entire rest. Used for test targets
// and for products that have no closed-form atom.
struct GaussProfile
{
  complex gauss;
  std::function<RestJet(complex y)> rest;
  std::string label;
};

using Atom = std::variant<GaussHermite, GaussMonomial, DeltaDeriv, PlaneWaveGauss, CylinderState,
                          GaussProfile>;

// A finite linear combination of atoms (coefficients are folded into the atoms).
struct GeneralizedFunction
{
  std::vector<Atom> terms;

  GeneralizedFunction() = default;
  template <class T>
    requires std::is_constructible_v<Atom, T>
  GeneralizedFunction(T atom)
  {
    terms.emplace_back(std::move(atom));
  }

  bool is_distribution() const;
  // Name of the single atom kind, or "Sum" for mixed combinations.
  std::string variant_name() const;
};

GeneralizedFunction operator+(GeneralizedFunction a, const GeneralizedFunction &b);
GeneralizedFunction operator*(complex s, GeneralizedFunction f);

// Multiply by exp(delta_g y^2/2); how the similarity transforms act.
GeneralizedFunction dress(GeneralizedFunction f, complex delta_g);

// Complex conjugate on the real line.
GeneralizedFunction conjugate(GeneralizedFunction f);

// Gaussian coefficient of an atom.
complex atom_gauss(const Atom &atom);

// Rest jet of an atom at complex y. Throws DeltaDerivNotEvaluable for DeltaDeriv.
RestJet atom_rest(const Atom &atom, complex y, double b0);

// Pointwise value. Throws DeltaDerivNotEvaluable.
complex evaluate(const GeneralizedFunction &f, double x, const ModelParams &params);

struct PointJet
{
  complex value;
  complex dx;   // d/dx
  complex dxx;  // d^2/dx^2
};

// f, f' and f'' at x by exact differentiation of the closed forms.
PointJet evaluate_jet(const GeneralizedFunction &f, double x, const ModelParams &params);

// (H f)(x) on the grid, H in x-p form for the given parameters.
std::vector<complex> apply_hamiltonian(const ModelParams &params, const GeneralizedFunction &f,
                                       const std::vector<double> &grid);

// H_c = H with alpha and beta exchanged.
std::vector<complex> apply_adjoint_hamiltonian(const ModelParams &params,
                                               const GeneralizedFunction &f,
                                               const std::vector<double> &grid);

// h = Upsilon H Upsilon^{-1} = -hbar D b0^2 d^2/2 + hbar Omega^2 x^2/(2 D b0^2), D = omega - alpha - beta.
std::vector<complex> apply_reduced_hamiltonian(const ModelParams &params,
                                               const GeneralizedFunction &f,
                                               const std::vector<double> &grid);

// x * f, kept symbolic (the result is a GaussProfile per term).
GeneralizedFunction multiply_by_x(const GeneralizedFunction &f, const ModelParams &params);

// Uniform grid of n points on [-half_width, half_width].
std::vector<double> uniform_grid(double half_width, int n);

}  // namespace swanson

#endif  // SWANSON_GENERALIZED_FUNCTION_HPP
