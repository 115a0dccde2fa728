// SPDX-License-Identifier: Apache-2.0

#ifndef SWANSON_SPECFUN_HPP
#define SWANSON_SPECFUN_HPP

#include <complex>
#include <vector>

namespace swanson
{

using complex = std::complex<double>;

// Physicists' Hermite polynomial H_n(z) by three-term recurrence.
complex hermite(int n, complex z);

// h_k = H_k(z) / sqrt(2^k k!) for k = 0..n. Grows far slower than H_k itself.
std::vector<complex> hermite_normalized(int n, complex z);

// Principal branch of log Gamma. Throws PoleError at non-positive integers.
complex log_gamma(complex z);

// 1/Gamma(z), zero at the poles.
complex rgamma(complex z);

// value = mantissa * exp(exponent)
struct ScaledComplex
{
  complex mantissa;
  double exponent = 0.0;

  complex value() const;
  double log_abs() const;
};

// D and dD/dz sharing one scale factor exp(exponent).
struct CylinderJet
{
  complex value;
  complex derivative;
  double exponent = 0.0;
};

// Weber parabolic cylinder function D_nu(z). Throws OverflowError when the
// result is not representable; use the scaled form then.
complex parabolic_cylinder_D(complex nu, complex z);
ScaledComplex parabolic_cylinder_D_scaled(complex nu, complex z);
CylinderJet parabolic_cylinder_D_jet(complex nu, complex z);

// D_nu and its derivative on the ray z = r e^{i theta} at the given radii (ascending, >= 0),
// by one outward Taylor sweep of the Weber equation. Meant for modest |nu| on rays
// with pi/4 <= |theta| <= 3pi/4.
std::vector<CylinderJet> parabolic_cylinder_D_ray(complex nu, double theta,
                                                  const std::vector<double> &radii);

struct QuadratureRule
{
  std::vector<double> nodes;
  std::vector<double> weights;
  // weights[i] * exp(nodes[i]^2); finite where weights underflow.
  std::vector<double> scaled_weights;
  int order = 0;
};

// Nodes and weights for the weight exp(-x^2) on the real line, 1 <= N <= 500. Cached.
const QuadratureRule &gauss_hermite(int N);

// Nodes and weights on [-1, 1]. Cached.
const QuadratureRule &gauss_legendre(int N);

}  // namespace swanson

#endif  // SWANSON_SPECFUN_HPP
