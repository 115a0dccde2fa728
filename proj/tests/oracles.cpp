// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>
#include <vector>
#include "swanson/specfun.hpp"

extern "C"
{
#include <quadmath.h>
}

namespace oracle
{

namespace
{

using qc = __complex128;
using qr = __float128;

qc make(complex z)
{
  qc q;
  __real__ q = z.real();
  __imag__ q = z.imag();
  return q;
}

complex back(qc q)
{
  return {static_cast<double>(crealq(q)), static_cast<double>(cimagq(q))};
}

qc qi()
{
  qc q;
  __real__ q = 0;
  __imag__ q = 1;
  return q;
}

qc log_gamma_q(qc z)
{
  // Bernoulli numbers B_2k for the Stirling series.
  static const qr b2k[] = {1.0Q / 6,         -1.0Q / 30,          1.0Q / 42,
                           -1.0Q / 30,       5.0Q / 66,           -691.0Q / 2730,
                           7.0Q / 6,         -3617.0Q / 510,      43867.0Q / 798,
                           -174611.0Q / 330, 854513.0Q / 138,     -236364091.0Q / 2730,
                           8553103.0Q / 6,   -23749461029.0Q / 870};
  qc shift = 0;
  while (crealq(z) < 30)
  {
    shift += clogq(z);
    z += 1;
  }
  const qr pi = M_PIq;
  qc s = (z - 0.5Q) * clogq(z) - z + 0.5Q * logq(2 * pi);
  qc zp = z;
  const qc z2 = z * z;
  for (int k = 1; k <= 14; k++)
  {
    s += b2k[k - 1] / ((2 * k) * (2 * k - 1) * zp);
    zp *= z2;
  }
  return s - shift;
}

qc d_integral_ray(qc nu, qc z, double phi);

qc d_integral_q(qc nu, qc z)
{
  if (crealq(nu) >= 0)
  {
    // D_nu = z D_{nu-1} - (nu-1) D_{nu-2}
    return z * d_integral_q(nu - 1, z) - (nu - 1) * d_integral_q(nu - 2, z);
  }
  // The value does not depend on the ray; the ray with the lowest integrand peak
  // suffers the least cancellation.
  const qr s0 = fminq(0.05Q, 0.05Q / fmaxq(1, cabsq(z)));
  double best_phi = 0.0;
  qr best_peak = 1e300Q;
  for (int j = -40; j <= 40; j++)
  {
    const double phi = j * (std::numbers::pi / 4 - 0.05) / 40;
    const qc eiphi = cexpq(qi() * (qr)phi);
    qr peak = crealq(-nu * (logq(s0) + qi() * (qr)phi));
    for (qr u = logq(s0); u <= 12; u += 0.125Q)
    {
      const qc lg = -nu * (u + qi() * (qr)phi) - z * eiphi * expq(u) - eiphi * eiphi * expq(2 * u) / 2;
      peak = fmaxq(peak, crealq(lg));
    }
    if (peak < best_peak)
    {
      best_peak = peak;
      best_phi = phi;
    }
  }
  return d_integral_ray(nu, z, best_phi);
}

qc d_integral_ray(qc nu, qc z, double phi)
{
  const qc eiphi = cexpq(qi() * (qr)phi);
  // Near t = 0: exp(-z t - t^2/2) = sum c_k t^k integrated term by term up to t0 on the ray.
  const qr s0 = fminq(0.05Q, 0.05Q / fmaxq(1, cabsq(z)));
  const qc t0 = s0 * eiphi;
  const qc log_t0 = logq(s0) + qi() * (qr)phi;
  qc head = 0;
  {
    qc cm1 = 0, c0 = 1;
    for (int k = 0; k < 200; k++)
    {
      const qc term = c0 * cexpq(((qr)k - nu) * log_t0) / ((qr)k - nu);
      head += term;
      const qc c1 = (-z * c0 - cm1) / (qr)(k + 1);
      cm1 = c0;
      c0 = c1;
      if (k > 10 && cabsq(term) < 1e-40Q * cabsq(head))
      {
        break;
      }
    }
  }
  // Remaining ray t = s e^{i phi}, s = e^u: t^{-nu-1} dt = e^{-nu (u + i phi)} du.
  auto log_integrand = [&](qr u)
  { return -nu * (u + qi() * (qr)phi) - z * eiphi * expq(u) - eiphi * eiphi * expq(2 * u) / 2; };
  const qr lo = logq(s0);
  qr peak = crealq(log_integrand(lo));
  for (qr u = lo; u <= 12; u += 0.125Q)
  {
    peak = fmaxq(peak, crealq(log_integrand(u)));
  }
  qr hi = 12;
  while (hi > lo + 1 && crealq(log_integrand(hi)) < peak - 90)
  {
    hi -= 0.125Q;
  }
  hi += 0.5Q;
  // 20-point Gauss-Legendre panels, nodes polished to quad precision.
  static std::vector<std::pair<qr, qr>> gl;
  if (gl.empty())
  {
    const auto &rule = swanson::gauss_legendre(20);
    for (int i = 0; i < 20; i++)
    {
      qr x = rule.nodes[i], dp = 1;
      for (int it = 0; it < 4; it++)
      {
        qr p0 = 1, p1 = x;
        for (int k = 1; k < 20; k++)
        {
          const qr p2 = ((2 * k + 1) * x * p1 - k * p0) / (k + 1);
          p0 = p1;
          p1 = p2;
        }
        dp = 20 * (x * p1 - p0) / (x * x - 1);
        x -= p1 / dp;
      }
      gl.emplace_back(x, 2 / ((1 - x * x) * dp * dp));
    }
  }
  const int panels = static_cast<int>(ceilq((hi - lo) / 0.25Q));
  const qr width = (hi - lo) / panels;
  qc tail = 0;
  for (int p = 0; p < panels; p++)
  {
    const qr c = lo + (p + 0.5Q) * width;
    for (const auto &[x, w] : gl)
    {
      tail += w * cexpq(log_integrand(c + 0.5Q * width * x) - (qc)peak);
    }
  }
  tail *= 0.5Q * width;
  return cexpq(-z * z / 4 - log_gamma_q(-nu)) * (head + cexpq((qc)peak) * tail);
}

}  // namespace

complex log_gamma_stirling(complex z)
{
  return back(log_gamma_q(make(z)));
}

complex parabolic_cylinder_integral(complex nu, complex z)
{
  return back(d_integral_q(make(nu), make(z)));
}

complex integrate(const std::function<complex(double)> &f, double a, double b, int panels)
{
  const auto &rule = swanson::gauss_legendre(16);
  const double w = (b - a) / panels;
  complex sum = 0.0;
  for (int p = 0; p < panels; p++)
  {
    const double c = a + (p + 0.5) * w;
    for (int i = 0; i < rule.order; i++)
    {
      sum += rule.weights[i] * f(c + 0.5 * w * rule.nodes[i]);
    }
  }
  return 0.5 * w * sum;
}

complex taylor_derivative(const std::function<complex(complex)> &f, int n, double r, int points)
{
  complex sum = 0.0;
  for (int j = 0; j < points; j++)
  {
    const double t = 2.0 * std::numbers::pi * j / points;
    sum += f(std::polar(r, t)) * std::polar(std::pow(r, -n), -n * t);
  }
  double fact = 1.0;
  for (int k = 2; k <= n; k++)
  {
    fact *= k;
  }
  return fact * sum / double(points);
}

}  // namespace oracle
