// SPDX-License-Identifier: Apache-2.0

#include "swanson/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <Eigen/Eigenvalues>
#include "swanson/errors.hpp"

namespace swanson
{

namespace
{

constexpr double kPi = std::numbers::pi;
constexpr complex kI(0.0, 1.0);

}  // namespace

complex hermite(int n, complex z)
{
  if (n < 0)
  {
    throw Error("hermite: negative degree");
  }
  complex h0 = 1.0;
  if (n == 0)
  {
    return h0;
  }
  complex h1 = 2.0 * z;
  for (int k = 1; k < n; k++)
  {
    const complex h2 = 2.0 * z * h1 - 2.0 * static_cast<double>(k) * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

std::vector<complex> hermite_normalized(int n, complex z)
{
  if (n < 0)
  {
    throw Error("hermite_normalized: negative degree");
  }
  std::vector<complex> h(n + 1);
  h[0] = 1.0;
  if (n >= 1)
  {
    h[1] = std::sqrt(2.0) * z;
  }
  for (int k = 1; k < n; k++)
  {
    h[k + 1] = std::sqrt(2.0 / (k + 1)) * z * h[k] - std::sqrt(double(k) / (k + 1)) * h[k - 1];
  }
  return h;
}

//
// Gamma function.
//

namespace
{

bool is_nonpositive_integer(complex z)
{
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Lanczos, g = 7, nine terms; valid for Re z >= 0.5.
complex log_gamma_lanczos(complex z)
{
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,   12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
  constexpr double g = 7.0;
  z -= 1.0;
  complex a = p[0];
  for (int k = 1; k < 9; k++)
  {
    a += p[k] / (z + double(k));
  }
  const complex t = z + g + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(a);
}

}  // namespace

complex log_gamma(complex z)
{
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
  {
    throw Error("log_gamma: non-finite argument");
  }
  if (is_nonpositive_integer(z))
  {
    throw PoleError("log_gamma: pole at z = " + std::to_string(z.real()));
  }
  if (z.real() >= 0.5)
  {
    return log_gamma_lanczos(z);
  }
  // Upward recursion; the sum of principal logs keeps the principal branch.
  const int shift = static_cast<int>(std::ceil(0.5 - z.real()));
  complex acc = 0.0;
  for (int k = 0; k < shift; k++)
  {
    acc += std::log(z + double(k));
  }
  return log_gamma_lanczos(z + double(shift)) - acc;
}

complex rgamma(complex z)
{
  if (is_nonpositive_integer(z))
  {
    return 0.0;
  }
  return std::exp(-log_gamma(z));
}

//
// Parabolic cylinder functions.
//

complex ScaledComplex::value() const
{
  if (mantissa == 0.0)
  {
    return 0.0;
  }
  const double scale = std::exp(exponent);
  if (!std::isfinite(scale))
  {
    throw OverflowError("scaled value exceeds the double range");
  }
  return mantissa * scale;
}

double ScaledComplex::log_abs() const
{
  return std::log(std::abs(mantissa)) + exponent;
}

namespace
{


CylinderJet normalize(complex v, complex d, double exponent)
{
  const double s = std::max(std::abs(v), std::abs(d));
  if (s == 0.0 || !std::isfinite(s))
  {
    return {v, d, exponent};
  }
  const int e = std::ilogb(s);
  const double f = std::scalbn(1.0, -e);
  return {v * f, d * f, exponent + e * std::log(2.0)};
}

CylinderJet add_jets(const CylinderJet &a, const CylinderJet &b)
{
  if (a.value == 0.0 && a.derivative == 0.0)
  {
    return b;
  }
  if (b.value == 0.0 && b.derivative == 0.0)
  {
    return a;
  }
  const double e = std::max(a.exponent, b.exponent);
  const double fa = std::exp(a.exponent - e);
  const double fb = std::exp(b.exponent - e);
  return normalize(a.value * fa + b.value * fb, a.derivative * fa + b.derivative * fb, e);
}

CylinderJet scale_jet(const CylinderJet &a, complex log_factor, complex derivative_factor = 1.0)
{
  const complex f = std::exp(complex(0.0, log_factor.imag()));
  return normalize(a.value * f, a.derivative * f * derivative_factor, a.exponent + log_factor.real());
}

// Term magnitudes of sum_s (a)_{2s} / (s! (2 r^2)^s) for the asymptotic check.
bool asymptotic_series_converges(complex a, double r)
{
  double term = 1.0;
  const double w = 2.0 * r * r;
  // The error bound degrades with |Im a| unless the leading correction is small.
  if (std::abs(a * (a + 1.0)) > 0.25 * w)
  {
    return false;
  }
  for (int s = 0; s < 400; s++)
  {
    const double ratio = std::abs((a + double(2 * s)) * (a + double(2 * s + 1))) / ((s + 1) * w);
    term *= ratio;
    if (term < 1e-17)
    {
      return true;
    }
    if (ratio >= 1.0 && s > 0)
    {
      return false;
    }
  }
  return false;
}

double asymptotic_radius(complex mu)
{
  double r = std::max(6.0, 1.5 * std::sqrt(std::abs(mu)));
  while (!(asymptotic_series_converges(-mu, r) && asymptotic_series_converges(mu + 1.0, r)))
  {
    r *= 1.1;
  }
  return r;
}

// S(z) = sum_s sign^s (a)_{2s} / (s! (2 z^2)^s) and dS/dz.
std::pair<complex, complex> asymptotic_sum(complex a, complex z, double sign)
{
  const complex inv = 1.0 / (2.0 * z * z);
  complex term = 1.0;
  complex sum = 1.0;
  complex dsum = 0.0;
  double last = 1.0;
  for (int s = 0; s < 400; s++)
  {
    term *= sign * (a + double(2 * s)) * (a + double(2 * s + 1)) * inv / double(s + 1);
    const double mag = std::abs(term);
    if (mag > last)
    {
      // Past the smallest term of a divergent series.
      break;
    }
    last = mag;
    sum += term;
    dsum += -2.0 * (s + 1) * term / z;
    if (mag < 1e-18 * std::abs(sum))
    {
      break;
    }
  }
  return {sum, dsum};
}

CylinderJet from_log(complex lg, complex value, complex derivative)
{
  return scale_jet(normalize(value, derivative, 0.0), lg);
}

CylinderJet asymptotic_jet(complex mu, complex z)
{
  const complex logz = std::log(z);
  // z^mu e^{-z^2/4} S1
  auto [s1, ds1] = asymptotic_sum(-mu, z, -1.0);
  const complex lg1 = mu * logz - z * z / 4.0;
  CylinderJet out = from_log(lg1, s1, (mu / z - z / 2.0) * s1 + ds1);
  const double arg = std::arg(z);
  if (std::abs(arg) > kPi / 2 && !is_nonpositive_integer(-mu))
  {
    const double sgn = arg > 0 ? 1.0 : -1.0;
    auto [s2, ds2] = asymptotic_sum(mu + 1.0, z, 1.0);
    const complex lg2 = 0.5 * std::log(2.0 * kPi) - log_gamma(-mu) + sgn * kI * kPi * mu +
                        (-mu - 1.0) * logz + z * z / 4.0;
    CylinderJet second = from_log(lg2, -s2, -(((-mu - 1.0) / z + z / 2.0) * s2 + ds2));
    out = add_jets(out, second);
  }
  return out;
}

// D_mu(0) and D_mu'(0).
CylinderJet origin_jet(complex mu)
{
  const double half_log_pi = 0.5 * std::log(kPi);
  const complex a = (1.0 - mu) / 2.0;
  const complex b = -mu / 2.0;
  CylinderJet v{0.0, 0.0, 0.0};
  CylinderJet d{0.0, 0.0, 0.0};
  if (!is_nonpositive_integer(a))
  {
    v = from_log(mu / 2.0 * std::log(2.0) + half_log_pi - log_gamma(a), 1.0, 0.0);
  }
  if (!is_nonpositive_integer(b))
  {
    d = from_log((mu + 1.0) / 2.0 * std::log(2.0) + half_log_pi - log_gamma(b), 0.0, -1.0);
  }
  return add_jets(v, d);
}

// One Taylor step of y'' = (z^2/4 - mu - 1/2) y from z0 to z0 + h.
CylinderJet taylor_step(complex mu, complex z0, complex h, const CylinderJet &y)
{
  const complex q0 = z0 * z0 / 4.0 - mu - 0.5;
  const complex q1 = z0 / 2.0;
  const complex q2 = 0.25;
  const complex h2 = h * h;
  // b_k = a_k h^k
  complex bm2 = 0.0, bm1 = 0.0;
  complex b0 = y.value, b1 = y.derivative * h;
  complex val = b0 + b1;
  complex der = b1;
  const double ref = std::abs(b0) + std::abs(b1);
  int small = 0;
  for (int k = 0; k < 2000; k++)
  {
    const complex b2 = h2 * (q0 * b0 + q1 * h * bm1 + q2 * h2 * bm2) / double((k + 2) * (k + 1));
    val += b2;
    der += double(k + 2) * b2;
    const double mag = std::abs(b2);
    if (mag <= 1e-18 * (ref + std::abs(val)))
    {
      if (++small >= 3)
      {
        break;
      }
    }
    else
    {
      small = 0;
    }
    bm2 = bm1;
    bm1 = b0;
    b0 = b1;
    b1 = b2;
  }
  return normalize(val, der / h, y.exponent);
}

double step_for(complex mu, complex z0)
{
  const double q = std::abs(z0 * z0 / 4.0 - mu - 0.5) + std::abs(z0) / 2.0 + 0.25;
  return std::min(0.5, 1.5 / std::sqrt(q));
}

// Integrate along the straight segment z_from -> z_to.
CylinderJet integrate_segment(complex mu, complex z_from, complex z_to, CylinderJet y)
{
  const complex dir = z_to - z_from;
  const double len = std::abs(dir);
  if (len == 0.0)
  {
    return y;
  }
  const complex unit = dir / len;
  double done = 0.0;
  complex z = z_from;
  while (done < len)
  {
    double h = step_for(mu, z);
    if (done + h > len)
    {
      h = len - done;
    }
    y = taylor_step(mu, z, h * unit, y);
    done += h;
    z = z_from + done * unit;
  }
  return y;
}

bool jets_agree(const CylinderJet &a, const CylinderJet &b, double tol)
{
  const double e = std::max(a.exponent, b.exponent);
  const complex va = a.value * std::exp(a.exponent - e);
  const complex vb = b.value * std::exp(b.exponent - e);
  const complex da = a.derivative * std::exp(a.exponent - e);
  const complex db = b.derivative * std::exp(b.exponent - e);
  const double scale = std::max({std::abs(va), std::abs(vb), 1e-300});
  const double dscale = std::max({std::abs(da), std::abs(db), 1e-300});
  return std::abs(va - vb) <= tol * scale && std::abs(da - db) <= tol * dscale;
}

// |z| below the asymptotic radius: integrate the Weber equation from points where D is
// known (origin, asymptotic circle). A path along which D is recessive picks up rounding
// noise in the dominant solution, so a value is accepted only once two different paths agree.
CylinderJet jet_interior(complex mu, complex z, double big)
{
  constexpr double kAgree = 1e-11;
  const double theta = std::arg(z);
  std::vector<complex> starts;
  if (std::abs(theta) <= kPi / 4)
  {
    starts.push_back(std::polar(big, theta));
    starts.push_back(0.0);
  }
  else
  {
    starts.push_back(0.0);
    starts.push_back(std::polar(big, theta));
  }
  for (double phi : {0.0, kPi / 4, -kPi / 4, kPi / 2, -kPi / 2, 3 * kPi / 4, -3 * kPi / 4, kPi,
                     kPi / 8, -kPi / 8, 3 * kPi / 8, -3 * kPi / 8})
  {
    // Identical paths would agree trivially.
    if (std::abs(std::polar(1.0, phi) - std::polar(1.0, theta)) > 1e-9)
    {
      starts.push_back(std::polar(big, phi));
    }
  }
  std::vector<CylinderJet> found;
  for (complex s : starts)
  {
    const CylinderJet y0 = s == 0.0 ? origin_jet(mu) : asymptotic_jet(mu, s);
    const CylinderJet y = integrate_segment(mu, s, z, y0);
    for (const CylinderJet &f : found)
    {
      if (jets_agree(f, y, kAgree))
      {
        return y;
      }
    }
    found.push_back(y);
  }
  throw NonConvergent("parabolic_cylinder_D: no stable integration path found");
}

}  // namespace

CylinderJet parabolic_cylinder_D_jet(complex mu, complex z)
{
  if (!std::isfinite(std::abs(mu)) || !std::isfinite(std::abs(z)))
  {
    throw Error("parabolic_cylinder_D: non-finite input");
  }
  if (z == 0.0)
  {
    return origin_jet(mu);
  }
  const double big = asymptotic_radius(mu);
  if (std::abs(z) >= big)
  {
    return asymptotic_jet(mu, z);
  }
  return jet_interior(mu, z, big);
}

ScaledComplex parabolic_cylinder_D_scaled(complex nu, complex z)
{
  const CylinderJet j = parabolic_cylinder_D_jet(nu, z);
  return {j.value, j.exponent};
}

complex parabolic_cylinder_D(complex nu, complex z)
{
  return parabolic_cylinder_D_scaled(nu, z).value();
}

std::vector<CylinderJet> parabolic_cylinder_D_ray(complex nu, double theta,
                                                  const std::vector<double> &radii)
{
  std::vector<CylinderJet> out;
  out.reserve(radii.size());
  CylinderJet y = origin_jet(nu);
  double r = 0.0;
  const complex unit = std::polar(1.0, theta);
  for (double target : radii)
  {
    if (target < r)
    {
      throw Error("parabolic_cylinder_D_ray: radii must be ascending and non-negative");
    }
    y = integrate_segment(nu, r * unit, target * unit, y);
    r = target;
    out.push_back(y);
  }
  return out;
}

//
// Gaussian quadrature.
//

namespace
{

QuadratureRule build_gauss_hermite(int N)
{
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(N);
  Eigen::VectorXd off(std::max(N - 1, 0));
  for (int k = 1; k < N; k++)
  {
    off(k - 1) = std::sqrt(k / 2.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  std::vector<double> x(solver.eigenvalues().data(), solver.eigenvalues().data() + N);

  // Hermite functions psi_k = p_k exp(-x^2/2), p_k orthonormal for exp(-x^2).
  auto psi = [N](double t, double &last, double &prev)
  {
    double pm1 = 0.0;
    double p0 = std::pow(kPi, -0.25) * std::exp(-t * t / 2.0);
    for (int k = 0; k < N - 1; k++)
    {
      const double p1 = t * std::sqrt(2.0 / (k + 1)) * p0 - std::sqrt(double(k) / (k + 1)) * pm1;
      pm1 = p0;
      p0 = p1;
    }
    const double pN = t * std::sqrt(2.0 / N) * p0 - std::sqrt(double(N - 1) / N) * pm1;
    prev = p0;
    last = pN;
  };

  QuadratureRule rule;
  rule.order = N;
  rule.nodes.resize(N);
  rule.weights.resize(N);
  rule.scaled_weights.resize(N);
  for (int i = 0; i < N; i++)
  {
    double t = x[i];
    double pN = 0.0, pNm1 = 0.0;
    for (int it = 0; it < 6; it++)
    {
      psi(t, pN, pNm1);
      if (pNm1 == 0.0)
      {
        break;
      }
      const double dt = pN / (std::sqrt(2.0 * N) * pNm1);
      t -= dt;
      if (std::abs(dt) < 1e-16 * std::max(1.0, std::abs(t)))
      {
        break;
      }
    }
    psi(t, pN, pNm1);
    rule.nodes[i] = t;
    rule.scaled_weights[i] = 1.0 / (N * pNm1 * pNm1);
    rule.weights[i] = rule.scaled_weights[i] * std::exp(-t * t);
  }
  // Enforce exact symmetry.
  for (int i = 0; i < N / 2; i++)
  {
    const int j = N - 1 - i;
    const double xn = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double ws = 0.5 * (rule.scaled_weights[i] + rule.scaled_weights[j]);
    rule.nodes[i] = -xn;
    rule.nodes[j] = xn;
    rule.scaled_weights[i] = rule.scaled_weights[j] = ws;
    rule.weights[i] = rule.weights[j] = ws * std::exp(-xn * xn);
  }
  if (N % 2 == 1)
  {
    rule.nodes[N / 2] = 0.0;
    rule.weights[N / 2] = rule.scaled_weights[N / 2];
  }
  return rule;
}

QuadratureRule build_gauss_legendre(int N)
{
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(N);
  Eigen::VectorXd off(std::max(N - 1, 0));
  for (int k = 1; k < N; k++)
  {
    off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  QuadratureRule rule;
  rule.order = N;
  rule.nodes.resize(N);
  rule.weights.resize(N);
  for (int i = 0; i < N; i++)
  {
    double t = solver.eigenvalues()(i);
    double p0 = 1.0, p1 = t, dp = 1.0;
    for (int it = 0; it < 8; it++)
    {
      p0 = 1.0;
      p1 = t;
      for (int k = 1; k < N; k++)
      {
        const double p2 = ((2 * k + 1) * t * p1 - k * p0) / (k + 1);
        p0 = p1;
        p1 = p2;
      }
      dp = N * (t * p1 - p0) / (t * t - 1.0);
      const double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16)
      {
        break;
      }
    }
    rule.nodes[i] = t;
    rule.weights[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
  for (int i = 0; i < N / 2; i++)
  {
    const int j = N - 1 - i;
    const double xn = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -xn;
    rule.nodes[j] = xn;
    rule.weights[i] = rule.weights[j] = w;
  }
  if (N % 2 == 1)
  {
    rule.nodes[N / 2] = 0.0;
  }
  rule.scaled_weights = rule.weights;
  return rule;
}

template <typename Builder>
const QuadratureRule &cached_rule(std::map<int, QuadratureRule> &cache, std::mutex &mutex, int N,
                                  Builder build)
{
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(N);
  if (it == cache.end())
  {
    it = cache.emplace(N, build(N)).first;
  }
  return it->second;
}

}  // namespace

const QuadratureRule &gauss_hermite(int N)
{
  if (N < 1 || N > 500)
  {
    throw Error("gauss_hermite: order must lie in [1, 500]");
  }
  static std::map<int, QuadratureRule> cache;
  static std::mutex mutex;
  return cached_rule(cache, mutex, N, build_gauss_hermite);
}

const QuadratureRule &gauss_legendre(int N)
{
  if (N < 1 || N > 500)
  {
    throw Error("gauss_legendre: order must lie in [1, 500]");
  }
  static std::map<int, QuadratureRule> cache;
  static std::mutex mutex;
  return cached_rule(cache, mutex, N, build_gauss_legendre);
}

}  // namespace swanson
