// SPDX-License-Identifier: Apache-2.0

#include <chrono>
#include <cmath>
#include <numbers>
#include "doctest.h"
#include "swanson/continuum.hpp"
#include "swanson/errors.hpp"
#include "swanson/pairing.hpp"
#include "swanson/specfun.hpp"

using namespace swanson;

namespace
{

constexpr double kPi = std::numbers::pi;

const ModelParams kII{1.0, -2.0, -0.5, 1.0, 1.0};
const ModelParams kIIb{1.0, -1.0, -0.7, 1.2, 2.0};
const ModelParams kIV{1.0, 2.0, 0.5, 1.0, 1.0};

double unit(const ModelParams &p)
{
  return p.hbar * derive(p).abs_omega();
}

// h phi for phi = norm D_mu(k y), with D' and D'' from the index-raising recurrence
// D'_mu(z) = z/2 D_mu(z) - D_{mu+1}(z).
complex reduced_h_oracle(const ModelParams &p, complex nu, complex k, complex norm, double x)
{
  const DerivedQuantities d = derive(p);
  const double y = x / p.b0;
  const complex mu = -nu - 1.0;
  const complex z = k * y;
  const complex d0 = parabolic_cylinder_D(mu, z);
  const complex d1 = parabolic_cylinder_D(mu + 1.0, z);
  const complex d2 = parabolic_cylinder_D(mu + 2.0, z);
  const complex dp0 = z / 2.0 * d0 - d1;
  const complex dp1 = z / 2.0 * d1 - d2;
  const complex dpp0 = 0.5 * d0 + z / 2.0 * dp0 - dp1;
  const double D = d.detuning;
  return norm * p.hbar * (-0.5 * D * k * k * dpp0 + 0.5 * (d.omega_sq / D) * y * y * d0);
}

}  // namespace

TEST_CASE("continuum index")
{
  CHECK(continuum_nu(kII, 0.0) == complex(-0.5, 0.0));
  CHECK(continuum_nu(kIV, 0.0) == complex(-0.5, 0.0));
  const double u = unit(kII);
  CHECK(std::abs(continuum_nu(kII, 2.0 * u) - complex(-0.5, 2.0)) < 1e-15);
  CHECK(std::abs(continuum_nu(kIV, 2.0 * u) - complex(-0.5, -2.0)) < 1e-15);
  CHECK_THROWS_AS(continuum_nu(ModelParams{1.0, 0.2, 0.1, 1.0, 1.0}, 0.0), RegionError);
  CHECK_THROWS_AS(continuum_state(kII, 0.0, 0, ContinuumKind::Phi), InvalidParameters);
}

TEST_CASE("continuum states solve the reduced equation")
{
  for (const ModelParams &p : {kII, kIIb, kIV})
  {
    const double u = unit(p);
    const DerivedQuantities d = derive(p);
    const std::vector<double> grid = uniform_grid(6.0 * p.b0, 61);
    for (double e : {-2.0, -0.5, 0.0, 0.5, 2.0, 3.7})
    {
      for (int side : {1, -1})
      {
        const double E = e * u;
        const GeneralizedFunction f = continuum_state(p, E, side, ContinuumKind::Phi);
        const complex nu = continuum_nu(p, E);
        const complex k = -double(side) * std::sqrt(2.0) * std::polar(1.0, kPi / 4) * *d.sigma;
        const complex norm = continuum_constant(p) * std::exp(log_gamma(nu + 1.0));
        const std::vector<complex> hf = apply_reduced_hamiltonian(p, f, grid);
        double scale = 0.0;
        double res = 0.0;
        double lib = 0.0;
        for (std::size_t i = 0; i < grid.size(); i++)
        {
          const complex v = evaluate(f, grid[i], p);
          const complex ref = reduced_h_oracle(p, nu, k, norm, grid[i]);
          scale = std::max(scale, u * std::abs(v));
          res = std::max(res, std::abs(ref - E * v));
          lib = std::max(lib, std::abs(hf[i] - E * v));
        }
        CHECK(res / scale <= 1e-6);
        CHECK(lib / scale <= 1e-6);
      }
    }
  }
}

TEST_CASE("eta is the pointwise conjugate of phi")
{
  const double u = unit(kII);
  for (double e : {-0.5, 2.0})
  {
    const GeneralizedFunction phi = continuum_state(kII, e * u, 1, ContinuumKind::Phi);
    const GeneralizedFunction eta = continuum_state(kII, e * u, 1, ContinuumKind::Eta);
    const GeneralizedFunction mirror = continuum_state(kII, -e * u, 1, ContinuumKind::Phi);
    for (double x : {-3.0, -0.4, 0.0, 1.7})
    {
      CHECK(evaluate(eta, x, kII) == std::conj(evaluate(phi, x, kII)));
    }
    // same index as phi^{-E}, conjugate argument scale: they agree only at the origin
    CHECK(std::abs(evaluate(eta, 0.0, kII) - evaluate(mirror, 0.0, kII)) < 1e-14);
    CHECK(std::abs(evaluate(eta, 1.7, kII) - evaluate(mirror, 1.7, kII)) > 1e-3);
  }
}

TEST_CASE("dressed continuum states solve the full eigenvalue equations")
{
  const double u = unit(kIIb);
  const std::vector<double> grid = uniform_grid(4.0 * kIIb.b0, 41);
  for (double e : {-1.0, 0.5})
  {
    const double E = e * u;
    const GeneralizedFunction t = continuum_state(kIIb, E, 1, ContinuumKind::PhiTilde);
    const GeneralizedFunction b = continuum_state(kIIb, E, -1, ContinuumKind::PsiBar);
    const std::vector<complex> ht = apply_hamiltonian(kIIb, t, grid);
    const std::vector<complex> hb = apply_adjoint_hamiltonian(kIIb, b, grid);
    double st = 0.0, sb = 0.0, rt = 0.0, rb = 0.0;
    for (std::size_t i = 0; i < grid.size(); i++)
    {
      const complex vt = evaluate(t, grid[i], kIIb);
      const complex vb = evaluate(b, grid[i], kIIb);
      st = std::max(st, u * std::abs(vt));
      sb = std::max(sb, u * std::abs(vb));
      rt = std::max(rt, std::abs(ht[i] - E * vt));
      // the dual carries the conjugate energy, which is E itself on the real line
      rb = std::max(rb, std::abs(hb[i] - E * vb));
    }
    CHECK(rt / st <= 1e-6);
    CHECK(rb / sb <= 1e-6);
  }
}

TEST_CASE("pole scan finds the Gamma poles")
{
  const auto start = std::chrono::steady_clock::now();
  const PoleScanReport r = pole_scan(kII, 3, 200);
  REQUIRE(r.detected_poles.size() == 4);
  for (int n = 0; n < 4; n++)
  {
    CHECK(std::abs(r.detected_poles[n] - (n + 0.5)) <= 0.005);
  }
  CHECK(r.energies_imag.size() == 800);
  CHECK(r.energies_imag.front() > 0.0);
  CHECK(r.energies_imag.back() <= 4.0);

  // Region IV: the same pattern on the negative half-line
  const PoleScanReport iv = pole_scan(kIV, 3, 200);
  REQUIRE(iv.detected_poles.size() == 4);
  for (int n = 0; n < 4; n++)
  {
    CHECK(std::abs(iv.detected_poles[n] + (n + 0.5)) <= 0.005);
    CHECK(iv.log_gamma_magnitude[n] == r.log_gamma_magnitude[n]);
  }

  // b0 and hbar rescalings leave the scan untouched
  const PoleScanReport scaled = pole_scan(ModelParams{1.0, -2.0, -0.5, 3.5, 0.4}, 3, 200);
  CHECK(scaled.detected_poles == r.detected_poles);

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(seconds < 10.0);
}

TEST_CASE("pole dominance over two decades")
{
  // resolution 1e-3 puts a sample within 5e-4 of the pole
  const PoleScanReport r = pole_scan(kII, 0, 1000);
  const auto at = [&](double s) {
    std::size_t best = 0;
    for (std::size_t i = 0; i < r.energies_imag.size(); i++)
    {
      if (std::abs(r.energies_imag[i] - s) < std::abs(r.energies_imag[best] - s))
      {
        best = i;
      }
    }
    return r.log_gamma_magnitude[best];
  };
  const double ln100 = std::log(100.0);
  CHECK(at(0.5) - at(0.25) >= ln100);
  CHECK(at(0.5) - at(0.75) >= ln100);
}

TEST_CASE("delta normalization probe")
{
  const double u = unit(kII);
  const complex p2 = delta_normalization_probe(kII, 0.0, 0.2 * u);
  const complex p1 = delta_normalization_probe(kII, 0.0, 0.1 * u);
  MESSAGE("probe w=0.2: " << p2.real() << ", w=0.1: " << p1.real());
  CHECK(std::abs(p2 - 1.0) <= 0.05);
  CHECK(std::abs(p1 - 1.0) < std::abs(p2 - 1.0));
  // off support: window centres five widths apart
  CHECK(std::abs(delta_normalization_probe(kII, 0.0, 0.2 * u, 1.0 * u)) <= 0.05);
  // the same numbers for another parameter point and in Region IV
  CHECK(std::abs(delta_normalization_probe(kIIb, 0.0, 0.2 * unit(kIIb)) - p2) < 1e-12);
  CHECK(std::abs(delta_normalization_probe(kIV, 0.0, 0.2 * unit(kIV)) - p2) < 1e-12);
  CHECK_THROWS_AS(delta_normalization_probe(kII, 0.0, 5.0 * u), NonConvergent);
  CHECK_THROWS_AS(delta_normalization_probe(ModelParams{1.0, 0.2, 0.1, 1.0, 1.0}, 0.0, 0.2), RegionError);
}

TEST_CASE("calibration reproduces the frozen constant")
{
  CHECK(std::abs(calibrate_continuum_constant() - kContinuumConstantScaled) < 1e-12);
  // scaling with sigma, b0 and hbar|Omega|
  const DerivedQuantities d = derive(kIIb);
  CHECK(std::abs(continuum_constant(kIIb) -
                 kContinuumConstantScaled * std::sqrt(*d.sigma / (kIIb.b0 * kIIb.hbar * d.abs_omega()))) <
        1e-15);
}

TEST_CASE("resonant expansion of minus-sector finite sums")
{
  const std::vector<double> grid = uniform_grid(4.0, 81);
  const auto st = discrete_states(kII, 6);
  const auto minus = [&](int n) {
    for (const EigenstateSpec &s : st)
    {
      if (s.branch == Branch::Minus && s.n == n)
      {
        return s.right_fn;
      }
    }
    throw std::logic_error("missing state");
  };
  const ResonantExpansion e2 = resonant_expansion(kII, minus(2), 6, Branch::Minus, grid);
  REQUIRE(e2.coefficients.size() == 7);
  for (int n = 0; n <= 6; n++)
  {
    CHECK(std::abs(e2.coefficients[n] - (n == 2 ? 1.0 : 0.0)) <= 1e-8);
  }
  CHECK(e2.sup_error <= 1e-8);

  const GeneralizedFunction sum = minus(0) + complex(2.0) * minus(3);
  const ResonantExpansion es = resonant_expansion(kII, sum, 6, Branch::Minus, grid);
  for (int n = 0; n <= 6; n++)
  {
    const double want = n == 0 ? 1.0 : (n == 3 ? 2.0 : 0.0);
    CHECK(std::abs(es.coefficients[n] - want) <= 1e-6);
  }
  CHECK(es.sup_error <= 1e-6);

  // the plus-sector duals grow against a minus-sector target
  CHECK_THROWS_AS(resonant_expansion(kII, minus(2), 6, Branch::Plus, grid), NonConvergent);
  CHECK_THROWS_AS(resonant_expansion(kII, minus(2), 6, Branch::None, grid), InvalidParameters);
}

TEST_CASE("eta/phi exchange between the sectors")
{
  const std::vector<double> grid = uniform_grid(3.0, 31);
  for (const ModelParams &p : {kII, kIV})
  {
    const auto st = discrete_states(p, 4);
    GeneralizedFunction target;
    for (const EigenstateSpec &s : st)
    {
      if (s.branch == Branch::Minus)
      {
        target = target + complex(0.3 * s.n + 1.0, -0.2 * s.n) * s.right_fn;
      }
    }
    const ResonantExpansion m = resonant_expansion(p, target, 4, Branch::Minus, grid);
    const ResonantExpansion q = resonant_expansion(p, conjugate(target), 4, Branch::Plus, grid);
    for (std::size_t n = 0; n < m.coefficients.size(); n++)
    {
      CHECK(std::abs(q.coefficients[n] - std::conj(m.coefficients[n])) < 1e-12);
    }
    CHECK(std::abs(q.sup_error - m.sup_error) < 1e-12);
  }
}

TEST_CASE("truncated spectral resolution reproduces H")
{
  const std::vector<double> grid = uniform_grid(3.0, 31);
  for (const ModelParams &p : {kII, kIIb, kIV})
  {
    const auto st = discrete_states(p, 5);
    for (Branch sector : {Branch::Minus, Branch::Plus})
    {
      GeneralizedFunction target;
      for (const EigenstateSpec &s : st)
      {
        if (s.branch == sector && s.n % 2 == 1)
        {
          target = target + complex(1.0, 0.5 * s.n) * s.right_fn;
        }
      }
      const std::vector<complex> lhs = spectral_apply(p, target, 5, sector, grid);
      const std::vector<complex> rhs = apply_hamiltonian(p, target, grid);
      double err = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < grid.size(); i++)
      {
        err = std::max(err, std::abs(lhs[i] - rhs[i]));
        scale = std::max(scale, std::abs(rhs[i]));
      }
      CHECK(err <= 1e-6 * scale);
    }
  }
}
