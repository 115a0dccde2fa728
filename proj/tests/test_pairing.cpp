// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>
#include "doctest.h"
#include "oracles.hpp"
#include "swanson/eigensystems.hpp"
#include "swanson/errors.hpp"
#include "swanson/pairing.hpp"

using namespace swanson;

namespace
{

constexpr double kPi = std::numbers::pi;

const ModelParams kRegionI[] = {{1.0, 0.2, 0.1, 1.0, 1.0}, {1.3, -0.4, 0.3, 0.8, 1.7}, {2.0, 0.5, 0.9, 1.5, 0.7}};
const ModelParams kRegionIII[] = {{1.0, 1.5, 0.1, 1.0, 1.0}, {1.0, 3.0, 0.05, 1.4, 0.6}};
const ModelParams kRegionII[] = {{1.0, -2.0, -0.5, 1.0, 1.0}, {1.0, -1.0, -0.7, 1.2, 2.0}};
const ModelParams kRegionIV[] = {{1.0, 2.0, 0.5, 1.0, 1.0}, {1.0, 4.0, 0.3, 0.7, 1.0}};

// Pointwise quadrature of conj(a) b on [-L, L].
complex pointwise_pair(const GeneralizedFunction &a, const GeneralizedFunction &b, const ModelParams &p,
                       double L)
{
  return oracle::integrate(
      [&](double x) { return std::conj(evaluate(a, x, p)) * evaluate(b, x, p); }, -L, L, 400);
}

double identity_error(const GramReport &g)
{
  return std::max(g.max_offdiag, g.max_diag_err);
}

}  // namespace

TEST_CASE("biorthogonality in Regions I and III")
{
  for (const ModelParams &p : kRegionI)
  {
    const GramReport g = gram(p, 10);
    CHECK(g.blocks == 1);
    CHECK(g.dim() == 11);
    CHECK(identity_error(g) <= 1e-10);
  }
  for (const ModelParams &p : kRegionIII)
  {
    CHECK(identity_error(gram(p, 10)) <= 1e-10);
  }
}

TEST_CASE("Region I pairings against pointwise quadrature")
{
  const ModelParams p = kRegionI[1];
  const auto st = discrete_states(p, 6);
  for (int m : {0, 1, 4, 6})
  {
    for (int n : {0, 2, 4, 5})
    {
      const complex ref = pointwise_pair(st[m].left_fn, st[n].right_fn, p, 12.0);
      CHECK(std::abs(pair(st[m].left_fn, st[n].right_fn, p) - ref) < 1e-12);
    }
  }
}

TEST_CASE("Region II and IV biorthogonality on the rotated contour")
{
  for (const ModelParams &p : kRegionII)
  {
    const GramReport g = gram(p, 8);
    CHECK(g.blocks == 2);
    CHECK(identity_error(g) <= 1e-6);
    MESSAGE("Region II gram deviation " << identity_error(g));
  }
  for (const ModelParams &p : kRegionIV)
  {
    CHECK(identity_error(gram(p, 8)) <= 1e-6);
  }
  const auto st = discrete_states(kRegionII[0], 2);
  // plus-branch dual against a minus-branch state: polynomial with no decay
  CHECK_THROWS_AS(pair(st[0].left_fn, st[3].right_fn, kRegionII[0]), NonConvergent);
  // the real axis itself is not admissible for the oscillatory product
  CHECK_THROWS_AS(pair(st[0].left_fn, st[0].right_fn, kRegionII[0], PairingStrategy::direct()),
                  NonConvergent);
  CHECK(std::abs(pair(st[1].left_fn, st[1].right_fn, kRegionII[0], PairingStrategy::rotated(-kPi / 4)) -
                 1.0) < 1e-12);
}

TEST_CASE("Boundary I-III distributional biorthogonality is exact")
{
  const ModelParams p{1.0, 0.75, 0.25, 1.0, 1.0};
  const GramReport g = gram(p, 10);
  CHECK(g.blocks == 2);
  CHECK(identity_error(g) <= 1e-12);
  const auto st = discrete_states(p, 1);
  CHECK_THROWS_AS(pair(st[0].left_fn, st[2].right_fn, p), NonConvergent);
}

TEST_CASE("delta derivative against Gaussian test functions")
{
  const ModelParams p{};
  for (double a : {0.0, 0.5, -1.0})
  {
    const GeneralizedFunction t = gaussian_target(a, 1.0, p);
    // <delta', f> = -f'(0) = -2a e^{-a^2}
    CHECK(std::abs(pair(DeltaDeriv{0.0, 1, 1.0}, t, p) + 2.0 * a * std::exp(-a * a)) < 1e-14);
    // <delta'', f> = f''(0) = (4a^2 - 2) e^{-a^2}
    CHECK(std::abs(pair(DeltaDeriv{0.0, 2, 1.0}, t, p) - (4 * a * a - 2) * std::exp(-a * a)) < 1e-13);
    // Gaussian dressing: e^{y^2/2} f has second derivative (4a^2 - 1) e^{-a^2} at 0
    CHECK(std::abs(pair(t, DeltaDeriv{1.0, 2, 1.0}, p) - (4 * a * a - 1) * std::exp(-a * a)) < 1e-13);
  }
  CHECK_THROWS_AS(pair(DeltaDeriv{0.0, 1, 1.0}, DeltaDeriv{0.0, 1, 1.0}, p), NonConvergent);
  CHECK_THROWS_AS(pair(DeltaDeriv{0.0, 1, 1.0}, gaussian_target(0, 1, p), p, PairingStrategy::direct()),
                  NonConvergent);
}

TEST_CASE("strategy equivalence where both are admissible")
{
  const ModelParams p = kRegionI[0];
  const auto st = discrete_states(p, 6);
  for (int m = 0; m <= 6; m += 2)
  {
    for (int n = 0; n <= 6; n += 3)
    {
      const complex d = pair(st[m].left_fn, st[n].right_fn, p, PairingStrategy::direct());
      for (double theta : {0.2, -0.35})
      {
        const complex r = pair(st[m].left_fn, st[n].right_fn, p, PairingStrategy::rotated(theta));
        CHECK(std::abs(d - r) < 1e-8);
      }
    }
  }
  // a chirped Gaussian product is admissible both on the real line and rotated
  const GeneralizedFunction a = GaussHermite{{-1.0, 0.4}, 1.0, 4, 1.0};
  const GeneralizedFunction b = GaussHermite{{-0.5, -0.1}, {0.8, 0.2}, 2, 1.0};
  const complex direct = pair(a, b, p, PairingStrategy::direct(300));
  const complex auto_ = pair(a, b, p);
  CHECK(std::abs(direct - auto_) < 1e-8 * std::abs(auto_));
  CHECK(std::abs(pointwise_pair(a, b, p, 14.0) - auto_) < 1e-10 * std::abs(auto_));
}

TEST_CASE("doubling the quadrature order does not move the pairings")
{
  for (const ModelParams &p : {kRegionI[2], kRegionIII[0], kRegionII[1]})
  {
    const auto st = discrete_states(p, 8);
    for (int m : {0, 3, 8})
    {
      for (int n : {1, 3, 8})
      {
        const complex base = pair(st[m].left_fn, st[n].right_fn, p);
        const complex twice = pair(st[m].left_fn, st[n].right_fn, p, {PairingStrategy::Kind::Auto, 0.0, 2 * (4 * 8 + 40)});
        CHECK(std::abs(base - twice) < 1e-10);
      }
    }
  }
}

TEST_CASE("pairing is linear in the right argument")
{
  const ModelParams p = kRegionI[1];
  const auto st = discrete_states(p, 4);
  const complex s(0.3, -1.2);
  const complex t(2.0, 0.5);
  const GeneralizedFunction mix = s * st[1].right_fn + t * gaussian_target(0.3, 1.0, p);
  const complex lhs = pair(st[1].left_fn, mix, p);
  const complex rhs = s * pair(st[1].left_fn, st[1].right_fn, p) +
                      t * pair(st[1].left_fn, gaussian_target(0.3, 1.0, p), p);
  CHECK(std::abs(lhs - rhs) < 1e-15 * std::abs(rhs) + 1e-16);
}

TEST_CASE("metric inner product")
{
  const ModelParams p = kRegionI[0];
  const auto st = discrete_states(p, 4);
  CHECK(std::abs(metric_pair(st[0].right_fn, st[0].right_fn, p) - 1.0) < 1e-14);
  CHECK(std::abs(metric_pair(st[0].right_fn, st[2].right_fn, p)) < 1e-10);
  for (const ModelParams &q : {kRegionI[0], kRegionIII[1]})
  {
    const GramReport g = gram(q, 10, GramKind::Metric);
    CHECK(identity_error(g) <= 1e-10);
  }
  CHECK_THROWS_AS(gram(kRegionII[0], 3, GramKind::Metric), RegionError);
  // alpha = beta: U = 1 and the metric is the ordinary inner product
  const ModelParams h{1.0, 0.3, 0.3, 1.0, 1.0};
  const GeneralizedFunction a = gaussian_target(0.4, 1.1, h);
  const GeneralizedFunction b = GaussHermite{-1.0, 1.0, 2, 1.0};
  CHECK(std::abs(metric_pair(a, b, h) - pointwise_pair(a, b, h, 12.0)) < 1e-12);
}

TEST_CASE("reconstruction of a basis element")
{
  const ModelParams p = kRegionI[0];
  const auto st = discrete_states(p, 8);
  const Reconstruction r = reconstruct(p, st[3].right_fn, 8, uniform_grid(6.0, 201));
  for (int n = 0; n <= 8; n++)
  {
    CHECK(std::abs(r.coefficients[n] - (n == 3 ? 1.0 : 0.0)) < 1e-12);
  }
  CHECK(r.sup_error <= 1e-10);
}

TEST_CASE("reconstruction of Gaussians")
{
  const ModelParams p = kRegionI[0];
  const std::vector<double> grid = uniform_grid(6.0, 201);
  const Reconstruction r = reconstruct(p, gaussian_target(0.0, 1.0, p), 40, grid);
  MESSAGE("centered sup error " << r.sup_error);
  CHECK(r.sup_error <= 1e-6);
  const Reconstruction d = reconstruct(p, gaussian_target(0.7, 1.0, p), 40, grid);
  MESSAGE("displaced sup error " << d.sup_error);
  CHECK(d.sup_error <= 1e-6);
  // Region III duals grow; the target must decay faster than Upsilon^{-1} (width < 0.93 here).
  const Reconstruction iii = reconstruct(kRegionIII[0], gaussian_target(-0.5, 0.7, kRegionIII[0]), 40, grid);
  MESSAGE("Region III sup error " << iii.sup_error);
  CHECK(iii.sup_error <= 1e-6);
}

TEST_CASE("odd targets have vanishing even coefficients")
{
  const ModelParams p = kRegionI[1];
  GaussProfile odd;
  odd.gauss = -2.0;
  odd.rest = [](complex y) { return RestJet{y * y * y - y, 3.0 * y * y - 1.0, 6.0 * y, 0.0}; };
  const Reconstruction r = reconstruct(p, odd, 12, uniform_grid(5.0, 51));
  for (int n = 0; n <= 12; n += 2)
  {
    CHECK(std::abs(r.coefficients[n]) < 1e-10);
  }
  CHECK(std::abs(r.coefficients[1]) > 1e-3);
}

TEST_CASE("reconstruct rejects slowly decaying targets and other regions")
{
  const ModelParams p = kRegionI[0];
  GaussProfile flat;
  flat.gauss = 3.0;
  flat.rest = [](complex) { return RestJet{1.0, 0.0, 0.0, 0.0}; };
  CHECK_THROWS_AS(reconstruct(p, flat, 4, uniform_grid(1.0, 3)), NonConvergent);
  CHECK_THROWS_AS(reconstruct(kRegionII[0], flat, 4, uniform_grid(1.0, 3)), RegionError);
  CHECK_THROWS_AS(reconstruct(kRegionIII[0], gaussian_target(0.0, 1.0, kRegionIII[0]), 4, uniform_grid(1.0, 3)),
                  NonConvergent);
}
