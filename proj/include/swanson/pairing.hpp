// SPDX-License-Identifier: Apache-2.0

#ifndef SWANSON_PAIRING_HPP
#define SWANSON_PAIRING_HPP

#include <string_view>
#include <vector>
#include "swanson/core.hpp"
#include "swanson/generalized_function.hpp"

namespace swanson
{

struct PairingStrategy
{
  enum class Kind
  {
    Auto,
    DirectGaussHermite,
    RotatedContour,
    DistributionalExact
  };
  Kind kind = Kind::Auto;
  double theta = 0.0;  // RotatedContour: x = e^{i theta} s
  int order = 0;       // quadrature order; 0 picks a default

  static PairingStrategy direct(int order = 0) { return {Kind::DirectGaussHermite, 0.0, order}; }
  static PairingStrategy rotated(double theta, int order = 0)
  {
    return {Kind::RotatedContour, theta, order};
  }
  static PairingStrategy distributional() { return {Kind::DistributionalExact, 0.0, 0}; }
};

// Integral of conj(left(x)) right(x) dx. Pairings with a DeltaDeriv are taken in the
// scaled variable y = x/b0.
// Auto: exact derivative formula for DeltaDeriv; otherwise Gauss-Hermite, rotated by
// theta = -arg(a)/2 when the combined Gaussian exp(-a y^2) oscillates (pi/4 turns for the
// Region II/IV products). Throws NonConvergent when Re a < 0 or both sides are distributions.
complex pair(const GeneralizedFunction &left, const GeneralizedFunction &right,
             const ModelParams &params, PairingStrategy strategy = {});

// <a|b>_U = pair(Upsilon^2 a, b).
complex metric_pair(const GeneralizedFunction &a, const GeneralizedFunction &b,
                    const ModelParams &params, PairingStrategy strategy = {});

enum class GramKind
{
  RightLeft,
  Metric
};

struct GramReport
{
  int n_max = 0;
  int blocks = 1;  // 2 when the basis has two branches
  // Row-major, size (blocks (n_max+1))^2. Entry (i, j) pairs left/metric state i with right state j.
  // Cross-branch entries have no convergent pairing and are stored as 0.
  std::vector<complex> matrix;
  double max_offdiag = 0.0;
  double max_diag_err = 0.0;

  int dim() const { return blocks * (n_max + 1); }
  complex at(int i, int j) const { return matrix[static_cast<std::size_t>(i * dim() + j)]; }
};

GramReport gram(const ModelParams &params, int n_max, GramKind which = GramKind::RightLeft);

struct Reconstruction
{
  std::vector<complex> coefficients;
  double sup_error = 0.0;
};

// c_n = pair(left_n, target), error max |sum c_n right_n - target| over the grid.
// Regions I and III. Each target term exp(g y^2/2) R(y) needs Re g < c_Upsilon, else NonConvergent.
Reconstruction reconstruct(const ModelParams &params, const GeneralizedFunction &target, int n_max,
                           const std::vector<double> &grid);

// e^{-(x - shift)^2 / (width b0)^2} as a GaussProfile atom.
GeneralizedFunction gaussian_target(double shift, double width, const ModelParams &params);

}  // namespace swanson

#endif  // SWANSON_PAIRING_HPP
