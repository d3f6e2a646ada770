// Copyright 2026 The dcesteer Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dcesteer/covariance.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dcesteer/errors.h"

namespace dcesteer {

namespace {

constexpr double kSymmetryTolerance = 1e-12;

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Magnitude of the terms entering Delta; rounding errors in the invariants
// scale with it.
double invariant_scale(const SymplecticInvariants& inv) {
  return std::abs(inv.i1) + std::abs(inv.i2) + 2.0 * std::abs(inv.i3);
}

// (nu_-^2, nu_+^2), roots of x^2 - delta x + i4.
std::pair<double, double> spectrum_squares(double delta, double i4, double scale) {
  double radicand = delta * delta - 4.0 * i4;
  if (radicand < -kRadicandClamp) {
    throw ComplexSpectrum("symplectic radicand " + std::to_string(radicand) +
                          " is negative; not a covariance matrix");
  }
  // Below the rounding noise of delta^2 - 4 i4 the spectrum is degenerate; a
  // noise-sized radicand would otherwise split it by ~sqrt(eps).
  if (radicand <= 64.0 * kEps * scale * scale) radicand = 0.0;
  const double root = std::sqrt(radicand);
  return {std::max(0.0, 0.5 * (delta - root)), std::max(0.0, 0.5 * (delta + root))};
}

}  // namespace

CovarianceMatrix::CovarianceMatrix(const Matrix4& entries, Convention convention)
    : entries_(entries), convention_(convention) {
  const double scale = std::max(entries.cwiseAbs().maxCoeff(), std::numeric_limits<double>::min());
  for (int i = 0; i < 4; ++i) {
    if (!std::isfinite(entries(i, i)) || entries(i, i) <= 0.0) {
      throw InvalidArgument("covariance matrix diagonal entry " + std::to_string(i) +
                            " must be positive");
    }
    for (int j = i + 1; j < 4; ++j) {
      if (!std::isfinite(entries(i, j)) || !std::isfinite(entries(j, i)) ||
          std::abs(entries(i, j) - entries(j, i)) > kSymmetryTolerance * scale) {
        throw InvalidArgument("covariance matrix is not symmetric");
      }
    }
  }
  entries_ = 0.5 * (entries + entries.transpose());
}

CovarianceMatrix CovarianceMatrix::vacuum(Convention convention) {
  return CovarianceMatrix(dcesteer::vacuum_eigenvalue(convention) * Matrix4::Identity(), convention);
}

CovarianceMatrix CovarianceMatrix::swapped() const {
  Eigen::PermutationMatrix<4> perm;
  perm.indices() << 2, 3, 0, 1;
  return CovarianceMatrix(perm * entries_ * perm.transpose(), convention_);
}

CovarianceMatrix rescale_convention(const CovarianceMatrix& cm, Convention target) {
  if (cm.convention() == target) return cm;
  const double factor = target == Convention::UnitVacuum ? 2.0 : 0.5;
  return CovarianceMatrix(factor * cm.entries(), target);
}

double det2(const Matrix2& m) { return m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1); }

double det4(const Matrix4& m) {
  const Matrix2 a = m.topLeftCorner<2, 2>();
  const double det_a = det2(a);
  if (!(det_a > 0.0)) return m.determinant();
  const Matrix2 b = m.bottomRightCorner<2, 2>();
  const Matrix2 c = m.topRightCorner<2, 2>();
  const Matrix2 ct = m.bottomLeftCorner<2, 2>();
  if (c.isZero(0.0) && ct.isZero(0.0)) return det_a * det2(b);
  Matrix2 a_inv;
  a_inv << a(1, 1), -a(0, 1), -a(1, 0), a(0, 0);
  a_inv /= det_a;
  return det_a * det2(b - ct * a_inv * c);
}

SymplecticInvariants invariants(const CovarianceMatrix& cm) {
  return {det2(cm.block_a()), det2(cm.block_b()), det2(cm.block_c()), det4(cm.entries())};
}

SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cm) {
  const SymplecticInvariants inv = invariants(cm);
  const double scale = invariant_scale(inv);
  const auto [minus_sq, plus_sq] = spectrum_squares(inv.i1 + inv.i2 + 2.0 * inv.i3, inv.i4, scale);
  const double pt_minus_sq = spectrum_squares(inv.i1 + inv.i2 - 2.0 * inv.i3, inv.i4, scale).first;
  return {std::sqrt(minus_sq), std::sqrt(plus_sq), std::sqrt(pt_minus_sq)};
}

PhysicalityCheck check_physicality(const CovarianceMatrix& cm, double tolerance) {
  if (!(tolerance >= 0.0)) throw InvalidArgument("physicality tolerance must be >= 0");
  const double nu_minus = symplectic_spectrum(cm).nu_minus;
  const double vacuum = cm.vacuum_eigenvalue();
  // Pure states sit exactly on the bound; allow the rounding error of nu^2,
  // ~16 eps * scale, propagated to nu.
  const double rounding = 16.0 * kEps * invariant_scale(invariants(cm)) / (2.0 * vacuum);
  return {nu_minus >= vacuum - tolerance - rounding, std::max(0.0, vacuum - nu_minus)};
}

double log_negativity(const CovarianceMatrix& cm) {
  const double nu = symplectic_spectrum(rescale_convention(cm, Convention::UnitVacuum)).nu_tilde_minus;
  if (nu >= 1.0) return 0.0;
  return -std::log(nu);
}

}  // namespace dcesteer
