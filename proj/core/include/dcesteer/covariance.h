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

#ifndef DCESTEER_COVARIANCE_H_
#define DCESTEER_COVARIANCE_H_

#include <Eigen/Dense>

namespace dcesteer {

/// Vacuum normalisation of quadrature variances.
///
/// HalfVacuum: the vacuum covariance matrix is diag(1/2, 1/2, 1/2, 1/2).
/// UnitVacuum: the vacuum covariance matrix is the identity.
enum class Convention { HalfVacuum, UnitVacuum };

/// Symplectic eigenvalue of the vacuum in the given convention.
constexpr double vacuum_eigenvalue(Convention c) {
  return c == Convention::HalfVacuum ? 0.5 : 1.0;
}

using Matrix2 = Eigen::Matrix2d;
using Matrix4 = Eigen::Matrix4d;

/// Covariance matrix of a zero-mean two-mode Gaussian state, quadrature
/// ordering (q1, p1, q2, p2). Mode 1 is party A, mode 2 is party B.
///
/// Construction checks symmetry (relative 1e-12) and strictly positive
/// diagonal; the stored matrix is exactly symmetrised.
class CovarianceMatrix {
 public:
  CovarianceMatrix(const Matrix4& entries, Convention convention);

  static CovarianceMatrix vacuum(Convention convention);

  const Matrix4& entries() const { return entries_; }
  Convention convention() const { return convention_; }
  double vacuum_eigenvalue() const { return dcesteer::vacuum_eigenvalue(convention_); }

  Matrix2 block_a() const { return entries_.topLeftCorner<2, 2>(); }
  Matrix2 block_b() const { return entries_.bottomRightCorner<2, 2>(); }
  Matrix2 block_c() const { return entries_.topRightCorner<2, 2>(); }

  /// Exchanges the two modes.
  CovarianceMatrix swapped() const;

  double operator()(int row, int col) const { return entries_(row, col); }

 private:
  Matrix4 entries_;
  Convention convention_;
};

/// Local symplectic invariants: determinants of the A, B, C blocks and of
/// the whole matrix.
struct SymplecticInvariants {
  double i1 = 0.0;
  double i2 = 0.0;
  double i3 = 0.0;
  double i4 = 0.0;
};

struct SymplecticSpectrum {
  double nu_minus = 0.0;
  double nu_plus = 0.0;
  /// Smallest symplectic eigenvalue of the partially transposed matrix.
  double nu_tilde_minus = 0.0;
};

/// Radicands in [-kRadicandClamp, 0) are treated as zero, as are positive
/// radicands below the rounding noise of their own evaluation.
inline constexpr double kRadicandClamp = 1e-9;

/// Multiplies entries by 2 (Half -> Unit) or 1/2 (Unit -> Half). Identity when
/// the target matches.
CovarianceMatrix rescale_convention(const CovarianceMatrix& cm, Convention target);

double det2(const Matrix2& m);

/// Determinant of a 4x4 matrix via the Schur complement of its top-left
/// block. Block-diagonal input yields det2(A) * det2(B) exactly.
double det4(const Matrix4& m);

SymplecticInvariants invariants(const CovarianceMatrix& cm);

/// Symplectic eigenvalues from the invariants, in the matrix's own convention.
/// Throws ComplexSpectrum if a radicand is below -kRadicandClamp.
SymplecticSpectrum symplectic_spectrum(const CovarianceMatrix& cm);

struct PhysicalityCheck {
  bool physical = true;
  /// vacuum_eigenvalue - nu_minus, floored at 0. Reported even when within
  /// tolerance.
  double deficit = 0.0;
};

/// Uncertainty-relation test: physical iff nu_minus >= vacuum - tolerance,
/// all in the matrix's own convention. A rounding allowance of order
/// 1e-15 * (matrix scale) is added so that pure states pass at tolerance 0.
PhysicalityCheck check_physicality(const CovarianceMatrix& cm, double tolerance);

/// max{0, -ln nu_tilde_minus} with nu_tilde_minus in UnitVacuum convention.
double log_negativity(const CovarianceMatrix& cm);

}  // namespace dcesteer

#endif  // DCESTEER_COVARIANCE_H_
