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

#ifndef DCESTEER_DCE_MODEL_H_
#define DCESTEER_DCE_MODEL_H_

#include <numbers>

#include "dcesteer/covariance.h"

namespace dcesteer {

// CODATA 2018.
inline constexpr double kHbar = 1.054571817e-34;      // J s
inline constexpr double kBoltzmann = 1.380649e-23;    // J/K

/// Above this small parameter the perturbative model is flagged.
inline constexpr double kPerturbativeWarningThreshold = 0.1;

/// Physical description of a SQUID-terminated waveguide driven at w_d.
///
/// All quantities are SI: m/s, rad/s, m, kelvin. The output modes sit at
/// w_d/2 +- detuning.
struct DceParams {
  double speed = 1.2e8;
  double drive_angular_freq = 2.0 * std::numbers::pi * 1e10;
  double effective_length = 5e-4;
  double amplitude = 0.15;
  double detuning = 0.0;
  double temperature = 0.05;

  double omega_plus() const { return 0.5 * drive_angular_freq + detuning; }
  double omega_minus() const { return 0.5 * drive_angular_freq - detuning; }

  /// Throws InvalidArgument naming the first violated field.
  void validate() const;
};

/// The parameter point used throughout the figures: v = 1.2e8 m/s,
/// w_d = 2 pi 10 GHz, L_eff(0) = 0.5 mm, eps = 0.15, T = 50 mK.
DceParams standard_params();

struct ThermalOccupations {
  double n_minus = 0.0;
  double n_plus = 0.0;

  double mean() const { return 0.5 * (n_minus + n_plus); }
};

/// f = eps L_eff(0) sqrt(w+ w-) / v. Throws NonPerturbative when f >= 1.
double small_parameter(const DceParams& p);

/// Bose-Einstein occupation 1 / (exp(hbar w / kB T) - 1); exactly 0 at T = 0.
double thermal_occupation(double angular_freq, double temperature);

/// Inverse of thermal_occupation in temperature. Returns 0 for n = 0.
double temperature_for_occupation(double angular_freq, double occupation);

ThermalOccupations occupations(const DceParams& p);

/// Thermal input state, HalfVacuum convention.
CovarianceMatrix input_cm(const ThermalOccupations& occ);

/// Linear map on (q-, p-, q+, p+):
///   q(+-) = -(q0(+-) + f p0(-+)),  p(+-) = -(p0(+-) + f q0(-+)).
Matrix4 scattering_matrix(double f);

/// Closed form of scattering_matrix(f) * input_cm(occ) * S^T, HalfVacuum.
/// The result is unphysical at O(f^2) when occupations are below ~f^2 / 2.
CovarianceMatrix output_cm(double f, const ThermalOccupations& occ);

/// Two-mode squeezed thermal reference state with squeezing r, HalfVacuum.
/// Not the DCE output state; used to exercise exact-formula code paths on a
/// family that is physical by construction.
CovarianceMatrix exact_tms_cm(double squeezing, const ThermalOccupations& occ);

}  // namespace dcesteer

#endif  // DCESTEER_DCE_MODEL_H_
