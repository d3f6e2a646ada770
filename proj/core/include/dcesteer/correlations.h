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

#ifndef DCESTEER_CORRELATIONS_H_
#define DCESTEER_CORRELATIONS_H_

#include <optional>
#include <string>
#include <vector>

#include "dcesteer/covariance.h"
#include "dcesteer/dce_model.h"

namespace dcesteer {

enum class SteeringDirection { AToB, BToA };
enum class Probe { A, B };
enum class Measure { Steering, Entanglement };

/// Tolerance on nu_minus (UnitVacuum) accepted by ip_exact.
inline constexpr double kIpPhysicalityTolerance = 1e-9;

/// Gaussian steering max{0, 1/2 ln(det S / det V)}, S the steering party's
/// block, evaluated in UnitVacuum convention.
double steering_exact(const CovarianceMatrix& cm, SteeringDirection direction);

/// Leading-order steering of the DCE state: max{0, 3 f^2 - 2 n}.
double steering_perturbative(double f, double n);

/// Smallest drive amplitude for which the leading-order steering is positive
/// at the temperature in `p`:
///
///   eps0 = v sqrt(2 n / 3) / (L_eff(0) sqrt(w+ w-)),
///
/// i.e. 2v/(L_eff(0) w_d) sqrt(2n/3) at zero detuning. The amplitude field of
/// `p` is ignored. The printed form with a stray factor f is not used.
double steering_onset_amplitude(const DceParams& p);

/// Gaussian interferometric power with the given probe mode, from the local
/// symplectic invariants.
///
/// Throws UnphysicalState when nu_minus < 1 - 1e-9 (UnitVacuum) and
/// DegeneratePure when |I4 - 1| <= 1e-9 and |Y| <= 1e-12.
double ip_exact(const CovarianceMatrix& cm, Probe probe);

/// Leading-order interferometric power of the DCE state: f^2 (1 + 2n).
double ip_perturbative(double f, double n);

/// Temperature in [0, 1 K] at which the exact measure on the DCE output state
/// vanishes. The temperature field of `p` is ignored. nullopt if the measure
/// is positive on the whole bracket or zero at T = 0.
std::optional<double> critical_temperature(const DceParams& p, Measure measure,
                                           double tolerance_kelvin = 1e-6);

struct ReportFlags {
  bool exact_skipped_unphysical = false;
  bool exact_skipped_degenerate = false;
  bool perturbative_warning = false;

  /// Tokens in fixed order: ExactSkippedUnphysical, ExactSkippedDegenerate,
  /// PerturbativeWarning.
  std::vector<std::string> tokens() const;
};

struct CorrelationReport {
  double f = 0.0;
  ThermalOccupations occupations;

  double steering_a_to_b = 0.0;
  double steering_b_to_a = 0.0;
  double steering_perturbative = 0.0;
  double ip_probe_a = 0.0;
  double ip_probe_b = 0.0;
  double ip_perturbative = 0.0;
  double log_negativity = 0.0;
  double physicality_deficit = 0.0;
  /// UnitVacuum convention.
  SymplecticSpectrum spectrum;
  ReportFlags flags;
};

/// Every measure on output_cm(f, occ). Exact IP falls back to the
/// perturbative value (and flags it) when the state is unphysical or pure.
CorrelationReport evaluate_state(double f, const ThermalOccupations& occ);

CorrelationReport full_report(const DceParams& p);

}  // namespace dcesteer

#endif  // DCESTEER_CORRELATIONS_H_
