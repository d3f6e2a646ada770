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

#include "dcesteer/correlations.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "dcesteer/errors.h"

namespace dcesteer {

namespace {

constexpr double kPureTolerance = 1e-9;
constexpr double kDegenerateY = 1e-12;
constexpr double kCriticalBracketKelvin = 1.0;

void require_nonnegative(double x, const char* name) {
  if (!(std::isfinite(x) && x >= 0.0)) {
    throw InvalidArgument(std::string(name) + " must be finite and >= 0");
  }
}

}  // namespace

double steering_exact(const CovarianceMatrix& cm, SteeringDirection direction) {
  const SymplecticInvariants inv = invariants(rescale_convention(cm, Convention::UnitVacuum));
  const double det_party = direction == SteeringDirection::AToB ? inv.i1 : inv.i2;
  if (!(det_party > 0.0) || !(inv.i4 > 0.0)) {
    throw NonPositiveDeterminant("steering needs positive block and full determinants");
  }
  return std::max(0.0, 0.5 * std::log(det_party / inv.i4));
}

double steering_perturbative(double f, double n) {
  require_nonnegative(f, "f");
  require_nonnegative(n, "n");
  return std::max(0.0, 3.0 * f * f - 2.0 * n);
}

double steering_onset_amplitude(const DceParams& p) {
  DceParams q = p;
  q.amplitude = 0.0;
  const double n = occupations(q).mean();
  return p.speed * std::sqrt(2.0 * n / 3.0) /
         (p.effective_length * std::sqrt(p.omega_plus() * p.omega_minus()));
}

double ip_exact(const CovarianceMatrix& cm, Probe probe) {
  const CovarianceMatrix unit = rescale_convention(cm, Convention::UnitVacuum);
  const double nu_minus = symplectic_spectrum(unit).nu_minus;
  if (nu_minus < 1.0 - kIpPhysicalityTolerance) {
    throw UnphysicalState("interferometric power needs a physical state; nu_minus = " +
                          std::to_string(nu_minus));
  }
  SymplecticInvariants inv = invariants(unit);
  if (probe == Probe::B) std::swap(inv.i1, inv.i2);
  const auto [i1, i2, i3, i4] = inv;

  const double x = (i1 + i3) * (1.0 + i2 + i3 - i4) - i4 * i4;
  const double y = (i4 - 1.0) * (1.0 + i1 + i2 + 2.0 * i3 + i4);
  const double z = (i1 + i4) * (i1 * i2 - i4) + i3 * (2.0 * i1 + i3) * (1.0 + i2);

  if (std::abs(i4 - 1.0) <= kPureTolerance && std::abs(y) <= kDegenerateY) {
    throw DegeneratePure("interferometric power closed form is 0/0 for this pure state");
  }
  const double root = std::sqrt(std::max(0.0, x * x + y * z));
  // For x < 0 the numerator cancels; use (x + root) / 2y == z / 2(root - x).
  const double value = x < 0.0 ? z / (2.0 * (root - x)) : (x + root) / (2.0 * y);
  return std::max(0.0, value);
}

double ip_perturbative(double f, double n) {
  require_nonnegative(f, "f");
  require_nonnegative(n, "n");
  return f * f * (1.0 + 2.0 * n);
}

std::optional<double> critical_temperature(const DceParams& p, Measure measure,
                                           double tolerance_kelvin) {
  const double f = small_parameter(p);
  if (f <= 0.0) return std::nullopt;
  auto value_at = [&](double temperature) {
    DceParams q = p;
    q.temperature = temperature;
    const CovarianceMatrix cm = output_cm(f, occupations(q));
    return measure == Measure::Steering ? steering_exact(cm, SteeringDirection::AToB)
                                        : log_negativity(cm);
  };
  double lo = 0.0;
  double hi = kCriticalBracketKelvin;
  if (!(value_at(lo) > 0.0) || value_at(hi) > 0.0) return std::nullopt;
  while (hi - lo > tolerance_kelvin) {
    const double mid = 0.5 * (lo + hi);
    (value_at(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<std::string> ReportFlags::tokens() const {
  std::vector<std::string> out;
  if (exact_skipped_unphysical) out.emplace_back("ExactSkippedUnphysical");
  if (exact_skipped_degenerate) out.emplace_back("ExactSkippedDegenerate");
  if (perturbative_warning) out.emplace_back("PerturbativeWarning");
  return out;
}

CorrelationReport evaluate_state(double f, const ThermalOccupations& occ) {
  const CovarianceMatrix cm = output_cm(f, occ);
  const CovarianceMatrix unit = rescale_convention(cm, Convention::UnitVacuum);
  const double n = occ.mean();

  CorrelationReport r;
  r.f = f;
  r.occupations = occ;
  r.flags.perturbative_warning = f > kPerturbativeWarningThreshold;

  // The perturbative family misses the uncertainty bound by at most
  // f^2 (1 + 2n); anything beyond twice that is a genuine failure.
  const double tolerance = 2.0 * f * f * (1.0 + 2.0 * n);
  const PhysicalityCheck physicality = check_physicality(unit, tolerance);
  if (!physicality.physical) {
    throw UnphysicalState("output state deficit " + std::to_string(physicality.deficit) +
                          " exceeds the perturbative allowance");
  }
  r.physicality_deficit = physicality.deficit;
  r.spectrum = symplectic_spectrum(unit);

  r.steering_a_to_b = steering_exact(unit, SteeringDirection::AToB);
  r.steering_b_to_a = steering_exact(unit, SteeringDirection::BToA);
  r.steering_perturbative = steering_perturbative(f, n);
  r.ip_perturbative = ip_perturbative(f, n);
  r.log_negativity = log_negativity(unit);

  try {
    r.ip_probe_a = ip_exact(unit, Probe::A);
    r.ip_probe_b = ip_exact(unit, Probe::B);
  } catch (const UnphysicalState&) {
    r.ip_probe_a = r.ip_probe_b = r.ip_perturbative;
    r.flags.exact_skipped_unphysical = true;
  } catch (const DegeneratePure&) {
    r.ip_probe_a = r.ip_probe_b = r.ip_perturbative;
    r.flags.exact_skipped_degenerate = true;
  }
  return r;
}

CorrelationReport full_report(const DceParams& p) {
  return evaluate_state(small_parameter(p), occupations(p));
}

}  // namespace dcesteer
