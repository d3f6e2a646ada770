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

#include "dcesteer/dce_model.h"

#include <cmath>
#include <string>

#include "dcesteer/errors.h"

namespace dcesteer {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

void check_small_parameter(double f) {
  require(std::isfinite(f) && f >= 0.0, "small parameter f must be finite and >= 0");
  if (f >= 1.0) {
    throw NonPerturbative("small parameter f = " + std::to_string(f) +
                          " >= 1 is outside the perturbative model");
  }
}

}  // namespace

void DceParams::validate() const {
  require(std::isfinite(speed) && speed > 0.0, "speed must be > 0");
  require(std::isfinite(drive_angular_freq) && drive_angular_freq > 0.0,
          "drive angular frequency must be > 0");
  require(std::isfinite(effective_length) && effective_length > 0.0,
          "effective length must be > 0");
  require(std::isfinite(amplitude) && amplitude >= 0.0 && amplitude < 1.0,
          "amplitude epsilon must lie in [0, 1)");
  require(std::isfinite(detuning) && std::abs(detuning) < 0.5 * drive_angular_freq,
          "|detuning| must be below half the drive frequency");
  require(std::isfinite(temperature) && temperature >= 0.0, "temperature must be >= 0");
}

DceParams standard_params() { return DceParams{}; }

double small_parameter(const DceParams& p) {
  p.validate();
  const double f =
      p.amplitude * p.effective_length * std::sqrt(p.omega_plus() * p.omega_minus()) / p.speed;
  check_small_parameter(f);
  return f;
}

double thermal_occupation(double angular_freq, double temperature) {
  require(angular_freq > 0.0, "angular frequency must be > 0");
  require(temperature >= 0.0, "temperature must be >= 0");
  if (temperature == 0.0) return 0.0;
  return 1.0 / std::expm1(kHbar * angular_freq / (kBoltzmann * temperature));
}

double temperature_for_occupation(double angular_freq, double occupation) {
  require(angular_freq > 0.0, "angular frequency must be > 0");
  require(occupation >= 0.0, "occupation must be >= 0");
  if (occupation == 0.0) return 0.0;
  return kHbar * angular_freq / (kBoltzmann * std::log1p(1.0 / occupation));
}

ThermalOccupations occupations(const DceParams& p) {
  p.validate();
  return {thermal_occupation(p.omega_minus(), p.temperature),
          thermal_occupation(p.omega_plus(), p.temperature)};
}

CovarianceMatrix input_cm(const ThermalOccupations& occ) {
  require(std::isfinite(occ.n_minus) && std::isfinite(occ.n_plus) && occ.n_minus >= 0.0 &&
              occ.n_plus >= 0.0,
          "thermal occupations must be finite and >= 0");
  Matrix4 v = Matrix4::Zero();
  v(0, 0) = v(1, 1) = 0.5 * (1.0 + 2.0 * occ.n_minus);
  v(2, 2) = v(3, 3) = 0.5 * (1.0 + 2.0 * occ.n_plus);
  return CovarianceMatrix(v, Convention::HalfVacuum);
}

Matrix4 scattering_matrix(double f) {
  check_small_parameter(f);
  Matrix4 s;
  // clang-format off
  s << -1.0,  0.0,  0.0,   -f,
        0.0, -1.0,   -f,  0.0,
        0.0,   -f, -1.0,  0.0,
         -f,  0.0,  0.0, -1.0;
  // clang-format on
  return s;
}

CovarianceMatrix output_cm(double f, const ThermalOccupations& occ) {
  check_small_parameter(f);
  require(std::isfinite(occ.n_minus) && std::isfinite(occ.n_plus) && occ.n_minus >= 0.0 &&
              occ.n_plus >= 0.0,
          "thermal occupations must be finite and >= 0");
  const double thermal_minus = 1.0 + 2.0 * occ.n_minus;
  const double thermal_plus = 1.0 + 2.0 * occ.n_plus;
  const double a = thermal_minus + f * f * thermal_plus;
  const double b = thermal_plus + f * f * thermal_minus;
  const double c = 2.0 * f * (1.0 + occ.n_plus + occ.n_minus);
  Matrix4 v;
  // clang-format off
  v <<   a, 0.0, 0.0,   c,
       0.0,   a,   c, 0.0,
       0.0,   c,   b, 0.0,
         c, 0.0, 0.0,   b;
  // clang-format on
  return CovarianceMatrix(0.5 * v, Convention::HalfVacuum);
}

CovarianceMatrix exact_tms_cm(double squeezing, const ThermalOccupations& occ) {
  require(std::isfinite(squeezing) && squeezing >= 0.0, "squeezing must be >= 0");
  require(std::isfinite(occ.n_minus) && std::isfinite(occ.n_plus) && occ.n_minus >= 0.0 &&
              occ.n_plus >= 0.0,
          "thermal occupations must be finite and >= 0");
  // Two-mode squeezer applied to the thermal input. With n- == n+ the diagonal
  // reduces to (1 + 2n) cosh 2r.
  const double thermal_minus = 1.0 + 2.0 * occ.n_minus;
  const double thermal_plus = 1.0 + 2.0 * occ.n_plus;
  const double ch2 = std::cosh(squeezing) * std::cosh(squeezing);
  const double sh2 = std::sinh(squeezing) * std::sinh(squeezing);
  const double a = thermal_minus * ch2 + thermal_plus * sh2;
  const double b = thermal_plus * ch2 + thermal_minus * sh2;
  const double c = (1.0 + occ.n_plus + occ.n_minus) * std::sinh(2.0 * squeezing);
  Matrix4 v;
  // clang-format off
  v <<   a, 0.0, 0.0,   c,
       0.0,   a,   c, 0.0,
       0.0,   c,   b, 0.0,
         c, 0.0, 0.0,   b;
  // clang-format on
  return CovarianceMatrix(0.5 * v, Convention::HalfVacuum);
}

}  // namespace dcesteer
