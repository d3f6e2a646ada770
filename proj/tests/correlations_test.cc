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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "dcesteer/errors.h"
#include "oracles.h"

using namespace dcesteer;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kStandardF = 0.019634954084936207;

CovarianceMatrix dce(double f, double n) { return output_cm(f, {n, n}); }

DceParams at(double eps, double temperature) {
  DceParams p = standard_params();
  p.amplitude = eps;
  p.temperature = temperature;
  return p;
}

}  // namespace

TEST(steering_exact, vacuum_is_zero) {
  const CovarianceMatrix v = CovarianceMatrix::vacuum(Convention::HalfVacuum);
  EXPECT_EQ(steering_exact(v, SteeringDirection::AToB), 0.0);
  EXPECT_EQ(steering_exact(v, SteeringDirection::BToA), 0.0);
}

TEST(steering_exact, pure_dce_closed_form) {
  // ln((1 + f^2) / (1 - f^2)^2) at f = 0.1.
  const double got = steering_exact(dce(0.1, 0.0), SteeringDirection::AToB);
  EXPECT_NEAR(got, 0.030051002560170965, 1e-14);
  EXPECT_NEAR(got, oracle::dce_steering(0.1, 0.0), 1e-14);
}

TEST(steering_exact, zero_in_figure_one_regime) {
  EXPECT_EQ(steering_exact(dce(kStandardF, 8.31e-3), SteeringDirection::AToB), 0.0);
}

TEST(steering_exact, non_positive_determinant) {
  Matrix4 m = Matrix4::Identity();
  m(0, 2) = m(2, 0) = 1.0;
  m(1, 3) = m(3, 1) = 1.0;
  EXPECT_THROW(steering_exact(CovarianceMatrix(m, Convention::UnitVacuum), SteeringDirection::AToB),
               NonPositiveDeterminant);
}

TEST(steering_exact, directions_differ_for_asymmetric_state) {
  const CovarianceMatrix v = output_cm(0.03, {0.0, 2e-4});
  const double ab = steering_exact(v, SteeringDirection::AToB);
  const double ba = steering_exact(v, SteeringDirection::BToA);
  EXPECT_GT(ab, 0.0);
  EXPECT_GT(ba, 0.0);
  EXPECT_NE(ab, ba);
  EXPECT_NEAR(ba, steering_exact(v.swapped(), SteeringDirection::AToB), 1e-15);
}

TEST(steering_perturbative, values) {
  EXPECT_NEAR(steering_perturbative(0.1, 0.0), 0.03, 1e-15);
  EXPECT_EQ(steering_perturbative(0.0, 0.01), 0.0);
  EXPECT_EQ(steering_perturbative(0.0, 0.0), 0.0);
  EXPECT_EQ(steering_perturbative(0.02, 8.31e-3), 0.0);
  EXPECT_THROW(steering_perturbative(-0.1, 0.0), InvalidArgument);
}

TEST(steering_onset_amplitude, values) {
  EXPECT_EQ(steering_onset_amplitude(at(0.15, 0.0)), 0.0);
  EXPECT_NEAR(steering_onset_amplitude(at(0.15, 0.05)), 0.56841976866422618, 1e-14);
  // The amplitude field is not an input.
  EXPECT_EQ(steering_onset_amplitude(at(0.0, 0.05)), steering_onset_amplitude(at(0.5, 0.05)));
}

TEST(steering_onset_amplitude, inverts_small_parameter) {
  for (double t : {0.005, 0.02, 0.032}) {
    DceParams p = at(0.0, t);
    p.amplitude = steering_onset_amplitude(p);
    const double n = occupations(p).mean();
    EXPECT_NEAR(small_parameter(p), std::sqrt(2.0 * n / 3.0), 1e-12);
  }
}

TEST(steering_onset_amplitude, brackets_perturbative_onset) {
  for (double t : {0.004, 0.01, 0.02, 0.03, 0.045}) {
    DceParams p = at(0.0, t);
    const double eps0 = steering_onset_amplitude(p);
    ASSERT_LT(eps0 * (1.0 + 1e-6), 1.0);
    const double n = occupations(p).mean();
    p.amplitude = eps0 * (1.0 + 1e-6);
    EXPECT_GT(steering_perturbative(small_parameter(p), n), 0.0) << t;
    p.amplitude = eps0 * (1.0 - 1e-6);
    EXPECT_EQ(steering_perturbative(small_parameter(p), n), 0.0) << t;
  }
}

TEST(steering_onset_amplitude, detuned_form) {
  DceParams p = at(0.0, 0.03);
  p.detuning = kTwoPi * 1e9;
  p.amplitude = steering_onset_amplitude(p);
  EXPECT_NEAR(small_parameter(p), std::sqrt(2.0 * occupations(p).mean() / 3.0), 1e-12);
}

TEST(ip_exact, dce_state_reference_value) {
  // Frozen from a 40-digit evaluation of the closed form.
  const double got = ip_exact(dce(0.02, 8.31e-3), Probe::A);
  EXPECT_NEAR(got, 4.0675811445272917e-4, 1e-14);
  EXPECT_NEAR(got, ip_perturbative(0.02, 8.31e-3), 2e-7);
}

TEST(ip_exact, product_thermal_state_is_zero) {
  EXPECT_EQ(ip_exact(exact_tms_cm(0.0, {0.01, 0.01}), Probe::A), 0.0);
  EXPECT_EQ(ip_exact(exact_tms_cm(0.0, {0.01, 0.03}), Probe::B), 0.0);
  EXPECT_EQ(ip_exact(dce(0.0, 0.004), Probe::A), 0.0);
}

TEST(ip_exact, vacuum_is_degenerate) {
  EXPECT_THROW(ip_exact(CovarianceMatrix::vacuum(Convention::HalfVacuum), Probe::A), DegeneratePure);
}

TEST(ip_exact, unphysical_perturbative_state_is_refused) {
  EXPECT_THROW(ip_exact(dce(0.1, 0.0), Probe::A), UnphysicalState);
  EXPECT_THROW(ip_exact(dce(kStandardF, 1e-4), Probe::B), UnphysicalState);
}

TEST(ip_exact, positive_on_squeezed_thermal_states) {
  for (double r : {0.05, 0.3, 1.0}) {
    for (double n : {0.01, 0.1, 1.0}) {
      const CovarianceMatrix v = exact_tms_cm(r, {n, n});
      const double a = ip_exact(v, Probe::A);
      EXPECT_GT(a, 0.0);
      EXPECT_TRUE(std::isfinite(a));
      EXPECT_NEAR(a, ip_exact(v, Probe::B), 1e-10 * a);
    }
  }
}

TEST(ip_exact, both_closed_form_branches_agree) {
  // Convention does not matter; both probes agree on swap.
  const CovarianceMatrix v = exact_tms_cm(0.4, {0.05, 0.2});
  EXPECT_NEAR(ip_exact(v, Probe::B), ip_exact(v.swapped(), Probe::A), 1e-12);
  EXPECT_DOUBLE_EQ(ip_exact(v, Probe::A),
                   ip_exact(rescale_convention(v, Convention::UnitVacuum), Probe::A));
}

TEST(ip_perturbative, values) {
  EXPECT_NEAR(ip_perturbative(0.02, 8.31e-3), 4.06648e-4, 1e-15);
  EXPECT_EQ(ip_perturbative(0.0, 0.3), 0.0);
  EXPECT_NEAR(ip_perturbative(0.02, 0.0), 4.0e-4, 1e-18);
  EXPECT_NEAR(ip_perturbative(0.02, 0.01), 4.08e-4, 1e-18);
}

TEST(critical_temperature, steering) {
  const auto t = critical_temperature(at(0.15, 0.0), Measure::Steering);
  ASSERT_TRUE(t.has_value());
  // Exact threshold n = [(1+f^2)/(1-f^2)^2 - 1]/2 inverted through the
  // Bose-Einstein law: 32.18653 mK.
  EXPECT_NEAR(*t, 0.032186534236868643, 2e-6);
}

TEST(critical_temperature, entanglement) {
  const auto t = critical_temperature(at(0.15, 0.0), Measure::Entanglement);
  ASSERT_TRUE(t.has_value());
  EXPECT_NEAR(*t, 0.061204276690086461, 2e-6);
}

TEST(critical_temperature, none_without_drive) {
  EXPECT_FALSE(critical_temperature(at(0.0, 0.0), Measure::Steering).has_value());
  EXPECT_FALSE(critical_temperature(at(0.0, 0.0), Measure::Entanglement).has_value());
}

TEST(critical_temperature, none_when_positive_on_whole_bracket) {
  // f ~ 0.79 keeps the 5 GHz modes entangled up to n ~ 10, beyond n(1 K) ~ 3.7.
  DceParams p = at(0.6, 0.0);
  p.effective_length = 5e-3;
  ASSERT_LT(small_parameter(p), 1.0);
  EXPECT_FALSE(critical_temperature(p, Measure::Entanglement).has_value());
}

TEST(full_report, figure_one_point) {
  const CorrelationReport r = full_report(at(0.15, 0.05));
  EXPECT_EQ(r.steering_a_to_b, 0.0);
  EXPECT_EQ(r.steering_b_to_a, 0.0);
  EXPECT_EQ(r.steering_perturbative, 0.0);
  EXPECT_NEAR(r.ip_perturbative, 3.9193461567903757e-4, 1e-16);
  EXPECT_NEAR(r.ip_probe_a, 3.9203505002885064e-4, 1e-14);
  EXPECT_EQ(r.ip_probe_a, r.ip_probe_b);
  EXPECT_NEAR(r.log_negativity, 0.023188231744570916, 1e-12);
  EXPECT_EQ(r.physicality_deficit, 0.0);
  EXPECT_TRUE(r.flags.tokens().empty());
}

TEST(full_report, no_drive_means_no_correlations) {
  for (double t : {0.0, 0.02, 0.3}) {
    const CorrelationReport r = full_report(at(0.0, t));
    EXPECT_EQ(r.steering_a_to_b, 0.0);
    EXPECT_EQ(r.steering_b_to_a, 0.0);
    EXPECT_EQ(r.steering_perturbative, 0.0);
    EXPECT_EQ(r.ip_probe_a, 0.0);
    EXPECT_EQ(r.ip_probe_b, 0.0);
    EXPECT_EQ(r.ip_perturbative, 0.0);
    EXPECT_EQ(r.log_negativity, 0.0);
  }
  EXPECT_TRUE(full_report(at(0.0, 0.0)).flags.exact_skipped_degenerate);
  EXPECT_FALSE(full_report(at(0.0, 0.02)).flags.exact_skipped_degenerate);
}

TEST(full_report, cold_point_is_steerable) {
  const CorrelationReport r = full_report(at(0.15, 0.02));
  EXPECT_NEAR(r.occupations.n_minus, 6.155888095973018e-6, 1e-18);
  EXPECT_GT(r.steering_a_to_b, 0.0);
  EXPECT_GT(r.log_negativity, 0.0);
  // n < f^2 / 2: the perturbative state misses the bound, so exact IP is skipped.
  EXPECT_TRUE(r.flags.exact_skipped_unphysical);
  EXPECT_EQ(r.ip_probe_a, r.ip_perturbative);
  EXPECT_GT(r.physicality_deficit, 0.0);
}

TEST(full_report, perturbative_warning_flag) {
  DceParams p = at(0.9, 0.05);
  ASSERT_GT(small_parameter(p), 0.1);
  const CorrelationReport r = full_report(p);
  EXPECT_TRUE(r.flags.perturbative_warning);
  ASSERT_FALSE(r.flags.tokens().empty());
  EXPECT_EQ(r.flags.tokens().back(), "PerturbativeWarning");
}

TEST(full_report, non_perturbative_propagates) {
  DceParams p = at(0.9, 0.05);
  p.effective_length = 5e-3;
  EXPECT_THROW(full_report(p), NonPerturbative);
}

TEST(full_report, symmetric_at_zero_detuning) {
  for (double eps : {0.05, 0.15, 0.3}) {
    for (double t : {0.0, 0.01, 0.03, 0.08}) {
      const CorrelationReport r = full_report(at(eps, t));
      EXPECT_NEAR(r.steering_a_to_b, r.steering_b_to_a, 1e-10);
      EXPECT_NEAR(r.ip_probe_a, r.ip_probe_b, 1e-10);
    }
  }
}

TEST(full_report, detuned_state_is_asymmetric) {
  DceParams p = at(0.4, 0.02);
  p.detuning = kTwoPi * 2e9;
  const CorrelationReport r = full_report(p);
  EXPECT_GT(r.occupations.n_minus, r.occupations.n_plus);
  EXPECT_NE(r.steering_a_to_b, r.steering_b_to_a);
}

// Properties over the (f, n) grid f in [0, 0.05], n in [0, 0.01].

class PerturbativeGrid : public ::testing::Test {
 protected:
  static constexpr int kSide = 30;
  static double f_at(int i) { return 0.05 * i / (kSide - 1); }
  static double n_at(int j) { return 0.01 * j / (kSide - 1); }
};

TEST_F(PerturbativeGrid, steering_close_to_leading_order) {
  for (int i = 0; i < kSide; ++i) {
    for (int j = 0; j < kSide; ++j) {
      const double f = f_at(i);
      const double n = n_at(j);
      const double exact = steering_exact(dce(f, n), SteeringDirection::AToB);
      const double pert = steering_perturbative(f, n);
      if (exact > 0.0 && pert > 0.0) {
        EXPECT_LE(std::abs(exact - pert), 10.0 * (f * f * f * f + n * f * f + n * n)) << f << " " << n;
      }
    }
  }
}

TEST_F(PerturbativeGrid, ip_close_to_leading_order_where_physical) {
  int compared = 0;
  for (int i = 0; i < kSide; ++i) {
    for (int j = 0; j < kSide; ++j) {
      const double f = f_at(i);
      const double n = n_at(j);
      try {
        const double exact = ip_exact(dce(f, n), Probe::A);
        EXPECT_LE(std::abs(exact - ip_perturbative(f, n)), 10.0 * (f * f * f * f + n * n * f * f))
            << f << " " << n;
        ++compared;
      } catch (const UnphysicalState&) {
        EXPECT_LT(n, f * f) << "physical region n >= f^2 must be evaluable";
      } catch (const DegeneratePure&) {
        EXPECT_EQ(f, 0.0);
        EXPECT_EQ(n, 0.0);
      }
    }
  }
  EXPECT_GT(compared, kSide * kSide / 2);
}

TEST_F(PerturbativeGrid, steering_matches_closed_form_and_threshold) {
  for (int i = 0; i < kSide; ++i) {
    const double f = f_at(i);
    const double threshold = oracle::dce_steering_threshold(f);
    if (f > 0.0) EXPECT_NEAR(threshold, 1.5 * f * f, 3.0 * f * f * f * f);
    for (int j = 0; j < kSide; ++j) {
      const double n = n_at(j);
      const double exact = steering_exact(dce(f, n), SteeringDirection::AToB);
      EXPECT_NEAR(exact, oracle::dce_steering(f, n), 1e-14);
      if (n >= threshold * (1.0 + 1e-12)) EXPECT_EQ(exact, 0.0);
      if (n <= threshold * (1.0 - 1e-9) && f > 0.0) EXPECT_GT(exact, 0.0);
    }
  }
}

TEST_F(PerturbativeGrid, monotone_in_thermal_noise) {
  for (int i = 0; i < kSide; ++i) {
    const double f = f_at(i);
    for (int j = 1; j < kSide; ++j) {
      EXPECT_LE(steering_exact(dce(f, n_at(j)), SteeringDirection::AToB),
                steering_exact(dce(f, n_at(j - 1)), SteeringDirection::AToB));
      if (f > 0.0) EXPECT_GT(ip_perturbative(f, n_at(j)), ip_perturbative(f, n_at(j - 1)));
    }
  }
}

TEST_F(PerturbativeGrid, steerable_implies_entangled) {
  for (int i = 0; i < kSide; ++i) {
    for (int j = 0; j < kSide; ++j) {
      const CovarianceMatrix v = dce(f_at(i), n_at(j));
      if (steering_exact(v, SteeringDirection::AToB) > 0.0) EXPECT_GT(log_negativity(v), 0.0);
    }
  }
}
