// Copyright 2026 The qmshape Authors
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


#include <cmath>

#include "gtest/gtest.h"

#include "qmshape/driving.hpp"
#include "qmshape/modes.hpp"

using namespace qmshape;

TEST(driving, constant_energy_is_linear) {
  const TimeGrid g = make_time_grid(9.0, 513);
  const DrivingProfile f = constant_driving(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(f.energy()[static_cast<Eigen::Index>(i)], g[i], 1e-12);
  }
  EXPECT_NEAR(f.mean_square(), 1.0, 1e-12);
  EXPECT_TRUE(f.is_unit_mean_square());
}

TEST(driving, renormalize_constant_two) {
  const TimeGrid g = make_time_grid(9.0, 65);
  const DrivingProfile f = accumulate_energy(constant_driving(g, 2.0).amplitude(),
                                             Renormalize::kUnitMeanSquare);
  EXPECT_LE((f.samples().array() - 1.0).abs().maxCoeff(), 1e-12);
}

TEST(driving, energy_nondecreasing_and_starts_at_zero) {
  const TimeGrid g = make_time_grid(9.0, 513);
  const DrivingProfile f(hermite_mode(3, g, default_basis_config(g)));
  EXPECT_EQ(f.energy()[0], 0.0);
  for (Eigen::Index i = 1; i < f.energy().size(); ++i) EXPECT_GE(f.energy()[i], f.energy()[i - 1]);
  EXPECT_NEAR(f.total_energy(), 1.0, 1e-12);
}

TEST(driving, zero_renormalize_is_degenerate) {
  const TimeGrid g = make_time_grid(9.0, 17);
  EXPECT_THROW(accumulate_energy(ModeProfile::zeros(g), Renormalize::kUnitMeanSquare),
               DegenerateDriving);
  EXPECT_NO_THROW(accumulate_energy(ModeProfile::zeros(g)));
}

TEST(driving, non_finite_rejected) {
  const TimeGrid g = make_time_grid(1.0, 3);
  EXPECT_THROW(DrivingProfile(ModeProfile(g, Eigen::Vector3d(0.0, NAN, 1.0))), InvalidArgument);
}

TEST(driving, single_full_window_is_identity) {
  const TimeGrid g = make_time_grid(9.0, 129);
  const DrivingProfile f(hermite_mode(1, g, default_basis_config(g)));
  const ModeProfile train = build_pulse_train(f, PulseTrain{.count = 1, .period = 9.0, .pulse_duration = 9.0});
  EXPECT_EQ(train.samples(), f.samples());
}

TEST(driving, three_bursts) {
  const TimeGrid g = make_time_grid(9.0, 901);
  const DrivingProfile f = constant_driving(g);
  const ModeProfile train = build_pulse_train(f, PulseTrain{.count = 3, .period = 3.0, .pulse_duration = 0.3});
  int bursts = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const bool on = train[i] != 0.0;
    const bool was_on = i > 0 && train[i - 1] != 0.0;
    if (on && !was_on) ++bursts;
  }
  EXPECT_EQ(bursts, 3);
}

TEST(driving, train_must_fit) {
  const TimeGrid g = make_time_grid(9.0, 65);
  const DrivingProfile f = constant_driving(g);
  EXPECT_THROW(build_pulse_train(f, PulseTrain{.count = 4, .period = 3.0, .pulse_duration = 0.5}),
               InvalidArgument);
  EXPECT_THROW(build_pulse_train(f, PulseTrain{.count = 2, .period = 1.0, .pulse_duration = 1.5}),
               InvalidArgument);
  EXPECT_THROW(build_pulse_train(f, PulseTrain{.count = 0, .period = 1.0, .pulse_duration = 0.5}),
               InvalidArgument);
}

TEST(driving, envelope_rescale_factors) {
  const TimeGrid g = make_time_grid(9.0, 65);
  const ModeProfile f = constant_driving(g).amplitude();
  EXPECT_LE((envelope_rescale(f, 0.25, 1.0).samples().array() - 0.5).abs().maxCoeff(), 1e-15);
  EXPECT_EQ(envelope_rescale(f, 1.0, 1.0).samples(), f.samples());
  EXPECT_THROW(envelope_rescale(f, 2.0, 1.0), InvalidArgument);
  EXPECT_THROW(envelope_rescale(f, 0.0, 1.0), InvalidArgument);
  const DrivingProfile r =
      accumulate_energy(envelope_rescale(f, 0.1, 1.0).amplitude(), Renormalize::kUnitMeanSquare);
  EXPECT_TRUE(r.is_unit_mean_square());
}

TEST(driving, pulse_train_energy_tracks_rescaled_envelope) {
  // Direct quadrature of the gated train against the averaged envelope. For a
  // flat envelope the staircase deviates by (1 - T_0/T)/N of the total.
  const TimeGrid g = make_time_grid(9.0, 18001);
  const DrivingProfile f = constant_driving(g);
  const double period = 9.0 / 50.0;
  const double width = 0.5 * period;
  const DrivingProfile train(build_pulse_train(
      f, PulseTrain{.count = 50, .period = period, .pulse_duration = width}));
  const DrivingProfile averaged = envelope_rescale(f.amplitude(), width, period);
  const double sup = (train.energy() - averaged.energy()).cwiseAbs().maxCoeff();
  EXPECT_LE(sup / averaged.total_energy(), 0.02);
}

TEST(driving, scaling_units) {
  DimensionlessScaling s{.rabi_frequency = 2.0, .detuning = -8.0, .coupling = 0.5,
                         .linear_density = 4.0, .decay_rate = 0.1};
  EXPECT_DOUBLE_EQ(s.time_unit(), 2.0);
  EXPECT_DOUBLE_EQ(s.length_unit(), 8.0);
  EXPECT_DOUBLE_EQ(s.raman_ratio(), 80.0);
  s.decay_rate = 0.0;
  EXPECT_TRUE(std::isinf(s.raman_ratio()));
}
