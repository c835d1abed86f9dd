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

#include "qmshape/dynamics.hpp"
#include "qmshape/kernels.hpp"
#include "qmshape/modes.hpp"
#include "scenario.hpp"

using namespace qmshape;
using namespace qmshape::testing;

namespace {

constexpr std::size_t kOracleSamples = 1024;

struct OracleGrids {
  TimeGrid time = make_time_grid(kWritingTime, kOracleSamples);
  SpaceGrid space = make_space_grid(kCellLength, kOracleSamples);
  ModeProfile mode1 = hermite_mode(1, time, default_basis_config(time));
};

DrivingProfile shaped_on(const TimeGrid& time) {
  ShaperConfig cfg = scenario_config(1);
  cfg.report_kernel = false;
  return shape_driving(cfg, hermite_mode(1, time, default_basis_config(time))).driving;
}

}  // namespace

TEST(dynamics, no_driving_means_free_propagation) {
  const OracleGrids g;
  const DynamicsResult r =
      integrate_write(g.mode1, DrivingProfile(ModeProfile::zeros(g.time)), g.space);
  EXPECT_EQ(r.spin_wave.samples().cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LE((r.exit_field.samples() - g.mode1.samples()).cwiseAbs().maxCoeff(), 1e-4);
  EXPECT_NEAR(r.exit_energy, r.input_energy, 1e-15);
}

TEST(dynamics, step_constraint) {
  const TimeGrid t = make_time_grid(9.0, 101);
  const SpaceGrid z = make_space_grid(10.0, 201);
  EXPECT_THROW(integrate_write(ModeProfile::zeros(t), constant_driving(t), z), InvalidArgument);
  EXPECT_THROW(integrate_read(SpinWave::zeros(z), constant_driving(t)), InvalidArgument);
}

TEST(dynamics, write_is_passive) {
  const OracleGrids g;
  for (const DrivingProfile& f : {constant_driving(g.time), shaped_on(g.time)}) {
    const DynamicsResult r = integrate_write(g.mode1, f, g.space);
    EXPECT_LE(r.stored_energy + r.exit_energy, r.input_energy + 1e-6);
    EXPECT_NEAR(r.stored_energy + r.exit_energy, r.input_energy, 1e-12);
    EXPECT_LE(r.input_energy, 1.0 + 1e-6);
    EXPECT_LE(r.spin_wave.norm() * r.spin_wave.norm(), 1.0 + 1e-6);
  }
}

TEST(dynamics, read_is_passive) {
  const OracleGrids g;
  const DrivingProfile f = shaped_on(g.time);
  const SpinWave b = write(g.mode1, half_kernel(f, g.space));
  const DynamicsResult r = integrate_read(b, f);
  EXPECT_NEAR(r.stored_energy + r.exit_energy, r.input_energy, 1e-12);
  EXPECT_LE(r.exit_field.norm(), b.norm() + 1e-6);
}

TEST(dynamics, write_oracle_matches_kernel) {
  // The write kernel is forward writing of the time-reversed pulses.
  const OracleGrids g;
  for (const DrivingProfile& f : {constant_driving(g.time), shaped_on(g.time)}) {
    const SpinWave kernel = write(g.mode1, half_kernel(f, g.space));
    const DynamicsResult r =
        integrate_write(reversed(g.mode1), DrivingProfile(reversed(f.amplitude())), g.space);
    EXPECT_LE(relative_l2(r.spin_wave, kernel), 0.02);
  }
}

TEST(dynamics, read_oracle_matches_kernel) {
  const OracleGrids g;
  for (const DrivingProfile& f : {constant_driving(g.time), shaped_on(g.time)}) {
    const HalfKernel k = half_kernel(f, g.space);
    const SpinWave b = write(g.mode1, k);
    const ModeProfile kernel = read(b, k);
    const DynamicsResult r = integrate_read(b, f);
    EXPECT_LE(relative_l2(r.exit_field, kernel), 0.02);
  }
}

TEST(dynamics, oracle_converges_with_resolution) {
  auto error = [](std::size_t n) {
    const TimeGrid t = make_time_grid(kWritingTime, n);
    const SpaceGrid z = make_space_grid(kCellLength, n);
    const ModeProfile a = hermite_mode(1, t, default_basis_config(t));
    const DrivingProfile f = constant_driving(t);
    const SpinWave kernel = write(a, half_kernel(f, z));
    const DynamicsResult r = integrate_write(reversed(a), DrivingProfile(reversed(f.amplitude())), z);
    return relative_l2(r.spin_wave, kernel);
  };
  const double coarse = error(257);
  const double fine = error(513);
  EXPECT_LT(fine, 0.5 * coarse);
}
