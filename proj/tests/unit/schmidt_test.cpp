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

#include "qmshape/modes.hpp"
#include "qmshape/schmidt.hpp"
#include "scenario.hpp"

using namespace qmshape;
using namespace qmshape::testing;

namespace {

const SchmidtSpectrum& shaped_spectrum() {
  static const SchmidtSpectrum s = schmidt_analysis(half_kernel(scenario().driving(1), scenario().space));
  return s;
}

double max_gram_defect(const std::vector<SpinWave>& waves) {
  double d = 0.0;
  for (std::size_t i = 0; i < waves.size(); ++i) {
    for (std::size_t j = 0; j < waves.size(); ++j) {
      d = std::max(d, std::abs(overlap(waves[i], waves[j]) - (i == j ? 1.0 : 0.0)));
    }
  }
  return d;
}

}  // namespace

TEST(schmidt, rank_one_kernel) {
  const TimeGrid g = make_time_grid(9.0, 129);
  const ModeProfile v = hermite_mode(2, g, default_basis_config(g)).scaled(1.7);
  const FullKernel k(g, v.samples() * v.samples().transpose());
  const SchmidtSpectrum s = decompose(k);
  EXPECT_NEAR(s.amplitudes[0], v.norm() * v.norm(), 1e-12);
  EXPECT_LE(std::abs(s.amplitudes[1]), 1e-12);
  EXPECT_NEAR(std::abs(overlap(s.modes[0], normalized(v))), 1.0, 1e-12);
}

TEST(schmidt, sign_convention) {
  for (const ModeProfile& m : shaped_spectrum().modes) {
    Eigen::Index peak = 0;
    m.samples().cwiseAbs().maxCoeff(&peak);
    EXPECT_GT(m.samples()[peak], 0.0);
  }
}

TEST(schmidt, descending_and_bounded) {
  const SchmidtSpectrum& s = shaped_spectrum();
  for (Eigen::Index k = 0; k < s.lambdas.size(); ++k) {
    EXPECT_GE(s.lambdas[k], -1e-6);
    EXPECT_LE(s.lambdas[k], 1.0 + 1e-6);
    if (k > 0) EXPECT_LE(s.amplitudes[k], s.amplitudes[k - 1]);
  }
}

TEST(schmidt, modes_orthonormal) {
  const SchmidtSpectrum& s = shaped_spectrum();
  const std::vector<ModeProfile> first(s.modes.begin(), s.modes.begin() + 20);
  EXPECT_LE(orthonormality_defect(first), 1e-6);
}

TEST(schmidt, responses_orthonormal) {
  const SchmidtSpectrum& s = shaped_spectrum();
  ASSERT_GE(s.responses.size(), 2u);
  EXPECT_LE(max_gram_defect(s.responses), 1e-3);
}

TEST(schmidt, reconstruction) {
  const Scenario& sc = scenario();
  const FullKernel g = full_kernel(sc.driving(1), sc.driving(1), sc.space);
  const SchmidtSpectrum s = decompose(g);
  const double err = (reconstruct(s) - g.matrix()).cwiseAbs().maxCoeff();
  EXPECT_LE(err, 1e-8 * g.matrix().cwiseAbs().maxCoeff());
}

TEST(schmidt, response_norm_is_fourth_root) {
  const Scenario& sc = scenario();
  const SchmidtSpectrum& s = shaped_spectrum();
  const Response r = response_function(s.modes[0], half_kernel(sc.driving(1), sc.space));
  EXPECT_NEAR(std::pow(r.fourth_root, 4), s.lambdas[0], 1e-3);
  EXPECT_TRUE(r.profile.is_normalized(1e-12));
}

TEST(schmidt, half_kernel_expansion) {
  // K(t, z) = sum lambda^{1/4} g_k(z) phi_k(t). The spectrum reaches roundoff
  // after a handful of terms; the first dropped term is ~1e-6.
  const Scenario& sc = scenario();
  const HalfKernel k = half_kernel(sc.driving(1), sc.space);
  const SchmidtSpectrum s = schmidt_analysis(k, 1e-24);
  ASSERT_GE(s.responses.size(), 3u);
  Eigen::MatrixXd approx = Eigen::MatrixXd::Zero(k.matrix().rows(), k.matrix().cols());
  for (std::size_t i = 0; i < s.responses.size(); ++i) {
    const double root = std::sqrt(s.amplitudes[static_cast<Eigen::Index>(i)]);
    approx += root * s.modes[i].samples() * s.responses[i].samples().transpose();
  }
  const double rel = (approx - k.matrix()).cwiseAbs().maxCoeff() / k.matrix().cwiseAbs().maxCoeff();
  EXPECT_LE(rel, 1e-5);
}

TEST(schmidt, spin_wave_vanishes_at_exit_face) {
  const Scenario& sc = scenario();
  const SpinWave b = write(sc.mode(1), half_kernel(sc.driving(1), sc.space));
  const Response r = response_function(sc.mode(1), half_kernel(sc.driving(1), sc.space));
  const Eigen::VectorXd& g = r.profile.samples();
  EXPECT_LE(std::abs(g[g.size() - 1]) / g.cwiseAbs().maxCoeff(), 1e-2);
  // Single-signed main lobe: no sign change while |g| is above 10% of its peak.
  const double peak = g.cwiseAbs().maxCoeff();
  double sign = 0.0;
  for (Eigen::Index j = 0; j < g.size(); ++j) {
    if (std::abs(g[j]) < 0.1 * peak) continue;
    if (sign == 0.0) sign = g[j] > 0 ? 1.0 : -1.0;
    EXPECT_GT(sign * g[j], 0.0) << "z index " << j;
  }
  EXPECT_NEAR(overlap(normalized(b), r.profile), 1.0, 1e-12);
}

TEST(schmidt, constant_driving_is_multimode) {
  const Scenario& sc = scenario();
  const SchmidtSpectrum s = decompose(full_kernel(constant_driving(sc.time), constant_driving(sc.time), sc.space));
  EXPECT_GT(s.lambdas[1] / s.lambdas[0], 0.2);
}

TEST(schmidt, degenerate_response) {
  const TimeGrid g = make_time_grid(9.0, 65);
  Eigen::VectorXd f = Eigen::VectorXd::Zero(65);
  f.head(20).setOnes();
  Eigen::VectorXd phi = Eigen::VectorXd::Zero(65);
  phi.tail(20).setOnes();
  const HalfKernel k = half_kernel(DrivingProfile(ModeProfile(g, f)), make_space_grid(10.0, 33));
  EXPECT_THROW(response_function(normalized(ModeProfile(g, phi)), k), DegenerateResponse);
}

TEST(schmidt, negative_spectrum_rejected) {
  const TimeGrid g = make_time_grid(1.0, 9);
  EXPECT_THROW(decompose(FullKernel(g, -Eigen::MatrixXd::Identity(9, 9))), NumericalError);
}
