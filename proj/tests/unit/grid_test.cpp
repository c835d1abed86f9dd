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
#include <numbers>

#include "gtest/gtest.h"

#include "qmshape/grid.hpp"
#include "qmshape/modes.hpp"
#include "qmshape/profile.hpp"

using namespace qmshape;

TEST(grid, uniform_spacing_and_pinned_end) {
  const TimeGrid g = make_time_grid(9.0, 513);
  EXPECT_EQ(g.size(), 513u);
  EXPECT_DOUBLE_EQ(g.step(), 9.0 / 512);
  EXPECT_EQ(g[0], 0.0);
  EXPECT_EQ(g[512], 9.0);
  EXPECT_DOUBLE_EQ(g[256], 4.5);
}

TEST(grid, rejects_bad_geometry) {
  EXPECT_THROW(make_time_grid(9.0, 1), InvalidArgument);
  EXPECT_THROW(make_time_grid(0.0, 10), InvalidArgument);
  EXPECT_THROW(make_space_grid(-1.0, 10), InvalidArgument);
  EXPECT_THROW(make_space_grid(NAN, 10), InvalidArgument);
}

TEST(grid, trapezoid_exact_for_linear) {
  const SpaceGrid g = make_space_grid(10.0, 11);
  EXPECT_NEAR(trapezoid(g.points(), g.step()), 50.0, 1e-12);
  const Eigen::VectorXd c = cumulative_trapezoid(g.points(), g.step());
  for (std::size_t i = 0; i < g.size(); ++i) {
    EXPECT_NEAR(c[static_cast<Eigen::Index>(i)], 0.5 * g[i] * g[i], 1e-12);
  }
}

TEST(grid, trapezoid_second_order) {
  // int_0^pi sin = 2; error halves twice per doubling.
  auto err = [](std::size_t n) {
    const TimeGrid g(0.0, std::numbers::pi, n);
    return std::abs(trapezoid(g.points().array().sin().matrix(), g.step()) - 2.0);
  };
  EXPECT_NEAR(err(65) / err(129), 4.0, 0.01);
}

TEST(profile, size_mismatch_rejected) {
  const TimeGrid g = make_time_grid(1.0, 5);
  EXPECT_THROW(ModeProfile(g, Eigen::VectorXd::Zero(4)), InvalidArgument);
}

TEST(profile, overlap_requires_same_grid) {
  const ModeProfile a = ModeProfile::zeros(make_time_grid(1.0, 5));
  const ModeProfile b = ModeProfile::zeros(make_time_grid(1.0, 6));
  EXPECT_THROW(overlap(a, b), InvalidArgument);
}

TEST(profile, normalize_zero_is_degenerate) {
  EXPECT_THROW(normalized(ModeProfile::zeros(make_time_grid(1.0, 5))), DegenerateResponse);
}

TEST(modes, hermite_orthonormal) {
  const TimeGrid g = make_time_grid(9.0, 513);
  const auto basis = hermite_basis(g, default_basis_config(g));
  ASSERT_EQ(basis.size(), 6u);
  EXPECT_LE(orthonormality_defect(basis), 1e-4);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    EXPECT_TRUE(basis[k].is_normalized(1e-12));
    EXPECT_EQ(basis[k].label(), static_cast<int>(k + 1));
  }
}

TEST(modes, parity_about_center) {
  const TimeGrid g = make_time_grid(9.0, 513);
  const auto cfg = default_basis_config(g);
  for (int k = 1; k <= 6; ++k) {
    const ModeProfile m = hermite_mode(k, g, cfg);
    const double parity = (k % 2 == 1) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      EXPECT_NEAR(m[i], parity * m[g.size() - 1 - i], 1e-12);
    }
  }
}

TEST(modes, matches_closed_form_hermite) {
  // H_3(x) = 8x^3 - 12x against the recurrence, before normalization.
  const TimeGrid g = make_time_grid(9.0, 257);
  const auto cfg = default_basis_config(g);
  const ModeProfile m = hermite_mode(4, g, cfg);
  Eigen::VectorXd ref(257);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = (g[i] - cfg.center) / cfg.width;
    ref[static_cast<Eigen::Index>(i)] = (8 * x * x * x - 12 * x) * std::exp(-0.5 * x * x);
  }
  const ModeProfile r = normalized(ModeProfile(g, ref));
  EXPECT_LE((m.samples() - r.samples()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(modes, first_mode_gaussian_peak) {
  const TimeGrid g = make_time_grid(9.0, 513);
  const ModeProfile m = hermite_mode(1, g, default_basis_config(g));
  Eigen::Index peak = 0;
  m.samples().maxCoeff(&peak);
  EXPECT_EQ(peak, 256);
  EXPECT_GT(m[256], 0.0);
}

TEST(modes, index_and_config_validation) {
  const TimeGrid g = make_time_grid(9.0, 65);
  const auto cfg = default_basis_config(g);
  EXPECT_THROW(hermite_mode(0, g, cfg), InvalidArgument);
  EXPECT_THROW(hermite_mode(7, g, cfg), InvalidArgument);
  auto bad = cfg;
  bad.width = 0.0;
  EXPECT_THROW(hermite_mode(1, g, bad), InvalidArgument);
  bad = cfg;
  bad.center = 20.0;
  EXPECT_THROW(hermite_mode(1, g, bad), InvalidArgument);
  EXPECT_THROW(gram_matrix({}), InvalidArgument);
}
