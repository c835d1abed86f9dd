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
#include <utility>

#include "gtest/gtest.h"

#include "qmshape/bessel.hpp"
#include "qmshape/error.hpp"

using namespace qmshape;

namespace {

// Power series in binary128; converges for every x used here.
__float128 j0_quad(__float128 x) {
  const __float128 q = x * x / 4;
  __float128 term = 1;
  __float128 sum = 1;
  for (int m = 1; m < 400; ++m) {
    term *= -q / (static_cast<__float128>(m) * m);
    sum += term;
  }
  return sum;
}

// Reference values computed with mpmath at 30 digits.
constexpr std::pair<double, double> kReference[] = {
    {0.5, 0.938469807240812904228},
    {1.0, 0.76519768655796655145},
    {2.0, 0.223890779141235668052},
    {4.75, -0.255120827491373911814},
    {8.0, 0.171650807137553906091},
    {12.5, 0.146884054700421102306},
    {12.9921875, 0.206370266929751843338},
    {13.0078125, 0.207468977979689751128},
    {17.25, -0.140611849503085834367},
    {25.0, 0.0962667832759581161735},
    {40.125, -0.0083798205496937512075},
    {100.0, 0.0199858503042231224242},
    {777.75, -0.0156728352209944839778},
    {1000.25, 0.0228465353548583129634},
    {5000.0, -0.00664898425144834789359},
    {9999.5, -0.00447872740312842504733},
};

}  // namespace

TEST(bessel, value_at_zero) { EXPECT_EQ(bessel_j0(0.0), 1.0); }

TEST(bessel, value_at_one) { EXPECT_NEAR(bessel_j0(1.0), 0.765197686557967, 1e-12); }

TEST(bessel, reference_table) {
  for (const auto& [x, v] : kReference) {
    EXPECT_NEAR(bessel_j0(x), v, 1e-12) << "x = " << x;
  }
}

TEST(bessel, series_branch_matches_quad_oracle) {
  for (double x = 0.0; x < kBesselJ0SeriesLimit; x += 0.0625) {
    EXPECT_NEAR(bessel_j0(x), static_cast<double>(j0_quad(x)), 1e-13) << "x = " << x;
  }
}

TEST(bessel, continuous_across_branch_switch) {
  const double below = std::nextafter(kBesselJ0SeriesLimit, 0.0);
  EXPECT_NEAR(bessel_j0(below), bessel_j0(kBesselJ0SeriesLimit), 1e-13);
  EXPECT_NEAR(bessel_j0(kBesselJ0SeriesLimit), static_cast<double>(j0_quad(kBesselJ0SeriesLimit)), 1e-13);
}

TEST(bessel, asymptotic_branch_matches_quad_oracle) {
  // The binary128 series still resolves J0 to ~1e-20 up to x ~ 20.
  for (double x = kBesselJ0SeriesLimit; x < 22.0; x += 0.125) {
    EXPECT_NEAR(bessel_j0(x), static_cast<double>(j0_quad(x)), 1e-13) << "x = " << x;
  }
}

TEST(bessel, agrees_with_std_cyl_bessel) {
  for (double x = 0.0; x <= 1e4; x = x * 1.07 + 0.01) {
    EXPECT_NEAR(bessel_j0(x), std::cyl_bessel_j(0.0, x), 1e-12) << "x = " << x;
  }
}

TEST(bessel, first_root_by_bisection) {
  __float128 lo = 2.0;
  __float128 hi = 3.0;
  for (int i = 0; i < 200; ++i) {
    const __float128 mid = (lo + hi) / 2;
    if (j0_quad(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double root = static_cast<double>(lo);
  EXPECT_NEAR(root, 2.4048255576957727686, 1e-15);
  EXPECT_NEAR(bessel_j0(2.404825557695773), 0.0, 1e-10);
  EXPECT_NEAR(bessel_j0(root), 0.0, 1e-15);
}

TEST(bessel, rejects_invalid_input) {
  EXPECT_THROW(bessel_j0(-1e-300), InvalidArgument);
  EXPECT_THROW(bessel_j0(INFINITY), InvalidArgument);
  EXPECT_THROW(bessel_j0(NAN), InvalidArgument);
}
