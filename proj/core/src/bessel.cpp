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

#include "qmshape/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qmshape/error.hpp"

namespace qmshape {
namespace {

// Largest term for x < 15 is ~2e5, so long double (64-bit mantissa) keeps
// the cancellation error near 1e-14.
double j0_series(double x) {
  const long double q = 0.25L * static_cast<long double>(x) * static_cast<long double>(x);
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int m = 1; m < 200; ++m) {
    term *= -q / (static_cast<long double>(m) * static_cast<long double>(m));
    sum += term;
    if (static_cast<long double>(m) > q && std::fabs(term) < 1e-22L) break;
  }
  return static_cast<double>(sum);
}

// J0(x) = sqrt(2/(pi x)) [P(x) cos(x - pi/4) - Q(x) sin(x - pi/4)]
double j0_hankel(double x) {
  double p = 0.0;
  double q = 0.0;
  double coeff = 1.0;  // a_k = prod_{j<=k} -(2j-1)^2 / (8 j)
  double inv_pow = 1.0;
  double last = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 400; ++k) {
    const double term = coeff * inv_pow;
    const double mag = std::fabs(term);
    if (mag > last) break;  // past the smallest term: the series diverges
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0) {
      p += sign * term;
    } else {
      q += sign * term;
    }
    if (mag < 1e-18) break;
    last = mag;
    const double odd = 2.0 * k + 1.0;
    coeff *= -(odd * odd) / (8.0 * (k + 1));
    inv_pow /= x;
  }
  // cos(x - pi/4) and sin(x - pi/4) without subtracting pi/4 from a large x.
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double cos_chi = (c + s) * std::numbers::sqrt2 * 0.5;
  const double sin_chi = (s - c) * std::numbers::sqrt2 * 0.5;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace

double bessel_j0(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw InvalidArgument("bessel_j0 requires a finite x >= 0");
  }
  if (x < kBesselJ0SeriesLimit) return j0_series(x);
  return j0_hankel(x);
}

}  // namespace qmshape
