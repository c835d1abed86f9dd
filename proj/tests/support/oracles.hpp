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


#pragma once

#include <cmath>
#include <cstdint>

namespace qmshape::testing {

/// C_k from the inner double sum sum_m 1/((k-m)! m!)^2: an exact integer sum
/// of squared binomials over (k!)^2, carried in binary128. Valid for k <= 30.
inline double coefficient_oracle(int k, double length, double time) {
  std::uint64_t binom = 1;
  std::uint64_t squares = 0;
  for (int m = 0; m <= k; ++m) {
    squares += binom * binom;
    binom = binom * static_cast<std::uint64_t>(k - m) / static_cast<std::uint64_t>(m + 1);
  }
  __float128 factorial = 1;
  for (int i = 2; i <= k; ++i) factorial *= i;
  __float128 power = 1;
  const __float128 lt = static_cast<__float128>(length) * time;
  for (int i = 0; i <= k; ++i) power *= lt;
  return static_cast<double>(static_cast<__float128>(squares) / (factorial * factorial) * power /
                             (k + 1));
}

/// int_0^L J0^2(2 sqrt(Q z)) dz = L [J0^2 + J1^2](2 sqrt(Q L)).
inline double bracket_closed_form(double q, double length) {
  const double x = 2.0 * std::sqrt(q * length);
  const double j0 = std::cyl_bessel_j(0.0, x);
  const double j1 = std::cyl_bessel_j(1.0, x);
  return length * (j0 * j0 + j1 * j1);
}

}  // namespace qmshape::testing
