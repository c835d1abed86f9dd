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

namespace qmshape {

/// Bessel function of the first kind of order zero, J_0(x), for x >= 0.
///
/// Absolute error is below 1e-12 on [0, 1e4]. Below x = 15 the power series
/// sum_m (-1)^m (x/2)^{2m} / (m!)^2 is summed in extended precision; above
/// the Hankel asymptotic expansion is truncated at its smallest term. Both
/// branches are within ~2e-14 of J0 at the switch.
///
/// Throws InvalidArgument for negative or non-finite x.
double bessel_j0(double x);

/// Switch point between the series and the asymptotic branch.
inline constexpr double kBesselJ0SeriesLimit = 15.0;

}  // namespace qmshape
