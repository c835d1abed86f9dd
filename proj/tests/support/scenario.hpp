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

#include <array>
#include <vector>

#include "qmshape/qmshape.hpp"

namespace qmshape::testing {

inline constexpr double kWritingTime = 9.0;
inline constexpr double kCellLength = 10.0;
inline constexpr double kSearchLength = 5.0;
inline constexpr std::size_t kSamples = 513;

/// Production grids, the Hermite basis and the drivings shaped for L_1..L_4,
/// computed once per process.
struct Scenario {
  TimeGrid time = make_time_grid(kWritingTime, kSamples);
  SpaceGrid space = make_space_grid(kCellLength, kSamples);
  std::vector<ModeProfile> basis = hermite_basis(time, default_basis_config(time));
  std::vector<ShaperReport> shaped;

  const DrivingProfile& driving(int i) const { return shaped[static_cast<std::size_t>(i - 1)].driving; }
  const ModeProfile& mode(int i) const { return basis[static_cast<std::size_t>(i - 1)]; }
};

inline ShaperConfig scenario_config(int target, double search_length = kSearchLength) {
  ShaperConfig c;
  c.target = target;
  c.cell_length = kCellLength;
  c.search_length = search_length;
  c.space_samples = kSamples;
  return c;
}

inline const Scenario& scenario() {
  static const Scenario s = [] {
    Scenario out;
    for (int i = 1; i <= 4; ++i) out.shaped.push_back(shape_driving(scenario_config(i), out.mode(i)));
    return out;
  }();
  return s;
}

/// sqrt(int (a - b)^2) / sqrt(int b^2) on a shared grid.
template <class Grid>
double relative_l2(const Profile<Grid>& a, const Profile<Grid>& b) {
  const Profile<Grid> diff(a.grid(), a.samples() - b.samples());
  return diff.norm() / b.norm();
}

}  // namespace qmshape::testing
