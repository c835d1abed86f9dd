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

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "qmshape/driving.hpp"
#include "qmshape/grid.hpp"
#include "qmshape/profile.hpp"

namespace qmshape {

/// Write supermode `input` with one driving, read it back as profile `output`
/// with another. Indices are 1-based into the basis.
struct ConversionPair {
  int input = 1;
  int output = 1;
};

struct ConversionResult {
  // M(j, k) = <L_j, read(write(L_k))>: rows output Hermite modes, columns
  // input supermodes (0-based storage of 1-based labels).
  Eigen::MatrixXd amplitude_map;
  ModeProfile output;   // read(write(L_input))
  double fidelity = 0.0;    // M(output, input)
  double efficiency = 0.0;  // norm of `output`
  double cross_talk = 0.0;  // max |M(j, k)| over k != input
  // More than one input column carries over half of its energy.
  bool multimode = false;
};

/// Composes write with `write_driving` and read with `read_driving` over
/// `space`. Throws InvalidArgument on grid mismatch or a pair outside the basis.
ConversionResult convert(const DrivingProfile& write_driving, const DrivingProfile& read_driving,
                         std::span<const ModeProfile> basis, const SpaceGrid& space,
                         ConversionPair pair);

/// read(write(input)) for an arbitrary profile.
ModeProfile convert_profile(const ModeProfile& input, const DrivingProfile& write_driving,
                            const DrivingProfile& read_driving, const SpaceGrid& space);

/// Pairwise overlaps of the normalized spin waves g^(i) = write(L_i, K(F_i)).
/// Throws DegenerateResponse if a spin wave has norm below 1e-6.
Eigen::MatrixXd response_identity(std::span<const DrivingProfile> drivings,
                                  std::span<const ModeProfile> targets, const SpaceGrid& space);

}  // namespace qmshape
