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

#include <Eigen/Core>

#include "qmshape/driving.hpp"
#include "qmshape/grid.hpp"
#include "qmshape/profile.hpp"

namespace qmshape {

/// Half-cycle kernel K(t, z) = F(t) J0(2 sqrt(Q(t) z)), rows t, columns z.
/// The same matrix serves as the write kernel G_ab and the read kernel G_ba.
class HalfKernel {
 public:
  HalfKernel(TimeGrid time, SpaceGrid space, Eigen::MatrixXd matrix);

  const TimeGrid& time_grid() const { return time_; }
  const SpaceGrid& space_grid() const { return space_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

 private:
  TimeGrid time_;
  SpaceGrid space_;
  Eigen::MatrixXd matrix_;
};

/// Full-cycle kernel G(t, t') on one time grid: rows are output times t,
/// columns input times t'.
class FullKernel {
 public:
  FullKernel(TimeGrid time, Eigen::MatrixXd matrix);

  const TimeGrid& time_grid() const { return time_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }

 private:
  TimeGrid time_;
  Eigen::MatrixXd matrix_;
};

HalfKernel half_kernel(const DrivingProfile& driving, const SpaceGrid& space);

/// B(z) = int dt A(t) K(t, z). Throws InvalidArgument on a time-grid mismatch.
SpinWave write(const ModeProfile& input, const HalfKernel& kernel);

/// A(t) = int dz B(z) K(t, z). Throws InvalidArgument on a space-grid mismatch.
ModeProfile read(const SpinWave& spin_wave, const HalfKernel& kernel);

/// G(t, t') = int dz K_R(t, z) K_W(t', z). Throws InvalidArgument unless both
/// kernels share their grids.
FullKernel full_kernel(const HalfKernel& write_kernel, const HalfKernel& read_kernel);
FullKernel full_kernel(const DrivingProfile& write_driving, const DrivingProfile& read_driving,
                       const SpaceGrid& space);

/// A_out(t) = int dt' G(t, t') A_in(t').
ModeProfile apply(const FullKernel& kernel, const ModeProfile& input);

}  // namespace qmshape
