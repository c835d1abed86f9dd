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


#include "qmshape/kernels.hpp"

#include <cmath>
#include <string>

#include "qmshape/bessel.hpp"
#include "qmshape/error.hpp"

namespace qmshape {

HalfKernel::HalfKernel(TimeGrid time, SpaceGrid space, Eigen::MatrixXd matrix)
    : time_(std::move(time)), space_(std::move(space)), matrix_(std::move(matrix)) {
  if (static_cast<std::size_t>(matrix_.rows()) != time_.size() ||
      static_cast<std::size_t>(matrix_.cols()) != space_.size()) {
    throw InvalidArgument("half kernel matrix does not match its grids");
  }
}

FullKernel::FullKernel(TimeGrid time, Eigen::MatrixXd matrix)
    : time_(std::move(time)), matrix_(std::move(matrix)) {
  if (static_cast<std::size_t>(matrix_.rows()) != time_.size() ||
      static_cast<std::size_t>(matrix_.cols()) != time_.size()) {
    throw InvalidArgument("full kernel must be square on its time grid");
  }
}

HalfKernel half_kernel(const DrivingProfile& driving, const SpaceGrid& space) {
  const TimeGrid& time = driving.grid();
  const auto nt = static_cast<Eigen::Index>(time.size());
  const auto nz = static_cast<Eigen::Index>(space.size());
  const Eigen::VectorXd z = space.points();
  if (z.minCoeff() < 0.0) throw InvalidArgument("space grid must start at z >= 0");
  Eigen::MatrixXd k(nt, nz);
  for (Eigen::Index i = 0; i < nt; ++i) {
    const double f = driving.samples()[i];
    const double q = driving.energy()[i];
    for (Eigen::Index j = 0; j < nz; ++j) {
      k(i, j) = f * bessel_j0(2.0 * std::sqrt(q * z[j]));
    }
  }
  return HalfKernel(time, space, std::move(k));
}

SpinWave write(const ModeProfile& input, const HalfKernel& kernel) {
  if (!(input.grid() == kernel.time_grid())) {
    throw InvalidArgument("write: input and kernel use different time grids");
  }
  const Eigen::VectorXd weighted =
      input.samples().cwiseProduct(kernel.time_grid().trapezoid_weights());
  return SpinWave(kernel.space_grid(), kernel.matrix().transpose() * weighted);
}

ModeProfile read(const SpinWave& spin_wave, const HalfKernel& kernel) {
  if (!(spin_wave.grid() == kernel.space_grid())) {
    throw InvalidArgument("read: spin wave and kernel use different space grids");
  }
  const Eigen::VectorXd weighted =
      spin_wave.samples().cwiseProduct(kernel.space_grid().trapezoid_weights());
  return ModeProfile(kernel.time_grid(), kernel.matrix() * weighted);
}

FullKernel full_kernel(const HalfKernel& write_kernel, const HalfKernel& read_kernel) {
  if (!(write_kernel.time_grid() == read_kernel.time_grid()) ||
      !(write_kernel.space_grid() == read_kernel.space_grid())) {
    throw InvalidArgument("full_kernel: write and read kernels use different grids");
  }
  const Eigen::VectorXd wz = write_kernel.space_grid().trapezoid_weights();
  Eigen::MatrixXd g = read_kernel.matrix() * wz.asDiagonal() * write_kernel.matrix().transpose();
  return FullKernel(write_kernel.time_grid(), std::move(g));
}

FullKernel full_kernel(const DrivingProfile& write_driving, const DrivingProfile& read_driving,
                       const SpaceGrid& space) {
  if (!(write_driving.grid() == read_driving.grid())) {
    throw InvalidArgument("full_kernel: drivings use different time grids");
  }
  const HalfKernel kw = half_kernel(write_driving, space);
  if (&write_driving == &read_driving) return full_kernel(kw, kw);
  return full_kernel(kw, half_kernel(read_driving, space));
}

ModeProfile apply(const FullKernel& kernel, const ModeProfile& input) {
  if (!(input.grid() == kernel.time_grid())) {
    throw InvalidArgument("apply: input and kernel use different time grids");
  }
  const Eigen::VectorXd weighted =
      input.samples().cwiseProduct(kernel.time_grid().trapezoid_weights());
  return ModeProfile(kernel.time_grid(), kernel.matrix() * weighted);
}

}  // namespace qmshape
