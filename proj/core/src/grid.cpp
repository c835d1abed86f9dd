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

#include "qmshape/grid.hpp"

namespace qmshape {

TimeGrid make_time_grid(double writing_time, std::size_t samples) {
  if (!(writing_time > 0.0) || !std::isfinite(writing_time)) {
    throw InvalidArgument("writing time must be positive and finite");
  }
  return TimeGrid(0.0, writing_time, samples);
}

SpaceGrid make_space_grid(double length, std::size_t samples) {
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw InvalidArgument("cell length must be positive and finite");
  }
  return SpaceGrid(0.0, length, samples);
}

double trapezoid(const Eigen::Ref<const Eigen::VectorXd>& values, double step) {
  const Eigen::Index n = values.size();
  if (n < 2) return 0.0;
  double interior = 0.0;
  for (Eigen::Index i = 1; i + 1 < n; ++i) interior += values[i];
  return step * (interior + 0.5 * (values[0] + values[n - 1]));
}

Eigen::VectorXd cumulative_trapezoid(const Eigen::Ref<const Eigen::VectorXd>& values,
                                     double step) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(values.size());
  for (Eigen::Index i = 1; i < values.size(); ++i) {
    out[i] = out[i - 1] + 0.5 * step * (values[i - 1] + values[i]);
  }
  return out;
}

}  // namespace qmshape
