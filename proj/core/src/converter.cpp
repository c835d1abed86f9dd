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


#include "qmshape/converter.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qmshape/error.hpp"
#include "qmshape/kernels.hpp"

namespace qmshape {

ConversionResult convert(const DrivingProfile& write_driving, const DrivingProfile& read_driving,
                         std::span<const ModeProfile> basis, const SpaceGrid& space,
                         ConversionPair pair) {
  const auto n = static_cast<Eigen::Index>(basis.size());
  if (n == 0) throw InvalidArgument("convert needs a non-empty basis");
  if (pair.input < 1 || pair.input > n || pair.output < 1 || pair.output > n) {
    throw InvalidArgument("conversion pair outside the basis");
  }
  const HalfKernel kw = half_kernel(write_driving, space);
  const HalfKernel kr = half_kernel(read_driving, space);
  const Eigen::Index in = pair.input - 1;
  const Eigen::Index out = pair.output - 1;

  Eigen::MatrixXd m(n, n);
  std::optional<ModeProfile> designated;
  for (Eigen::Index k = 0; k < n; ++k) {
    ModeProfile result = read(write(basis[static_cast<std::size_t>(k)], kw), kr);
    for (Eigen::Index j = 0; j < n; ++j) {
      m(j, k) = overlap(basis[static_cast<std::size_t>(j)], result);
    }
    if (k == in) designated = std::move(result);
  }

  double cross = 0.0;
  int strong_columns = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m.col(k).squaredNorm() > 0.5) ++strong_columns;
    if (k != in) cross = std::max(cross, m.col(k).cwiseAbs().maxCoeff());
  }
  const double fidelity = m(out, in);
  const double efficiency = designated->norm();
  return ConversionResult{
      .amplitude_map = std::move(m),
      .output = std::move(*designated),
      .fidelity = fidelity,
      .efficiency = efficiency,
      .cross_talk = cross,
      .multimode = strong_columns > 1,
  };
}

ModeProfile convert_profile(const ModeProfile& input, const DrivingProfile& write_driving,
                            const DrivingProfile& read_driving, const SpaceGrid& space) {
  return read(write(input, half_kernel(write_driving, space)), half_kernel(read_driving, space));
}

Eigen::MatrixXd response_identity(std::span<const DrivingProfile> drivings,
                                  std::span<const ModeProfile> targets, const SpaceGrid& space) {
  if (drivings.size() != targets.size() || drivings.empty()) {
    throw InvalidArgument("response_identity needs one driving per target");
  }
  std::vector<SpinWave> waves;
  waves.reserve(drivings.size());
  for (std::size_t i = 0; i < drivings.size(); ++i) {
    const SpinWave b = write(targets[i], half_kernel(drivings[i], space));
    const double norm = b.norm();
    if (!(norm >= 1e-6)) {
      throw DegenerateResponse("spin wave " + std::to_string(i + 1) + " has norm below 1e-6");
    }
    waves.push_back(b.scaled(1.0 / norm));
  }
  const auto n = static_cast<Eigen::Index>(waves.size());
  Eigen::MatrixXd o(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = overlap(waves[static_cast<std::size_t>(i)], waves[static_cast<std::size_t>(j)]);
      o(i, j) = v;
      o(j, i) = v;
    }
  }
  return o;
}

}  // namespace qmshape
