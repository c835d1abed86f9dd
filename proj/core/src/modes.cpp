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

#include "qmshape/modes.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qmshape {

HermiteBasisConfig default_basis_config(const TimeGrid& grid, int max_index) {
  return HermiteBasisConfig{
      .center = grid.start() + 0.5 * grid.span(),
      .width = grid.span() / 10.0,
      .max_index = max_index,
  };
}

void validate(const HermiteBasisConfig& config, const TimeGrid& grid) {
  if (!(config.width > 0.0) || !std::isfinite(config.width)) {
    throw InvalidArgument("Hermite basis width must be positive");
  }
  if (config.max_index < 1) {
    throw InvalidArgument("Hermite basis needs max_index >= 1");
  }
  if (!(config.center > grid.start() && config.center < grid.end())) {
    throw InvalidArgument("Hermite basis center must lie inside the time window");
  }
}

ModeProfile hermite_mode(int k, const TimeGrid& grid, const HermiteBasisConfig& config) {
  validate(config, grid);
  if (k < 1 || k > config.max_index) {
    throw InvalidArgument("supermode index " + std::to_string(k) + " outside 1.." +
                          std::to_string(config.max_index));
  }
  const int order = k - 1;
  Eigen::VectorXd v(static_cast<Eigen::Index>(grid.size()));
  // Normalized Hermite functions via the three-term recurrence; avoids the
  // overflow of H_n(x) and n! for large orders.
  const double psi0_scale = 1.0 / std::sqrt(std::sqrt(std::numbers::pi));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = (grid[i] - config.center) / config.width;
    double prev = 0.0;
    double cur = psi0_scale * std::exp(-0.5 * x * x);
    for (int n = 0; n < order; ++n) {
      const double next = std::sqrt(2.0 / (n + 1)) * x * cur - std::sqrt(double(n) / (n + 1)) * prev;
      prev = cur;
      cur = next;
    }
    v[static_cast<Eigen::Index>(i)] = cur;
  }
  ModeProfile raw(grid, std::move(v), k);
  return normalized(raw);
}

std::vector<ModeProfile> hermite_basis(const TimeGrid& grid, const HermiteBasisConfig& config) {
  std::vector<ModeProfile> basis;
  basis.reserve(static_cast<std::size_t>(config.max_index));
  for (int k = 1; k <= config.max_index; ++k) basis.push_back(hermite_mode(k, grid, config));
  return basis;
}

Eigen::MatrixXd gram_matrix(std::span<const ModeProfile> modes) {
  if (modes.empty()) throw InvalidArgument("gram_matrix needs at least one mode");
  const auto n = static_cast<Eigen::Index>(modes.size());
  Eigen::MatrixXd g(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double v = overlap(modes[static_cast<std::size_t>(i)], modes[static_cast<std::size_t>(j)]);
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

double orthonormality_defect(std::span<const ModeProfile> modes) {
  const Eigen::MatrixXd g = gram_matrix(modes);
  return (g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff();
}

}  // namespace qmshape
