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
#include <optional>
#include <string>
#include <utility>

#include <Eigen/Core>

#include "qmshape/error.hpp"
#include "qmshape/grid.hpp"

namespace qmshape {

/// Real samples of a function on a uniform grid, with an optional supermode
/// label (1-based, L_1 is the Gaussian).
template <class Grid>
class Profile {
 public:
  Profile(Grid grid, Eigen::VectorXd samples, std::optional<int> label = std::nullopt)
      : grid_(std::move(grid)), samples_(std::move(samples)), label_(label) {
    if (static_cast<std::size_t>(samples_.size()) != grid_.size()) {
      throw InvalidArgument("profile has " + std::to_string(samples_.size()) +
                            " samples but its grid has " + std::to_string(grid_.size()));
    }
  }

  static Profile zeros(const Grid& grid) {
    return Profile(grid, Eigen::VectorXd::Zero(static_cast<Eigen::Index>(grid.size())));
  }

  const Grid& grid() const { return grid_; }
  const Eigen::VectorXd& samples() const { return samples_; }
  std::optional<int> label() const { return label_; }
  std::size_t size() const { return grid_.size(); }
  double operator[](std::size_t i) const { return samples_[static_cast<Eigen::Index>(i)]; }

  /// sqrt of the trapezoid integral of the squared samples.
  double norm() const { return std::sqrt(trapezoid(samples_.array().square().matrix(), grid_.step())); }

  /// True when the quadrature norm is 1 within `tolerance`.
  bool is_normalized(double tolerance = 1e-6) const {
    const double n2 = norm() * norm();
    return std::abs(n2 - 1.0) <= tolerance;
  }

  Profile scaled(double factor) const { return Profile(grid_, samples_ * factor, label_); }

  Profile with_label(std::optional<int> label) const { return Profile(grid_, samples_, label); }

 private:
  Grid grid_;
  Eigen::VectorXd samples_;
  std::optional<int> label_;
};

/// Signal (or driving) time profile on [0, T_W].
using ModeProfile = Profile<TimeGrid>;

/// Spin-wave (collective coherence) profile B(z) on [0, L].
using SpinWave = Profile<SpaceGrid>;

template <class Grid>
void require_same_grid(const Profile<Grid>& a, const Profile<Grid>& b) {
  if (!(a.grid() == b.grid())) {
    throw InvalidArgument("profiles live on different grids");
  }
}

/// Trapezoid inner product of two profiles on the same grid.
template <class Grid>
double overlap(const Profile<Grid>& a, const Profile<Grid>& b) {
  require_same_grid(a, b);
  return trapezoid(a.samples().cwiseProduct(b.samples()), a.grid().step());
}

/// Unit-norm copy. Throws DegenerateResponse for a zero profile.
template <class Grid>
Profile<Grid> normalized(const Profile<Grid>& p) {
  const double n = p.norm();
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DegenerateResponse("cannot normalize a profile with zero norm");
  }
  return p.scaled(1.0 / n);
}

/// Profile reflected in time (or space): p(start + end - x).
template <class Grid>
Profile<Grid> reversed(const Profile<Grid>& p) {
  return Profile<Grid>(p.grid(), p.samples().reverse().eval(), p.label());
}

}  // namespace qmshape
