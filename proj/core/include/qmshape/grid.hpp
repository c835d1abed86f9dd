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
#include <cstddef>
#include <string>

#include <Eigen/Core>

#include "qmshape/error.hpp"

namespace qmshape {

// All quantities are dimensionless: time in units of Delta / Omega_0^2 and
// length in units of Delta / (g^2 N_at / L).

/// Uniform sampling of a closed interval [start, end]. The tag keeps time and
/// space grids from being mixed up at compile time.
template <class Axis>
class UniformGrid {
 public:
  UniformGrid(double start, double end, std::size_t size)
      : start_(start), end_(end), size_(size) {
    if (!std::isfinite(start) || !std::isfinite(end)) {
      throw InvalidArgument(std::string(Axis::kName) + " grid bounds must be finite");
    }
    if (size < 2) {
      throw InvalidArgument(std::string(Axis::kName) + " grid needs at least 2 samples");
    }
    if (!(end > start)) {
      throw InvalidArgument(std::string(Axis::kName) + " grid must have end > start");
    }
    step_ = (end - start) / static_cast<double>(size - 1);
  }

  double start() const { return start_; }
  double end() const { return end_; }
  double span() const { return end_ - start_; }
  std::size_t size() const { return size_; }
  double step() const { return step_; }

  /// The last point is pinned to `end` so the span is exact.
  double operator[](std::size_t i) const {
    return i + 1 == size_ ? end_ : start_ + step_ * static_cast<double>(i);
  }

  Eigen::VectorXd points() const {
    Eigen::VectorXd p(static_cast<Eigen::Index>(size_));
    for (std::size_t i = 0; i < size_; ++i) p[static_cast<Eigen::Index>(i)] = (*this)[i];
    return p;
  }

  /// Trapezoid weights: step everywhere except step/2 at both ends.
  Eigen::VectorXd trapezoid_weights() const {
    Eigen::VectorXd w = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(size_), step_);
    w[0] *= 0.5;
    w[w.size() - 1] *= 0.5;
    return w;
  }

  friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

 private:
  double start_;
  double end_;
  std::size_t size_;
  double step_ = 0.0;
};

struct TimeAxis {
  static constexpr const char* kName = "time";
};
struct SpaceAxis {
  static constexpr const char* kName = "space";
};

using TimeGrid = UniformGrid<TimeAxis>;
using SpaceGrid = UniformGrid<SpaceAxis>;

/// Uniform grid on [0, writing_time].
TimeGrid make_time_grid(double writing_time, std::size_t samples);

/// Uniform grid on [0, length] across the cell.
SpaceGrid make_space_grid(double length, std::size_t samples);

/// Definite trapezoid integral of uniformly spaced samples.
double trapezoid(const Eigen::Ref<const Eigen::VectorXd>& values, double step);

/// Running trapezoid integral; result[0] == 0.
Eigen::VectorXd cumulative_trapezoid(const Eigen::Ref<const Eigen::VectorXd>& values,
                                     double step);

}  // namespace qmshape
