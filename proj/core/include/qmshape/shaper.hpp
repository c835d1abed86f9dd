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

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "qmshape/driving.hpp"
#include "qmshape/grid.hpp"
#include "qmshape/profile.hpp"

namespace qmshape {

/// How the iteration bracket int_0^L J0^2(2 sqrt(Q z)) dz is evaluated.
enum class BracketEvaluation { kAuto, kSeries, kQuadrature };

/// kAuto uses the alternating series only while L * T_W stays at or below
/// this value; beyond it the terms grow too large before they cancel.
inline constexpr double kSeriesLengthTimeLimit = 30.0;

struct ShaperConfig {
  int target = 1;                      // supermode index i
  double cell_length = 10.0;           // L_phys
  std::optional<double> search_length; // L used inside the iteration; L_phys / 2 if unset
  std::size_t space_samples = 513;     // z grid for kernel reports at L_phys
  int max_steps = 15;
  double tolerance = 1e-3;             // sup-norm relative change of F
  BracketEvaluation evaluation = BracketEvaluation::kAuto;
  int series_terms = 80;
  std::size_t quadrature_nodes = 2049;
  // Rescale every iterate to T_W^{-1} Q(T_W) = 1. Off by default: the plain
  // fixed point F = L_i / sqrt(bracket) is what reproduces the ~95% fidelity
  // and ~9% leakage figures; with rescaling both move (0.98, 2%).
  bool renormalize_each_step = false;
  bool report_kernel = true;

  double effective_search_length() const {
    return search_length.value_or(0.5 * cell_length);
  }
};

/// Throws InvalidArgument on non-positive lengths, negative step counts or
/// tolerances, or too few series terms / quadrature nodes.
void validate(const ShaperConfig& config);

/// log C_k for k = 0..k_max, where
/// C_k = 4^k Gamma(k + 1/2) / (sqrt(pi) (k!)^3) (L T)^{k+1} / (k + 1).
std::vector<double> log_series_coefficients(double length, double time, int k_max);

/// C_k themselves. Throws RangeError if any C_k overflows a double.
std::vector<double> series_coefficients(double length, double time, int k_max);

/// T^{-1} sum_k (-1)^k C_k (Q(t)/T)^k at every sample of `energy`.
/// Throws NumericalCancellation if the sum is not positive somewhere or its
/// rounding error, estimated as eps * sum_k |term_k|, exceeds 1e-4 of it, and
/// NumericalError if the last term is still above 1e-4 of the sum.
Eigen::VectorXd bracket_series(const Eigen::VectorXd& energy, double length, double time,
                               int k_max);

/// Composite Simpson rule over an odd number of `nodes` on [0, L]; the
/// integrand is smooth in z, so 2049 nodes give ~1e-12.
Eigen::VectorXd bracket_quadrature(const Eigen::VectorXd& energy, double length,
                                   std::size_t nodes);

/// Resolves kAuto against the series limit.
bool uses_series(const ShaperConfig& config, double writing_time);

/// F_new(t) = L_i(t) / sqrt(bracket(Q_prev(t))), with L = search length.
DrivingProfile iteration_step(const DrivingProfile& previous, const ModeProfile& target,
                              const ShaperConfig& config);

struct ShaperReport {
  explicit ShaperReport(DrivingProfile d) : driving(std::move(d)) {}

  DrivingProfile driving;
  int steps = 0;
  std::vector<double> residuals;  // residuals[j] compares iterate j+1 with j
  bool converged = false;
  bool used_series = false;
  // Filled when config.report_kernel is set; both at L_phys.
  std::optional<double> kernel_discrepancy;  // max|G - L_i L_i^T| / max|L_i L_i^T|
  std::optional<double> mode_overlap;        // |<phi_1, L_i>|
};

/// Iterates from F^(0) = L_i until the residual drops to the tolerance or
/// max_steps is reached.
ShaperReport shape_driving(const ShaperConfig& config, const ModeProfile& target);

/// 1 - int B^2 dz for B = write(target, half_kernel(driving)) on `space`.
double leakage(const ModeProfile& target, const DrivingProfile& driving, const SpaceGrid& space);

}  // namespace qmshape
