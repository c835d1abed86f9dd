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


#include "qmshape/shaper.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qmshape/bessel.hpp"
#include "qmshape/error.hpp"
#include "qmshape/kernels.hpp"
#include "qmshape/schmidt.hpp"

namespace qmshape {
namespace {

// Largest argument of exp that stays finite in double.
constexpr double kLogDoubleMax = 709.0;
// Largest tolerated relative rounding error, and relative size of the last
// series term, in the bracket.
constexpr double kSeriesRoundingBudget = 1e-4;

double sup_relative_change(const Eigen::VectorXd& next, const Eigen::VectorXd& prev) {
  const double scale = next.cwiseAbs().maxCoeff();
  if (!(scale > 0.0)) return 0.0;
  return (next - prev).cwiseAbs().maxCoeff() / scale;
}

DrivingProfile start_driving(const ModeProfile& target, bool renormalize) {
  return accumulate_energy(target,
                           renormalize ? Renormalize::kUnitMeanSquare : Renormalize::kNo);
}

}  // namespace

void validate(const ShaperConfig& c) {
  if (c.target < 1) throw InvalidArgument("shaper target index must be >= 1");
  if (!(c.cell_length > 0.0) || !std::isfinite(c.cell_length)) {
    throw InvalidArgument("cell length must be positive");
  }
  const double ls = c.effective_search_length();
  if (!(ls > 0.0) || !std::isfinite(ls)) throw InvalidArgument("search length must be positive");
  if (c.space_samples < 2) throw InvalidArgument("space_samples must be >= 2");
  if (c.max_steps < 0) throw InvalidArgument("max_steps must be >= 0");
  if (!(c.tolerance >= 0.0)) throw InvalidArgument("tolerance must be >= 0");
  if (c.series_terms < 1) throw InvalidArgument("series_terms must be >= 1");
  if (c.quadrature_nodes < 3 || c.quadrature_nodes % 2 == 0) {
    throw InvalidArgument("quadrature_nodes must be odd and >= 3");
  }
}

std::vector<double> log_series_coefficients(double length, double time, int k_max) {
  if (k_max < 0) throw InvalidArgument("k_max must be >= 0");
  if (!(length > 0.0) || !(time > 0.0)) throw InvalidArgument("L and T must be positive");
  const double log_lt = std::log(length * time);
  const double log_sqrt_pi = 0.5 * std::log(std::numbers::pi);
  std::vector<double> out(static_cast<std::size_t>(k_max) + 1);
  for (int k = 0; k <= k_max; ++k) {
    out[static_cast<std::size_t>(k)] = k * 2.0 * std::numbers::ln2 + std::lgamma(k + 0.5) -
                                       log_sqrt_pi - 3.0 * std::lgamma(k + 1.0) +
                                       (k + 1) * log_lt - std::log(k + 1.0);
  }
  return out;
}

std::vector<double> series_coefficients(double length, double time, int k_max) {
  std::vector<double> logs = log_series_coefficients(length, time, k_max);
  for (std::size_t k = 0; k < logs.size(); ++k) {
    if (logs[k] > kLogDoubleMax) {
      throw RangeError("series coefficient C_" + std::to_string(k) + " overflows");
    }
    logs[k] = std::exp(logs[k]);
  }
  return logs;
}

Eigen::VectorXd bracket_series(const Eigen::VectorXd& energy, double length, double time,
                               int k_max) {
  const std::vector<double> log_c = log_series_coefficients(length, time, k_max);
  for (std::size_t k = 0; k < log_c.size(); ++k) {
    if (log_c[k] > kLogDoubleMax) {
      throw RangeError("series coefficient C_" + std::to_string(k) + " overflows");
    }
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  Eigen::VectorXd out(energy.size());
  for (Eigen::Index i = 0; i < energy.size(); ++i) {
    const double a = energy[i] / time;
    double sum = std::exp(log_c[0]);
    double magnitude = sum;
    double last = sum;
    if (a > 0.0) {
      const double log_a = std::log(a);
      for (std::size_t k = 1; k < log_c.size(); ++k) {
        const double term = std::exp(log_c[k] + static_cast<double>(k) * log_a);
        sum += (k % 2 == 0) ? term : -term;
        magnitude += term;
        last = term;
      }
    }
    // Rounding in the alternating sum is about eps * sum |term|.
    if (!(sum > 0.0) || kSeriesRoundingBudget * sum < eps * magnitude) {
      throw NumericalCancellation(
          "series bracket lost its precision to cancellation; use quadrature evaluation");
    }
    if (a > 0.0 && last > kSeriesRoundingBudget * sum) {
      throw NumericalError("series bracket not converged after " + std::to_string(k_max) +
                           " terms");
    }
    out[i] = sum / time;
  }
  return out;
}

Eigen::VectorXd bracket_quadrature(const Eigen::VectorXd& energy, double length,
                                   std::size_t nodes) {
  if (nodes < 3 || nodes % 2 == 0) throw InvalidArgument("Simpson rule needs an odd node count >= 3");
  const SpaceGrid z = make_space_grid(length, nodes);
  const Eigen::VectorXd zp = z.points();
  Eigen::VectorXd w = Eigen::VectorXd::Constant(zp.size(), 2.0);
  for (Eigen::Index j = 1; j < zp.size(); j += 2) w[j] = 4.0;
  w[0] = 1.0;
  w[w.size() - 1] = 1.0;
  w *= z.step() / 3.0;
  Eigen::VectorXd out(energy.size());
  for (Eigen::Index i = 0; i < energy.size(); ++i) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < zp.size(); ++j) {
      const double j0 = bessel_j0(2.0 * std::sqrt(energy[i] * zp[j]));
      sum += w[j] * j0 * j0;
    }
    out[i] = sum;
  }
  return out;
}

bool uses_series(const ShaperConfig& config, double writing_time) {
  switch (config.evaluation) {
    case BracketEvaluation::kSeries:
      return true;
    case BracketEvaluation::kQuadrature:
      return false;
    case BracketEvaluation::kAuto:
      break;
  }
  return config.effective_search_length() * writing_time <= kSeriesLengthTimeLimit;
}

DrivingProfile iteration_step(const DrivingProfile& previous, const ModeProfile& target,
                              const ShaperConfig& config) {
  validate(config);
  if (!(previous.grid() == target.grid())) {
    throw InvalidArgument("iteration_step: driving and target use different grids");
  }
  const double length = config.effective_search_length();
  const double time = target.grid().span();
  const Eigen::VectorXd bracket =
      uses_series(config, time)
          ? bracket_series(previous.energy(), length, time, config.series_terms)
          : bracket_quadrature(previous.energy(), length, config.quadrature_nodes);
  Eigen::VectorXd next = target.samples().cwiseQuotient(bracket.cwiseSqrt());
  return start_driving(ModeProfile(target.grid(), std::move(next), target.label()),
                       config.renormalize_each_step);
}

ShaperReport shape_driving(const ShaperConfig& config, const ModeProfile& target) {
  validate(config);
  ShaperReport report(start_driving(target, config.renormalize_each_step));
  report.used_series = uses_series(config, target.grid().span());
  for (int step = 0; step < config.max_steps; ++step) {
    DrivingProfile next = iteration_step(report.driving, target, config);
    const double r = sup_relative_change(next.samples(), report.driving.samples());
    report.residuals.push_back(r);
    report.driving = std::move(next);
    report.steps = step + 1;
    if (r <= config.tolerance) {
      report.converged = true;
      break;
    }
  }

  if (config.report_kernel) {
    const SpaceGrid space = make_space_grid(config.cell_length, config.space_samples);
    const HalfKernel k = half_kernel(report.driving, space);
    const FullKernel g = full_kernel(k, k);
    const Eigen::MatrixXd ideal = target.samples() * target.samples().transpose();
    report.kernel_discrepancy =
        (g.matrix() - ideal).cwiseAbs().maxCoeff() / ideal.cwiseAbs().maxCoeff();
    const SchmidtSpectrum s = decompose(g);
    report.mode_overlap = std::abs(overlap(s.modes.front(), target));
  }
  return report;
}

double leakage(const ModeProfile& target, const DrivingProfile& driving, const SpaceGrid& space) {
  const SpinWave b = write(target, half_kernel(driving, space));
  const double stored = b.norm();
  return 1.0 - stored * stored;
}

}  // namespace qmshape
