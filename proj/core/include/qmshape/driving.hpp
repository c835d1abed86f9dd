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

#include <Eigen/Core>

#include "qmshape/grid.hpp"
#include "qmshape/profile.hpp"

namespace qmshape {

/// A real driving-field envelope F(t) together with its accumulated energy
/// Q(t) = int_0^t F^2 (cumulative trapezoid). Samples may change sign: a sign
/// flip is a pi phase jump of the control field, which is what the shaped
/// drivings for the odd-order supermodes need.
class DrivingProfile {
 public:
  /// Computes Q from the samples. Non-finite samples are rejected.
  explicit DrivingProfile(const ModeProfile& amplitude);

  const TimeGrid& grid() const { return amplitude_.grid(); }
  const ModeProfile& amplitude() const { return amplitude_; }
  const Eigen::VectorXd& samples() const { return amplitude_.samples(); }
  const Eigen::VectorXd& energy() const { return energy_; }
  double total_energy() const { return energy_[energy_.size() - 1]; }

  /// T^{-1} Q(T), with T the window length.
  double mean_square() const { return total_energy() / grid().span(); }

  /// Unit mean-square normalization T^{-1} Q(T) = 1 within `tolerance`.
  bool is_unit_mean_square(double tolerance = 1e-6) const {
    return std::abs(mean_square() - 1.0) <= tolerance;
  }

 private:
  ModeProfile amplitude_;
  Eigen::VectorXd energy_;
};

enum class Renormalize { kNo, kUnitMeanSquare };

/// Builds a DrivingProfile; with kUnitMeanSquare the amplitude is scaled by
/// sqrt(T / Q(T)) first. Throws DegenerateDriving when asked to renormalize an
/// all-zero envelope.
DrivingProfile accumulate_energy(const ModeProfile& envelope,
                                 Renormalize renormalize = Renormalize::kNo);

/// Constant driving F = 1, which satisfies the unit mean-square condition.
DrivingProfile constant_driving(const TimeGrid& grid, double level = 1.0);

/// Pulse-train geometry: `count` gates of width `pulse_duration` every `period`.
struct PulseTrain {
  int count = 1;
  double period = 1.0;
  double pulse_duration = 1.0;

  /// (count - 1) * period + pulse_duration.
  double duration() const { return (count - 1) * period + pulse_duration; }
};

/// f(t) = sum_n F(t) Theta(t - (n-1) T) with Theta(t) = H(t) H(T_0 - t):
/// the envelope gated by `count` rectangular windows. Throws InvalidArgument
/// if the train does not fit on the grid or the geometry is inconsistent.
ModeProfile build_pulse_train(const DrivingProfile& envelope, const PulseTrain& train);

/// Envelope passage for a pulsed field: F -> sqrt(T_0 / T) F, then Q.
/// Requires 0 < pulse_duration <= period.
DrivingProfile envelope_rescale(const ModeProfile& envelope, double pulse_duration, double period);

/// Physical rates used only to convert dimensionless results back to SI and
/// to report how deep into the Raman limit a parameter set is.
struct DimensionlessScaling {
  double rabi_frequency = 1.0;   // Omega_0
  double detuning = 1.0;         // Delta
  double coupling = 1.0;         // g
  double linear_density = 1.0;   // N_at / L
  double decay_rate = 0.0;       // gamma

  /// Physical time per dimensionless unit, |Delta| / Omega_0^2.
  double time_unit() const;
  /// Physical length per dimensionless unit, |Delta| / (g^2 N_at / L).
  double length_unit() const;
  /// |Delta| / gamma; large values mean the Raman limit holds. Infinite for
  /// gamma = 0.
  double raman_ratio() const;
};

}  // namespace qmshape
