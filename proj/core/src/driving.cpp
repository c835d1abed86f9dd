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

#include "qmshape/driving.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qmshape/error.hpp"

namespace qmshape {
namespace {

const ModeProfile& require_finite(const ModeProfile& p) {
  if (!p.samples().allFinite()) throw InvalidArgument("driving samples must be finite");
  return p;
}

}  // namespace

DrivingProfile::DrivingProfile(const ModeProfile& amplitude)
    : amplitude_(require_finite(amplitude)),
      energy_(cumulative_trapezoid(amplitude_.samples().array().square().matrix(),
                                   amplitude_.grid().step())) {}

DrivingProfile accumulate_energy(const ModeProfile& envelope, Renormalize renormalize) {
  DrivingProfile raw(envelope);
  if (renormalize == Renormalize::kNo) return raw;
  const double total = raw.total_energy();
  if (!(total > 0.0)) {
    throw DegenerateDriving("cannot normalize a driving field with zero energy");
  }
  const double factor = std::sqrt(raw.grid().span() / total);
  return DrivingProfile(raw.amplitude().scaled(factor));
}

DrivingProfile constant_driving(const TimeGrid& grid, double level) {
  return DrivingProfile(ModeProfile(
      grid, Eigen::VectorXd::Constant(static_cast<Eigen::Index>(grid.size()), level)));
}

ModeProfile build_pulse_train(const DrivingProfile& envelope, const PulseTrain& train) {
  if (train.count < 1) throw InvalidArgument("pulse train needs at least one pulse");
  if (!(train.pulse_duration > 0.0) || !(train.period > 0.0)) {
    throw InvalidArgument("pulse duration and period must be positive");
  }
  if (train.count > 1 && !(train.pulse_duration < train.period)) {
    throw InvalidArgument("pulse duration must be shorter than the repetition period");
  }
  const TimeGrid& grid = envelope.grid();
  // Tolerate rounding in (N-1) T + T_0 when the train fills the window exactly.
  const double slack = 1e-12 * grid.span();
  if (train.duration() > grid.span() + slack) {
    throw InvalidArgument("pulse train is longer than the time grid");
  }
  Eigen::VectorXd gated = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double t = grid[i] - grid.start();
    // Points past the last period start still belong to the last pulse.
    const double n = std::min(std::floor(t / train.period), train.count - 1.0);
    const double local = t - n * train.period;
    if (local <= train.pulse_duration + slack) {
      gated[static_cast<Eigen::Index>(i)] = envelope.samples()[static_cast<Eigen::Index>(i)];
    }
  }
  return ModeProfile(grid, std::move(gated), envelope.amplitude().label());
}

DrivingProfile envelope_rescale(const ModeProfile& envelope, double pulse_duration, double period) {
  if (!(pulse_duration > 0.0) || !(period > 0.0) || pulse_duration > period) {
    throw InvalidArgument("envelope rescale needs 0 < pulse_duration <= period");
  }
  return DrivingProfile(envelope.scaled(std::sqrt(pulse_duration / period)));
}

double DimensionlessScaling::time_unit() const {
  return std::abs(detuning) / (rabi_frequency * rabi_frequency);
}

double DimensionlessScaling::length_unit() const {
  return std::abs(detuning) / (coupling * coupling * linear_density);
}

double DimensionlessScaling::raman_ratio() const {
  if (decay_rate == 0.0) return std::numeric_limits<double>::infinity();
  return std::abs(detuning) / decay_rate;
}

}  // namespace qmshape
