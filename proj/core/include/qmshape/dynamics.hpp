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

#include "qmshape/driving.hpp"
#include "qmshape/grid.hpp"
#include "qmshape/profile.hpp"

namespace qmshape {

/// Result of marching the co-moving equations
///   dB/dt = F(t) a(t, z),   da/dz = -F(t) B(t, z)
/// across the cell. Energies are the scheme's own discrete sums, for which
/// input = stored + exit holds to roundoff.
struct DynamicsResult {
  SpinWave spin_wave;   // B(z) after the last time step
  ModeProfile exit_field;  // field leaving the cell, sampled on the time grid
  double input_energy = 0.0;
  double stored_energy = 0.0;
  double exit_energy = 0.0;
};

/// Forward writing: the signal enters at z = 0 with the driving, the atoms
/// start in the ground state. Returns the stored spin wave and the leaked
/// field at z = L.
///
/// The write kernel K(t, z) = F(t) J0(2 sqrt(Q(t) z)) is this map applied to
/// the time-reversed signal and driving; see `reversed`.
///
/// Requires dt <= dz; throws InvalidArgument otherwise or on grid mismatch.
DynamicsResult integrate_write(const ModeProfile& input, const DrivingProfile& driving,
                               const SpaceGrid& space);

/// Backward readout: the driving enters at z = L and the retrieved field
/// leaves at z = 0. The constant pi phase of the retrieved field is
/// removed, so the result is directly comparable with `read`.
///
/// Requires dt <= dz; throws InvalidArgument otherwise.
DynamicsResult integrate_read(const SpinWave& spin_wave, const DrivingProfile& driving);

}  // namespace qmshape
