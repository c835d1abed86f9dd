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


#include "qmshape/dynamics.hpp"

#include <cstddef>

#include <Eigen/Core>

#include "qmshape/error.hpp"

namespace qmshape {
namespace {

// Staggered box scheme. B lives at space-cell centres, the field at
// time-cell centres; each (time, space) cell is closed with the trapezoid
// rule in both directions, which makes the discrete energy balance exact.
struct Marching {
  Eigen::VectorXd cells;  // B at space-cell centres
  Eigen::VectorXd exit;   // field at time-cell centres, leaving the last cell
};

Marching march(const Eigen::VectorXd& field_in, const Eigen::VectorXd& driving,
               Eigen::VectorXd cells, double dt, double dz) {
  const Eigen::Index steps = driving.size() - 1;
  Eigen::VectorXd exit(steps);
  for (Eigen::Index m = 0; m < steps; ++m) {
    const double f = 0.5 * (driving[m] + driving[m + 1]);
    const double kappa = 0.25 * dt * dz * f * f;
    double a = field_in[m];
    for (Eigen::Index j = 0; j < cells.size(); ++j) {
      const double b = cells[j];
      const double a_next = (a * (1.0 - kappa) - dz * f * b) / (1.0 + kappa);
      cells[j] = b + 0.5 * dt * f * (a + a_next);
      a = a_next;
    }
    exit[m] = a;
  }
  return {std::move(cells), std::move(exit)};
}

// Cell/midpoint values back onto the nodes: interior nodes average their two
// neighbours, end nodes extrapolate linearly.
Eigen::VectorXd to_nodes(const Eigen::VectorXd& mid) {
  const Eigen::Index n = mid.size();
  Eigen::VectorXd nodes(n + 1);
  if (n == 1) {
    nodes.setConstant(mid[0]);
    return nodes;
  }
  nodes[0] = 1.5 * mid[0] - 0.5 * mid[1];
  nodes[n] = 1.5 * mid[n - 1] - 0.5 * mid[n - 2];
  for (Eigen::Index i = 1; i < n; ++i) nodes[i] = 0.5 * (mid[i - 1] + mid[i]);
  return nodes;
}

Eigen::VectorXd to_mid(const Eigen::VectorXd& nodes) {
  return 0.5 * (nodes.head(nodes.size() - 1) + nodes.tail(nodes.size() - 1));
}

void check_steps(const TimeGrid& time, const SpaceGrid& space) {
  if (time.step() > space.step() * (1.0 + 1e-12)) {
    throw InvalidArgument("dynamics requires dt <= dz");
  }
}

}  // namespace

DynamicsResult integrate_write(const ModeProfile& input, const DrivingProfile& driving,
                               const SpaceGrid& space) {
  if (!(input.grid() == driving.grid())) {
    throw InvalidArgument("integrate_write: input and driving use different time grids");
  }
  const TimeGrid& time = driving.grid();
  check_steps(time, space);
  const double dt = time.step();
  const double dz = space.step();
  const Eigen::VectorXd a_in = to_mid(input.samples());
  Marching r = march(a_in, driving.samples(),
                     Eigen::VectorXd::Zero(static_cast<Eigen::Index>(space.size()) - 1), dt, dz);
  DynamicsResult out{
      .spin_wave = SpinWave(space, to_nodes(r.cells)),
      .exit_field = ModeProfile(time, to_nodes(r.exit)),
      .input_energy = dt * a_in.squaredNorm(),
      .stored_energy = dz * r.cells.squaredNorm(),
      .exit_energy = dt * r.exit.squaredNorm(),
  };
  return out;
}

DynamicsResult integrate_read(const SpinWave& spin_wave, const DrivingProfile& driving) {
  const TimeGrid& time = driving.grid();
  const SpaceGrid& space = spin_wave.grid();
  check_steps(time, space);
  const double dt = time.step();
  const double dz = space.step();
  // Propagation runs from z = L to z = 0: march in the reflected coordinate.
  const Eigen::VectorXd initial = to_mid(spin_wave.samples().reverse().eval());
  const double initial_energy = dz * initial.squaredNorm();
  Marching r = march(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(time.size()) - 1),
                     driving.samples(), initial, dt, dz);
  r.exit = -r.exit;
  DynamicsResult out{
      .spin_wave = SpinWave(space, to_nodes(r.cells.reverse().eval())),
      .exit_field = ModeProfile(time, to_nodes(r.exit)),
      .input_energy = initial_energy,
      .stored_energy = dz * r.cells.squaredNorm(),
      .exit_energy = dt * r.exit.squaredNorm(),
  };
  return out;
}

}  // namespace qmshape
