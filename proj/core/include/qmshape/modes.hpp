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

#include <span>
#include <vector>

#include <Eigen/Core>

#include "qmshape/grid.hpp"
#include "qmshape/profile.hpp"

namespace qmshape {

/// Placement of the Hermite-Gaussian supermode basis on [0, T_W].
struct HermiteBasisConfig {
  double center = 0.0;
  double width = 1.0;
  int max_index = 6;
};

/// center = T_W / 2, width = T_W / 10.
HermiteBasisConfig default_basis_config(const TimeGrid& grid, int max_index = 6);

/// Throws InvalidArgument unless width > 0, max_index >= 1 and the center
/// lies strictly inside the grid.
void validate(const HermiteBasisConfig& config, const TimeGrid& grid);

/// Supermode L_k(t) = N_k H_{k-1}((t - c)/w) exp(-(t - c)^2 / (2 w^2)),
/// k = 1..max_index, unit-normalized under the trapezoid rule. L_1 is the
/// Gaussian; L_k has parity (-1)^(k-1) about the center.
ModeProfile hermite_mode(int k, const TimeGrid& grid, const HermiteBasisConfig& config);

/// L_1 .. L_{max_index}.
std::vector<ModeProfile> hermite_basis(const TimeGrid& grid, const HermiteBasisConfig& config);

/// Pairwise overlaps. All modes must share one grid.
Eigen::MatrixXd gram_matrix(std::span<const ModeProfile> modes);

/// max |Gram - I|, the orthonormality defect of a basis.
double orthonormality_defect(std::span<const ModeProfile> modes);

}  // namespace qmshape
