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

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "qmshape/error.hpp"

namespace qmshape {

/// Quadrature variance of the vacuum, x = (a + a^dagger) / 2.
inline constexpr double kVacuumVariance = 0.25;

/// Linear-optics transformation a -> U a on n modes. Modes are numbered 1..n
/// in every function below.
class ModeUnitary {
 public:
  explicit ModeUnitary(Eigen::MatrixXcd matrix);

  static ModeUnitary identity(std::size_t modes);

  const Eigen::MatrixXcd& matrix() const { return matrix_; }
  std::size_t modes() const { return static_cast<std::size_t>(matrix_.rows()); }

  /// max |U^dagger U - I|.
  double unitarity_defect() const;

  friend ModeUnitary operator*(const ModeUnitary& a, const ModeUnitary& b);

 private:
  Eigen::MatrixXcd matrix_;
};

/// e^{i angle} on `mode`, identity elsewhere.
ModeUnitary phase_shifter(std::size_t modes, std::size_t mode, double angle);

/// Block [[sqrt(1-T), sqrt(T)], [sqrt(T), -sqrt(1-T)]] on (i, j); T = 0.5
/// gives the balanced splitter [[1, 1], [1, -1]] / sqrt(2).
ModeUnitary beamsplitter(std::size_t modes, std::size_t i, std::size_t j, double transmissivity);

/// F3 F2 BS1 BS2 F3 F4 BS3 F3 F2 on four modes, where F_k puts a phase
/// +-pi/2 on mode k, BS1 and BS2 are balanced splitters on (1,2) and (3,4)
/// and BS3 is a T = 0.8 splitter on (2,3).
ModeUnitary compose_cluster_unitary();

/// The same transformation written out entry by entry.
ModeUnitary reference_cluster_unitary();

/// Omega = diag([[0, 1], [-1, 0]], ...), ordering x1, y1, ..., xn, yn.
Eigen::MatrixXd symplectic_form(std::size_t modes);

/// Quadrature map induced by U. Throws InvalidArgument if U is not unitary
/// to 1e-10.
Eigen::MatrixXd unitary_to_symplectic(const ModeUnitary& u);

/// max |S Omega S^T - Omega|.
double symplectic_defect(const Eigen::MatrixXd& s);

enum class Quadrature { kX, kY };

/// A pure (by default) single-mode squeezed state. The conjugate quadrature
/// gets 1 / (16 variance) unless `anti_variance` is positive.
struct SqueezedInput {
  Quadrature squeezed = Quadrature::kX;
  double variance = kVacuumVariance;
  double anti_variance = 0.0;
};

class GaussianState {
 public:
  /// Throws InvalidArgument on odd or mismatched sizes or a covariance that
  /// is not symmetric.
  GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd covariance);

  static GaussianState vacuum(std::size_t modes);
  /// Product state of squeezed vacua, one per entry.
  static GaussianState squeezed(const std::vector<SqueezedInput>& inputs);

  std::size_t modes() const { return static_cast<std::size_t>(mean_.size() / 2); }
  const Eigen::VectorXd& mean() const { return mean_; }
  const Eigen::MatrixXd& covariance() const { return covariance_; }

  /// Smallest eigenvalue of Sigma + i Omega / 4; physical states give >= 0.
  double uncertainty_margin() const;

 private:
  Eigen::VectorXd mean_;
  Eigen::MatrixXd covariance_;
};

/// mean -> S mean, Sigma -> S Sigma S^T. Throws InvalidArgument on a size mismatch.
GaussianState apply(const GaussianState& state, const Eigen::MatrixXd& symplectic);
GaussianState apply(const GaussianState& state, const ModeUnitary& u);

/// Amplitude transmissivity eta on one mode: its block becomes
/// eta^2 Sigma + (1 - eta^2) / 4, its cross terms and mean scale by eta.
GaussianState memory_loss_channel(const GaussianState& state, std::size_t mode, double eta);

/// Symmetric 0/1 graph adjacency matrix with zero diagonal.
class AdjacencyMatrix {
 public:
  explicit AdjacencyMatrix(Eigen::MatrixXd matrix);
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  std::size_t nodes() const { return static_cast<std::size_t>(matrix_.rows()); }

 private:
  Eigen::MatrixXd matrix_;
};

/// The path graph 1 - 2 - ... - n.
AdjacencyMatrix linear_cluster(std::size_t nodes);

struct NullifierReport {
  Eigen::VectorXd variances;  // Var(y_k - sum_m V_km x_m)
  Eigen::VectorXd baselines;  // same with all modes in vacuum
  std::vector<bool> below_baseline;

  bool all_below() const;
};

NullifierReport nullifier_variances(const GaussianState& state, const AdjacencyMatrix& graph);

/// Var((x_a + sx x_b) / sqrt 2) + Var((y_a + sy y_b) / sqrt 2). Vacuum gives
/// 1/2; separable states cannot go below it.
struct DuanCombination {
  std::size_t mode_a = 1;
  std::size_t mode_b = 2;
  double x_sign = 1.0;
  double y_sign = -1.0;
};

double duan_sum(const GaussianState& state, const DuanCombination& combination);

/// Variance of sum_i c_i r_i for quadrature coefficients c.
double quadrature_variance(const GaussianState& state, const Eigen::VectorXd& coefficients);

}  // namespace qmshape
