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


#include "qmshape/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

#include "qmshape/error.hpp"

namespace qmshape {
namespace {

using cd = std::complex<double>;

void check_mode(std::size_t modes, std::size_t mode) {
  if (mode < 1 || mode > modes) {
    throw InvalidArgument("mode index " + std::to_string(mode) + " outside 1.." +
                          std::to_string(modes));
  }
}

Eigen::Index xi(std::size_t mode) { return static_cast<Eigen::Index>(2 * (mode - 1)); }

}  // namespace

ModeUnitary::ModeUnitary(Eigen::MatrixXcd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw InvalidArgument("mode unitary must be a non-empty square matrix");
  }
}

ModeUnitary ModeUnitary::identity(std::size_t modes) {
  const auto n = static_cast<Eigen::Index>(modes);
  return ModeUnitary(Eigen::MatrixXcd::Identity(n, n));
}

double ModeUnitary::unitarity_defect() const {
  const auto n = matrix_.rows();
  return (matrix_.adjoint() * matrix_ - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

ModeUnitary operator*(const ModeUnitary& a, const ModeUnitary& b) {
  if (a.modes() != b.modes()) throw InvalidArgument("mode unitaries act on different mode counts");
  return ModeUnitary(a.matrix() * b.matrix());
}

ModeUnitary phase_shifter(std::size_t modes, std::size_t mode, double angle) {
  check_mode(modes, mode);
  if (!std::isfinite(angle)) throw InvalidArgument("phase angle must be finite");
  ModeUnitary u = ModeUnitary::identity(modes);
  Eigen::MatrixXcd m = u.matrix();
  m(static_cast<Eigen::Index>(mode - 1), static_cast<Eigen::Index>(mode - 1)) = std::polar(1.0, angle);
  return ModeUnitary(std::move(m));
}

ModeUnitary beamsplitter(std::size_t modes, std::size_t i, std::size_t j, double transmissivity) {
  check_mode(modes, i);
  check_mode(modes, j);
  if (i == j) throw InvalidArgument("beamsplitter needs two distinct modes");
  if (!(transmissivity >= 0.0 && transmissivity <= 1.0)) {
    throw InvalidArgument("transmissivity must lie in [0, 1]");
  }
  const double t = std::sqrt(transmissivity);
  const double r = std::sqrt(1.0 - transmissivity);
  const auto a = static_cast<Eigen::Index>(i - 1);
  const auto b = static_cast<Eigen::Index>(j - 1);
  Eigen::MatrixXcd m = ModeUnitary::identity(modes).matrix();
  m(a, a) = r;
  m(a, b) = t;
  m(b, a) = t;
  m(b, b) = -r;
  return ModeUnitary(std::move(m));
}

ModeUnitary compose_cluster_unitary() {
  constexpr double kQuarter = std::numbers::pi / 2.0;
  const ModeUnitary f2 = phase_shifter(4, 2, kQuarter);
  const ModeUnitary f3 = phase_shifter(4, 3, -kQuarter);
  const ModeUnitary f4 = phase_shifter(4, 4, kQuarter);
  const ModeUnitary bs1 = beamsplitter(4, 1, 2, 0.5);
  const ModeUnitary bs2 = beamsplitter(4, 3, 4, 0.5);
  const ModeUnitary bs3 = beamsplitter(4, 2, 3, 0.8);
  return f3 * f2 * bs1 * bs2 * f3 * f4 * bs3 * f3 * f2;
}

ModeUnitary reference_cluster_unitary() {
  const double s2 = 1.0 / std::sqrt(2.0);
  const double s10 = 1.0 / std::sqrt(10.0);
  const cd i(0.0, 1.0);
  Eigen::MatrixXcd u(4, 4);
  u << s2, i * s10, -2.0 * i * s10, 0.0,
      i * s2, s10, -2.0 * s10, 0.0,
      0.0, -2.0 * i * s10, -i * s10, s2,
      0.0, 2.0 * s10, s10, -i * s2;
  return ModeUnitary(std::move(u));
}

Eigen::MatrixXd symplectic_form(std::size_t modes) {
  const auto n = static_cast<Eigen::Index>(2 * modes);
  Eigen::MatrixXd o = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; k += 2) {
    o(k, k + 1) = 1.0;
    o(k + 1, k) = -1.0;
  }
  return o;
}

Eigen::MatrixXd unitary_to_symplectic(const ModeUnitary& u) {
  if (u.unitarity_defect() > 1e-10) throw InvalidArgument("unitary_to_symplectic needs a unitary");
  const auto n = static_cast<Eigen::Index>(u.modes());
  Eigen::MatrixXd s(2 * n, 2 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const cd v = u.matrix()(j, k);
      s(2 * j, 2 * k) = v.real();
      s(2 * j, 2 * k + 1) = -v.imag();
      s(2 * j + 1, 2 * k) = v.imag();
      s(2 * j + 1, 2 * k + 1) = v.real();
    }
  }
  return s;
}

double symplectic_defect(const Eigen::MatrixXd& s) {
  if (s.rows() != s.cols() || s.rows() % 2 != 0) {
    throw InvalidArgument("symplectic matrix must be square with even size");
  }
  const Eigen::MatrixXd o = symplectic_form(static_cast<std::size_t>(s.rows() / 2));
  return (s * o * s.transpose() - o).cwiseAbs().maxCoeff();
}

GaussianState::GaussianState(Eigen::VectorXd mean, Eigen::MatrixXd covariance)
    : mean_(std::move(mean)), covariance_(std::move(covariance)) {
  const Eigen::Index n = mean_.size();
  if (n == 0 || n % 2 != 0) throw InvalidArgument("Gaussian state needs 2n quadratures");
  if (covariance_.rows() != n || covariance_.cols() != n) {
    throw InvalidArgument("covariance size does not match the mean");
  }
  if (!covariance_.allFinite() || !mean_.allFinite()) {
    throw InvalidArgument("Gaussian state must be finite");
  }
  const double scale = std::max(1.0, covariance_.cwiseAbs().maxCoeff());
  if ((covariance_ - covariance_.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument("covariance must be symmetric");
  }
}

GaussianState GaussianState::vacuum(std::size_t modes) {
  if (modes == 0) throw InvalidArgument("vacuum needs at least one mode");
  const auto n = static_cast<Eigen::Index>(2 * modes);
  return GaussianState(Eigen::VectorXd::Zero(n),
                       kVacuumVariance * Eigen::MatrixXd::Identity(n, n));
}

GaussianState GaussianState::squeezed(const std::vector<SqueezedInput>& inputs) {
  GaussianState s = vacuum(inputs.size());
  Eigen::MatrixXd c = s.covariance();
  for (std::size_t m = 0; m < inputs.size(); ++m) {
    const SqueezedInput& in = inputs[m];
    if (!(in.variance > 0.0) || !std::isfinite(in.variance)) {
      throw InvalidArgument("squeezed variance must be positive");
    }
    const double anti =
        in.anti_variance > 0.0 ? in.anti_variance : 1.0 / (16.0 * in.variance);
    const Eigen::Index x = xi(m + 1);
    c(x, x) = in.squeezed == Quadrature::kX ? in.variance : anti;
    c(x + 1, x + 1) = in.squeezed == Quadrature::kX ? anti : in.variance;
  }
  return GaussianState(s.mean(), std::move(c));
}

double GaussianState::uncertainty_margin() const {
  const Eigen::MatrixXd o = symplectic_form(modes());
  const Eigen::MatrixXcd h =
      covariance_.cast<cd>() + cd(0.0, 0.25) * o.cast<cd>();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

GaussianState apply(const GaussianState& state, const Eigen::MatrixXd& symplectic) {
  if (symplectic.rows() != state.mean().size() || symplectic.cols() != state.mean().size()) {
    throw InvalidArgument("symplectic map and state sizes differ");
  }
  Eigen::MatrixXd c = symplectic * state.covariance() * symplectic.transpose();
  c = 0.5 * (c + c.transpose());
  return GaussianState(symplectic * state.mean(), std::move(c));
}

GaussianState apply(const GaussianState& state, const ModeUnitary& u) {
  return apply(state, unitary_to_symplectic(u));
}

GaussianState memory_loss_channel(const GaussianState& state, std::size_t mode, double eta) {
  check_mode(state.modes(), mode);
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidArgument("eta must lie in [0, 1]");
  const Eigen::Index n = state.mean().size();
  Eigen::VectorXd scale = Eigen::VectorXd::Ones(n);
  const Eigen::Index x = xi(mode);
  scale[x] = eta;
  scale[x + 1] = eta;
  Eigen::MatrixXd c = scale.asDiagonal() * state.covariance() * scale.asDiagonal();
  c(x, x) += (1.0 - eta * eta) * kVacuumVariance;
  c(x + 1, x + 1) += (1.0 - eta * eta) * kVacuumVariance;
  return GaussianState(state.mean().cwiseProduct(scale), std::move(c));
}

AdjacencyMatrix::AdjacencyMatrix(Eigen::MatrixXd matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() == 0) {
    throw InvalidArgument("adjacency matrix must be non-empty and square");
  }
  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    if (matrix_(i, i) != 0.0) throw InvalidArgument("adjacency matrix needs a zero diagonal");
    for (Eigen::Index j = 0; j < matrix_.cols(); ++j) {
      const double v = matrix_(i, j);
      if (v != matrix_(j, i)) throw InvalidArgument("adjacency matrix must be symmetric");
      if (v != 0.0 && v != 1.0) throw InvalidArgument("adjacency entries must be 0 or 1");
    }
  }
}

AdjacencyMatrix linear_cluster(std::size_t nodes) {
  const auto n = static_cast<Eigen::Index>(nodes);
  if (n == 0) throw InvalidArgument("linear cluster needs at least one node");
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    v(k, k + 1) = 1.0;
    v(k + 1, k) = 1.0;
  }
  return AdjacencyMatrix(std::move(v));
}

bool NullifierReport::all_below() const {
  for (const bool b : below_baseline) {
    if (!b) return false;
  }
  return true;
}

double quadrature_variance(const GaussianState& state, const Eigen::VectorXd& coefficients) {
  if (coefficients.size() != state.mean().size()) {
    throw InvalidArgument("quadrature coefficients do not match the state");
  }
  return coefficients.dot(state.covariance() * coefficients);
}

NullifierReport nullifier_variances(const GaussianState& state, const AdjacencyMatrix& graph) {
  if (graph.nodes() != state.modes()) {
    throw InvalidArgument("graph and state have different mode counts");
  }
  const auto n = static_cast<Eigen::Index>(graph.nodes());
  NullifierReport r;
  r.variances.resize(n);
  r.baselines.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::VectorXd c = Eigen::VectorXd::Zero(2 * n);
    c[2 * k + 1] = 1.0;
    for (Eigen::Index m = 0; m < n; ++m) c[2 * m] -= graph.matrix()(k, m);
    r.variances[k] = quadrature_variance(state, c);
    r.baselines[k] = kVacuumVariance * (1.0 + graph.matrix().row(k).squaredNorm());
    r.below_baseline.push_back(r.variances[k] < r.baselines[k]);
  }
  return r;
}

double duan_sum(const GaussianState& state, const DuanCombination& d) {
  check_mode(state.modes(), d.mode_a);
  check_mode(state.modes(), d.mode_b);
  if (d.mode_a == d.mode_b) throw InvalidArgument("Duan sum needs two distinct modes");
  if (std::abs(d.x_sign) != 1.0 || std::abs(d.y_sign) != 1.0) {
    throw InvalidArgument("Duan signs must be +1 or -1");
  }
  const Eigen::Index n = state.mean().size();
  const double h = 1.0 / std::sqrt(2.0);
  Eigen::VectorXd cx = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd cy = Eigen::VectorXd::Zero(n);
  cx[xi(d.mode_a)] = h;
  cx[xi(d.mode_b)] = h * d.x_sign;
  cy[xi(d.mode_a) + 1] = h;
  cy[xi(d.mode_b) + 1] = h * d.y_sign;
  return quadrature_variance(state, cx) + quadrature_variance(state, cy);
}

}  // namespace qmshape
