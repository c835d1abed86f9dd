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


#include "qmshape/schmidt.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "qmshape/error.hpp"

namespace qmshape {

SchmidtSpectrum decompose(const FullKernel& kernel) {
  const TimeGrid& grid = kernel.time_grid();
  const Eigen::VectorXd sw = grid.trapezoid_weights().cwiseSqrt();
  const Eigen::MatrixXd& g = kernel.matrix();
  const Eigen::MatrixXd weighted = sw.asDiagonal() * (0.5 * (g + g.transpose())) * sw.asDiagonal();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(weighted);
  if (solver.info() != Eigen::Success) throw NumericalError("eigensolver did not converge");

  const Eigen::Index n = weighted.rows();
  SchmidtSpectrum out;
  out.amplitudes.resize(n);
  out.lambdas.resize(n);
  out.modes.reserve(static_cast<std::size_t>(n));
  // Eigen returns ascending eigenvalues.
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = n - 1 - k;
    const double mu = solver.eigenvalues()[src];
    if (mu < -1e-6) {
      throw NumericalError("full kernel has a negative eigenvalue " + std::to_string(mu));
    }
    out.amplitudes[k] = mu;
    out.lambdas[k] = mu * std::abs(mu);
    Eigen::VectorXd v = solver.eigenvectors().col(src).cwiseQuotient(sw);
    Eigen::Index peak = 0;
    v.cwiseAbs().maxCoeff(&peak);
    if (v[peak] < 0.0) v = -v;
    out.modes.emplace_back(grid, std::move(v), static_cast<int>(k + 1));
  }
  return out;
}

Response response_function(const ModeProfile& phi, const HalfKernel& write_kernel) {
  const SpinWave raw = write(phi, write_kernel);
  const double n = raw.norm();
  if (!(n > 1e-12)) throw DegenerateResponse("response function has zero norm");
  return Response{.fourth_root = n, .profile = raw.scaled(1.0 / n).with_label(phi.label())};
}

SchmidtSpectrum schmidt_analysis(const HalfKernel& kernel, double response_cutoff) {
  SchmidtSpectrum s = decompose(full_kernel(kernel, kernel));
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!(s.lambdas[static_cast<Eigen::Index>(k)] > response_cutoff)) break;
    s.responses.push_back(response_function(s.modes[k], kernel).profile);
  }
  return s;
}

Eigen::MatrixXd reconstruct(const SchmidtSpectrum& spectrum, double cutoff) {
  const auto n = static_cast<Eigen::Index>(spectrum.modes.front().size());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < spectrum.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    if (cutoff > 0.0 && !(spectrum.lambdas[i] > cutoff)) continue;
    const Eigen::VectorXd& v = spectrum.modes[k].samples();
    g.noalias() += spectrum.amplitudes[i] * v * v.transpose();
  }
  return g;
}

}  // namespace qmshape
