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

#include <vector>

#include <Eigen/Core>

#include "qmshape/kernels.hpp"
#include "qmshape/profile.hpp"

namespace qmshape {

/// G(t, t') = sum_k sqrt(lambda_k) phi_k(t) phi_k(t').
struct SchmidtSpectrum {
  Eigen::VectorXd amplitudes;       // sqrt(lambda_k), descending
  Eigen::VectorXd lambdas;          // amplitudes squared, sign kept
  std::vector<ModeProfile> modes;   // phi_k, labelled k = 1, 2, ...
  std::vector<SpinWave> responses;  // g_k, only for lambda_k above the cutoff

  std::size_t size() const { return modes.size(); }
};

/// Symmetric eigendecomposition of sqrt(w) G sqrt(w) with trapezoid weights w,
/// after symmetrizing G. Modes are rescaled by 1/sqrt(w) and signed so that
/// their largest-magnitude sample is positive. Throws NumericalError when an
/// amplitude is below -1e-6.
SchmidtSpectrum decompose(const FullKernel& kernel);

/// lambda^{1/4} g(z) = int dt phi(t) K(t, z).
struct Response {
  double fourth_root = 0.0;
  SpinWave profile;  // unit norm
};

/// Throws DegenerateResponse if the raw spin wave has zero norm.
Response response_function(const ModeProfile& phi, const HalfKernel& write_kernel);

/// decompose(full_kernel(K, K)) with response functions attached for every
/// lambda_k > `response_cutoff`.
SchmidtSpectrum schmidt_analysis(const HalfKernel& kernel, double response_cutoff = 1e-3);

/// sum_k sqrt(lambda_k) phi_k(t) phi_k(t'), truncated to lambda_k > cutoff.
Eigen::MatrixXd reconstruct(const SchmidtSpectrum& spectrum, double cutoff = 0.0);

}  // namespace qmshape
