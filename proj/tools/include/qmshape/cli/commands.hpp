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

#include "qmshape/cli/output.hpp"
#include "qmshape/cli/run_config.hpp"

namespace qmshape::cli {

// Each command computes everything in memory and returns the files to write;
// nothing touches the disk until the whole pipeline has succeeded.

/// driving_<i>.csv (t, F, Q) per mode and shape_report.json.
OutputBundle cmd_shape(const RunConfig& config);

/// spectrum_<i>.csv (k, lambda, amplitude), schmidt_modes_<i>.csv
/// (t, phi_1..), spin_wave_<i>.csv (z, B) and spectrum_report.json.
OutputBundle cmd_spectrum(const RunConfig& config);

/// conversion_<i>_<j>.csv (t, A_in, A_out) per pair, fidelity.csv and
/// conversion_report.json with the amplitude maps and the identity check.
OutputBundle cmd_convert(const RunConfig& config);

/// cluster_report.json: unitary, residuals, nullifiers, Duan sums.
OutputBundle cmd_cluster(const RunConfig& config);

}  // namespace qmshape::cli
