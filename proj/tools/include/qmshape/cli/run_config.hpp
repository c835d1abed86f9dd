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
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qmshape/converter.hpp"
#include "qmshape/gaussian.hpp"
#include "qmshape/modes.hpp"
#include "qmshape/shaper.hpp"

namespace qmshape::cli {

/// Malformed or out-of-range configuration. Maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SpectrumDriving { kShaped, kConstant };

struct RunConfig {
  std::size_t n_t = 513;
  std::size_t n_z = 513;
  double t_w = 9.0;
  double l_phys = 10.0;
  double l_search = 5.0;

  // Unset center / width fall back to T_W / 2 and T_W / 10.
  std::optional<double> basis_center;
  std::optional<double> basis_width;
  int basis_max_index = 6;

  int max_steps = 15;
  double tolerance = 1e-3;
  BracketEvaluation bracket = BracketEvaluation::kAuto;
  int series_terms = 80;
  std::size_t quadrature_nodes = 2049;
  bool renormalize_each_step = false;

  std::vector<int> modes{1, 2, 3, 4};

  // One entry per cluster input mode.
  std::vector<double> variances{0.10, 0.12, 0.14, 0.18};
  std::vector<Quadrature> quadratures{Quadrature::kY, Quadrature::kX, Quadrature::kY,
                                      Quadrature::kX};
  double duan_variance = 0.05;

  SpectrumDriving spectrum_driving = SpectrumDriving::kShaped;

  std::vector<ConversionPair> pairs{{1, 1}, {2, 2}, {3, 3}, {4, 4}};

  std::optional<double> loss_eta;  // amplitude transmissivity on every input
  bool loss_from_convert = false;  // per-mode eta from the (i -> i) conversion

  std::filesystem::path out = "out";
  std::uint64_t seed = 0;  // reserved
};

/// Reads the JSON document layout described in run_config.schema.json on top
/// of `base`. Unknown keys and wrong types are ConfigErrors.
RunConfig parse_config(const nlohmann::json& doc, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// Inverse of parse_config; every field is written out.
nlohmann::json to_json(const RunConfig& config);

/// Throws ConfigError on the first inconsistent field.
void validate(const RunConfig& config);

TimeGrid time_grid(const RunConfig& config);
SpaceGrid space_grid(const RunConfig& config);
HermiteBasisConfig basis_config(const RunConfig& config);
ShaperConfig shaper_config(const RunConfig& config, int target);

}  // namespace qmshape::cli
