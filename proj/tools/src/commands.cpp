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


#include "qmshape/cli/commands.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "qmshape/converter.hpp"
#include "qmshape/driving.hpp"
#include "qmshape/gaussian.hpp"
#include "qmshape/kernels.hpp"
#include "qmshape/modes.hpp"
#include "qmshape/schmidt.hpp"
#include "qmshape/shaper.hpp"

namespace qmshape::cli {
namespace {

using nlohmann::json;

// Grids, basis and the shaped drivings, each supermode shaped at most once.
class Pipeline {
 public:
  explicit Pipeline(const RunConfig& config)
      : config_(config),
        time_(time_grid(config)),
        space_(space_grid(config)),
        basis_(hermite_basis(time_, basis_config(config))) {}

  const TimeGrid& time() const { return time_; }
  const SpaceGrid& space() const { return space_; }
  const std::vector<ModeProfile>& basis() const { return basis_; }
  const ModeProfile& mode(int i) const { return basis_[static_cast<std::size_t>(i - 1)]; }

  const ShaperReport& shaped(int i) {
    auto it = shaped_.find(i);
    if (it == shaped_.end()) {
      it = shaped_.emplace(i, shape_driving(shaper_config(config_, i), mode(i))).first;
    }
    return it->second;
  }

  const DrivingProfile& driving(int i) { return shaped(i).driving; }

 private:
  const RunConfig& config_;
  TimeGrid time_;
  SpaceGrid space_;
  std::vector<ModeProfile> basis_;
  std::map<int, ShaperReport> shaped_;
};

std::vector<double> to_vector(const Eigen::VectorXd& v) { return {v.data(), v.data() + v.size()}; }

json matrix_rows(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) rows.push_back(to_vector(m.row(i).transpose()));
  return rows;
}

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

// The output directory is left out so reruns into different directories
// produce identical files.
json report_config(const RunConfig& config) {
  json c = to_json(config);
  c.erase("out");
  return c;
}

std::string label(int i) { return std::to_string(i); }

double restoration(const ModeProfile& target, const DrivingProfile& driving, const SpaceGrid& space) {
  const HalfKernel k = half_kernel(driving, space);
  return overlap(read(write(target, k), k), target);
}

}  // namespace

OutputBundle cmd_shape(const RunConfig& config) {
  Pipeline p(config);
  OutputBundle files;
  json modes = json::array();
  for (const int i : config.modes) {
    const ShaperReport& r = p.shaped(i);
    files.push_back({"driving_" + label(i) + ".csv",
                     csv_table({"t", "F", "Q"}, {p.time().points(), r.driving.samples(), r.driving.energy()})});
    modes.push_back({
        {"mode", i},
        {"steps", r.steps},
        {"converged", r.converged},
        {"bracket", r.used_series ? "series" : "quadrature"},
        {"residuals", r.residuals},
        {"residual_at_step_9", r.residuals.size() >= 9 ? json(r.residuals[8]) : json(nullptr)},
        {"mean_square", r.driving.mean_square()},
        {"kernel_discrepancy", optional_number(r.kernel_discrepancy)},
        {"mode_overlap", optional_number(r.mode_overlap)},
        {"restoration_fidelity", restoration(p.mode(i), r.driving, p.space())},
        {"leakage", leakage(p.mode(i), r.driving, p.space())},
    });
  }
  files.push_back({"shape_report.json", dump_json({{"config", report_config(config)}, {"modes", modes}})});
  return files;
}

OutputBundle cmd_spectrum(const RunConfig& config) {
  Pipeline p(config);
  const bool shaped = config.spectrum_driving == SpectrumDriving::kShaped;
  const DrivingProfile flat = constant_driving(p.time());
  std::optional<SchmidtSpectrum> flat_spectrum;

  OutputBundle files;
  json modes = json::array();
  for (const int i : config.modes) {
    const DrivingProfile& f = shaped ? p.driving(i) : flat;
    const HalfKernel k = half_kernel(f, p.space());
    if (shaped || !flat_spectrum) flat_spectrum = decompose(full_kernel(k, k));
    const SchmidtSpectrum& s = *flat_spectrum;

    const auto count = static_cast<Eigen::Index>(s.size());
    files.push_back({"spectrum_" + label(i) + ".csv",
                     csv_table({"k", "lambda", "amplitude"},
                               {Eigen::VectorXd::LinSpaced(count, 1.0, static_cast<double>(count)),
                                s.lambdas, s.amplitudes})});

    std::vector<std::string> header{"t"};
    std::vector<Eigen::VectorXd> columns{p.time().points()};
    for (std::size_t m = 0; m < std::min<std::size_t>(6, s.size()); ++m) {
      header.push_back("phi_" + std::to_string(m + 1));
      columns.push_back(s.modes[m].samples());
    }
    files.push_back({"schmidt_modes_" + label(i) + ".csv", csv_table(header, columns)});

    const SpinWave b = write(p.mode(i), k);
    files.push_back({"spin_wave_" + label(i) + ".csv", csv_table({"z", "B"}, {p.space().points(), b.samples()})});

    const double exit = std::abs(b.samples()[b.samples().size() - 1]);
    const double peak = b.samples().cwiseAbs().maxCoeff();
    modes.push_back({
        {"mode", i},
        {"lambda_1", s.lambdas[0]},
        {"lambda_2", s.size() > 1 ? json(s.lambdas[1]) : json(nullptr)},
        {"lambda_ratio", s.size() > 1 ? json(s.lambdas[1] / s.lambdas[0]) : json(nullptr)},
        {"spin_wave_energy", b.norm() * b.norm()},
        {"spin_wave_exit", exit},
        {"spin_wave_exit_relative", peak > 0.0 ? json(exit / peak) : json(nullptr)},
    });
  }
  files.push_back({"spectrum_report.json",
                   dump_json({{"config", report_config(config)},
                              {"driving", shaped ? "shaped" : "constant"},
                              {"modes", modes}})});
  return files;
}

OutputBundle cmd_convert(const RunConfig& config) {
  Pipeline p(config);
  OutputBundle files;
  json pairs = json::array();
  Eigen::VectorXd in(static_cast<Eigen::Index>(config.pairs.size()));
  Eigen::VectorXd out(in.size()), fid(in.size()), eff(in.size()), cross(in.size());
  for (std::size_t n = 0; n < config.pairs.size(); ++n) {
    const ConversionPair pair = config.pairs[n];
    const ConversionResult r =
        convert(p.driving(pair.input), p.driving(pair.output), p.basis(), p.space(), pair);
    files.push_back({"conversion_" + label(pair.input) + "_" + label(pair.output) + ".csv",
                     csv_table({"t", "A_in", "A_out"},
                               {p.time().points(), p.mode(pair.input).samples(), r.output.samples()})});
    pairs.push_back({
        {"input", pair.input},
        {"output", pair.output},
        {"fidelity", r.fidelity},
        {"efficiency", r.efficiency},
        {"cross_talk", r.cross_talk},
        {"multimode", r.multimode},
        {"amplitude_map", matrix_rows(r.amplitude_map)},
    });
    const auto row = static_cast<Eigen::Index>(n);
    in[row] = pair.input;
    out[row] = pair.output;
    fid[row] = r.fidelity;
    eff[row] = r.efficiency;
    cross[row] = r.cross_talk;
  }
  files.push_back({"fidelity.csv", csv_table({"input", "output", "fidelity", "efficiency", "cross_talk"},
                                             {in, out, fid, eff, cross})});

  std::vector<DrivingProfile> drivings;
  std::vector<ModeProfile> targets;
  for (const int i : config.modes) {
    drivings.push_back(p.driving(i));
    targets.push_back(p.mode(i));
  }
  const Eigen::MatrixXd o = response_identity(drivings, targets, p.space());
  const json identity = {
      {"modes", config.modes},
      {"overlaps", matrix_rows(o)},
      {"min_overlap", o.minCoeff()},
  };
  files.push_back({"conversion_report.json",
                   dump_json({{"config", report_config(config)}, {"pairs", pairs}, {"identity", identity}})});
  return files;
}

OutputBundle cmd_cluster(const RunConfig& config) {
  const ModeUnitary u = compose_cluster_unitary();
  const Eigen::MatrixXd s = unitary_to_symplectic(u);
  const AdjacencyMatrix graph = linear_cluster(4);

  std::vector<SqueezedInput> inputs;
  for (std::size_t m = 0; m < 4; ++m) inputs.push_back({config.quadratures[m], config.variances[m]});
  GaussianState state = GaussianState::squeezed(inputs);

  json loss = nullptr;
  std::vector<double> eta;
  if (config.loss_eta) {
    eta.assign(4, *config.loss_eta);
  } else if (config.loss_from_convert) {
    Pipeline p(config);
    for (int i = 1; i <= 4; ++i) {
      eta.push_back(convert(p.driving(i), p.driving(i), p.basis(), p.space(), {i, i}).efficiency);
    }
  }
  if (!eta.empty()) {
    for (std::size_t m = 0; m < 4; ++m) state = memory_loss_channel(state, m + 1, std::min(eta[m], 1.0));
    loss = {{"eta", eta}, {"source", config.loss_eta ? "config" : "convert"}};
  }
  const NullifierReport nullifiers = nullifier_variances(apply(state, s), graph);

  // Co-profile pair: one beamsplitter mixes an x- and a y-squeezed input.
  const double v = config.duan_variance;
  const DuanCombination pair;
  const double co = duan_sum(
      apply(GaussianState::squeezed({{Quadrature::kX, v}, {Quadrature::kY, v}}), beamsplitter(2, 1, 2, 0.5)),
      pair);
  // Orthogonal profiles: modes (1, 2) carry one profile at the two inputs,
  // (3, 4) the other; the x- and y-squeezed inputs never share a profile.
  const GaussianState orth = apply(
      GaussianState::squeezed({{Quadrature::kX, v},
                               {Quadrature::kX, kVacuumVariance},
                               {Quadrature::kX, kVacuumVariance},
                               {Quadrature::kY, v}}),
      beamsplitter(4, 1, 2, 0.5) * beamsplitter(4, 3, 4, 0.5));
  const double orth_a = duan_sum(orth, {.mode_a = 1, .mode_b = 2});
  const double orth_b = duan_sum(orth, {.mode_a = 3, .mode_b = 4});

  std::vector<bool> below = nullifiers.below_baseline;
  const json report = {
      {"config", report_config(config)},
      {"unitary", {{"real", matrix_rows(u.matrix().real())}, {"imag", matrix_rows(u.matrix().imag())}}},
      {"decomposition_residual",
       (u.matrix() - reference_cluster_unitary().matrix()).cwiseAbs().maxCoeff()},
      {"unitarity_residual", u.unitarity_defect()},
      {"symplectic_residual", symplectic_defect(s)},
      {"loss", loss},
      {"nullifiers",
       {{"variances", to_vector(nullifiers.variances)},
        {"baselines", to_vector(nullifiers.baselines)},
        {"below_baseline", below},
        {"all_below", nullifiers.all_below()}}},
      {"duan",
       {{"squeezed_variance", v},
        {"separable_bound", 0.5},
        {"co_profile", co},
        {"orthogonal_profiles", {orth_a, orth_b}}}},
  };
  return {{"cluster_report.json", dump_json(report)}};
}

}  // namespace qmshape::cli
