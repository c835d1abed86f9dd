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


#include "qmshape/cli/run_config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "qmshape/error.hpp"

namespace qmshape::cli {
namespace {

using nlohmann::json;

// Walks one JSON object, remembering which keys were consumed so leftovers
// can be reported as unknown.
class Section {
 public:
  Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
    if (!node_.is_object()) throw ConfigError(where() + " must be an object");
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    const auto it = node_.find(key);
    return it == node_.end() ? nullptr : &*it;
  }

  std::string where(const std::string& key = {}) const {
    const std::string base = path_.empty() ? "config" : path_;
    return key.empty() ? base : base + "." + key;
  }

  void number(const std::string& key, double& out) {
    if (const json* v = find(key)) out = as_number(*v, where(key));
  }

  void optional_number(const std::string& key, std::optional<double>& out) {
    if (const json* v = find(key)) {
      if (v->is_null()) {
        out.reset();
      } else {
        out = as_number(*v, where(key));
      }
    }
  }

  template <class Int>
  void integer(const std::string& key, Int& out) {
    if (const json* v = find(key)) out = as_integer<Int>(*v, where(key));
  }

  void boolean(const std::string& key, bool& out) {
    if (const json* v = find(key)) {
      if (!v->is_boolean()) throw ConfigError(where(key) + " must be true or false");
      out = v->get<bool>();
    }
  }

  void finish() const {
    for (const auto& [key, value] : node_.items()) {
      if (!seen_.contains(key)) throw ConfigError("unknown key " + where(key));
    }
  }

  static double as_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ConfigError(where + " must be a number");
    return v.get<double>();
  }

  template <class Int>
  static Int as_integer(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw ConfigError(where + " must be an integer");
    if constexpr (std::is_unsigned_v<Int>) {
      if (v.is_number_unsigned()) return v.get<Int>();
      throw ConfigError(where + " must be non-negative");
    } else {
      return v.get<Int>();
    }
  }

 private:
  const json& node_;
  std::string path_;
  std::set<std::string> seen_;
};

const json& array_at(const json* v, const std::string& where) {
  if (!v->is_array()) throw ConfigError(where + " must be an array");
  return *v;
}

Quadrature parse_quadrature(const json& v, const std::string& where) {
  if (v == "x") return Quadrature::kX;
  if (v == "y") return Quadrature::kY;
  throw ConfigError(where + " entries must be \"x\" or \"y\"");
}

BracketEvaluation parse_bracket(const json& v, const std::string& where) {
  if (v == "auto") return BracketEvaluation::kAuto;
  if (v == "series") return BracketEvaluation::kSeries;
  if (v == "quadrature") return BracketEvaluation::kQuadrature;
  throw ConfigError(where + " must be \"auto\", \"series\" or \"quadrature\"");
}

const char* bracket_name(BracketEvaluation b) {
  switch (b) {
    case BracketEvaluation::kSeries: return "series";
    case BracketEvaluation::kQuadrature: return "quadrature";
    case BracketEvaluation::kAuto: break;
  }
  return "auto";
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

}  // namespace

RunConfig parse_config(const json& doc, RunConfig c) {
  Section root(doc, "");

  if (const json* v = root.find("grid")) {
    Section s(*v, "grid");
    s.integer("n_t", c.n_t);
    s.integer("n_z", c.n_z);
    s.number("t_w", c.t_w);
    s.number("l_phys", c.l_phys);
    s.number("l_search", c.l_search);
    s.finish();
  }
  if (const json* v = root.find("basis")) {
    Section s(*v, "basis");
    s.optional_number("center", c.basis_center);
    s.optional_number("width", c.basis_width);
    s.integer("max_index", c.basis_max_index);
    s.finish();
  }
  if (const json* v = root.find("shaper")) {
    Section s(*v, "shaper");
    s.integer("max_steps", c.max_steps);
    s.number("tolerance", c.tolerance);
    if (const json* b = s.find("bracket")) c.bracket = parse_bracket(*b, s.where("bracket"));
    s.integer("series_terms", c.series_terms);
    s.integer("quadrature_nodes", c.quadrature_nodes);
    s.boolean("renormalize_each_step", c.renormalize_each_step);
    s.finish();
  }
  if (const json* v = root.find("modes")) {
    c.modes.clear();
    for (const json& m : array_at(v, "config.modes")) {
      c.modes.push_back(Section::as_integer<int>(m, "config.modes"));
    }
  }
  if (const json* v = root.find("squeezing")) {
    Section s(*v, "squeezing");
    if (const json* a = s.find("variances")) {
      c.variances.clear();
      for (const json& x : array_at(a, s.where("variances"))) {
        c.variances.push_back(Section::as_number(x, s.where("variances")));
      }
    }
    if (const json* a = s.find("quadratures")) {
      c.quadratures.clear();
      for (const json& q : array_at(a, s.where("quadratures"))) {
        c.quadratures.push_back(parse_quadrature(q, s.where("quadratures")));
      }
    }
    s.number("duan_variance", c.duan_variance);
    s.finish();
  }
  if (const json* v = root.find("spectrum")) {
    Section s(*v, "spectrum");
    if (const json* d = s.find("driving")) {
      if (*d == "shaped") {
        c.spectrum_driving = SpectrumDriving::kShaped;
      } else if (*d == "constant") {
        c.spectrum_driving = SpectrumDriving::kConstant;
      } else {
        throw ConfigError(s.where("driving") + " must be \"shaped\" or \"constant\"");
      }
    }
    s.finish();
  }
  if (const json* v = root.find("conversion")) {
    Section s(*v, "conversion");
    if (const json* a = s.find("pairs")) {
      c.pairs.clear();
      const std::string where = s.where("pairs");
      for (const json& p : array_at(a, where)) {
        if (!p.is_array() || p.size() != 2) throw ConfigError(where + " entries must be [input, output]");
        c.pairs.push_back({Section::as_integer<int>(p[0], where), Section::as_integer<int>(p[1], where)});
      }
    }
    s.finish();
  }
  if (const json* v = root.find("cluster")) {
    Section s(*v, "cluster");
    s.optional_number("loss_eta", c.loss_eta);
    s.boolean("loss_from_convert", c.loss_from_convert);
    s.finish();
  }
  if (const json* v = root.find("out")) {
    if (!v->is_string()) throw ConfigError("config.out must be a string");
    c.out = v->get<std::string>();
  }
  root.integer("seed", c.seed);
  root.finish();
  return c;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse_config(doc, std::move(base));
}

json to_json(const RunConfig& c) {
  auto optional = [](const std::optional<double>& v) { return v ? json(*v) : json(nullptr); };
  json quadratures = json::array();
  for (const Quadrature q : c.quadratures) quadratures.push_back(q == Quadrature::kX ? "x" : "y");
  json pairs = json::array();
  for (const ConversionPair& p : c.pairs) pairs.push_back({p.input, p.output});
  return {
      {"grid", {{"n_t", c.n_t}, {"n_z", c.n_z}, {"t_w", c.t_w}, {"l_phys", c.l_phys}, {"l_search", c.l_search}}},
      {"basis",
       {{"center", optional(c.basis_center)},
        {"width", optional(c.basis_width)},
        {"max_index", c.basis_max_index}}},
      {"shaper",
       {{"max_steps", c.max_steps},
        {"tolerance", c.tolerance},
        {"bracket", bracket_name(c.bracket)},
        {"series_terms", c.series_terms},
        {"quadrature_nodes", c.quadrature_nodes},
        {"renormalize_each_step", c.renormalize_each_step}}},
      {"modes", c.modes},
      {"squeezing",
       {{"variances", c.variances}, {"quadratures", quadratures}, {"duan_variance", c.duan_variance}}},
      {"spectrum", {{"driving", c.spectrum_driving == SpectrumDriving::kShaped ? "shaped" : "constant"}}},
      {"conversion", {{"pairs", pairs}}},
      {"cluster", {{"loss_eta", optional(c.loss_eta)}, {"loss_from_convert", c.loss_from_convert}}},
      {"out", c.out.string()},
      {"seed", c.seed},
  };
}

void validate(const RunConfig& c) {
  require(c.n_t >= 3 && c.n_z >= 3, "grid.n_t and grid.n_z must be at least 3");
  require(positive(c.t_w), "grid.t_w must be positive");
  require(positive(c.l_phys), "grid.l_phys must be positive");
  require(positive(c.l_search), "grid.l_search must be positive");
  require(c.basis_max_index >= 1, "basis.max_index must be at least 1");
  require(!c.basis_width || positive(*c.basis_width), "basis.width must be positive");
  require(!c.basis_center || (*c.basis_center > 0.0 && *c.basis_center < c.t_w),
          "basis.center must lie inside (0, t_w)");

  require(!c.modes.empty(), "modes must not be empty");
  std::set<int> unique;
  for (const int m : c.modes) {
    require(m >= 1 && m <= c.basis_max_index,
            "modes entry " + std::to_string(m) + " outside 1..basis.max_index");
    require(unique.insert(m).second, "modes entry " + std::to_string(m) + " repeated");
  }
  for (const ConversionPair& p : c.pairs) {
    require(p.input >= 1 && p.input <= c.basis_max_index && p.output >= 1 &&
                p.output <= c.basis_max_index,
            "conversion.pairs entry outside 1..basis.max_index");
  }

  require(c.variances.size() == 4 && c.quadratures.size() == 4,
          "squeezing needs four variances and four quadratures");
  for (const double v : c.variances) require(positive(v), "squeezing.variances must be positive");
  require(positive(c.duan_variance), "squeezing.duan_variance must be positive");
  require(!c.loss_eta || (*c.loss_eta >= 0.0 && *c.loss_eta <= 1.0),
          "cluster.loss_eta must lie in [0, 1]");
  require(!(c.loss_eta && c.loss_from_convert),
          "cluster.loss_eta and cluster.loss_from_convert are exclusive");
  require(!c.out.empty(), "out must not be empty");

  try {
    qmshape::validate(basis_config(c), time_grid(c));
    qmshape::validate(shaper_config(c, c.modes.front()));
  } catch (const InvalidArgument& e) {
    throw ConfigError(e.what());
  }
}

TimeGrid time_grid(const RunConfig& c) { return make_time_grid(c.t_w, c.n_t); }

SpaceGrid space_grid(const RunConfig& c) { return make_space_grid(c.l_phys, c.n_z); }

HermiteBasisConfig basis_config(const RunConfig& c) {
  HermiteBasisConfig b = default_basis_config(time_grid(c), c.basis_max_index);
  if (c.basis_center) b.center = *c.basis_center;
  if (c.basis_width) b.width = *c.basis_width;
  return b;
}

ShaperConfig shaper_config(const RunConfig& c, int target) {
  ShaperConfig s;
  s.target = target;
  s.cell_length = c.l_phys;
  s.search_length = c.l_search;
  s.space_samples = c.n_z;
  s.max_steps = c.max_steps;
  s.tolerance = c.tolerance;
  s.evaluation = c.bracket;
  s.series_terms = c.series_terms;
  s.quadrature_nodes = c.quadrature_nodes;
  s.renormalize_each_step = c.renormalize_each_step;
  return s;
}

}  // namespace qmshape::cli
