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


#include "qmshape/cli/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace qmshape::cli {
namespace {

void dump(const nlohmann::json& v, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (v.type()) {
    case nlohmann::json::value_t::number_float: {
      const double x = v.get<double>();
      out += std::isfinite(x) ? format_number(x) : "null";
      return;
    }
    case nlohmann::json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::json(key).dump() + ": ";
        dump(item, depth + 1, out);
      }
      out += "\n" + close + "}";
      return;
    }
    case nlohmann::json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Numeric arrays stay on one line.
      const bool flat = std::all_of(v.begin(), v.end(), [](const auto& e) { return e.is_primitive(); });
      out += flat ? "[" : "[\n";
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += flat ? ", " : ",\n";
        first = false;
        if (!flat) out += pad;
        dump(item, depth + 1, out);
      }
      out += flat ? "]" : "\n" + close + "]";
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string dump_json(const nlohmann::json& value) {
  std::string out;
  dump(value, 0, out);
  out += '\n';
  return out;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<Eigen::VectorXd>& columns) {
  if (header.size() != columns.size() || columns.empty()) {
    throw std::invalid_argument("csv_table needs one header per column");
  }
  const Eigen::Index rows = columns.front().size();
  for (const auto& c : columns) {
    if (c.size() != rows) throw std::invalid_argument("csv_table columns differ in length");
  }
  std::string out;
  for (std::size_t j = 0; j < header.size(); ++j) out += (j ? "," : "") + header[j];
  out += '\n';
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (j) out += ',';
      out += format_number(columns[j][i]);
    }
    out += '\n';
  }
  return out;
}

void write_bundle(const std::filesystem::path& dir, const OutputBundle& bundle) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  std::vector<fs::path> staged;
  std::vector<fs::path> placed;
  try {
    for (const OutputFile& f : bundle) {
      const fs::path tmp = dir / (f.name + ".tmp");
      staged.push_back(tmp);
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << f.content;
      out.close();
      if (!out) throw std::runtime_error("cannot write " + tmp.string());
    }
    for (std::size_t i = 0; i < bundle.size(); ++i) {
      const fs::path target = dir / bundle[i].name;
      fs::rename(staged[i], target);
      placed.push_back(target);
    }
  } catch (...) {
    std::error_code ignored;
    for (const auto& p : staged) fs::remove(p, ignored);
    for (const auto& p : placed) fs::remove(p, ignored);
    throw;
  }
}

}  // namespace qmshape::cli
