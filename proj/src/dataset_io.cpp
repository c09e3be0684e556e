// Copyright 2026 The lqioc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lqioc/dataset_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lqioc/common.hpp"

namespace lqioc {
namespace {

constexpr int kSchemaVersion = 1;

void append_vectors(std::ostream& os, const char* key,
                    const std::vector<Eigen::VectorXd>& vecs) {
  os << "\"" << key << "\":[";
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (int j = 0; j < vecs[i].size(); ++j) {
      if (j) os << ",";
      os << fmt17(vecs[i](j));
    }
    os << "]";
  }
  os << "]";
}

std::vector<Eigen::VectorXd> parse_vectors(const nlohmann::json& arr,
                                           int expected_dim,
                                           const std::string& where) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(arr.size());
  for (const auto& row : arr) {
    if (!row.is_array() || static_cast<int>(row.size()) != expected_dim)
      throw ConfigError(where + ": row has wrong dimension");
    Eigen::VectorXd v(expected_dim);
    for (int j = 0; j < expected_dim; ++j) v(j) = row[j].get<double>();
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

void write_dataset(const Dataset& ds, const std::string& path,
                   int control_dim) {
  ds.validate();
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path);

  os << "{\"schema\":" << kSchemaVersion << ",\"nu2\":" << ds.total_steps
     << ",\"n\":" << ds.state_dim() << ",\"m\":" << control_dim << "}\n";
  for (const auto& tr : ds.trajectories) {
    os << "{\"id\":\"" << tr.id << "\",\"nu2\":" << tr.total_steps
       << ",\"N\":" << tr.N << ",\"ref_id\":\"" << tr.ref_id << "\",";
    append_vectors(os, "states", tr.states);
    if (tr.has_controls()) {
      os << ",";
      append_vectors(os, "controls", tr.controls);
    }
    os << "}\n";
  }
  if (!os) throw ConfigError("write failed: " + path);
}

Dataset read_dataset(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open dataset: " + path);

  std::string line;
  int line_no = 0;
  auto bad = [&](const std::string& why) {
    std::ostringstream msg;
    msg << path << ": line " << line_no << ": " << why;
    return ConfigError(msg.str());
  };

  if (!std::getline(is, line)) throw ConfigError(path + ": empty file");
  ++line_no;
  nlohmann::json header = nlohmann::json::parse(line, nullptr, false);
  if (header.is_discarded() || !header.contains("schema"))
    throw bad("malformed header");
  if (header["schema"].get<int>() != kSchemaVersion)
    throw bad("unsupported schema version");

  Dataset ds;
  ds.total_steps = header.at("nu2").get<int>();
  const int n = header.at("n").get<int>();
  const int m = header.at("m").get<int>();

  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
    if (rec.is_discarded()) throw bad("malformed record");
    try {
      Trajectory tr;
      tr.id = rec.at("id").get<std::string>();
      tr.total_steps = rec.at("nu2").get<int>();
      tr.N = rec.at("N").get<int>();
      tr.ref_id = rec.at("ref_id").get<std::string>();
      tr.states = parse_vectors(rec.at("states"), n, "states");
      if (rec.contains("controls"))
        tr.controls = parse_vectors(rec["controls"], m, "controls");
      tr.validate();
      if (tr.total_steps != ds.total_steps)
        throw std::invalid_argument("nu2 differs from header");
      ds.trajectories.push_back(std::move(tr));
    } catch (const std::exception& e) {
      throw bad(e.what());
    }
  }
  ds.validate();
  return ds;
}

}  // namespace lqioc
