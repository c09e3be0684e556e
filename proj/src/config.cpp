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

#include "lqioc/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lqioc/common.hpp"

namespace lqioc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw ConfigError("config." + field + ": " + why);
}

const json& get(const json& j, const std::string& field,
                const std::string& path) {
  auto it = j.find(field);
  if (it == j.end()) fail(path.empty() ? field : path + "." + field,
                          "missing required field");
  return *it;
}

double get_number(const json& j, const std::string& field,
                  const std::string& path) {
  const json& v = get(j, field, path);
  if (!v.is_number()) fail(path + "." + field, "expected a number");
  return v.get<double>();
}

int get_int(const json& j, const std::string& field, const std::string& path) {
  const json& v = get(j, field, path);
  if (!v.is_number_integer()) fail(path + "." + field, "expected an integer");
  return v.get<int>();
}

Eigen::MatrixXd parse_matrix(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty() || !v[0].is_array())
    fail(where, "expected an array of rows");
  const int rows = static_cast<int>(v.size());
  const int cols = static_cast<int>(v[0].size());
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (static_cast<int>(v[i].size()) != cols)
      fail(where, "ragged matrix rows");
    for (int j = 0; j < cols; ++j) {
      if (!v[i][j].is_number()) fail(where, "matrix entry is not a number");
      m(i, j) = v[i][j].get<double>();
    }
  }
  return m;
}

Eigen::VectorXd parse_vector(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) fail(where, "expected a non-empty array");
  Eigen::VectorXd x(v.size());
  for (int i = 0; i < static_cast<int>(v.size()); ++i) {
    if (!v[i].is_number()) fail(where, "vector entry is not a number");
    x(i) = v[i].get<double>();
  }
  return x;
}

DiscreteLTI parse_system(const json& j) {
  const json& sys = get(j, "system", "");
  if (sys.contains("discrete")) {
    const json& d = sys["discrete"];
    DiscreteLTI out;
    out.A = parse_matrix(get(d, "A", "system.discrete"), "system.discrete.A");
    out.B = parse_matrix(get(d, "B", "system.discrete"), "system.discrete.B");
    if (d.contains("dt")) out.dt = d["dt"].get<double>();
    try {
      out.validate();
    } catch (const std::exception& e) {
      fail("system.discrete", e.what());
    }
    return out;
  }
  if (sys.contains("continuous")) {
    const json& c = sys["continuous"];
    ContinuousLTI cont;
    cont.A_hat =
        parse_matrix(get(c, "A", "system.continuous"), "system.continuous.A");
    cont.B_hat =
        parse_matrix(get(c, "B", "system.continuous"), "system.continuous.B");
    const double dt = get_number(c, "dt", "system.continuous");
    try {
      return discretize(cont, dt);
    } catch (const std::exception& e) {
      fail("system.continuous", e.what());
    }
  }
  fail("system", "needs either 'discrete' or 'continuous'");
}

ReferenceInput parse_input(const json& j, const std::string& path) {
  ReferenceInput in;
  const std::string kind = get(j, "kind", path).get<std::string>();
  if (kind == "zero") {
    in.kind = ReferenceInput::Kind::Zero;
  } else if (kind == "sine" || kind == "cosine") {
    in.kind = kind == "sine" ? ReferenceInput::Kind::Sine
                             : ReferenceInput::Kind::Cosine;
    in.amplitude = get_number(j, "amplitude", path);
    in.omega = get_number(j, "omega", path);
  } else if (kind == "custom") {
    in.kind = ReferenceInput::Kind::Custom;
    const json& rows = get(j, "values", path);
    if (!rows.is_array()) fail(path + ".values", "expected an array");
    for (const auto& row : rows)
      in.custom.push_back(parse_vector(row, path + ".values"));
  } else {
    fail(path + ".kind", "unknown input kind '" + kind + "'");
  }
  return in;
}

std::vector<ReferenceConfig> parse_references(const json& j, int n) {
  const json& arr = get(j, "references", "");
  if (!arr.is_array() || arr.empty())
    fail("references", "expected a non-empty array");
  std::vector<ReferenceConfig> out;
  for (int i = 0; i < static_cast<int>(arr.size()); ++i) {
    const std::string path = "references[" + std::to_string(i) + "]";
    const json& r = arr[i];
    ReferenceConfig rc;
    rc.id = get(r, "id", path).get<std::string>();
    rc.x1 = parse_vector(get(r, "x1", path), path + ".x1");
    if (rc.x1.size() != n) fail(path + ".x1", "dimension mismatch with system");
    rc.length = get_int(r, "length", path);
    if (rc.length < 2) fail(path + ".length", "must be at least 2");
    rc.input = parse_input(get(r, "input", path), path + ".input");
    for (const auto& prev : out)
      if (prev.id == rc.id) fail(path + ".id", "duplicate reference id");
    out.push_back(std::move(rc));
  }
  return out;
}

HorizonConfig parse_horizons(const json& j) {
  const json& h = get(j, "horizons", "");
  HorizonConfig out;
  const std::string kind = get(h, "kind", "horizons").get<std::string>();
  if (kind == "uniform") {
    out.kind = HorizonConfig::Kind::Uniform;
    out.nu1 = get_int(h, "nu1", "horizons");
    out.nu2 = get_int(h, "nu2", "horizons");
    if (out.nu1 < 1 || out.nu1 > out.nu2)
      fail("horizons", "need 1 <= nu1 <= nu2");
  } else if (kind == "pmf") {
    out.kind = HorizonConfig::Kind::Pmf;
    out.nu1 = get_int(h, "nu1", "horizons");
    const json& pmf = get(h, "pmf", "horizons");
    if (!pmf.is_array() || pmf.empty()) fail("horizons.pmf", "expected array");
    for (const auto& p : pmf) out.pmf.push_back(p.get<double>());
    out.nu2 = out.nu1 + static_cast<int>(out.pmf.size()) - 1;
  } else if (kind == "list") {
    out.kind = HorizonConfig::Kind::List;
    const json& vals = get(h, "values", "horizons");
    if (!vals.is_array() || vals.empty())
      fail("horizons.values", "expected a non-empty array");
    for (const auto& v : vals) out.values.push_back(v.get<int>());
    out.nu1 = *std::min_element(out.values.begin(), out.values.end());
    out.nu2 = get_int(h, "nu2", "horizons");
    if (out.nu1 < 1) fail("horizons.values", "horizons must be positive");
    for (int v : out.values)
      if (v > out.nu2) fail("horizons.values", "value exceeds nu2");
  } else {
    fail("horizons.kind", "unknown kind '" + kind + "'");
  }
  return out;
}

InitConfig parse_init(const json& j, int n) {
  const json& v = get(j, "init", "");
  InitConfig out;
  const std::string kind = get(v, "kind", "init").get<std::string>();
  if (kind == "ref_offset_uniform") {
    out.kind = InitConfig::Kind::RefOffsetUniform;
    out.halfwidth = get_number(v, "halfwidth", "init");
    if (out.halfwidth < 0) fail("init.halfwidth", "must be nonnegative");
  } else if (kind == "ref_start") {
    out.kind = InitConfig::Kind::RefStart;
  } else if (kind == "fixed_list") {
    out.kind = InitConfig::Kind::FixedList;
    const json& starts = get(v, "starts", "init");
    if (!starts.is_array() || starts.empty())
      fail("init.starts", "expected a non-empty array");
    for (const auto& s : starts) {
      Eigen::VectorXd x = parse_vector(s, "init.starts");
      if (x.size() != n) fail("init.starts", "dimension mismatch with system");
      out.starts.push_back(std::move(x));
    }
  } else {
    fail("init.kind", "unknown kind '" + kind + "'");
  }
  return out;
}

void parse_solver(const json& s, conic::SolverSettings& out) {
  if (s.contains("tol")) out.tol = s["tol"].get<double>();
  if (s.contains("max_iter")) out.max_iter = s["max_iter"].get<int>();
  if (s.contains("rho")) out.rho = s["rho"].get<double>();
  if (s.contains("alpha")) out.alpha = s["alpha"].get<double>();
  if (s.contains("check_interval"))
    out.check_interval = s["check_interval"].get<int>();
  if (s.contains("verbose")) out.verbose = s["verbose"].get<bool>();
  if (out.tol <= 0 || out.max_iter <= 0)
    fail("estimator.solver", "tol and max_iter must be positive");
}

}  // namespace

InitSampler InitConfig::sampler() const {
  switch (kind) {
    case Kind::RefOffsetUniform:
      return ref_offset_uniform_init(halfwidth);
    case Kind::RefStart:
      return ref_start_init();
    case Kind::FixedList:
      return fixed_list_init(starts);
  }
  return ref_start_init();
}

std::map<std::string, ReferenceSignal> RunConfig::build_references() const {
  std::map<std::string, ReferenceSignal> out;
  for (const auto& rc : references)
    out.emplace(rc.id, generate_reference(system, rc.x1, rc.input, rc.length,
                                          rc.id));
  return out;
}

HorizonDistribution RunConfig::horizon_distribution() const {
  require(horizons.kind != HorizonConfig::Kind::List,
          "horizon list mode has no distribution");
  if (horizons.kind == HorizonConfig::Kind::Uniform)
    return HorizonDistribution::uniform(horizons.nu1, horizons.nu2);
  HorizonDistribution d;
  d.nu1 = horizons.nu1;
  d.nu2 = horizons.nu2;
  d.pmf = horizons.pmf;
  d.validate();
  return d;
}

std::string hash_text(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

RunConfig parse_config(const std::string& json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw ConfigError("config: not valid JSON");

  RunConfig cfg;
  cfg.config_hash = hash_text(j.dump());
  cfg.system = parse_system(j);
  const int n = cfg.system.n();
  const int m = cfg.system.m();
  cfg.references = parse_references(j, n);
  cfg.horizons = parse_horizons(j);

  for (const auto& rc : cfg.references)
    if (rc.length != cfg.horizons.nu2)
      fail("references", "reference '" + rc.id +
                             "' length must equal horizons.nu2");
  if (cfg.horizons.nu2 < n + 1) fail("horizons.nu2", "must be at least n+1");

  const json& noise = get(j, "noise", "");
  cfg.noise.sigma_w =
      parse_matrix(get(noise, "sigma_w", "noise"), "noise.sigma_w");
  if (cfg.noise.m() != m) fail("noise.sigma_w", "must be m x m");
  try {
    cfg.noise.validate();
  } catch (const std::exception& e) {
    fail("noise.sigma_w", e.what());
  }

  cfg.init = parse_init(j, n);

  if (j.contains("true_cost")) {
    cfg.true_Q = parse_matrix(get(j["true_cost"], "Q", "true_cost"),
                              "true_cost.Q");
    if (cfg.true_Q->rows() != n || cfg.true_Q->cols() != n)
      fail("true_cost.Q", "must be n x n");
  }

  if (j.contains("simulate")) {
    const json& s = j["simulate"];
    cfg.simulate.M = get_int(s, "M", "simulate");
    if (cfg.simulate.M <= 0) fail("simulate.M", "must be positive");
    if (!s.contains("seed")) fail("simulate.seed", "missing required field");
    cfg.simulate.seed = s["seed"].get<std::uint64_t>();
    if (s.contains("store_controls"))
      cfg.simulate.store_controls = s["store_controls"].get<bool>();
  }

  if (j.contains("estimator")) {
    const json& e = j["estimator"];
    if (e.contains("phi")) cfg.estimator.phi = e["phi"].get<double>();
    if (cfg.estimator.phi <= 0) fail("estimator.phi", "must be positive");
    if (e.contains("tol_psd")) cfg.estimator.tol_psd = e["tol_psd"].get<double>();
    if (e.contains("tol_eq")) cfg.estimator.tol_eq = e["tol_eq"].get<double>();
    if (e.contains("solver")) parse_solver(e["solver"], cfg.estimator.solver);
  }

  if (j.contains("consistency")) {
    const json& c = j["consistency"];
    for (const auto& v : get(c, "m_grid", "consistency"))
      cfg.consistency.m_grid.push_back(v.get<int>());
    if (cfg.consistency.m_grid.empty())
      fail("consistency.m_grid", "must be non-empty");
    for (const auto& v : get(c, "seeds", "consistency"))
      cfg.consistency.seeds.push_back(v.get<std::uint64_t>());
    if (cfg.consistency.seeds.empty())
      fail("consistency.seeds", "must be non-empty");
    if (c.contains("mode")) {
      const std::string mode = c["mode"].get<std::string>();
      if (mode == "regenerate") {
        cfg.consistency.mode = ConsistencyConfig::Mode::Regenerate;
      } else if (mode == "subsample") {
        cfg.consistency.mode = ConsistencyConfig::Mode::Subsample;
      } else {
        fail("consistency.mode", "unknown mode '" + mode + "'");
      }
    }
    if (c.contains("workers")) cfg.consistency.workers = c["workers"].get<int>();
    if (cfg.consistency.workers < 1) fail("consistency.workers", "must be >= 1");
    if (c.contains("pool_dataset"))
      cfg.consistency.pool_dataset = c["pool_dataset"].get<std::string>();
    if (cfg.consistency.mode == ConsistencyConfig::Mode::Subsample &&
        cfg.consistency.pool_dataset.empty())
      fail("consistency.pool_dataset", "required in subsample mode");
    if (!cfg.true_Q)
      fail("true_cost.Q", "required for the consistency experiment");
  }

  if (j.contains("noise_estimation")) {
    const json& ne = j["noise_estimation"];
    if (ne.contains("min_samples"))
      cfg.noise_estimation.min_samples = ne["min_samples"].get<int>();
    if (ne.contains("skip_initial"))
      cfg.noise_estimation.skip_initial = ne["skip_initial"].get<int>();
    if (cfg.noise_estimation.min_samples < 2)
      fail("noise_estimation.min_samples", "must be at least 2");
    if (cfg.noise_estimation.skip_initial < 0)
      fail("noise_estimation.skip_initial", "must be nonnegative");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file: " + path);
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_config(buf.str());
}

}  // namespace lqioc
