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

#include "lqioc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <future>

#include <json.hpp>

#include "lqioc/common.hpp"
#include "lqioc/dataset_io.hpp"
#include "lqioc/oracle/qp_forward.hpp"

namespace lqioc {

namespace {

using nlohmann::json;

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory: " + dir);
}

json matrix_to_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(row);
  }
  return rows;
}

json vector_to_json(const Eigen::VectorXd& v) {
  json row = json::array();
  for (int i = 0; i < v.size(); ++i) row.push_back(v(i));
  return row;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot open for writing: " + path);
  os << j.dump(2) << "\n";
}

void write_manifest(const std::string& out_dir, const std::string& command,
                    const RunConfig& cfg, json extra) {
  extra["command"] = command;
  extra["config_hash"] = cfg.config_hash;
  write_json_file(out_dir + "/manifest.json", extra);
}

// Filters the configured references down to the ids the dataset uses.
std::map<std::string, ReferenceSignal> references_for(
    const RunConfig& cfg, const Dataset& ds) {
  const auto all = cfg.build_references();
  std::map<std::string, ReferenceSignal> used;
  for (const auto& tr : ds.trajectories) {
    if (used.count(tr.ref_id)) continue;
    auto it = all.find(tr.ref_id);
    if (it == all.end())
      throw ConfigError("dataset references signal '" + tr.ref_id +
                        "' which the config does not define");
    used.emplace(*it);
  }
  return used;
}

Eigen::MatrixXd clamp_psd(const Eigen::MatrixXd& Q, double tol) {
  const double mineig = min_eigenvalue(Q);
  if (mineig >= 0.0) return symmetrized(Q);
  numeric_check(mineig > -tol, "cost matrix is too indefinite to use");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(symmetrized(Q));
  return es.eigenvectors() * es.eigenvalues().cwiseMax(0.0).asDiagonal() *
         es.eigenvectors().transpose();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t k = v.size() / 2;
  return v.size() % 2 ? v[k] : 0.5 * (v[k - 1] + v[k]);
}

}  // namespace

Dataset generate_dataset(const RunConfig& cfg, int M_per_ref,
                         std::uint64_t root_seed) {
  require(cfg.true_Q.has_value(),
          "true_cost.Q is required to synthesize data");
  const CostParams cost{*cfg.true_Q};
  const auto refs = cfg.build_references();
  const InitSampler init = cfg.init.sampler();

  HorizonChooser chooser;
  if (cfg.horizons.kind == HorizonConfig::Kind::List) {
    const std::vector<int> values = cfg.horizons.values;
    chooser = [values](Rng&, int i) { return values[i % values.size()]; };
  } else {
    const HorizonDistribution dist = cfg.horizon_distribution();
    chooser = [dist](Rng& rng, int) { return dist.sample(rng); };
  }

  Dataset combined;
  combined.total_steps = cfg.horizons.nu2;
  int ref_index = 0;
  for (const auto& rc : cfg.references) {
    const ReferenceSignal& ref = refs.at(rc.id);
    Dataset part = synth_dataset(cfg.system, cost, ref, chooser, init,
                                 cfg.noise, M_per_ref,
                                 split_seed(root_seed, ref_index));
    for (auto& tr : part.trajectories) {
      if (cfg.references.size() > 1) tr.id = rc.id + "-" + tr.id;
      if (!cfg.simulate.store_controls) tr.controls.clear();
      combined.trajectories.push_back(std::move(tr));
    }
    ++ref_index;
  }
  combined.validate();
  return combined;
}

SimulateOutcome run_simulate(const RunConfig& cfg, const std::string& out_dir) {
  require(cfg.simulate.M > 0, "config.simulate block is required");
  ensure_dir(out_dir);
  const Dataset ds =
      generate_dataset(cfg, cfg.simulate.M, cfg.simulate.seed);

  SimulateOutcome out;
  out.dataset_path = out_dir + "/dataset.jsonl";
  out.counts = ds.horizon_counts();
  out.total = ds.size();
  write_dataset(ds, out.dataset_path, cfg.system.m());

  json counts;
  for (const auto& [horizon, count] : out.counts)
    counts[std::to_string(horizon)] = count;
  write_manifest(out_dir, "simulate", cfg,
                 json{{"seed", cfg.simulate.seed},
                      {"total", out.total},
                      {"counts", counts},
                      {"outputs", json::array({"dataset.jsonl"})}});
  return out;
}

void write_solution_file(const std::string& path, const Eigen::MatrixXd& Q,
                         const std::string& config_hash) {
  json j{{"schema", 1},
         {"n", Q.rows()},
         {"Q_est", matrix_to_json(Q)},
         {"config_hash", config_hash}};
  write_json_file(path, j);
}

Eigen::MatrixXd read_solution_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open solution file: " + path);
  json j = json::parse(is, nullptr, false);
  if (j.is_discarded() || !j.contains("Q_est"))
    throw ConfigError(path + ": not a solution file");
  const auto& rows = j["Q_est"];
  const int n = static_cast<int>(rows.size());
  Eigen::MatrixXd Q(n, n);
  for (int i = 0; i < n; ++i)
    for (int jj = 0; jj < n; ++jj) Q(i, jj) = rows[i][jj].get<double>();
  return Q;
}

EstimateOutcome run_estimate(const RunConfig& cfg,
                             const std::string& dataset_path,
                             const std::string& out_dir) {
  ensure_dir(out_dir);
  const Dataset ds = read_dataset(dataset_path);
  require(ds.size() >= 1, "dataset is empty");
  require(ds.state_dim() == cfg.system.n(),
          "dataset/system dimension mismatch");
  require(ds.total_steps == cfg.horizons.nu2,
          "dataset terminal length differs from config horizons.nu2");
  const auto refs = references_for(cfg, ds);

  EstimateOutcome out;
  out.solution = solve_ioc(cfg.system, ds, refs, cfg.noise, cfg.estimator);
  out.solution_path = out_dir + "/solution.json";

  const IOCSolution& sol = out.solution;
  json feas{{"min_H_eig", sol.feasibility.min_H_eig},
            {"min_P_eig", sol.feasibility.min_P_eig},
            {"min_Q_eig", sol.feasibility.min_Q_eig},
            {"max_schur_norm", sol.feasibility.max_schur_norm},
            {"max_terminal_eta_res", sol.feasibility.max_terminal_eta_res},
            {"max_terminal_P_res", sol.feasibility.max_terminal_P_res},
            {"frobenius_slack", sol.feasibility.frobenius_slack},
            {"passed", sol.feasibility.passed}};
  json j{{"schema", 1},
         {"n", cfg.system.n()},
         {"Q_est", matrix_to_json(sol.Q_est)},
         {"Q_raw", matrix_to_json(sol.Q_raw)},
         {"status", conic::status_name(sol.status)},
         {"objective", sol.objective_value},
         {"iterations", sol.iterations},
         {"solver_residuals",
          json{{"primal", sol.primal_residual},
               {"dual", sol.dual_residual},
               {"gap", sol.gap}}},
         {"feasibility", feas},
         {"excitation_min_eig", sol.excitation_min_eig},
         {"diagnostics", sol.diagnostics},
         {"config_hash", cfg.config_hash}};
  write_json_file(out.solution_path, j);
  write_manifest(out_dir, "estimate", cfg,
                 json{{"dataset", dataset_path},
                      {"status", conic::status_name(sol.status)},
                      {"outputs", json::array({"solution.json"})}});
  return out;
}

ConsistencyOutcome run_consistency(const RunConfig& cfg,
                                   const std::string& out_dir) {
  require(!cfg.consistency.m_grid.empty(),
          "config.consistency block is required");
  require(cfg.true_Q.has_value(), "true_cost.Q is required");
  ensure_dir(out_dir);
  const Eigen::MatrixXd Q_true = *cfg.true_Q;
  const double q_norm = Q_true.norm();
  require(q_norm > 0, "true_cost.Q must be nonzero");

  Dataset pool;
  if (cfg.consistency.mode == ConsistencyConfig::Mode::Subsample)
    pool = read_dataset(cfg.consistency.pool_dataset);

  struct Job {
    int M;
    std::uint64_t seed;
  };
  std::vector<Job> jobs;
  for (int M : cfg.consistency.m_grid)
    for (std::uint64_t seed : cfg.consistency.seeds) jobs.push_back({M, seed});

  std::vector<ConsistencyRow> rows(jobs.size());
  std::atomic<std::size_t> next{0};

  auto run_job = [&](std::size_t idx) {
    const Job& job = jobs[idx];
    Dataset ds;
    if (cfg.consistency.mode == ConsistencyConfig::Mode::Regenerate) {
      // Independent data per (M, seed); horizon/start randomness included.
      ds = generate_dataset(
          cfg, job.M,
          mix64(mix64(static_cast<std::uint64_t>(job.M)) ^ job.seed));
    } else {
      require(pool.size() >= job.M, "pool dataset smaller than grid M");
      std::vector<int> order(pool.size());
      for (int i = 0; i < pool.size(); ++i) order[i] = i;
      Rng rng(split_seed(job.seed, static_cast<std::uint64_t>(job.M)));
      for (int i = pool.size() - 1; i > 0; --i)
        std::swap(order[i], order[rng.uniform_int(0, i)]);
      ds.total_steps = pool.total_steps;
      for (int i = 0; i < job.M; ++i)
        ds.trajectories.push_back(pool.trajectories[order[i]]);
    }
    const auto refs = references_for(cfg, ds);
    const IOCSolution sol =
        solve_ioc(cfg.system, ds, refs, cfg.noise, cfg.estimator);
    ConsistencyRow row;
    row.M = job.M;
    row.seed = job.seed;
    row.rel_error = (sol.Q_est - Q_true).norm() / q_norm;
    row.status = conic::status_name(sol.status);
    row.iterations = sol.iterations;
    rows[idx] = row;
  };

  const int workers =
      std::max(1, std::min<int>(cfg.consistency.workers,
                                static_cast<int>(jobs.size())));
  if (workers == 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) run_job(i);
  } else {
    std::vector<std::future<void>> pool_futures;
    pool_futures.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool_futures.push_back(std::async(std::launch::async, [&]() {
        for (std::size_t i = next.fetch_add(1); i < jobs.size();
             i = next.fetch_add(1))
          run_job(i);
      }));
    }
    for (auto& f : pool_futures) f.get();
  }

  ConsistencyOutcome out;
  out.rows = rows;
  for (int M : cfg.consistency.m_grid) {
    std::vector<double> errs;
    for (const auto& row : rows)
      if (row.M == M) errs.push_back(row.rel_error);
    out.medians.emplace_back(M, median(errs));
  }
  int inversions = 0;
  for (std::size_t i = 1; i < out.medians.size(); ++i)
    if (out.medians[i].second > out.medians[i - 1].second) ++inversions;
  out.nonincreasing = inversions <= 1;
  out.strict_decrease =
      out.medians.back().second < out.medians.front().second;

  out.csv_path = out_dir + "/consistency.csv";
  {
    std::ofstream os(out.csv_path);
    if (!os) throw ConfigError("cannot open for writing: " + out.csv_path);
    os << "M,seed,relative_error,status,iterations\n";
    for (const auto& row : rows)
      os << row.M << "," << row.seed << "," << fmt17(row.rel_error) << ","
         << row.status << "," << row.iterations << "\n";
  }
  out.summary_path = out_dir + "/summary.csv";
  {
    std::ofstream os(out.summary_path);
    if (!os) throw ConfigError("cannot open for writing: " + out.summary_path);
    os << "M,median_relative_error\n";
    for (const auto& [M, med] : out.medians)
      os << M << "," << fmt17(med) << "\n";
  }
  write_manifest(
      out_dir, "consistency", cfg,
      json{{"seeds", cfg.consistency.seeds},
           {"m_grid", cfg.consistency.m_grid},
           {"trend_nonincreasing", out.nonincreasing},
           {"strict_decrease", out.strict_decrease},
           {"outputs", json::array({"consistency.csv", "summary.csv"})}});
  return out;
}

PredictOutcome run_predict(const RunConfig& cfg,
                           const std::string& solution_path,
                           const std::string& dataset_path,
                           const std::string& out_dir) {
  ensure_dir(out_dir);
  const Eigen::MatrixXd Q_raw = read_solution_file(solution_path);
  require(Q_raw.rows() == cfg.system.n(),
          "solution dimension does not match the system");
  const Eigen::MatrixXd Q = clamp_psd(Q_raw, 1e-6);
  const Dataset ds = read_dataset(dataset_path);
  require(ds.state_dim() == cfg.system.n(),
          "dataset/system dimension mismatch");
  const auto refs = references_for(cfg, ds);
  const CostParams cost{Q};

  // Group observations by (reference, horizon); predictions are noise-free
  // forward solves from each group's first observed start state.
  std::map<std::pair<std::string, int>, std::vector<const Trajectory*>> groups;
  for (const auto& tr : ds.trajectories)
    groups[{tr.ref_id, tr.N}].push_back(&tr);

  PredictOutcome out;
  out.predictions_path = out_dir + "/predictions.csv";
  out.rmse_path = out_dir + "/rmse.csv";
  std::ofstream pos(out.predictions_path);
  if (!pos) throw ConfigError("cannot open for writing: " + out.predictions_path);
  const int n = cfg.system.n();
  pos << "ref_id,N,traj_id,step";
  for (int j = 0; j < n; ++j) pos << ",obs_" << j;
  for (int j = 0; j < n; ++j) pos << ",pred_" << j;
  pos << "\n";

  std::ofstream ros(out.rmse_path);
  if (!ros) throw ConfigError("cannot open for writing: " + out.rmse_path);
  ros << "ref_id,N,trajectories,rmse\n";

  for (const auto& [key, members] : groups) {
    const auto& [ref_id, N] = key;
    const ReferenceSignal& ref = refs.at(ref_id);
    const Eigen::VectorXd start = members.front()->states.front();
    const Trajectory pred =
        oracle::qp_forward_solve(cfg.system, cost, ref, start, N).trajectory;

    double sq_sum = 0.0;
    long terms = 0;
    for (const Trajectory* tr : members) {
      for (int k = 0; k < N; ++k) {
        const Eigen::VectorXd& obs = tr->states[k];
        const Eigen::VectorXd& prd = pred.states[k];
        sq_sum += (obs - prd).squaredNorm();
        terms += n;
        pos << ref_id << "," << N << "," << tr->id << ","
            << tr->start_step() + k;
        for (int j = 0; j < n; ++j) pos << "," << fmt17(obs(j));
        for (int j = 0; j < n; ++j) pos << "," << fmt17(prd(j));
        pos << "\n";
      }
    }
    PredictGroup group;
    group.ref_id = ref_id;
    group.N = N;
    group.count = static_cast<int>(members.size());
    group.rmse = std::sqrt(sq_sum / static_cast<double>(terms));
    ros << ref_id << "," << N << "," << group.count << ","
        << fmt17(group.rmse) << "\n";
    out.groups.push_back(std::move(group));
  }
  write_manifest(out_dir, "predict", cfg,
                 json{{"solution", solution_path},
                      {"dataset", dataset_path},
                      {"outputs",
                       json::array({"predictions.csv", "rmse.csv"})}});
  return out;
}

NoiseOutcome run_noise(const RunConfig& cfg, const std::string& dataset_path,
                       const std::string& out_dir) {
  ensure_dir(out_dir);
  const Dataset ds = read_dataset(dataset_path);
  NoiseOutcome out;
  out.estimate =
      estimate_noise_covariance(ds, cfg.system, cfg.noise_estimation);
  out.path = out_dir + "/noise.json";
  write_json_file(out.path,
                  json{{"schema", 1},
                       {"sigma_w", matrix_to_json(out.estimate.model.sigma_w)},
                       {"mean", vector_to_json(out.estimate.mean)},
                       {"sample_count", out.estimate.sample_count},
                       {"config_hash", cfg.config_hash}});
  write_manifest(out_dir, "noise", cfg,
                 json{{"dataset", dataset_path},
                      {"sample_count", out.estimate.sample_count},
                      {"outputs", json::array({"noise.json"})}});
  return out;
}

}  // namespace lqioc
