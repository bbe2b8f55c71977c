#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "raal/acquisition.hpp"
#include "raal/benchmarks.hpp"
#include "raal/gp.hpp"
#include "raal/gridding.hpp"
#include "raal/mf_gp.hpp"
#include "raal/rng.hpp"
#include "raal/seeding.hpp"

namespace raal {

struct ResourcePool {
    std::vector<double> capacities;  // beta_g

    static ResourcePool unit(int workers);
    double total() const;
};

struct BudgetState {
    double spent = 0.0;
    double max_budget = 0.0;
    int iteration = 0;
    int max_iterations = 0;
};

//! How the next batch is chosen: the seeding MILP, or the conventional-BO
//! baseline (single AF argmax per iteration).
enum class SeedingMode { Milp, GreedySingle, Auto };

struct EngineConfig {
    int cpus = 1;
    std::vector<int> bins_per_dim;   // empty -> 5 per dimension
    double eta_xi = 0.0;
    double xi_max = 0.8;
    double zeta = 0.0;
    double max_budget = 20.0;
    int max_iterations = 1000;
    int pool_size = 0;               // 0 -> 100 * d
    std::uint64_t seed = 0;
    int doe_low = 5;                 // ignored when the problem has one level
    int doe_high = 2;
    GpConfig gp;
    SeedingMode seeding = SeedingMode::Auto;
    long node_limit = 50'000'000;
};

struct BatchTask {
    int pool_id = 0;        // stable id of the pool point
    Eigen::VectorXd x;
    int fidelity = 1;
    int worker = 0;
};

struct IterationRecord {
    int iteration = 0;
    double budget_spent = 0.0;   // cumulative, including this batch
    double xi = 0.0;             // value used to grid this iteration's seeding
    double batch_cost = 0.0;
    std::vector<BatchTask> batch;
    double best_value = 0.0;     // incumbent min y^(M) after this batch
    Eigen::VectorXd best_point;
    double rse = 0.0;            // NaN when the optimum is unknown
};

enum class StopReason { BudgetExhausted, IterationLimit, PoolExhausted };

struct RunRecord {
    std::vector<IterationRecord> iterations;
    StopReason stop = StopReason::BudgetExhausted;
    Eigen::VectorXd best_point;
    double best_value = 0.0;
    MfDataset data;
};

//! Latin-hypercube pool over the box, infeasible points removed. One point
//! per stratum along every dimension before filtering.
std::vector<Eigen::VectorXd> generate_pool(const Eigen::VectorXd& lower,
                                           const Eigen::VectorXd& upper, int pool_size,
                                           const std::function<bool(const Eigen::VectorXd&)>& feasible,
                                           Rng& rng);

//! Evaluate a batch on its assigned workers (one thread per worker, tasks of
//! a worker run serially). All results are collected before returning.
std::vector<Observation> dispatch_batch(
    const std::vector<BatchTask>& tasks,
    const std::vector<std::function<double(const Eigen::VectorXd&)>>& evaluators, int workers);

//! Run the full resource-aware loop: initial DOE, parallel evaluation,
//! surrogate refresh, gridding, seeding, budget accounting.
RunRecord run(const BenchmarkProblem& problem, const EngineConfig& config);

std::string to_string(StopReason reason);

}  // namespace raal
