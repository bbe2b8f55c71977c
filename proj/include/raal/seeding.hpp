#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "raal/gridding.hpp"

namespace raal {

//! One multipoint multifidelity seeding problem: candidates with their bin
//! encodings and AF values, fidelity costs, worker capacities and the
//! budget-dominance weight.
struct SeedingInstance {
    int num_fidelities = 1;                 // M
    std::vector<int> bins_per_dim;          // bin layout (E_j)
    std::vector<int> candidate_ids;         // caller-side ids, one per row
    std::vector<BinEncoding> encodings;     // per candidate
    Eigen::MatrixXd af;                     // N x M, nonnegative
    std::vector<double> fidelity_costs;     // lambda, size M
    std::vector<double> capacities;         // beta_g, size G
    double upsilon = 0.0;

    int num_candidates() const { return static_cast<int>(candidate_ids.size()); }
    int num_workers() const { return static_cast<int>(capacities.size()); }
    void validate() const;
};

struct Selection {
    int candidate = 0;   // row index into the instance
    int fidelity = 1;    // 1-based
    int worker = 0;      // 0-based
};

struct SeedingPlan {
    std::vector<Selection> selections;   // canonically sorted by (i, m, g)
    std::vector<int> chosen_points;      // candidate rows with any selection
    double objective_value = 0.0;        // value of the minimized objective
    long nodes_explored = 0;
    bool proven_optimal = false;
};

struct SolveOptions {
    long node_limit = 50'000'000;
};

class NodeLimitError : public std::runtime_error {
public:
    NodeLimitError(std::string msg, SeedingPlan best)
        : std::runtime_error(std::move(msg)), incumbent(std::move(best)) {}
    SeedingPlan incumbent;
};

//! Assemble an instance; upsilon is set so that maximizing consumed budget
//! strictly dominates the AF term.
SeedingInstance build_instance(const std::vector<BinEncoding>& encodings,
                               const Eigen::MatrixXd& acq_table,
                               const std::vector<double>& fidelity_costs,
                               const std::vector<double>& capacities,
                               const std::vector<int>& candidate_ids,
                               const std::vector<int>& bins_per_dim);

//! Exact branch-and-bound solve of the seeding program. Deterministic; the
//! returned plan is feasibility-checked before being handed back.
SeedingPlan solve(const SeedingInstance& instance, const SolveOptions& options = {});

//! Independent feasibility check; returns a description of every violated
//! constraint (empty when the plan is feasible).
std::vector<std::string> verify_plan(const SeedingInstance& instance, const SeedingPlan& plan);

//! Objective of a selection set, summed in canonical order.
double plan_objective(const SeedingInstance& instance, const std::vector<Selection>& selections);

// Line-oriented text serialization (debugging and golden tests). Doubles are
// written with round-trip precision; read(write(x)) is bit-exact.
void write_instance(std::ostream& os, const SeedingInstance& instance);
SeedingInstance read_instance(std::istream& is);
void write_plan(std::ostream& os, const SeedingPlan& plan);
SeedingPlan read_plan(std::istream& is);

}  // namespace raal
