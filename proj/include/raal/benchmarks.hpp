#pragma once

#include <Eigen/Dense>
#include <functional>
#include <string>
#include <vector>

namespace raal {

//! Analytical test problem: per-fidelity evaluators over a box domain with a
//! known optimum.
struct BenchmarkProblem {
    std::string name;
    int dimension = 1;
    Eigen::VectorXd lower;
    Eigen::VectorXd upper;
    std::vector<std::function<double(const Eigen::VectorXd&)>> evaluators;  // index m-1
    std::vector<double> fidelity_costs;
    Eigen::VectorXd optimum_point;
    double optimum_value = 0.0;
    std::function<bool(const Eigen::VectorXd&)> feasible;  // null = whole box

    int num_fidelities() const { return static_cast<int>(evaluators.size()); }
};

//! Forrester function on [0,1]; fidelity 2 = (6x-2)^2 sin(12x-4),
//! fidelity 1 = 0.5 y2 + 10(x - 0.5).
double forrester(double x, int fidelity);

//! Sinusoidal-squared function on [0,1]; fidelity 1 = sin(8 pi x),
//! fidelity 2 = (x - sqrt(2)) y1^2.
double sin_squared(double x, int fidelity);

//! d-dimensional Rosenbrock variant on [-2,2]^d: sum (1-x_i)^2 +
//! 100 (x_{i+1} - x_i)^2, with a linear low-fidelity mapping. `classic`
//! switches the quadratic term to the textbook 100 (x_{i+1} - x_i^2)^2.
double rosenbrock_variant(const Eigen::VectorXd& x, int fidelity, bool classic = false);

//! Unit cost at the top level, 1/(5(M-m)) below it.
std::vector<double> fidelity_cost_schedule(int levels);

//! Build a benchmark by name: forrester | sin2 | rosenbrock. Single-fidelity
//! problems keep only the highest level. eval_latency_per_cost > 0 makes each
//! evaluation sleep latency*lambda seconds (parallelism demonstrations).
BenchmarkProblem make_benchmark(const std::string& name, int dims, bool multifidelity,
                                bool classic_rosenbrock = false,
                                double eval_latency_per_cost = 0.0);

}  // namespace raal
