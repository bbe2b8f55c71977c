#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "raal/rng.hpp"

namespace raal::detail {

struct MaximizeResult {
    Eigen::VectorXd x;
    double value = 0.0;
    std::vector<double> start_values;  // objective at each restart's initial point
};

//! Multi-start bounded maximizer: projected gradient ascent with central
//! finite differences and a backtracking line search, run from `x0` plus
//! `restarts - 1` uniform draws inside the box. Each local run improves
//! monotonically. Objectives may signal an invalid point by returning -inf.
MaximizeResult maximize_multistart(const std::function<double(const Eigen::VectorXd&)>& objective,
                                   const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                                   const Eigen::VectorXd& x0, int restarts, Rng& rng,
                                   int max_iterations = 80);

}  // namespace raal::detail
