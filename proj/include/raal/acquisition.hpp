#pragma once

#include <Eigen/Dense>
#include <vector>

#include "raal/gp.hpp"
#include "raal/mf_gp.hpp"

namespace raal {

struct AcqConfig {
    double zeta = 0.0;      // exploration margin
    bool minimize = true;
};

//! Best highest-fidelity observation so far.
struct Incumbent {
    double best_value = 0.0;
    Eigen::VectorXd best_point;
};

Incumbent find_incumbent(const MfDataset& data);

//! Expected Improvement over the incumbent; 0 when the predictive deviation
//! vanishes, clamped nonnegative.
double expected_improvement(const PosteriorPrediction& pred, const Incumbent& inc,
                            const AcqConfig& cfg);

//! Multifidelity EI: EI at the highest fidelity discounted by the posterior
//! correlation alpha1 = corr(f^(m)(x), f^(M)(x)) (clamped to [0,1]) and the
//! noise factor alpha2 = 1 - noise/sqrt(var^(m) + noise^2).
//! variance_floor marks predictions that are numerically interpolated points
//! (alpha1 -> 0 there for m < M).
double mf_expected_improvement(const MfPosteriorPrediction& pred, int m, const Incumbent& inc,
                               double noise, const AcqConfig& cfg, double variance_floor = 0.0);

//! N x M table of MFEI values over the candidate pool (plain EI when M = 1).
Eigen::MatrixXd build_acq_table(const MfGpModel& model, const std::vector<Eigen::VectorXd>& pool,
                                const Incumbent& inc, const AcqConfig& cfg);

}  // namespace raal
