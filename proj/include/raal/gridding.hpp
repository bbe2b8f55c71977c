#pragma once

#include <Eigen/Dense>
#include <vector>

namespace raal {

struct GriddingConfig {
    std::vector<int> bins_per_dim;   // E_j
    double xi_max = 0.8;             // in [0,1)
    double learning_rate = 0.0;      // eta_xi
    Eigen::VectorXd lower;           // L_j
    Eigen::VectorXd upper;           // U_j

    void validate() const;
    int dims() const { return static_cast<int>(bins_per_dim.size()); }
    int total_bins() const;          // E = sum_j E_j
};

//! One-hot projection of a point onto the per-dimension bins; stored as the
//! 1-based bin index of each dimension block.
struct BinEncoding {
    std::vector<int> bin;

    //! Concatenated one-hot vector of length E.
    std::vector<int> chi(const GriddingConfig& cfg) const;
    //! Global 0-based bin ids (one per dimension block).
    std::vector<int> global_bins(const GriddingConfig& cfg) const;
};

//! Exploitation parameter schedule xi_t = xi_max (1 - exp(-eta B/(Bmax - B))).
//! Undefined (throws) once the budget is depleted.
double xi_schedule(const GriddingConfig& cfg, double spent_budget, double max_budget);

//! Equal-width bins over [L_j, U_j]; upper domain edge falls in the last bin.
BinEncoding uniform_encode(const Eigen::VectorXd& x, const GriddingConfig& cfg);

struct AdaptiveGrid {
    std::vector<int> retained;                      // indices into the pool
    std::vector<BinEncoding> encodings;             // aligned with `retained`
    std::vector<std::vector<double>> breakpoints;   // per dim, Q^0..Q^{E_j}
    bool uniform_fallback = false;
};

//! AF-weighted quantile gridding: drop pool points whose score falls below
//! the xi-quantile, place per-dimension breakpoints at coordinate quantiles
//! of the retained points, then bin-encode them. Falls back to uniform
//! encoding of the whole pool when too few points survive the filter.
AdaptiveGrid adaptive_encode(const std::vector<Eigen::VectorXd>& points,
                             const Eigen::VectorXd& scores, double xi,
                             const GriddingConfig& cfg);

//! Per-point score driving the xi filter: the max AF value across fidelities.
Eigen::VectorXd pool_scores(const Eigen::MatrixXd& acq_table);

}  // namespace raal
