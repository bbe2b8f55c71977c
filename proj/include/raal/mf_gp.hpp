#pragma once

#include <Eigen/Dense>
#include <vector>

#include "raal/gp.hpp"
#include "raal/kernel.hpp"

namespace raal {

//! One training record: input point, 1-based fidelity index, observed value.
struct Observation {
    Eigen::VectorXd x;
    int fidelity = 1;
    double value = 0.0;
};

struct MfDataset {
    int num_fidelities = 1;
    std::vector<Observation> observations;

    void validate() const;
};

struct MfPosteriorPrediction {
    double mean = 0.0;               // at the requested fidelity
    double variance = 0.0;
    double cross_covariance = 0.0;   // posterior cov(f^(m)(x), f^(M)(x))
    double highest_mean = 0.0;       // at fidelity M
    double highest_variance = 0.0;
};

//! Autoregressive (AR-1) multifidelity GP: f^(m) = rho_m f^(m-1) + delta^(m),
//! with one squared-exponential kernel per level (kappa_1 for the base level,
//! kappa_m for the bias terms) and one scale factor per transition.
class MfGpModel {
public:
    static MfGpModel make(MfDataset data, std::vector<Kernel> level_kernels,
                          std::vector<double> rho, GpConfig config);

    //! Prior covariance cov(f^(m)(x), f^(l)(x')) under the AR-1 recursion.
    double kernel(const Eigen::VectorXd& x, int m, const Eigen::VectorXd& xp, int l) const;

    MfPosteriorPrediction predict(const Eigen::VectorXd& x, int m) const;
    double log_marginal_likelihood() const;

    int num_fidelities() const { return data_.num_fidelities; }
    const MfDataset& data() const { return data_; }
    const std::vector<Kernel>& level_kernels() const { return kernels_; }
    const std::vector<double>& rho() const { return rho_; }
    const GpConfig& config() const { return config_; }
    const Eigen::MatrixXd& cholesky_factor() const { return chol_; }
    double jitter_used() const { return jitter_used_; }
    double output_shift() const { return shift_; }
    double variance_floor() const { return 10.0 * jitter_used_; }
    const FitInfo& fit_info() const { return fit_info_; }

private:
    friend MfGpModel fit_mf_gp(const MfDataset&, const GpConfig&);

    MfDataset data_;
    std::vector<Kernel> kernels_;   // size M
    std::vector<double> rho_;       // size M-1, rho_[m-2] scales level m-1 -> m
    GpConfig config_;
    Eigen::MatrixXd chol_;
    Eigen::VectorXd alpha_;
    double jitter_used_ = 0.0;
    double shift_ = 0.0;
    FitInfo fit_info_;
};

//! Joint maximum-likelihood fit of all level kernels and rho factors.
//! Requires at least one observation at every fidelity level.
MfGpModel fit_mf_gp(const MfDataset& data, const GpConfig& config);

//! Prior conditional covariance cov(f^(m)(x), f^(m-1)(x') | f^(m-1)(x)).
//! Zero (to round-off) for any x != x' under the AR-1 prior.
double markov_property_check(const MfGpModel& model, const Eigen::VectorXd& x,
                             const Eigen::VectorXd& xp, int m);

}  // namespace raal
