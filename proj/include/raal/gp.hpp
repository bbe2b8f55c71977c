#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "raal/kernel.hpp"

namespace raal {

struct GpConfig {
    double noise_variance = 0.0;
    double jitter = 1e-8;
    int mle_restarts = 5;
    std::uint64_t seed = 0;
    //! Per-dimension domain width used for the lengthscale search bounds.
    //! When empty the training-data range is used instead.
    std::optional<Eigen::VectorXd> domain_width;
};

struct PosteriorPrediction {
    double mean = 0.0;
    double variance = 0.0;
};

struct FitInfo {
    double best_log_likelihood = 0.0;
    std::vector<double> restart_initial_log_likelihood;
};

//! Zero-mean Gaussian-process regressor with a cached Cholesky factor of
//! K + noise*I + jitter*I. Immutable once constructed; safe to share across
//! threads for prediction.
class GpModel {
public:
    //! Build a model with the given, fixed hyperparameters.
    static GpModel make(Eigen::MatrixXd inputs, Eigen::VectorXd outputs, Kernel kernel,
                        GpConfig config);

    PosteriorPrediction predict(const Eigen::VectorXd& x) const;
    double log_marginal_likelihood() const;

    const Eigen::MatrixXd& inputs() const { return inputs_; }
    const Eigen::VectorXd& outputs() const { return outputs_; }
    const Kernel& kernel() const { return kernel_; }
    const GpConfig& config() const { return config_; }
    const Eigen::MatrixXd& cholesky_factor() const { return chol_; }
    const Eigen::VectorXd& alpha() const { return alpha_; }
    double jitter_used() const { return jitter_used_; }
    double output_shift() const { return shift_; }
    const FitInfo& fit_info() const { return fit_info_; }

    //! Posterior variance at/below this level is numerically an interpolated
    //! (fully observed) point.
    double variance_floor() const { return 10.0 * jitter_used_; }

private:
    friend GpModel fit_gp(const Eigen::MatrixXd&, const Eigen::VectorXd&, const GpConfig&);

    Eigen::MatrixXd inputs_;
    Eigen::VectorXd outputs_;   // as given (shift not applied)
    Kernel kernel_;
    GpConfig config_;
    Eigen::MatrixXd chol_;      // lower-triangular factor
    Eigen::VectorXd alpha_;     // (K + noise I + jitter I)^-1 (y - shift)
    double jitter_used_ = 0.0;
    double shift_ = 0.0;        // output centering, baked in at fit time
    FitInfo fit_info_;
};

//! Maximum-likelihood fit of the kernel hyperparameters (multi-start ascent
//! on log-parameters, config.mle_restarts starts).
GpModel fit_gp(const Eigen::MatrixXd& inputs, const Eigen::VectorXd& outputs,
               const GpConfig& config);

}  // namespace raal
