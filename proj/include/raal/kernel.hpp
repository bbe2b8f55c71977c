#pragma once

#include <Eigen/Dense>

namespace raal {

//! Anisotropic squared-exponential covariance.
struct Kernel {
    double variance = 1.0;
    Eigen::VectorXd lengthscales;

    void validate() const;
};

//! k(a,b) = variance * exp(-1/2 sum_j ((a_j-b_j)/l_j)^2). Throws on
//! dimension mismatch with the kernel's lengthscales.
double kernel_eval(const Kernel& k, const Eigen::VectorXd& a, const Eigen::VectorXd& b);

}  // namespace raal
