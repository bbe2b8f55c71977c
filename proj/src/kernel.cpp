#include "raal/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace raal {

void Kernel::validate() const {
    if (!(variance > 0.0)) throw std::invalid_argument("Kernel: variance must be positive");
    if (lengthscales.size() == 0) throw std::invalid_argument("Kernel: no lengthscales");
    for (Eigen::Index j = 0; j < lengthscales.size(); ++j) {
        if (!(lengthscales[j] > 0.0)) {
            throw std::invalid_argument("Kernel: lengthscales must be positive");
        }
    }
}

double kernel_eval(const Kernel& k, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    if (a.size() != k.lengthscales.size() || b.size() != k.lengthscales.size()) {
        throw std::invalid_argument("kernel_eval: point dimension does not match lengthscales");
    }
    double q = 0.0;
    for (Eigen::Index j = 0; j < a.size(); ++j) {
        const double r = (a[j] - b[j]) / k.lengthscales[j];
        q += r * r;
    }
    return k.variance * std::exp(-0.5 * q);
}

}  // namespace raal
