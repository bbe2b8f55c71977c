#include "detail/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace raal::detail {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// One monotone ascent from x0, in coordinates normalized to [0,1]^k.
std::pair<Eigen::VectorXd, double> ascend(
    const std::function<double(const Eigen::VectorXd&)>& objective, const Eigen::VectorXd& lower,
    const Eigen::VectorXd& span, Eigen::VectorXd u, int max_iterations) {
    const auto k = u.size();
    auto eval = [&](const Eigen::VectorXd& uu) {
        return objective(lower + span.cwiseProduct(uu));
    };

    double fu = eval(u);
    if (!std::isfinite(fu)) return {u, kNegInf};

    const double fd_step = 1e-6;
    double step = 0.1;
    Eigen::VectorXd grad(k), trial(k);

    for (int it = 0; it < max_iterations; ++it) {
        for (Eigen::Index j = 0; j < k; ++j) {
            Eigen::VectorXd up = u, dn = u;
            up[j] = std::min(1.0, u[j] + fd_step);
            dn[j] = std::max(0.0, u[j] - fd_step);
            const double fp = eval(up);
            const double fm = eval(dn);
            if (!std::isfinite(fp) || !std::isfinite(fm)) {
                grad[j] = 0.0;
                continue;
            }
            grad[j] = (fp - fm) / (up[j] - dn[j]);
        }
        const double gnorm = grad.norm();
        if (gnorm < 1e-10) break;

        // Backtracking until the step improves the objective.
        bool moved = false;
        while (step > 1e-11) {
            trial = (u + (step / gnorm) * grad).cwiseMax(0.0).cwiseMin(1.0);
            const double ft = eval(trial);
            if (std::isfinite(ft) && ft > fu) {
                u = trial;
                fu = ft;
                step = std::min(step * 1.8, 1.0);
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    return {u, fu};
}

}  // namespace

MaximizeResult maximize_multistart(const std::function<double(const Eigen::VectorXd&)>& objective,
                                   const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                                   const Eigen::VectorXd& x0, int restarts, Rng& rng,
                                   int max_iterations) {
    if (restarts < 1) throw std::invalid_argument("maximize_multistart: restarts must be >= 1");
    const auto k = lower.size();
    const Eigen::VectorXd span = upper - lower;

    MaximizeResult best;
    best.value = kNegInf;
    best.x = x0;

    for (int r = 0; r < restarts; ++r) {
        Eigen::VectorXd u(k);
        if (r == 0) {
            for (Eigen::Index j = 0; j < k; ++j) {
                const double s = span[j] > 0 ? (x0[j] - lower[j]) / span[j] : 0.5;
                u[j] = std::clamp(s, 0.0, 1.0);
            }
        } else {
            for (Eigen::Index j = 0; j < k; ++j) u[j] = rng.uniform();
        }
        best.start_values.push_back(objective(lower + span.cwiseProduct(u)));

        auto [ur, fr] = ascend(objective, lower, span, u, max_iterations);
        if (fr > best.value) {
            best.value = fr;
            best.x = lower + span.cwiseProduct(ur);
        }
    }
    if (!std::isfinite(best.value)) {
        throw std::runtime_error("maximize_multistart: objective not finite at any start");
    }
    return best;
}

}  // namespace raal::detail
