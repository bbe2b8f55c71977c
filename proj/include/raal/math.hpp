#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace raal {

inline double normal_pdf(double z) {
    static const double inv_sqrt_2pi = 0.3989422804014326779;
    return inv_sqrt_2pi * std::exp(-0.5 * z * z);
}

inline double normal_cdf(double z) {
    return 0.5 * std::erfc(-z * 0.70710678118654752440);
}

//! Quantile by linear interpolation between closest order statistics
//! (the R type-7 estimator). q in [0,1].
inline double quantile(std::vector<double> values, double q) {
    if (values.empty()) throw std::invalid_argument("quantile: empty sample");
    if (q < 0.0 || q > 1.0) throw std::invalid_argument("quantile: q outside [0,1]");
    std::sort(values.begin(), values.end());
    const double h = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(h));
    const auto hi = std::min(lo + 1, values.size() - 1);
    const double w = h - static_cast<double>(lo);
    return values[lo] + w * (values[hi] - values[lo]);
}

}  // namespace raal
