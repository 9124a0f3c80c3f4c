#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "symq/series.hpp"

namespace testing {

using symq::Complex;

// a_1 = 1, a_2..a_N uniform in the unit square [-1,1]^2.
inline std::vector<Complex> random_function_coeffs(std::mt19937_64& rng, int order) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> a(order);
    a[0] = 1.0;
    for (int n = 1; n < order; ++n) {
        a[n] = {u(rng), u(rng)};
    }
    return a;
}

inline std::vector<Complex> random_coeffs(std::mt19937_64& rng, int count) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(count);
    for (auto& x : c) {
        x = {u(rng), u(rng)};
    }
    return c;
}

// max_i |a_i - b_i| / max(scale_i, tiny).
inline double max_rel_error(std::span<const Complex> a, std::span<const Complex> b, std::span<const double> scale) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(scale[i], 1e-300));
    }
    return worst;
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace testing
