#include "symq/qcalc.hpp"

#include <cmath>
#include <string>

#include "symq/errors.hpp"

namespace symq {

namespace {

// exp(w) - 1 without cancellation for small |w|.
Complex expm1(Complex w) {
    const double a = w.real();
    const double b = w.imag();
    const double s = std::sin(0.5 * b);
    return {std::expm1(a) * std::cos(b) - 2.0 * s * s, std::exp(a) * std::sin(b)};
}

template <typename Coefficient>
TruncatedSeries apply_difference(const TruncatedSeries& f, Coefficient&& multiplier) {
    const int n = f.order();
    std::vector<Complex> c(n);
    for (int k = 1; k <= n; ++k) {
        c[k - 1] = multiplier(k) * f[k];
    }
    if (c.size() < 2) {
        c.resize(2);
    }
    return TruncatedSeries(std::move(c), SeriesKind::Derivative);
}

}  // namespace

QParam::QParam(double q) : q_(q) {
    if (!(q > 0.0 && q <= 1.0)) {
        throw ParameterError("q must lie in (0,1], got " + std::to_string(q));
    }
}

Complex q_number(Complex lambda, QParam q) {
    if (q.classical()) {
        return lambda;
    }
    const double t = std::log1p(q.value() - 1.0);
    return -expm1(lambda * t) / (1.0 - q.value());
}

double q_number(double lambda, QParam q) {
    if (q.classical()) {
        return lambda;
    }
    const double t = std::log1p(q.value() - 1.0);
    return -std::expm1(lambda * t) / (1.0 - q.value());
}

double symmetric_q_number(int n, QParam q) {
    if (n < 1) {
        throw ParameterError("symmetric q-number needs n >= 1, got " + std::to_string(n));
    }
    if (q.classical() || n == 1) {
        return n;
    }
    // q = e^{-t}: (q^n - q^-n)/(q - q^-1) = sinh(n t)/sinh(t).
    const double t = -std::log1p(q.value() - 1.0);
    return std::sinh(n * t) / std::sinh(t);
}

double symmetric_q_number_formula(int n, double q) {
    if (!(q > 0.0) || !std::isfinite(q)) {
        throw ParameterError("symmetric q-number quotient needs q > 0");
    }
    if (n < 1) {
        throw ParameterError("symmetric q-number needs n >= 1, got " + std::to_string(n));
    }
    if (q == 1.0) {
        return n;
    }
    // (q^n - q^-n)/(q - 1/q) = sinh(n t)/sinh(t) with t = ln q; the literal
    // quotient cancels catastrophically as q -> 1.
    const double t = std::log(q);
    return std::sinh(n * t) / std::sinh(t);
}

TruncatedSeries q_derivative(const TruncatedSeries& f, QParam q) {
    return apply_difference(f, [q](int k) { return q_number(static_cast<double>(k), q); });
}

TruncatedSeries symmetric_q_derivative(const TruncatedSeries& f, QParam q) {
    return apply_difference(f, [q](int k) { return symmetric_q_number(k, q); });
}

}  // namespace symq
