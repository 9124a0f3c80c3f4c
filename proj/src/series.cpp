#include "symq/series.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <mutex>
#include <numbers>
#include <string>

#include "symq/errors.hpp"

namespace symq {

namespace {

void require_same_order(const TruncatedSeries& f, const TruncatedSeries& g, const char* op) {
    if (f.order() != g.order()) {
        throw OrderMismatch(std::string(op) + ": order mismatch (" + std::to_string(f.order()) + " vs " +
                            std::to_string(g.order()) + ")");
    }
}

std::mutex& warning_mutex() {
    static std::mutex m;
    return m;
}

WarningHandler& warning_handler() {
    static WarningHandler h = [](std::string_view msg) { std::cerr << "warning: " << msg << '\n'; };
    return h;
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs, SeriesKind kind)
    : coeffs_(std::move(coeffs)), kind_(kind) {
    if (coeffs_.size() < 2) {
        throw ParameterError("truncated series needs order >= 1");
    }
    for (const auto& c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw ParameterError("truncated series coefficient is not finite");
        }
    }
}

TruncatedSeries TruncatedSeries::function(std::span<const Complex> a) {
    if (a.empty()) {
        throw ParameterError("function needs at least a_1");
    }
    if (std::abs(a[0] - Complex(1.0)) > 1e-14) {
        throw ParameterError("normalized function requires a_1 = 1");
    }
    std::vector<Complex> c(std::max<std::size_t>(a.size(), 2) + 1);
    std::copy(a.begin(), a.end(), c.begin() + 1);
    c[1] = 1.0;
    return TruncatedSeries(std::move(c), SeriesKind::Function);
}

TruncatedSeries TruncatedSeries::identity(int order) {
    return monomial(1.0, 1, std::max(order, 2)).as_function();
}

TruncatedSeries TruncatedSeries::constant(Complex c, int order) { return monomial(c, 0, order); }

TruncatedSeries TruncatedSeries::zero(int order) { return monomial(0.0, 0, order); }

TruncatedSeries TruncatedSeries::monomial(Complex c, int power, int order) {
    if (order < 1 || power < 0) {
        throw ParameterError("monomial: order must be >= 1 and power >= 0");
    }
    std::vector<Complex> coeffs(order + 1);
    if (power <= order) {
        coeffs[power] = c;
    }
    return TruncatedSeries(std::move(coeffs));
}

Complex TruncatedSeries::operator[](int power) const {
    if (power < 0 || power > order()) {
        return 0.0;
    }
    return coeffs_[power];
}

std::vector<Complex> TruncatedSeries::function_coeffs() const {
    return {coeffs_.begin() + 1, coeffs_.end()};
}

TruncatedSeries TruncatedSeries::as_function(double tol) const {
    if (std::abs(coeffs_[0]) > tol || std::abs(coeffs_[1] - Complex(1.0)) > tol) {
        throw ParameterError("series is not normalized (needs c_0 = 0, c_1 = 1)");
    }
    auto c = coeffs_;
    c[0] = 0.0;
    c[1] = 1.0;
    if (c.size() < 3) {
        c.resize(3);
    }
    return TruncatedSeries(std::move(c), SeriesKind::Function);
}

TruncatedSeries TruncatedSeries::with_order(int order) const {
    if (order < 1) {
        throw ParameterError("with_order: order must be >= 1");
    }
    auto c = coeffs_;
    c.resize(order + 1);
    return TruncatedSeries(std::move(c), kind_);
}

int TruncatedSeries::valuation() const {
    for (int i = 0; i <= order(); ++i) {
        if (coeffs_[i] != Complex(0.0)) {
            return i;
        }
    }
    return -1;
}

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g, "series_add");
    std::vector<Complex> c(f.order() + 1);
    for (int i = 0; i <= f.order(); ++i) {
        c[i] = f[i] + g[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g, "series_sub");
    std::vector<Complex> c(f.order() + 1);
    for (int i = 0; i <= f.order(); ++i) {
        c[i] = f[i] - g[i];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_scale(const TruncatedSeries& f, Complex s) {
    std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : c) {
        x *= s;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g, "series_mul");
    const int n = f.order();
    std::vector<Complex> c(n + 1);
    for (int k = 0; k <= n; ++k) {
        Complex acc = 0.0;
        for (int i = 0; i <= k; ++i) {
            acc += f[i] * g[k - i];
        }
        c[k] = acc;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_div(const TruncatedSeries& f, const TruncatedSeries& g) {
    require_same_order(f, g, "series_div");
    const int v = g.valuation();
    if (v < 0) {
        throw SingularDivision("series_div: division by the zero series");
    }
    for (int i = 0; i < v; ++i) {
        if (f[i] != Complex(0.0)) {
            throw SingularDivision("series_div: quotient has a pole at z = 0");
        }
    }
    const int n = f.order() - v;
    if (n < 1) {
        throw SingularDivision("series_div: nothing left after cancelling the common z-power");
    }
    const Complex lead = g[v];
    std::vector<Complex> h(n + 1);
    for (int k = 0; k <= n; ++k) {
        Complex acc = f[k + v];
        for (int i = 1; i <= k; ++i) {
            acc -= g[i + v] * h[k - i];
        }
        h[k] = acc / lead;
    }
    return TruncatedSeries(std::move(h));
}

Complex horner(std::span<const Complex> coeffs, Complex z) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * z + *it;
    }
    return acc;
}

Complex series_eval(const TruncatedSeries& f, Complex z) {
    if (std::abs(z) >= 1.0) {
        warn("series_eval at |z| >= 1 lies outside the unit disk; truncated polynomial evaluated");
    }
    return horner(f.coeffs(), z);
}

TruncatedSeries series_scale_arg(const TruncatedSeries& f, Complex c, ScaleMode mode) {
    std::vector<Complex> out(f.order() + 1);
    Complex power = 1.0;
    for (int i = 0; i <= f.order(); ++i) {
        out[i] = f[i] * power;
        power *= c;
    }
    if (mode == ScaleMode::Raw) {
        return TruncatedSeries(std::move(out));
    }
    if (c == Complex(0.0)) {
        throw ParameterError("series_scale_arg: normalized mode needs c != 0");
    }
    for (auto& x : out) {
        x /= c;
    }
    return TruncatedSeries(std::move(out), f.kind() == SeriesKind::Function ? SeriesKind::Function : SeriesKind::Raw);
}

DiskGrid DiskGrid::standard() {
    DiskGrid g;
    for (int i = 1; i <= 24; ++i) {
        g.radii.push_back(0.04 * i);
    }
    g.radii.push_back(0.995);
    g.angles = 96;
    return g;
}

void DiskGrid::validate() const {
    if (radii.empty()) {
        throw ParameterError("disk grid has no radii");
    }
    if (angles < 8) {
        throw ParameterError("disk grid needs at least 8 angles");
    }
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0 && radii[i] < 1.0)) {
            throw ParameterError("disk grid radii must lie in (0,1)");
        }
        if (i > 0 && !(radii[i] > radii[i - 1])) {
            throw ParameterError("disk grid radii must increase");
        }
    }
}

double DiskGrid::angle(int j) const { return 2.0 * std::numbers::pi * j / angles; }

WarningHandler set_warning_handler(WarningHandler handler) {
    std::lock_guard lock(warning_mutex());
    auto old = std::move(warning_handler());
    warning_handler() = std::move(handler);
    return old;
}

void warn(std::string_view message) {
    std::lock_guard lock(warning_mutex());
    if (warning_handler()) {
        warning_handler()(message);
    }
}

}  // namespace symq
