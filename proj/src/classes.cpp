#include "symq/classes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "symq/errors.hpp"

namespace symq {

namespace {

constexpr double kFormTolerance = 1e-14;

void require_function(const TruncatedSeries& f, const char* op) {
    if (!f.normalized()) {
        throw ParameterError(std::string(op) + ": expects a normalized function (not a derivative or raw series)");
    }
}

// |a_n| for n >= 2 of z - sum a_n z^n; throws FormError otherwise.
std::vector<double> negative_form_magnitudes(const TruncatedSeries& f) {
    std::vector<double> mags(f.order() + 1, 0.0);
    for (int n = 2; n <= f.order(); ++n) {
        const Complex a = f[n];
        if (std::abs(a.imag()) > kFormTolerance || a.real() > kFormTolerance) {
            throw FormError("coefficient a_" + std::to_string(n) +
                            " is not real and nonpositive; expected z - sum a_n z^n with a_n >= 0");
        }
        mags[n] = std::max(-a.real(), 0.0);
    }
    return mags;
}

struct QuotientPoly {
    std::vector<Complex> numerator;    // D~f, coefficient of z^{n-1}
    std::vector<Complex> denominator;  // f/z
    std::vector<double> magnitudes;    // |c_n| for the singularity scale
};

QuotientPoly quotient_polynomials(const TruncatedSeries& f, const ClassParams& p) {
    QuotientPoly poly;
    const int n = f.order();
    poly.numerator.resize(n);
    poly.denominator.resize(n);
    poly.magnitudes.resize(n);
    for (int k = 1; k <= n; ++k) {
        poly.numerator[k - 1] = symmetric_q_number(k, p.q) * f[k];
        poly.denominator[k - 1] = f[k];
        poly.magnitudes[k - 1] = std::abs(f[k]);
    }
    return poly;
}

double magnitude_sum(std::span<const double> mags, double r) {
    double acc = 0.0;
    for (auto it = mags.rbegin(); it != mags.rend(); ++it) {
        acc = acc * r + *it;
    }
    return acc;
}

// Evaluate w at z; returns nullopt where f/z vanishes to working precision.
std::optional<Complex> evaluate_quotient(const QuotientPoly& poly, Complex z) {
    const Complex den = horner(poly.denominator, z);
    if (std::abs(den) <= 1e-13 * magnitude_sum(poly.magnitudes, std::abs(z))) {
        return std::nullopt;
    }
    return horner(poly.numerator, z) / den;
}

// Real-axis scan toward z = 1 along the path of the necessity argument.
std::optional<Complex> real_axis_witness(const TruncatedSeries& f, const ClassParams& p) {
    const auto poly = quotient_polynomials(f, p);
    std::vector<double> radii;
    constexpr int kLinear = 4096;
    for (int i = 1; i < kLinear; ++i) {
        radii.push_back(static_cast<double>(i) / kLinear);
    }
    for (int j = 13; j <= 52; ++j) {
        radii.push_back(1.0 - std::ldexp(1.0, -j));
    }
    std::sort(radii.begin(), radii.end());
    for (double r : radii) {
        const auto w = evaluate_quotient(poly, r);
        if (!w || !in_conic_domain(*w, p.k, p.alpha)) {
            return Complex(r, 0.0);
        }
    }
    return std::nullopt;
}

}  // namespace

std::string_view to_string(Certification c) {
    switch (c) {
        case Certification::MemberSufficient:
            return "member-sufficient";
        case Certification::MemberIffNegative:
            return "member-iff-negative";
        case Certification::NotMemberWitness:
            return "not-member-witness";
        case Certification::Inconclusive:
            return "inconclusive";
    }
    return "inconclusive";
}

void DecompositionWeights::validate() const {
    if (lambdas.empty()) {
        throw ParameterError("decomposition weights are empty");
    }
    double sum = 0.0;
    for (double l : lambdas) {
        if (!(l >= 0.0) || !std::isfinite(l)) {
            throw ParameterError("decomposition weights must be finite and nonnegative");
        }
        sum += l;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
        throw ParameterError("decomposition weights must sum to 1, got " + std::to_string(sum));
    }
}

double coefficient_weight(int n, const ClassParams& p) {
    return symmetric_q_number(n, p.q) * (p.k + 1.0) - (p.k + p.alpha);
}

double coefficient_threshold(int n, const ClassParams& p) {
    if (n < 2) {
        throw ParameterError("coefficient threshold needs n >= 2, got " + std::to_string(n));
    }
    return (1.0 - p.alpha) / coefficient_weight(n, p);
}

double sufficient_condition_margin(const TruncatedSeries& f, const ClassParams& p) {
    require_function(f, "sufficient_condition_margin");
    double sum = 0.0;
    for (int n = 2; n <= f.order(); ++n) {
        sum += coefficient_weight(n, p) * std::abs(f[n]);
    }
    return (1.0 - p.alpha) - sum;
}

MembershipVerdict ts_membership(const TruncatedSeries& f, const ClassParams& p) {
    require_function(f, "ts_membership");
    const auto mags = negative_form_magnitudes(f);
    double sum = 0.0;
    for (int n = 2; n <= f.order(); ++n) {
        sum += coefficient_weight(n, p) * mags[n];
    }
    const double margin = (1.0 - p.alpha) - sum;
    if (margin >= 0.0) {
        return {Certification::MemberIffNegative, margin, std::nullopt};
    }
    if (auto w = real_axis_witness(f, p)) {
        return {Certification::NotMemberWitness, margin, w};
    }
    return {Certification::Inconclusive, margin, std::nullopt};
}

Complex starlike_quotient(const TruncatedSeries& f, const ClassParams& p, Complex z) {
    require_function(f, "starlike_quotient");
    const auto w = evaluate_quotient(quotient_polynomials(f, p), z);
    if (!w) {
        throw SingularDivision("f vanishes at the evaluation point");
    }
    return *w;
}

MembershipVerdict sampled_membership(const TruncatedSeries& f, const ClassParams& p, const DiskGrid& grid) {
    require_function(f, "sampled_membership");
    grid.validate();
    const auto poly = quotient_polynomials(f, p);
    double min_margin = std::numeric_limits<double>::infinity();
    for (double r : grid.radii) {
        for (int j = 0; j < grid.angles; ++j) {
            const Complex z = std::polar(r, grid.angle(j));
            const auto w = evaluate_quotient(poly, z);
            if (!w) {
                throw SingularDivision("f vanishes at grid point r=" + std::to_string(r) +
                                       ", angle index " + std::to_string(j));
            }
            const double m = conic_margin(*w, p.k, p.alpha);
            if (!(m > 0.0)) {
                return {Certification::NotMemberWitness, m, z};
            }
            min_margin = std::min(min_margin, m);
        }
    }
    return {Certification::Inconclusive, min_margin, std::nullopt};
}

TruncatedSeries extremal_function(int n, const ClassParams& p, int order) {
    if (n < 1) {
        throw ParameterError("extremal function index must be >= 1");
    }
    const int N = std::max({order, n, 2});
    std::vector<Complex> a(N, 0.0);
    a[0] = 1.0;
    if (n >= 2) {
        a[n - 1] = -coefficient_threshold(n, p);
    }
    return TruncatedSeries::function(a);
}

double distortion_constant(const ClassParams& p) {
    const double q = p.q.value();
    return q * (1.0 - p.alpha) / ((q * q + 1.0) * (p.k + 1.0) - q * (p.k + p.alpha));
}

namespace {
void require_radius(double r) {
    if (!(r >= 0.0 && r < 1.0)) {
        throw ParameterError("radius must lie in [0,1), got " + std::to_string(r));
    }
}
}  // namespace

Envelope distortion_bounds(double r, const ClassParams& p) {
    require_radius(r);
    const double c = distortion_constant(p);
    return {r - c * r * r, r + c * r * r};
}

Envelope derivative_distortion_bounds(double r, const ClassParams& p) {
    require_radius(r);
    const double c = distortion_constant(p);
    return {1.0 - 2.0 * c * r, 1.0 + 2.0 * c * r};
}

TruncatedSeries distortion_equality_function(const ClassParams& p, int order) {
    std::vector<Complex> a(std::max(order, 2), 0.0);
    a[0] = 1.0;
    a[1] = distortion_constant(p);
    return TruncatedSeries::function(a);
}

DecompositionWeights extreme_point_decompose(const TruncatedSeries& f, const ClassParams& p) {
    require_function(f, "extreme_point_decompose");
    const auto mags = negative_form_magnitudes(f);
    DecompositionWeights w;
    w.lambdas.assign(f.order(), 0.0);
    double tail = 0.0;
    for (int n = 2; n <= f.order(); ++n) {
        w.lambdas[n - 1] = coefficient_weight(n, p) / (1.0 - p.alpha) * mags[n];
        tail += w.lambdas[n - 1];
    }
    const double first = 1.0 - tail;
    if (first < -1e-12) {
        throw DecompositionInfeasible("function is not in the negative-coefficient class (lambda_1 = " +
                                      std::to_string(first) + ")");
    }
    w.lambdas[0] = std::max(first, 0.0);
    return w;
}

TruncatedSeries extreme_point_compose(const DecompositionWeights& w, const ClassParams& p) {
    w.validate();
    const int N = std::max<int>(static_cast<int>(w.lambdas.size()), 2);
    std::vector<Complex> a(N, 0.0);
    a[0] = 1.0;
    for (int n = 2; n <= static_cast<int>(w.lambdas.size()); ++n) {
        a[n - 1] = -w.lambdas[n - 1] * coefficient_threshold(n, p);
    }
    return TruncatedSeries::function(a);
}

}  // namespace symq
