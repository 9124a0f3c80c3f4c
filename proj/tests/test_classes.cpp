#include <doctest.h>

#include "support.hpp"
#include "symq/classes.hpp"
#include "symq/errors.hpp"

using namespace symq;

namespace {

// z D~_q f / f straight from the difference quotient.
Complex quotient_from_definition(const TruncatedSeries& f, double q, Complex z) {
    const Complex d = (series_eval(f, q * z) - series_eval(f, z / q)) / ((q - 1.0 / q) * z);
    return z * d / series_eval(f, z);
}

std::vector<ClassParams> sample_params() {
    return {ClassParams(QParam(0.5), 1.0, 0.0), ClassParams(QParam(0.9), 0.0, 0.25),
            ClassParams(QParam(1.0), 0.0, 0.0), ClassParams(QParam(0.7), 2.5, 0.6)};
}

// Negative-coefficient member at random convex weights.
TruncatedSeries random_member(std::mt19937_64& rng, const ClassParams& p, int order) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    DecompositionWeights w;
    w.lambdas.resize(order);
    double s = 0.0;
    for (auto& l : w.lambdas) {
        l = u(rng);
        s += l;
    }
    for (auto& l : w.lambdas) {
        l /= s;
    }
    double tail = 0.0;
    for (int i = 1; i < order; ++i) {
        tail += w.lambdas[i];
    }
    w.lambdas[0] = 1.0 - tail;
    return extreme_point_compose(w, p);
}

}  // namespace

TEST_CASE("threshold example: q = 0.5, k = 1, alpha = 0 gives 1/4") {
    const ClassParams p(QParam(0.5), 1.0, 0.0);
    CHECK(coefficient_weight(2, p) == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(coefficient_threshold(2, p) == doctest::Approx(0.25).epsilon(1e-15));
    CHECK_THROWS_AS(coefficient_threshold(1, p), ParameterError);
}

TEST_CASE("extremal functions sit exactly on the coefficient condition") {
    for (const auto& p : sample_params()) {
        for (int n = 2; n <= 32; ++n) {
            CHECK(std::abs(sufficient_condition_margin(extremal_function(n, p), p)) <= 1e-12);
        }
        CHECK(sufficient_condition_margin(extremal_function(1, p), p) == doctest::Approx(1.0 - p.alpha));
    }
}

TEST_CASE("starlike quotient agrees with the difference-quotient definition") {
    std::mt19937_64 rng(31);
    for (const auto& p : sample_params()) {
        if (p.q.classical()) continue;
        const auto f = random_member(rng, p, 10);
        for (Complex z : {Complex(0.2, 0.1), Complex(-0.3, 0.25)}) {
            const Complex a = starlike_quotient(f, p, z);
            const Complex b = quotient_from_definition(f, p.q.value(), z);
            CHECK(std::abs(a - b) <= 1e-9 * std::abs(b));
        }
    }
}

TEST_CASE("coefficient-sufficient members never fail on the disk grid") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const auto& p : sample_params()) {
        for (int trial = 0; trial < 40; ++trial) {
            auto a = testing::random_function_coeffs(rng, 8);
            double weighted = 0.0;
            for (int n = 2; n <= 8; ++n) {
                weighted += coefficient_weight(n, p) * std::abs(a[n - 1]);
            }
            const double s = u(rng) * (1.0 - p.alpha) / weighted;
            for (int n = 2; n <= 8; ++n) {
                a[n - 1] *= s;
            }
            const auto f = TruncatedSeries::function(a);
            CHECK(sufficient_condition_margin(f, p) >= -1e-15);
            const auto v = sampled_membership(f, p);
            CHECK(v.certified == Certification::Inconclusive);
            CHECK(v.margin > 0.0);
        }
    }
}

TEST_CASE("negative-coefficient test: members, non-members and witnesses") {
    const ClassParams p(QParam(0.5), 1.0, 0.0);
    const auto on = extremal_function(3, p, 3);
    const auto v = ts_membership(on, p);
    CHECK(v.certified == Certification::MemberIffNegative);
    CHECK(std::abs(v.margin) <= 1e-14);

    // Double the extremal coefficient: outside, with a real-axis witness.
    std::vector<Complex> a{1.0, 0.0, 2.0 * on[3]};
    const auto out = TruncatedSeries::function(a);
    const auto w = ts_membership(out, p);
    REQUIRE(w.certified == Certification::NotMemberWitness);
    REQUIRE(w.witness.has_value());
    CHECK(w.margin < 0.0);
    CHECK(std::abs(*w.witness) < 1.0);
    // The definition samples f at z/q, past the unit circle; fine for a polynomial.
    auto old = set_warning_handler([](std::string_view) {});
    CHECK(!in_conic_domain(quotient_from_definition(out, 0.5, *w.witness), p.k, p.alpha));
    set_warning_handler(old);

    // Positive or complex coefficients are not the negative form.
    std::vector<Complex> pos{1.0, 0.1};
    CHECK_THROWS_AS(ts_membership(TruncatedSeries::function(pos), p), FormError);
    std::vector<Complex> cpx{1.0, Complex(-0.1, 0.01)};
    CHECK_THROWS_AS(ts_membership(TruncatedSeries::function(cpx), p), FormError);
}

TEST_CASE("sampled membership reports the first failing point") {
    const ClassParams p(QParam(0.8), 0.0, 0.0);
    // z + 2 z^2 is not even univalent; its quotient leaves the half-plane.
    std::vector<Complex> a{1.0, 2.0};
    const auto v = sampled_membership(TruncatedSeries::function(a), p, DiskGrid{{0.1, 0.3, 0.6, 0.9}, 32});
    REQUIRE(v.certified == Certification::NotMemberWitness);
    CHECK(conic_margin(starlike_quotient(TruncatedSeries::function(a), p, *v.witness), 0.0, 0.0) <= 0.0);
    // z + 2z^2 vanishes at -1/2, a grid point on the ray at angle pi.
    CHECK_THROWS_AS(sampled_membership(TruncatedSeries::function(a), p, DiskGrid{{0.5}, 8}), SingularDivision);
}

TEST_CASE("derivative series are refused by membership tests") {
    const ClassParams p(QParam(0.5), 0.0, 0.0);
    const auto d = symmetric_q_derivative(TruncatedSeries::identity(4), p.q);
    CHECK_THROWS_AS(sampled_membership(d, p), ParameterError);
    CHECK_THROWS_AS(sufficient_condition_margin(d, p), ParameterError);
}

TEST_CASE("distortion envelopes") {
    std::mt19937_64 rng(41);
    for (const auto& p : sample_params()) {
        const double c = distortion_constant(p);
        CHECK(c == doctest::Approx(coefficient_threshold(2, p)).epsilon(1e-14));
        const auto eq = distortion_equality_function(p);
        for (double r : {0.1, 0.5, 0.9}) {
            CHECK(std::abs(series_eval(eq, r) - distortion_bounds(r, p).upper) <= 1e-12);
        }
        for (int trial = 0; trial < 30; ++trial) {
            const auto f = random_member(rng, p, 12);
            for (double r : {0.2, 0.6, 0.95}) {
                const auto env = distortion_bounds(r, p);
                for (int j = 0; j < 32; ++j) {
                    const double v = std::abs(series_eval(f, std::polar(r, 2.0 * std::numbers::pi * j / 32)));
                    CHECK(v <= env.upper + 1e-12);
                    CHECK(v >= env.lower - 1e-12);
                }
            }
        }
    }
    CHECK_THROWS_AS(distortion_bounds(1.0, sample_params()[0]), ParameterError);
}

TEST_CASE("extreme-point decomposition round trips") {
    std::mt19937_64 rng(43);
    for (const auto& p : sample_params()) {
        for (int trial = 0; trial < 50; ++trial) {
            const auto f = random_member(rng, p, 9);
            const auto w = extreme_point_decompose(f, p);
            CHECK_NOTHROW(w.validate());
            const auto g = extreme_point_compose(w, p);
            CHECK(testing::max_abs_diff(f.coeffs(), g.coeffs()) <= 1e-12);
        }
    }
    const ClassParams p(QParam(0.5), 0.0, 0.0);
    std::vector<Complex> big{1.0, -1.0};
    CHECK_THROWS_AS(extreme_point_decompose(TruncatedSeries::function(big), p), DecompositionInfeasible);
    CHECK_THROWS_AS(extreme_point_compose(DecompositionWeights{{0.5, 0.6}}, p), ParameterError);
}
