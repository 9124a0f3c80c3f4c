#include <doctest.h>

#include <numbers>

#include "support.hpp"
#include "symq/errors.hpp"
#include "symq/hankel.hpp"

using namespace symq;

namespace {

// a2..a4 by series arithmetic: w = (p-1)/(p+1), phi = 1 + P1 w + P2 w^2 + P3 w^3,
// then ([n]~ - 1) a_n = sum_{j<n} a_j phi_{n-j}.
std::vector<Complex> coefficients_by_inversion(const ConicCoefficients& P, const CaratheodoryCoefficients& B,
                                               double q) {
    constexpr int N = 4;
    const TruncatedSeries p(std::vector<Complex>{1.0, B.B1, B.B2, B.B3, 0.0});
    const auto one = TruncatedSeries::constant(1.0, N);
    const auto w = series_div(series_sub(p, one), series_add(p, one));
    const auto w2 = series_mul(w, w);
    const auto w3 = series_mul(w2, w);
    const auto phi = series_add(one, series_add(series_scale(w, P.P1),
                                                series_add(series_scale(w2, P.P2), series_scale(w3, P.P3))));
    std::vector<Complex> a(N + 1, 0.0);
    a[1] = 1.0;
    for (int n = 2; n <= N; ++n) {
        Complex s = 0.0;
        for (int j = 1; j < n; ++j) {
            s += a[j] * phi[n - j];
        }
        a[n] = s / (symmetric_q_number(n, QParam(q)) - 1.0);
    }
    return a;
}

Complex leibniz3(const Complex m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

const ConicCoefficients kHalfPlane{2.0, 2.0, 2.0, ConicProvenance::BuiltinK0};

}  // namespace

TEST_CASE("Koebe anchor") {
    const auto a = coefficients_from_schwarz(kHalfPlane, {2.0, 2.0, 2.0}, QParam(1.0));
    CHECK(std::abs(a.a2 - 2.0) <= 1e-12);
    CHECK(std::abs(a.a3 - 3.0) <= 1e-12);
    CHECK(std::abs(a.a4 - 4.0) <= 1e-12);
    const std::vector<Complex> coeffs{1.0, a.a2, a.a3, a.a4};
    CHECK(hankel_determinant(coeffs, 2, 2) == Complex(-1.0));
    CHECK(hankel_determinant(coeffs, 2, 1) == Complex(-1.0));
}

TEST_CASE("closed-form coefficients agree with series inversion") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (double q : {0.3, 0.5, 0.8, 1.0}) {
        for (int trial = 0; trial < 200; ++trial) {
            const ConicCoefficients P{0.2 + 2.0 * u(rng), 2.0 * u(rng), 2.0 * u(rng)};
            const SchwarzTriple t{2.0 * u(rng), std::polar(u(rng), 6.28 * u(rng)), std::polar(u(rng), 6.28 * u(rng))};
            const auto B = caratheodory_from_parameters(t);
            const auto a = coefficients_from_schwarz(P, B, QParam(q));
            const auto ref = coefficients_by_inversion(P, B, q);
            CHECK(std::abs(a.a2 - ref[2]) <= 1e-12 * (1.0 + std::abs(ref[2])));
            CHECK(std::abs(a.a3 - ref[3]) <= 1e-12 * (1.0 + std::abs(ref[3])));
            CHECK(std::abs(a.a4 - ref[4]) <= 1e-12 * (1.0 + std::abs(ref[4])));
        }
    }
}

TEST_CASE("parametrization yields Caratheodory-sized coefficients") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 5000; ++trial) {
        const SchwarzTriple t{2.0 * u(rng), std::polar(u(rng), 6.28 * u(rng)), std::polar(u(rng), 6.28 * u(rng))};
        const auto B = caratheodory_from_parameters(t);
        CHECK(std::abs(B.B2) <= 2.0 + 1e-12);
        CHECK(std::abs(B.B3) <= 2.0 + 1e-12);
    }
    // |x| = 1 makes B2 = 2 at B1 = 0 and removes zeta from B3.
    const auto B = caratheodory_from_parameters({0.0, 1.0, Complex(0.3, 0.4)});
    CHECK(std::abs(B.B2 - 2.0) <= 1e-15);
    CHECK(std::abs(B.B3) <= 1e-15);
    CHECK_THROWS_AS((SchwarzTriple{2.5, 0.0, 0.0}.validate()), ParameterError);
    CHECK_THROWS_AS((SchwarzTriple{1.0, 1.1, 0.0}.validate()), ParameterError);
}

TEST_CASE("Hankel determinant against the Leibniz expansion") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 100; ++trial) {
        auto c = testing::random_coeffs(rng, 8);
        c[0] = 1.0;
        for (int n = 1; n <= 4; ++n) {
            Complex m[3][3];
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) {
                    m[i][j] = c[n + i + j - 1];
                }
            }
            CHECK(std::abs(hankel_determinant(c, 3, n) - leibniz3(m)) <= 1e-12);
        }
        CHECK(std::abs(hankel_determinant(c, 2, 2) - (c[1] * c[3] - c[2] * c[2])) <= 1e-14);
    }
    const std::vector<Complex> shortc{1.0, 0.5};
    CHECK_THROWS_AS(hankel_determinant(shortc, 2, 2), ParameterError);
    CHECK_THROWS_AS(hankel_determinant(shortc, 0, 1), ParameterError);
}

TEST_CASE("H2 quantities at the classical half-plane point") {
    const auto h = hankel_quantities(kHalfPlane, QParam(1.0));
    CHECK(h.S == doctest::Approx(4.0));
    CHECK(h.M == doctest::Approx(48.0));
    CHECK(h.N == doctest::Approx(32.0));
    CHECK(h.U == doctest::Approx(104.0));
    CHECK(h.V == doctest::Approx(84.0));
    CHECK(h.cP == doctest::Approx(-24.0));
    CHECK(h.cQ == doctest::Approx(384.0));
    CHECK(h.cR == doctest::Approx(192.0));
    CHECK(h2_bound(kHalfPlane, QParam(1.0)) == doctest::Approx(7.0).epsilon(1e-14));
}

TEST_CASE("h2_bound is the maximum of its quadratic on [0,4]") {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const ConicCoefficients P{0.2 + 2.0 * u(rng), 2.0 * u(rng), 2.0 * u(rng)};
        const QParam q(0.2 + 0.8 * u(rng));
        const auto h = hankel_quantities(P, q);
        double scan = -1e300;
        for (int i = 0; i <= 40000; ++i) {
            const double t = 4.0 * i / 40000;
            scan = std::max(scan, (h.cP * t * t + h.cQ * t + h.cR) / h.denominator);
        }
        const double b = h2_bound(P, q);
        CHECK(b >= scan - 1e-12 * std::abs(scan));
        CHECK(b <= scan + 1e-6 * std::abs(scan));
    }
}

TEST_CASE("Fekete-Szego formulas") {
    const ConicCoefficients P{2.0, 2.0, 2.0};
    CHECK(fekete_szego_bound_real(0.0, P, QParam(0.5)) == doctest::Approx(1.098039).epsilon(1e-6));
    std::mt19937_64 rng(67);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (double q : {0.3, 0.5, 0.8, 1.0}) {
        const auto s = q_shifts(QParam(q));
        CHECK(fekete_szego_breakpoint(QParam(q)) == doctest::Approx(s.q2 / s.q3).epsilon(1e-14));
        for (int trial = 0; trial < 200; ++trial) {
            const double mu = u(rng);
            const double c = fekete_szego_bound_complex(mu, P, QParam(q));
            const double r = fekete_szego_bound_real(mu, P, QParam(q));
            CHECK(std::abs(c - r) <= 1e-12 * std::abs(c));
        }
        const double ms = fekete_szego_breakpoint(QParam(q));
        const double left = fekete_szego_bound_real(std::nextafter(ms, -1.0), P, QParam(q));
        const double right = fekete_szego_bound_real(std::nextafter(ms, 2.0), P, QParam(q));
        CHECK(std::abs(left - right) <= 1e-12);
        CHECK(fekete_szego_bound_complex(ms, P, QParam(q)) == doctest::Approx(P.P2 / s.q3).epsilon(1e-13));
    }
}

TEST_CASE("printed closed-form values") {
    const ConicCoefficients P{2.0, 2.0, 2.0};
    const auto v = printed_corollary_values(P, QParam(1.0));
    CHECK(v.h21 == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(v.a3 == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(v.h2_limit == doctest::Approx(16.0 / (std::numbers::pi * std::numbers::pi)));
    const ConicCoefficients k1{8.0 / (std::numbers::pi * std::numbers::pi), 0.0, 0.0};
    const double pi4 = std::pow(std::numbers::pi, 4);
    CHECK(h2_case1_value(k1, QParam(1.0)) == doctest::Approx(16.0 / pi4).epsilon(1e-14));
}
