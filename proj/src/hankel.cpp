#include "symq/hankel.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "symq/errors.hpp"

namespace symq {

void SchwarzTriple::validate() const {
    constexpr double slack = 1e-12;
    if (!(B1 >= -slack && B1 <= 2.0 + slack)) {
        throw ParameterError("B1 must lie in [0,2]");
    }
    if (!(std::abs(x) <= 1.0 + slack)) {
        throw ParameterError("|x| must be <= 1");
    }
    if (!(std::abs(zeta) <= 1.0 + slack)) {
        throw ParameterError("|zeta| must be <= 1");
    }
}

QShifts q_shifts(QParam q) {
    return {symmetric_q_number(2, q) - 1.0, symmetric_q_number(3, q) - 1.0, symmetric_q_number(4, q) - 1.0};
}

CaratheodoryCoefficients caratheodory_from_parameters(const SchwarzTriple& t) {
    const double b = t.B1;
    const double d = 4.0 - b * b;
    const Complex x = t.x;
    const double rho2 = std::norm(x);
    const Complex B2 = (b * b + x * d) / 2.0;
    const Complex B3 = (b * b * b + 2.0 * d * b * x - b * d * x * x + 2.0 * d * (1.0 - rho2) * t.zeta) / 4.0;
    return {b, B2, B3};
}

CoefficientTriple coefficients_from_schwarz(const ConicCoefficients& P, const CaratheodoryCoefficients& B, QParam q) {
    return coefficients_from_schwarz(P, B, q_shifts(q));
}

CoefficientTriple coefficients_from_schwarz(const ConicCoefficients& P, const CaratheodoryCoefficients& B,
                                            const QShifts& shifts) {
    const auto [q2, q3, q4] = shifts;
    if (q2 * q3 * q4 == 0.0) {
        throw ParameterError("degenerate q: q2 q3 q4 = 0");
    }
    const double P1 = P.P1, P2 = P.P2, P3 = P.P3;
    const Complex B1 = B.B1, B2 = B.B2, B3 = B.B3;
    const Complex B1sq = B1 * B1;

    const Complex a2 = P1 * B1 / (2.0 * q2);
    const Complex a3 = (P1 * P1 * B1sq - P1 * B1sq * q2 + P2 * B1sq * q2 + 2.0 * P1 * B2 * q2) / (4.0 * q2 * q3);
    const double cubic = P1 * P1 * P1 + (P3 - 2.0 * P2 + P1) * q2 * q3 + P1 * (P2 - P1) * (q2 + q3);
    const double mixed = P1 * P1 * (q2 + q3) + 2.0 * q2 * q3 * (P2 - P1);
    const Complex a4 =
        (B1sq * B1 * cubic + 2.0 * B1 * B2 * mixed + 4.0 * B3 * P1 * q2 * q3) / (8.0 * q2 * q3 * q4);
    return {a2, a3, a4};
}

Complex hankel_determinant(std::span<const Complex> coeffs, int s, int n) {
    if (s < 1 || n < 1) {
        throw ParameterError("hankel determinant needs s >= 1 and n >= 1");
    }
    const int needed = n + 2 * s - 2;
    if (static_cast<int>(coeffs.size()) < needed) {
        throw ParameterError("hankel determinant H_" + std::to_string(s) + "(" + std::to_string(n) + ") needs a_1..a_" +
                             std::to_string(needed));
    }
    auto a = [&](int idx) { return idx == 1 ? Complex(1.0) : coeffs[idx - 1]; };
    std::vector<Complex> m(static_cast<std::size_t>(s) * s);
    for (int i = 0; i < s; ++i) {
        for (int j = 0; j < s; ++j) {
            m[i * s + j] = a(n + i + j);
        }
    }
    // Cofactor expansion is exact on exact inputs for the small orders that
    // matter here; larger matrices use elimination with partial pivoting.
    if (s == 1) {
        return m[0];
    }
    if (s == 2) {
        return m[0] * m[3] - m[1] * m[2];
    }
    if (s == 3) {
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    }
    Complex det = 1.0;
    for (int col = 0; col < s; ++col) {
        int pivot = col;
        for (int row = col + 1; row < s; ++row) {
            if (std::abs(m[row * s + col]) > std::abs(m[pivot * s + col])) {
                pivot = row;
            }
        }
        if (m[pivot * s + col] == Complex(0.0)) {
            return 0.0;
        }
        if (pivot != col) {
            for (int j = 0; j < s; ++j) {
                std::swap(m[pivot * s + j], m[col * s + j]);
            }
            det = -det;
        }
        det *= m[col * s + col];
        for (int row = col + 1; row < s; ++row) {
            const Complex factor = m[row * s + col] / m[col * s + col];
            for (int j = col; j < s; ++j) {
                m[row * s + j] -= factor * m[col * s + j];
            }
        }
    }
    return det;
}

HankelQuantities hankel_quantities(const ConicCoefficients& P, QParam q) {
    const auto [q2, q3, q4] = q_shifts(q);
    const double P1 = P.P1, P2 = P.P2, P3 = P.P3;
    const double P1sq = P1 * P1;
    HankelQuantities h{};
    h.q2 = q2;
    h.q3 = q3;
    h.q4 = q4;
    h.S = P1sq + q2 * (P2 - P1);
    h.M = P1 * q3 * (2.0 * q2 * q3 * (P2 - P1) + P1sq * (q2 + q3));
    h.N = P1 * q3 * (P1sq * P1 + (P3 - 2.0 * P2) * q2 * q3 + P1 * (P2 - P1) * (q2 + q3) + P1 * q2 * q3);
    h.U = std::abs(h.M + 2.0 * P1sq * q2 + 2.0 * P1 * q2 * q4 * h.S);
    h.V = std::abs(h.M + h.N + P1sq * q2 - q4 * h.S * h.S + 2.0 * P1 * q2 * q4 * h.S);
    h.cP = h.V - h.U - P1sq * q2;
    h.cQ = 4.0 * h.U + 4.0 * P1sq * q2 * (1.0 - q2 * q4);
    h.cR = 16.0 * P1sq * q2 * q2 * q4;
    h.denominator = 16.0 * q2 * q2 * q3 * q3 * q4;
    return h;
}

double h2_bound_argmax_t(const HankelQuantities& h) {
    auto value = [&](double t) { return (h.cP * t + h.cQ) * t + h.cR; };
    double best_t = 0.0;
    double best = value(0.0);
    if (h.cP < 0.0) {
        const double vertex = -h.cQ / (2.0 * h.cP);
        if (vertex > 0.0 && vertex < 4.0 && value(vertex) > best) {
            best_t = vertex;
            best = value(vertex);
        }
    }
    if (value(4.0) > best) {
        best_t = 4.0;
    }
    return best_t;
}

double h2_bound(const ConicCoefficients& P, QParam q) {
    const auto h = hankel_quantities(P, q);
    const double t = h2_bound_argmax_t(h);
    return ((h.cP * t + h.cQ) * t + h.cR) / h.denominator;
}

double h2_case1_value(const ConicCoefficients& P, QParam q) {
    const double q3 = q_shifts(q).q3;
    return P.P1 * P.P1 / (q3 * q3);
}

unsigned printed_h2_case_mask(const HankelQuantities& h, const ConicCoefficients& P) {
    const double P1 = P.P1;
    const double P1sq = P1 * P1;
    const double u_test = h.U - P1 * h.q2 * (h.q2 * h.q4 - 1.0);
    const double v_test = h.V - P1sq * h.q2 * h.q2 * h.q4;
    const double tail = P1sq * h.q2 * (1.0 + h.q2 * h.q4);
    unsigned mask = 0;
    if (u_test <= 0.0 && v_test <= 0.0) {
        mask |= 1u;
    }
    if ((u_test >= 0.0 && 2.0 * h.S - h.U - tail >= 0.0) || (u_test <= 0.0 && v_test >= 0.0)) {
        mask |= 2u;
    }
    if (u_test > 0.0 && 2.0 * h.V - h.U - tail <= 0.0) {
        mask |= 4u;
    }
    return mask;
}

double fekete_szego_bound_complex(Complex mu, const ConicCoefficients& P, QParam q) {
    const auto [q2, q3, q4] = q_shifts(q);
    return (P.P1 * P.P1 * std::abs(q2 - mu * q3) + P.P2 * q2 * q2) / (q2 * q2 * q3);
}

double fekete_szego_breakpoint(QParam q) {
    const double v = q.value();
    return v * (v * v - v + 1.0) / (v * v * v * v + 1.0);
}

double fekete_szego_bound_real(double mu, const ConicCoefficients& P, QParam q) {
    const double v = q.value();
    const double v2 = v * v;
    const double quartic = v2 * v2 + 1.0;
    const double tri = v2 - v + 1.0;
    const double base = P.P2 * v2 / quartic;
    const double scale = P.P1 * P.P1 * v2 / (quartic * tri * tri);
    const double lead = v * tri;
    if (mu <= fekete_szego_breakpoint(q)) {
        return base + scale * (lead - mu * quartic);
    }
    return base + scale * (mu * quartic - lead);
}

PrintedCorollaries printed_corollary_values(const ConicCoefficients& P, QParam q) {
    const double v = q.value();
    const double v2 = v * v;
    const double P1sq = P.P1 * P.P1;
    const double a3 = v2 * (P.P2 + P1sq * v) / (v2 * v2 + 1.0);
    const double h21 = a3 - P1sq * v2 / (v2 - v + 1.0);
    return {h21, a3, 16.0 / (std::numbers::pi * std::numbers::pi)};
}

}  // namespace symq
