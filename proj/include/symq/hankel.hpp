#pragma once

#include <span>

#include "symq/conic.hpp"

namespace symq {

/// Free data of the Grenander-Szego parametrization: real B1 in [0,2] and
/// x, zeta in the closed unit disk.
struct SchwarzTriple {
    double B1;
    Complex x;
    Complex zeta;

    /// Throws ParameterError outside 0 <= B1 <= 2, |x| <= 1, |zeta| <= 1
    /// (each with 1e-12 slack).
    void validate() const;
};

/// B1, B2, B3 of a Caratheodory function p = 1 + B1 z + B2 z^2 + ...
struct CaratheodoryCoefficients {
    Complex B1;
    Complex B2;
    Complex B3;
};

struct CoefficientTriple {
    Complex a2;
    Complex a3;
    Complex a4;
};

/// q_j = [j]~_q - 1 for j = 2, 3, 4.
struct QShifts {
    double q2;
    double q3;
    double q4;
};

QShifts q_shifts(QParam q);

/// Everything the H2(2) bound is assembled from. cP, cQ, cR are the
/// coefficients of the quadratic in t = B1^2 whose max over [0,4] is the bound.
struct HankelQuantities {
    double q2, q3, q4;
    double S, M, N, U, V;
    double cP, cQ, cR;
    /// 16 q2^2 q3^2 q4
    double denominator;
};

CaratheodoryCoefficients caratheodory_from_parameters(const SchwarzTriple& t);

/// a2, a3, a4 of f with z D~_q f / f = p_{k,alpha}(w(z)), where w is the
/// Schwarz function of the Caratheodory function with coefficients B.
CoefficientTriple coefficients_from_schwarz(const ConicCoefficients& P, const CaratheodoryCoefficients& B, QParam q);
/// Same, with the q-shifts precomputed (hot loops).
CoefficientTriple coefficients_from_schwarz(const ConicCoefficients& P, const CaratheodoryCoefficients& B,
                                            const QShifts& shifts);

/// Determinant of the s x s matrix (a_{n+i+j}), 0-based i, j, with
/// coeffs[0] = a_1 (forced to 1). Throws ParameterError if coefficients run
/// out or s, n < 1.
Complex hankel_determinant(std::span<const Complex> coeffs, int s, int n);

HankelQuantities hankel_quantities(const ConicCoefficients& P, QParam q);

/// max_{t in [0,4]} (cP t^2 + cQ t + cR) / (16 q2^2 q3^2 q4).
double h2_bound(const ConicCoefficients& P, QParam q);

/// The t in [0,4] attaining the max in h2_bound (smallest on ties).
double h2_bound_argmax_t(const HankelQuantities& h);

/// P1^2 / q3^2, the value of the first printed H2 case.
double h2_case1_value(const ConicCoefficients& P, QParam q);

/// Bit i-1 set when printed case i's predicates hold (cases 1..3).
unsigned printed_h2_case_mask(const HankelQuantities& h, const ConicCoefficients& P);

/// (P1^2 |q2 - mu q3| + P2 q2^2) / (q2^2 q3).
double fekete_szego_bound_complex(Complex mu, const ConicCoefficients& P, QParam q);

/// q(q^2-q+1)/(q^4+1) = q2/q3, the branch point of the real formula.
double fekete_szego_breakpoint(QParam q);

/// Two-branch formula in q for real mu.
double fekete_szego_bound_real(double mu, const ConicCoefficients& P, QParam q);

struct PrintedCorollaries {
    double h21;
    double a3;
    double h2_limit;
};

/// The H2(1), |a3| and q -> 1 H2(2) values exactly as printed.
/// Diagnostic only; these are not bounds.
PrintedCorollaries printed_corollary_values(const ConicCoefficients& P, QParam q);

}  // namespace symq
