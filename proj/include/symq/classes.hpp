#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "symq/conic.hpp"
#include "symq/series.hpp"

namespace symq {

enum class Certification {
    MemberSufficient,   ///< coefficient-sum condition holds (general coefficients)
    MemberIffNegative,  ///< negative-coefficient form, exact characterization holds
    NotMemberWitness,   ///< a disk point where the defining inequality fails
    Inconclusive,       ///< sampling found no failure; grids cannot certify
};

std::string_view to_string(Certification c);

struct MembershipVerdict {
    Certification certified;
    double margin;
    /// Always present for NotMemberWitness.
    std::optional<Complex> witness;
};

/// Convex weights lambda_1..lambda_N over the extreme points f_1..f_N.
struct DecompositionWeights {
    std::vector<double> lambdas;

    /// Throws ParameterError unless every weight is >= 0 and they sum to 1
    /// within 1e-12.
    void validate() const;
};

/// [n]~_q (k+1) - (k+alpha): the weight of |a_n| in the coefficient condition.
double coefficient_weight(int n, const ClassParams& p);

/// (1-alpha) / ([n]~_q (k+1) - (k+alpha)), n >= 2.
double coefficient_threshold(int n, const ClassParams& p);

/// (1-alpha) - sum_{n>=2} weight(n) |a_n|. Nonnegative certifies membership.
double sufficient_condition_margin(const TruncatedSeries& f, const ClassParams& p);

/// Exact test for f = z - sum a_n z^n with a_n >= 0. Throws FormError for any
/// other shape (|Im a_n| or positive Re a_n above 1e-14).
MembershipVerdict ts_membership(const TruncatedSeries& f, const ClassParams& p);

/// Pointwise check of Re w > k|w-1| + alpha for w = z D~_q f(z) / f(z) on the
/// grid, scanned in (radius, angle) order. Returns the first failing point
/// or Inconclusive with the minimum margin. Throws SingularDivision if f
/// vanishes at a grid point.
MembershipVerdict sampled_membership(const TruncatedSeries& f, const ClassParams& p,
                                     const DiskGrid& grid = DiskGrid::standard());

/// w(z) = z D~_q f(z) / f(z) for a single point, evaluated from the two
/// polynomials (no quotient-series truncation).
Complex starlike_quotient(const TruncatedSeries& f, const ClassParams& p, Complex z);

/// f_1 = z, f_n = z - threshold(n) z^n. Order is max(order, n).
TruncatedSeries extremal_function(int n, const ClassParams& p, int order = 32);

struct Envelope {
    double lower;
    double upper;
};

/// q(1-alpha) / ((q^2+1)(k+1) - q(k+alpha)), the bound on sum a_n.
double distortion_constant(const ClassParams& p);

/// r -+ c r^2 bounds on |f(z)| for |z| = r.
Envelope distortion_bounds(double r, const ClassParams& p);

/// 1 -+ 2 c r bounds on |f'(z)| for |z| = r.
Envelope derivative_distortion_bounds(double r, const ClassParams& p);

/// z + c z^2, the function attaining the upper distortion bound at z = r.
TruncatedSeries distortion_equality_function(const ClassParams& p, int order = 32);

/// lambda_n = weight(n)/(1-alpha) |a_n|, lambda_1 = 1 - sum. Throws FormError
/// for non-negative-coefficient input and DecompositionInfeasible when
/// lambda_1 would be negative beyond 1e-12.
DecompositionWeights extreme_point_decompose(const TruncatedSeries& f, const ClassParams& p);

/// sum lambda_n f_n, at order max(lambdas.size(), 2).
TruncatedSeries extreme_point_compose(const DecompositionWeights& w, const ClassParams& p);

}  // namespace symq
