#pragma once

#include "symq/series.hpp"

namespace symq {

/// Deformation parameter q in (0,1]. q = 1 is the classical limit and every
/// q-number evaluates to its limit value there.
class QParam {
public:
    explicit QParam(double q);

    double value() const { return q_; }
    bool classical() const { return q_ == 1.0; }
    /// q^2, the parameter of the ordinary q-derivative in D~_q = D_{q^2}(q^-1 .).
    QParam squared() const { return QParam(q_ * q_); }
    /// Symmetric q-numbers grow like q^{-(n-1)}; below 1e-3 they overflow
    /// quickly with the truncation order.
    bool ill_conditioned() const { return q_ < 1e-3; }

private:
    double q_;
};

/// [lambda]_q = (1 - q^lambda) / (1 - q); lambda at q = 1.
Complex q_number(Complex lambda, QParam q);
double q_number(double lambda, QParam q);

/// Symmetric q-number [n]~_q = (q^n - q^-n) / (q - q^-1); n at q = 1.
/// Throws ParameterError for n < 1.
double symmetric_q_number(int n, QParam q);

/// The defining quotient for any q > 0 (including q > 1), in the
/// cancellation-free form sinh(n ln q)/sinh(ln q). Exists for the q <-> 1/q
/// symmetry; prefer symmetric_q_number inside (0,1].
double symmetric_q_number_formula(int n, double q);

/// D_q f: coefficient of z^{n-1} is [n]_q c_n. Result has an explicit
/// constant term, order N-1 and kind Derivative.
TruncatedSeries q_derivative(const TruncatedSeries& f, QParam q);

/// D~_q f: coefficient of z^{n-1} is [n]~_q c_n.
TruncatedSeries symmetric_q_derivative(const TruncatedSeries& f, QParam q);

}  // namespace symq
