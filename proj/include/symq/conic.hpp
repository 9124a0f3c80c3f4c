#pragma once

#include <optional>
#include <string_view>

#include "symq/qcalc.hpp"

namespace symq {

/// The triple (q, k, alpha) selecting a class k-ST~_q(alpha).
struct ClassParams {
    QParam q;
    double k;
    double alpha;

    /// Throws ParameterError unless k >= 0 and 0 <= alpha < 1.
    ClassParams(QParam q, double k, double alpha);
};

enum class ConicProvenance { BuiltinK0, BuiltinK1, User };

std::string_view to_string(ConicProvenance p);

/// First three Taylor coefficients of the conic-domain map
/// p_{k,alpha}(z) = 1 + P1 z + P2 z^2 + P3 z^3 + ...
struct ConicCoefficients {
    double P1;
    double P2;
    double P3;
    ConicProvenance provenance = ConicProvenance::User;

    /// Throws ParameterError unless P1 > 0, P2 >= 0, P3 >= 0, all finite.
    void validate() const;
};

/// Re w > k |w - 1| + alpha (strict).
bool in_conic_domain(Complex w, double k, double alpha);

/// Re w - k |w - 1| - alpha; positive inside, zero on the boundary.
double conic_margin(Complex w, double k, double alpha);

/// Built-in coefficients for k = 0 (half-plane, P_n = 2(1-alpha)) and k = 1
/// (parabola, (1-alpha) times 8/pi^2, 16/(3pi^2), 184/(45pi^2)); any other k
/// echoes the validated user coefficients or throws UnsupportedRegime.
ConicCoefficients conic_coefficients(double k, double alpha, std::optional<ConicCoefficients> user = std::nullopt);

}  // namespace symq
