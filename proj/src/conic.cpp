#include "symq/conic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "symq/errors.hpp"

namespace symq {

ClassParams::ClassParams(QParam q_, double k_, double alpha_) : q(q_), k(k_), alpha(alpha_) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw ParameterError("k must be finite and >= 0, got " + std::to_string(k));
    }
    if (!(alpha >= 0.0 && alpha < 1.0)) {
        throw ParameterError("alpha must lie in [0,1), got " + std::to_string(alpha));
    }
}

std::string_view to_string(ConicProvenance p) {
    switch (p) {
        case ConicProvenance::BuiltinK0:
            return "builtin-k0";
        case ConicProvenance::BuiltinK1:
            return "builtin-k1";
        case ConicProvenance::User:
            return "user";
    }
    return "user";
}

void ConicCoefficients::validate() const {
    if (!std::isfinite(P1) || !std::isfinite(P2) || !std::isfinite(P3)) {
        throw ParameterError("conic coefficients must be finite");
    }
    if (!(P1 > 0.0)) {
        throw ParameterError("conic coefficient P1 must be > 0");
    }
    if (P2 < 0.0 || P3 < 0.0) {
        throw ParameterError("conic coefficients P2, P3 must be >= 0");
    }
}

double conic_margin(Complex w, double k, double alpha) { return w.real() - k * std::abs(w - 1.0) - alpha; }

bool in_conic_domain(Complex w, double k, double alpha) { return conic_margin(w, k, alpha) > 0.0; }

ConicCoefficients conic_coefficients(double k, double alpha, std::optional<ConicCoefficients> user) {
    ClassParams{QParam(1.0), k, alpha};  // range check only
    const double scale = 1.0 - alpha;
    if (k == 0.0) {
        return {2.0 * scale, 2.0 * scale, 2.0 * scale, ConicProvenance::BuiltinK0};
    }
    if (k == 1.0) {
        constexpr double pi2 = std::numbers::pi * std::numbers::pi;
        return {8.0 * scale / pi2, 16.0 * scale / (3.0 * pi2), 184.0 * scale / (45.0 * pi2),
                ConicProvenance::BuiltinK1};
    }
    if (!user) {
        throw UnsupportedRegime("no built-in conic map for k = " + std::to_string(k) +
                                "; supply P1, P2, P3");
    }
    ConicCoefficients c = *user;
    c.provenance = ConicProvenance::User;
    c.validate();
    return c;
}

}  // namespace symq
