#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

namespace symq {

using Complex = std::complex<double>;

/// Semantic tag carried by every series.
///
/// `Function` marks a normalized member candidate f(z) = z + a_2 z^2 + ...;
/// `Derivative` marks the output of a difference operator (explicit constant
/// term, never a class member); `Raw` is anything produced by arithmetic.
enum class SeriesKind { Function, Derivative, Raw };

/// Polynomial c_0 + c_1 z + ... + c_N z^N standing for a power series known
/// modulo z^{N+1}. N is the truncation order.
///
/// Values are immutable after construction.
class TruncatedSeries {
public:
    /// Coefficients of z^0..z^N; `coeffs.size()` must be at least 2.
    explicit TruncatedSeries(std::vector<Complex> coeffs, SeriesKind kind = SeriesKind::Raw);

    /// Normalized function from a_1..a_N (a_1 must be 1). Orders below 2 are
    /// zero-padded to 2.
    static TruncatedSeries function(std::span<const Complex> a);
    static TruncatedSeries identity(int order);
    static TruncatedSeries constant(Complex c, int order);
    static TruncatedSeries zero(int order);
    /// Single term c z^power, truncated at `order`.
    static TruncatedSeries monomial(Complex c, int power, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    SeriesKind kind() const { return kind_; }
    bool normalized() const { return kind_ == SeriesKind::Function; }

    /// Coefficient of z^power; zero past the truncation order.
    Complex operator[](int power) const;
    std::span<const Complex> coeffs() const { return coeffs_; }

    /// a_1..a_N of a series with vanishing constant term.
    std::vector<Complex> function_coeffs() const;

    /// Re-tag a raw series as a normalized function after checking
    /// c_0 = 0 and c_1 = 1 (within `tol`).
    TruncatedSeries as_function(double tol = 1e-14) const;

    /// Same coefficients, truncated or zero-padded to `order`.
    TruncatedSeries with_order(int order) const;

    /// Lowest power with a nonzero coefficient, or -1 for the zero series.
    int valuation() const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Complex> coeffs_;
    SeriesKind kind_;
};

TruncatedSeries series_add(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_sub(const TruncatedSeries& f, const TruncatedSeries& g);
TruncatedSeries series_scale(const TruncatedSeries& f, Complex c);

/// Cauchy product truncated at the common order.
TruncatedSeries series_mul(const TruncatedSeries& f, const TruncatedSeries& g);

/// Quotient h with h * g = f, by forward substitution.
///
/// If g starts at z^v (v > 0) the common factor z^v is cancelled first, so
/// the quotient is known to order N - v. Throws SingularDivision for the zero
/// series or when f has a nonzero coefficient below z^v.
TruncatedSeries series_div(const TruncatedSeries& f, const TruncatedSeries& g);

/// Horner evaluation. Points with |z| >= 1 are evaluated but reported through
/// the warning handler.
Complex series_eval(const TruncatedSeries& f, Complex z);

enum class ScaleMode {
    Raw,         ///< g(z) = f(cz)
    Normalized,  ///< g(z) = f(cz)/c, keeps a_1 = 1
};

TruncatedSeries series_scale_arg(const TruncatedSeries& f, Complex c, ScaleMode mode = ScaleMode::Raw);

/// Plain Horner evaluation of c_0 + c_1 z + ... without bounds warnings.
Complex horner(std::span<const Complex> coeffs, Complex z);

/// Sampling pattern of the open unit disk: every radius crossed with M
/// equally spaced angles starting at 0.
struct DiskGrid {
    std::vector<double> radii;
    int angles = 96;

    /// 24 radii 0.04..0.96 plus a near-boundary ring at 0.995, 96 angles.
    static DiskGrid standard();
    /// Throws ParameterError unless radii increase inside (0,1) and angles >= 8.
    void validate() const;
    double angle(int j) const;
};

using WarningHandler = std::function<void(std::string_view)>;

/// Install a sink for non-fatal diagnostics; returns the previous handler.
/// The default handler writes to stderr.
WarningHandler set_warning_handler(WarningHandler handler);
void warn(std::string_view message);

}  // namespace symq
