#include "symq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "symq/errors.hpp"

namespace symq {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Candidate {
    double value = -std::numeric_limits<double>::infinity();
    double b = 0.0;
    double rho = 0.0;
    double phi = 0.0;
    double theta = 0.0;
    double radius = 0.0;
};

struct Axes {
    std::vector<double> b;
    std::vector<double> rho;
    std::vector<double> phi;
    std::vector<double> theta;
    std::vector<double> radii;
};

// Value of the functional at a parameter sample; throws if the sample is
// not a legitimate Caratheodory triple.
using SampleFunction = std::function<double(double b, Complex x, Complex zeta)>;

std::vector<double> closed_range(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = (n == 1) ? lo : lo + (hi - lo) * i / (n - 1);
    }
    v.back() = hi;
    return v;
}

std::vector<double> angles(int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        v[i] = kTwoPi * i / n;
    }
    return v;
}

std::vector<double> local_axis(double center, double step, double lo, double hi) {
    std::vector<double> v;
    for (int j = -8; j <= 8; ++j) {
        const double x = center + j * step / 8.0;
        if (x >= lo && x <= hi) {
            v.push_back(x);
        }
    }
    if (v.empty()) {
        v.push_back(center);
    }
    return v;
}

std::vector<double> local_angle_axis(double center, double step) {
    std::vector<double> v;
    for (int j = -8; j <= 8; ++j) {
        double x = std::fmod(center + j * step / 8.0, kTwoPi);
        if (x < 0.0) {
            x += kTwoPi;
        }
        v.push_back(x);
    }
    return v;
}

// Scan every b-slice in [begin, end) in lexicographic order; strict
// improvement keeps the first maximizer.
Candidate scan_slices(const Axes& axes, const SampleFunction& f, std::size_t begin, std::size_t end) {
    Candidate best;
    for (std::size_t ib = begin; ib < end; ++ib) {
        const double b = axes.b[ib];
        for (double rho : axes.rho) {
            for (double phi : axes.phi) {
                const Complex x = std::polar(rho, phi);
                for (double theta : axes.theta) {
                    for (double radius : axes.radii) {
                        const double v = f(b, x, std::polar(radius, theta));
                        if (v > best.value) {
                            best = {v, b, rho, phi, theta, radius};
                        }
                    }
                }
            }
        }
    }
    return best;
}

// Deterministic parallel max: contiguous b-chunks, combined in chunk order
// with strict comparison, so the result equals the sequential scan.
Candidate scan(const Axes& axes, const SampleFunction& f, int threads) {
    const std::size_t n = axes.b.size();
    const std::size_t workers = std::clamp<std::size_t>(threads > 0 ? threads : 1, 1, n);
    if (workers == 1) {
        return scan_slices(axes, f, 0, n);
    }
    std::vector<Candidate> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t begin = n * w / workers;
        const std::size_t end = n * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            try {
                partial[w] = scan_slices(axes, f, begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    Candidate best;
    for (const auto& c : partial) {
        if (c.value > best.value) {
            best = c;
        }
    }
    return best;
}

OracleResult run_oracle(const OracleGrid& g, const SampleFunction& f, int threads) {
    g.validate();
    if (threads <= 0) {
        threads = default_thread_count();
    }
    Axes coarse{closed_range(g.b_min, g.b_max, g.nB), closed_range(g.rho_min, g.rho_max, g.nRho), angles(g.nPhi),
                angles(g.nZeta), g.zeta_radii};
    Candidate best = scan(coarse, f, threads);

    OracleResult result;
    result.level_max.push_back(best.value);

    double hb = (g.b_max - g.b_min) / (g.nB - 1);
    double hrho = (g.rho_max - g.rho_min) / (g.nRho - 1);
    double hphi = kTwoPi / g.nPhi;
    double htheta = kTwoPi / g.nZeta;
    for (int level = 0; level < g.refinement; ++level) {
        Axes local{local_axis(best.b, hb, g.b_min, g.b_max), local_axis(best.rho, hrho, g.rho_min, g.rho_max),
                   local_angle_axis(best.phi, hphi), local_angle_axis(best.theta, htheta), g.zeta_radii};
        const Candidate c = scan(local, f, threads);
        if (c.value > best.value) {
            best = c;
        }
        result.level_max.push_back(best.value);
        hb /= 8.0;
        hrho /= 8.0;
        hphi /= 8.0;
        htheta /= 8.0;
    }
    result.max = best.value;
    result.argmax = {best.b, std::polar(best.rho, best.phi), std::polar(best.radius, best.theta)};
    return result;
}

CaratheodoryCoefficients checked_caratheodory(double b, Complex x, Complex zeta) {
    const auto B = caratheodory_from_parameters({b, x, zeta});
    constexpr double limit = 2.0 + 1e-12;
    if (std::abs(B.B2) > limit || std::abs(B.B3) > limit) {
        throw std::logic_error("oracle sample outside the Caratheodory class (|B2| or |B3| > 2)");
    }
    return B;
}

SampleFunction h2_sampler(const ConicCoefficients& P, QParam q, Complex rotation = 1.0) {
    const QShifts shifts = q_shifts(q);
    return [P, shifts, rotation](double b, Complex x, Complex zeta) {
        auto B = checked_caratheodory(b, x, zeta);
        B.B1 *= rotation;
        B.B2 *= rotation * rotation;
        B.B3 *= rotation * rotation * rotation;
        const auto a = coefficients_from_schwarz(P, B, shifts);
        return std::abs(a.a2 * a.a4 - a.a3 * a.a3);
    };
}

SampleFunction fs_sampler(Complex mu, const ConicCoefficients& P, QParam q, Complex rotation = 1.0) {
    const QShifts shifts = q_shifts(q);
    return [P, shifts, mu, rotation](double b, Complex x, Complex zeta) {
        auto B = checked_caratheodory(b, x, zeta);
        B.B1 *= rotation;
        B.B2 *= rotation * rotation;
        B.B3 *= rotation * rotation * rotation;
        const auto a = coefficients_from_schwarz(P, B, shifts);
        return std::abs(a.a3 - mu * a.a2 * a.a2);
    };
}

}  // namespace

void OracleGrid::validate() const {
    if (nB < 8 || nRho < 8 || nPhi < 8 || nZeta < 8) {
        throw ParameterError("oracle grid counts must all be >= 8");
    }
    if (refinement < 0) {
        throw ParameterError("oracle refinement must be >= 0");
    }
    if (!(b_min >= 0.0 && b_min <= b_max && b_max <= 2.0)) {
        throw ParameterError("oracle B1 range must satisfy 0 <= b_min <= b_max <= 2");
    }
    if (!(rho_min >= 0.0 && rho_min <= rho_max && rho_max <= 1.0)) {
        throw ParameterError("oracle rho range must satisfy 0 <= rho_min <= rho_max <= 1");
    }
    if (zeta_radii.empty()) {
        throw ParameterError("oracle needs at least one zeta radius");
    }
    for (double r : zeta_radii) {
        if (!(r >= 0.0 && r <= 1.0)) {
            throw ParameterError("zeta radii must lie in [0,1]");
        }
    }
}

int default_thread_count() {
    if (const char* env = std::getenv("SYMQ_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) {
            return n;
        }
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

OracleResult oracle_h2_max(const ConicCoefficients& P, QParam q, const OracleGrid& g, int threads) {
    return run_oracle(g, h2_sampler(P, q), threads);
}

OracleResult oracle_fs_max(Complex mu, const ConicCoefficients& P, QParam q, const OracleGrid& g, int threads) {
    return run_oracle(g, fs_sampler(mu, P, q), threads);
}

std::vector<double> oracle_phase_scan(Functional which, Complex mu, const ConicCoefficients& P, QParam q,
                                      const OracleGrid& g, int phases, int threads) {
    if (phases < 1) {
        throw ParameterError("phase scan needs at least one phase");
    }
    std::vector<double> out;
    for (int j = 0; j < phases; ++j) {
        const Complex rot = std::polar(1.0, kTwoPi * j / phases);
        const auto f = which == Functional::H2 ? h2_sampler(P, q, rot) : fs_sampler(mu, P, q, rot);
        out.push_back(run_oracle(g, f, threads).max);
    }
    return out;
}

std::string_view to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::Verified:
            return "verified";
        case ClaimStatus::Violated:
            return "violated";
        case ClaimStatus::ReconstructedInput:
            return "reconstructed-input";
        case ClaimStatus::ReconstructedInputMissing:
            return "reconstructed-input-missing";
    }
    return "verified";
}

std::string_view to_string(BoundSense s) {
    switch (s) {
        case BoundSense::Upper:
            return "upper";
        case BoundSense::Lower:
            return "lower";
        case BoundSense::Attained:
            return "attained";
        case BoundSense::Input:
            return "input";
    }
    return "upper";
}

bool VerificationReport::has_violations() const {
    for (const auto& p : points) {
        for (const auto& r : p.records) {
            if (r.status == ClaimStatus::Violated) {
                return true;
            }
        }
    }
    return false;
}

std::size_t VerificationReport::record_count() const {
    std::size_t n = 0;
    for (const auto& p : points) {
        n += p.records.size();
    }
    return n;
}

std::vector<LedgerPoint> default_ledger_points() {
    std::vector<LedgerPoint> pts;
    for (double q : {0.5, 0.8, 1.0}) {
        for (auto [k, alpha] : {std::pair{0.0, 0.0}, {0.0, 0.25}, {1.0, 0.0}, {1.0, 0.5}}) {
            pts.push_back({ClassParams(QParam(q), k, alpha), std::nullopt});
        }
    }
    return pts;
}

namespace {

std::string format_triple(const SchwarzTriple& t) {
    std::ostringstream os;
    os.precision(12);
    os << "B1=" << t.B1 << " x=" << t.x.real() << (t.x.imag() < 0 ? "" : "+") << t.x.imag() << "i zeta="
       << t.zeta.real() << (t.zeta.imag() < 0 ? "" : "+") << t.zeta.imag() << "i";
    return os.str();
}

std::string format_mu(double mu) {
    std::ostringstream os;
    os.precision(12);
    os << mu;
    return os.str();
}

ClaimRecord make_record(std::string claim, std::string anchor, BoundSense sense, double bound, double oracle,
                        double tolerance, std::string argmax) {
    ClaimRecord r;
    r.claim = std::move(claim);
    r.anchor = std::move(anchor);
    r.sense = sense;
    r.bound = bound;
    r.oracle = oracle;
    r.slack = sense == BoundSense::Lower ? oracle - bound : bound - oracle;
    r.status = *r.slack < -tolerance ? ClaimStatus::Violated : ClaimStatus::Verified;
    r.argmax = std::move(argmax);
    return r;
}

// Random weights on a small random support; sums to 1 up to rounding.
DecompositionWeights random_weights(std::mt19937_64& rng, int order) {
    std::uniform_int_distribution<int> support(1, 6);
    std::uniform_int_distribution<int> index(0, order - 1);
    std::exponential_distribution<double> mass(1.0);
    DecompositionWeights w;
    w.lambdas.assign(order, 0.0);
    const int s = support(rng);
    double total = 0.0;
    for (int i = 0; i < s; ++i) {
        const double m = mass(rng);
        w.lambdas[index(rng)] += m;
        total += m;
    }
    for (auto& l : w.lambdas) {
        l /= total;
    }
    double sum = 0.0;
    for (std::size_t i = 1; i < w.lambdas.size(); ++i) {
        sum += w.lambdas[i];
    }
    w.lambdas[0] = std::max(0.0, 1.0 - sum);
    return w;
}

// Complex-coefficient function certified by the sufficient condition.
TruncatedSeries random_sufficient_member(std::mt19937_64& rng, const ClassParams& p, int order) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> a(order, 0.0);
    a[0] = 1.0;
    double weighted = 0.0;
    for (int n = 2; n <= order; ++n) {
        const double m = unit(rng) * unit(rng);
        a[n - 1] = std::polar(m, kTwoPi * unit(rng));
        weighted += coefficient_weight(n, p) * m;
    }
    const double scale = weighted > 0.0 ? unit(rng) * (1.0 - p.alpha) / weighted : 0.0;
    for (int n = 2; n <= order; ++n) {
        a[n - 1] *= scale;
    }
    return TruncatedSeries::function(a);
}

// k|w-1| - Re(w-1); below 1-alpha exactly where the defining inequality holds.
double defect(Complex w, const ClassParams& p) { return p.k * std::abs(w - 1.0) - (w.real() - 1.0); }

void class_claims(const ClassParams& p, const LedgerOptions& opt, std::vector<ClaimRecord>& out) {
    const double tol = opt.tolerance;
    const double bound = 1.0 - p.alpha;
    std::mt19937_64 rng(opt.seed);

    // Sufficiency: extremal functions and random complex members never break
    // the defining inequality on the disk grid.
    {
        constexpr int kOrder = 8;
        std::vector<TruncatedSeries> set;
        for (int n = 2; n <= kOrder; ++n) {
            set.push_back(extremal_function(n, p, kOrder));
        }
        for (int i = 0; i < opt.random_members; ++i) {
            set.push_back(random_sufficient_member(rng, p, kOrder));
        }
        double worst = -std::numeric_limits<double>::infinity();
        std::size_t worst_index = 0;
        for (std::size_t i = 0; i < set.size(); ++i) {
            const auto v = sampled_membership(set[i], p, opt.disk);
            const double value = bound - v.margin;
            if (value > worst) {
                worst = value;
                worst_index = i;
            }
        }
        out.push_back(make_record("coef-sufficiency", "coefficient-sum sufficiency", BoundSense::Upper, bound, worst,
                                  tol, "member #" + std::to_string(worst_index)));
    }

    // Sharpness: f_n approaches equality as z -> 1 along the real axis.
    {
        constexpr double r = 1.0 - 1e-6;
        double best = -std::numeric_limits<double>::infinity();
        int best_n = 2;
        for (int n = 2; n <= 8; ++n) {
            const auto f = extremal_function(n, p, n);
            const double v = defect(starlike_quotient(f, p, r), p);
            if (v > best) {
                best = v;
                best_n = n;
            }
        }
        out.push_back(make_record("coef-sharpness", "negative-coefficient characterization, extremal equality",
                                  BoundSense::Attained, bound, best, tol,
                                  "n=" + std::to_string(best_n) + " z=" + format_mu(r)));
    }

    // Second-coefficient example z + c z^2 with c as printed.
    {
        const double q = p.q.value();
        const double printed = (1.0 - p.alpha) * q / (q * q * (p.k + 1.0) + 1.0 - p.alpha);
        const std::vector<Complex> a{1.0, printed};
        const auto f = TruncatedSeries::function(a);
        const auto v = sampled_membership(f, p, opt.disk);
        std::string where = "none";
        if (v.witness) {
            where = "z=" + format_mu(v.witness->real()) + (v.witness->imag() < 0 ? "" : "+") +
                    format_mu(v.witness->imag()) + "i";
        }
        auto rec = make_record("cor-coef-example", "printed second-coefficient example", BoundSense::Upper, bound,
                               bound - v.margin, tol, where);
        rec.extras = {{"printed_coefficient", printed}, {"threshold_n2", coefficient_threshold(2, p)}};
        out.push_back(std::move(rec));
    }

    // Distortion envelopes over extreme points and random convex combinations.
    {
        const int order = opt.order;
        std::vector<TruncatedSeries> set;
        for (int n = 1; n <= order; ++n) {
            set.push_back(extremal_function(n, p, order));
        }
        for (int i = 0; i < opt.random_members; ++i) {
            set.push_back(extreme_point_compose(random_weights(rng, order), p));
        }
        struct Worst {
            double slack = std::numeric_limits<double>::infinity();
            double oracle = 0.0;
            double bound = 0.0;
            double r = 0.0;
        };
        Worst up, low, dup, dlow;
        auto track = [](Worst& w, double slack, double oracle, double bound, double r) {
            if (slack < w.slack) {
                w = {slack, oracle, bound, r};
            }
        };
        std::vector<std::vector<Complex>> derivs;
        for (const auto& f : set) {
            std::vector<Complex> d(f.order());
            for (int n = 1; n <= f.order(); ++n) {
                d[n - 1] = static_cast<double>(n) * f[n];
            }
            derivs.push_back(std::move(d));
        }
        for (double r : opt.disk.radii) {
            const auto env = distortion_bounds(r, p);
            const auto denv = derivative_distortion_bounds(r, p);
            double fmax = 0.0, fmin = std::numeric_limits<double>::infinity();
            double dmax = 0.0, dmin = std::numeric_limits<double>::infinity();
            for (int j = 0; j < opt.disk.angles; ++j) {
                const Complex z = std::polar(r, opt.disk.angle(j));
                for (std::size_t i = 0; i < set.size(); ++i) {
                    const double fv = std::abs(horner(set[i].coeffs(), z));
                    const double dv = std::abs(horner(derivs[i], z));
                    fmax = std::max(fmax, fv);
                    fmin = std::min(fmin, fv);
                    dmax = std::max(dmax, dv);
                    dmin = std::min(dmin, dv);
                }
            }
            track(up, env.upper - fmax, fmax, env.upper, r);
            track(low, fmin - env.lower, fmin, env.lower, r);
            track(dup, denv.upper - dmax, dmax, denv.upper, r);
            track(dlow, dmin - denv.lower, dmin, denv.lower, r);
        }
        auto emit = [&](const char* claim, const char* anchor, BoundSense sense, const Worst& w) {
            out.push_back(make_record(claim, anchor, sense, w.bound, w.oracle, tol, "r=" + format_mu(w.r)));
        };
        emit("distortion-upper", "growth bound r + c r^2", BoundSense::Upper, up);
        emit("distortion-lower", "growth bound r - c r^2", BoundSense::Lower, low);
        emit("derivative-distortion-upper", "derivative bound 1 + 2 c r", BoundSense::Upper, dup);
        emit("derivative-distortion-lower", "derivative bound 1 - 2 c r", BoundSense::Lower, dlow);
    }

    // Convex combinations of extreme points stay in the class.
    {
        double worst = -std::numeric_limits<double>::infinity();
        double roundtrip = 0.0;
        for (int i = 0; i < opt.random_members; ++i) {
            const auto w = random_weights(rng, opt.order);
            const auto f = extreme_point_compose(w, p);
            const auto v = ts_membership(f, p);
            worst = std::max(worst, bound - v.margin);
            const auto back = extreme_point_decompose(f, p);
            for (std::size_t n = 0; n < w.lambdas.size(); ++n) {
                roundtrip = std::max(roundtrip, std::abs(back.lambdas[n] - w.lambdas[n]));
            }
        }
        auto rec = make_record("extreme-points", "convex hull of extremal functions", BoundSense::Upper, bound, worst,
                               tol, std::to_string(opt.random_members) + " random weight vectors");
        rec.extras = {{"roundtrip_error", roundtrip}};
        out.push_back(std::move(rec));
    }
}

void coefficient_functional_claims(const ClassParams& p, const ConicCoefficients& P, const LedgerOptions& opt,
                                   std::vector<ClaimRecord>& out) {
    const double tol = opt.tolerance;
    const QParam q = p.q;
    const int threads = opt.threads > 0 ? opt.threads : default_thread_count();

    const auto h2 = oracle_h2_max(P, q, opt.grid, threads);
    {
        const auto hq = hankel_quantities(P, q);
        auto rec = make_record("h2-bound", "second Hankel determinant bound", BoundSense::Upper, h2_bound(P, q), h2.max,
                               tol, format_triple(h2.argmax));
        rec.extras = {{"t_at_max", h2_bound_argmax_t(hq)},
                      {"printed_case_mask", static_cast<double>(printed_h2_case_mask(hq, P))},
                      {"case1_value", h2_case1_value(P, q)}};
        out.push_back(std::move(rec));
    }

    std::vector<double> mus = opt.mus;
    const double mu_star = fekete_szego_breakpoint(q);
    mus.push_back(mu_star);
    std::vector<std::pair<double, OracleResult>> fs;
    for (double mu : mus) {
        fs.emplace_back(mu, oracle_fs_max(mu, P, q, opt.grid, threads));
    }
    for (const auto& [mu, res] : fs) {
        const std::string tag = (mu == mu_star ? "mu*=" : "mu=") + format_mu(mu);
        out.push_back(make_record("fs-complex(" + tag + ")", "Fekete-Szego bound, complex weight", BoundSense::Upper,
                                  fekete_szego_bound_complex(mu, P, q), res.max, tol, format_triple(res.argmax)));
        out.push_back(make_record("fs-real(" + tag + ")", "Fekete-Szego bound, real weight", BoundSense::Upper,
                                  fekete_szego_bound_real(mu, P, q), res.max, tol, format_triple(res.argmax)));
    }

    const auto printed = printed_corollary_values(P, q);
    auto fs_at = [&](double mu) -> const OracleResult& {
        for (const auto& [m, res] : fs) {
            if (m == mu) {
                return res;
            }
        }
        throw std::logic_error("missing Fekete-Szego oracle weight");
    };
    {
        const auto& res = std::find_if(mus.begin(), mus.end(), [](double m) { return m == 1.0; }) != mus.end()
                              ? fs_at(1.0)
                              : fs.emplace_back(1.0, oracle_fs_max(1.0, P, q, opt.grid, threads)).second;
        out.push_back(make_record("cor-h21-printed", "printed first Hankel determinant value", BoundSense::Upper,
                                  printed.h21, res.max, tol, format_triple(res.argmax)));
    }
    {
        const auto& res = std::find_if(mus.begin(), mus.end(), [](double m) { return m == 0.0; }) != mus.end()
                              ? fs_at(0.0)
                              : fs.emplace_back(0.0, oracle_fs_max(0.0, P, q, opt.grid, threads)).second;
        out.push_back(make_record("cor-a3-printed", "printed third-coefficient value", BoundSense::Upper,
                                  printed.a3, res.max, tol, format_triple(res.argmax)));
    }
    if (p.k == 1.0 && p.alpha == 0.0) {
        auto rec = make_record("cor-h2-limit", "printed classical-limit H2(2) value", BoundSense::Upper,
                               printed.h2_limit, h2.max, tol, format_triple(h2.argmax));
        rec.extras = {{"case1_value", h2_case1_value(P, q)}, {"h2_bound", h2_bound(P, q)}};
        out.push_back(std::move(rec));
    }
}

}  // namespace

VerificationReport run_ledger(std::span<const LedgerPoint> points, const LedgerOptions& options) {
    options.grid.validate();
    options.disk.validate();
    if (options.order < 2) {
        throw ParameterError("ledger order must be >= 2");
    }
    VerificationReport report;
    report.tool_version = std::string(kToolVersion);
    report.options = options;
    report.restrictions = {
        "B1 restricted to real [0,2] (rotation normalization of the Caratheodory function)",
        "zeta sampled on radii {" + [&] {
            std::string s;
            for (std::size_t i = 0; i < options.grid.zeta_radii.size(); ++i) {
                s += (i ? "," : "") + format_mu(options.grid.zeta_radii[i]);
            }
            return s;
        }() + "} x nZeta angles",
        "class-level checks use polynomial members of order <= " + std::to_string(options.order) +
            " evaluated exactly on the disk grid (max radius " + format_mu(options.disk.radii.back()) + ")",
        "k=1 conic coefficients are reconstructed from the parabolic map, scaled by (1-alpha)",
    };

    for (const auto& pt : points) {
        const ClassParams& p = pt.params;
        PointReport pr{p.q.value(), p.k, p.alpha, std::nullopt, {}};
        class_claims(p, options, pr.records);

        std::optional<ConicCoefficients> conic;
        try {
            conic = conic_coefficients(p.k, p.alpha, pt.user_conic);
        } catch (const UnsupportedRegime&) {
            ClaimRecord missing;
            missing.claim = "conic-input";
            missing.anchor = "conic-domain map coefficients";
            missing.sense = BoundSense::Input;
            missing.status = ClaimStatus::ReconstructedInputMissing;
            missing.argmax = "no built-in map for this k and no user P1..P3";
            pr.records.push_back(std::move(missing));
        }
        if (conic) {
            pr.conic = conic;
            if (conic->provenance != ConicProvenance::BuiltinK0) {
                ClaimRecord input;
                input.claim = "conic-input";
                input.anchor = "conic-domain map coefficients";
                input.sense = BoundSense::Input;
                input.status = ClaimStatus::ReconstructedInput;
                input.argmax = std::string(to_string(conic->provenance));
                input.extras = {{"P1", conic->P1}, {"P2", conic->P2}, {"P3", conic->P3}};
                pr.records.push_back(std::move(input));
            }
            coefficient_functional_claims(p, *conic, options, pr.records);
        }
        report.points.push_back(std::move(pr));
    }
    return report;
}

}  // namespace symq
