// symq: command-line front end for the symmetric q-calculus library.
//
// Exit codes: 0 ok / verified, 2 ledger violations or a membership witness,
// 1 usage, range or IO error (one diagnostic line on stderr).

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symq/classes.hpp"
#include "symq/errors.hpp"
#include "symq/hankel.hpp"
#include "symq/io.hpp"
#include "symq/qcalc.hpp"
#include "symq/verify.hpp"

using namespace symq;

namespace {

enum class Format { Human, Json, Csv };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    double q = 1.0;
    double k = 0.0;
    double alpha = 0.0;
    int n = 2;
    double lambda = 0.0;
    bool lambda_set = false;
    bool symmetric = false;
    double mu = 0.0;
    double mu_im = 0.0;
    double r = 0.5;
    int order = 0;
    std::string in;
    std::string out;
    std::string conic_file;
    std::optional<double> P1, P2, P3;
    std::string format = "human";
    std::string functional = "h2";
    int phases = 0;
    int threads = 0;
    OracleGrid grid;
    double tolerance = 1e-6;
    int random_members = 256;
    std::uint64_t seed = 20170401;
    std::vector<std::string> points;
    std::string points_file;
};

Format parse_format(const std::string& s) {
    if (s == "human") return Format::Human;
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw UsageError("--format must be human, json or csv, got '" + s + "'");
}

QParam checked_q(double q) {
    if (!(q > 0.0 && q <= 1.0)) {
        throw UsageError("--q must lie in (0,1], got " + format12(q));
    }
    if (q < 1e-3) {
        warn("q = " + format12(q) + " < 1e-3: symmetric q-numbers grow like q^-(n-1) and may overflow");
    }
    return QParam(q);
}

ClassParams checked_params(const Config& c) {
    const QParam q = checked_q(c.q);
    if (!(c.k >= 0.0) || !std::isfinite(c.k)) {
        throw UsageError("--k must be >= 0, got " + format12(c.k));
    }
    if (!(c.alpha >= 0.0 && c.alpha < 1.0)) {
        throw UsageError("--alpha must lie in [0,1), got " + format12(c.alpha));
    }
    return ClassParams(q, c.k, c.alpha);
}

std::optional<ConicCoefficients> user_conic(const Config& c) {
    const int given = c.P1.has_value() + c.P2.has_value() + c.P3.has_value();
    if (!c.conic_file.empty()) {
        if (given) {
            throw UsageError("--conic cannot be combined with --P1/--P2/--P3");
        }
        return read_conic_file(c.conic_file);
    }
    if (given == 0) {
        return std::nullopt;
    }
    if (given != 3) {
        throw UsageError("--P1, --P2 and --P3 must be given together");
    }
    ConicCoefficients p{*c.P1, *c.P2, *c.P3, ConicProvenance::User};
    try {
        p.validate();
    } catch (const ParameterError& e) {
        throw UsageError(std::string("--P1/--P2/--P3: ") + e.what());
    }
    return p;
}

ConicCoefficients resolve_conic(const Config& c, const ClassParams& p) {
    try {
        return conic_coefficients(p.k, p.alpha, user_conic(c));
    } catch (const UnsupportedRegime&) {
        throw UsageError("--k " + format12(p.k) + " has no built-in conic map; pass --P1 --P2 --P3 or --conic");
    }
}

void check_grid(const OracleGrid& g) {
    if (g.nB < 8) throw UsageError("--nB must be >= 8");
    if (g.nRho < 8) throw UsageError("--nRho must be >= 8");
    if (g.nPhi < 8) throw UsageError("--nPhi must be >= 8");
    if (g.nZeta < 8) throw UsageError("--nZeta must be >= 8");
    if (g.refinement < 0) throw UsageError("--refine must be >= 0");
}

std::string require_in(const Config& c) {
    if (c.in.empty()) {
        throw UsageError("--in is required");
    }
    return c.in;
}

// Everything printed goes through here so --out applies uniformly.
class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) {
                throw UsageError("--out: cannot open " + path + " for writing");
            }
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// Flat key/value objects as a single-row CSV.
void emit_flat_csv(std::ostream& out, const Json& j) {
    std::string head, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
        head += (head.empty() ? "" : ",") + it.key();
        std::string v;
        if (it->is_number_float()) {
            v = format12(it->get<double>());
        } else if (it->is_string()) {
            v = it->get<std::string>();
        } else if (it->is_null()) {
            v = "";
        } else {
            v = it->dump();
            if (v.find(',') != std::string::npos) {
                v = "\"" + v + "\"";
            }
        }
        row += (it == j.begin() ? "" : ",") + v;
    }
    out << head << '\n' << row << '\n';
}

void emit_flat(Format f, std::ostream& out, const Json& j) {
    switch (f) {
        case Format::Json:
            emit_json(out, j);
            break;
        case Format::Csv:
            emit_flat_csv(out, j);
            break;
        case Format::Human:
            for (auto it = j.begin(); it != j.end(); ++it) {
                out << it.key() << ": " << (it->is_number_float() ? format12(it->get<double>()) : it->dump())
                    << '\n';
            }
            break;
    }
}

int cmd_qnum(const Config& c, Format f, std::ostream& out) {
    const QParam q = checked_q(c.q);
    double value;
    Json j;
    if (c.symmetric) {
        if (c.n < 1) throw UsageError("--n must be >= 1 for symmetric q-numbers");
        value = symmetric_q_number(c.n, q);
        j["n"] = c.n;
    } else {
        const double lambda = c.lambda_set ? c.lambda : c.n;
        value = q_number(lambda, q);
        j["lambda"] = round12(lambda);
    }
    j["q"] = round12(c.q);
    j["symmetric"] = c.symmetric;
    j["value"] = round12(value);
    if (f == Format::Human) {
        out << format12(value) << '\n';
    } else {
        emit_flat(f, out, j);
    }
    return 0;
}

int cmd_deriv(const Config& c, Format f, std::ostream& out) {
    const QParam q = checked_q(c.q);
    const auto fn = read_function_file(require_in(c));
    const auto d = c.symmetric ? symmetric_q_derivative(fn, q) : q_derivative(fn, q);
    if (f == Format::Csv) {
        out << "power,re,im\n";
        for (int n = 0; n <= d.order(); ++n) {
            out << n << ',' << format12(d[n].real()) << ',' << format12(d[n].imag()) << '\n';
        }
        return 0;
    }
    emit_json(out, derivative_to_json(d));
    return 0;
}

int cmd_member(const Config& c, Format f, std::ostream& out) {
    const ClassParams p = checked_params(c);
    const auto fn = read_function_file(require_in(c));
    const double coef_margin = sufficient_condition_margin(fn, p);
    const auto sampled = sampled_membership(fn, p);
    std::optional<MembershipVerdict> ts;
    try {
        ts = ts_membership(fn, p);
    } catch (const FormError&) {
    }

    MembershipVerdict top{sampled.certified, coef_margin, sampled.witness};
    if (!top.witness && ts && ts->witness) {
        top = {Certification::NotMemberWitness, coef_margin, ts->witness};
    }
    Json j = verdict_to_json(top);
    j["coefficient_margin"] = round12(coef_margin);
    j["coefficient_sufficient"] = coef_margin >= 0.0;
    j["sampled"] = verdict_to_json(sampled);
    j["negative_form"] = ts ? verdict_to_json(*ts) : Json(nullptr);
    j["q"] = round12(c.q);
    j["k"] = round12(c.k);
    j["alpha"] = round12(c.alpha);

    if (f == Format::Human) {
        out << "certified: " << to_string(top.certified) << '\n'
            << "margin: " << format12(coef_margin) << '\n'
            << "sampled: " << to_string(sampled.certified) << " (min margin " << format12(sampled.margin) << ")\n";
        if (ts) {
            out << "negative-form: " << to_string(ts->certified) << '\n';
        }
        if (top.witness) {
            out << "witness: " << format12(top.witness->real()) << (top.witness->imag() < 0 ? "" : "+")
                << format12(top.witness->imag()) << "i\n";
        }
    } else if (f == Format::Csv) {
        out << "certified,margin,witness_re,witness_im,sampled,sampled_margin,negative_form\n"
            << to_string(top.certified) << ',' << format12(coef_margin) << ','
            << (top.witness ? format12(top.witness->real()) : "") << ','
            << (top.witness ? format12(top.witness->imag()) : "") << ',' << to_string(sampled.certified) << ','
            << format12(sampled.margin) << ',' << (ts ? std::string(to_string(ts->certified)) : "") << '\n';
    } else {
        emit_json(out, j);
    }
    return top.witness ? 2 : 0;
}

int cmd_extremal(const Config& c, Format f, std::ostream& out) {
    const ClassParams p = checked_params(c);
    if (c.n < 1) throw UsageError("--n must be >= 1");
    if (c.order < 0) throw UsageError("--order must be >= 0");
    const auto fn = extremal_function(c.n, p, c.order > 0 ? c.order : std::max(c.n, 2));
    if (f == Format::Csv) {
        out << "n,re,im\n";
        for (int n = 1; n <= fn.order(); ++n) {
            out << n << ',' << format12(fn[n].real()) << ',' << format12(fn[n].imag()) << '\n';
        }
        return 0;
    }
    emit_json(out, function_to_json(fn));
    return 0;
}

int cmd_distortion(const Config& c, Format f, std::ostream& out) {
    const ClassParams p = checked_params(c);
    if (!(c.r >= 0.0 && c.r < 1.0)) throw UsageError("--r must lie in [0,1), got " + format12(c.r));
    const auto e = distortion_bounds(c.r, p);
    const auto d = derivative_distortion_bounds(c.r, p);
    Json j;
    j["r"] = round12(c.r);
    j["c"] = round12(distortion_constant(p));
    j["lower"] = round12(e.lower);
    j["upper"] = round12(e.upper);
    j["derivative_lower"] = round12(d.lower);
    j["derivative_upper"] = round12(d.upper);
    emit_flat(f, out, j);
    return 0;
}

int cmd_decompose(const Config& c, Format f, std::ostream& out) {
    const ClassParams p = checked_params(c);
    const auto fn = read_function_file(require_in(c));
    const auto w = extreme_point_decompose(fn, p);
    if (f == Format::Json) {
        Json j;
        j["lambdas"] = Json::array();
        for (double l : w.lambdas) {
            j["lambdas"].push_back(round12(l));
        }
        emit_json(out, j);
        return 0;
    }
    if (f == Format::Csv) {
        out << "n,lambda\n";
    }
    for (std::size_t n = 0; n < w.lambdas.size(); ++n) {
        out << n + 1 << (f == Format::Csv ? "," : ": ") << format12(w.lambdas[n]) << '\n';
    }
    return 0;
}

int cmd_hankel_bound(const Config& c, Format f, std::ostream& out) {
    const ClassParams p = checked_params(c);
    const auto P = resolve_conic(c, p);
    const auto h = hankel_quantities(P, p.q);
    Json j;
    j["q"] = round12(c.q);
    j["k"] = round12(c.k);
    j["alpha"] = round12(c.alpha);
    j["P1"] = round12(P.P1);
    j["P2"] = round12(P.P2);
    j["P3"] = round12(P.P3);
    j["h2_bound"] = round12(h2_bound(P, p.q));
    j["t_at_max"] = round12(h2_bound_argmax_t(h));
    j["case1_value"] = round12(h2_case1_value(P, p.q));
    j["printed_case_mask"] = printed_h2_case_mask(h, P);
    for (auto [name, v] : {std::pair{"S", h.S}, {"M", h.M}, {"N", h.N}, {"U", h.U}, {"V", h.V}, {"cP", h.cP},
                           {"cQ", h.cQ}, {"cR", h.cR}}) {
        j[name] = round12(v);
    }
    emit_flat(f, out, j);
    return 0;
}

int cmd_fs_bound(const Config& c, Format f, std::ostream& out) {
    const ClassParams p = checked_params(c);
    const auto P = resolve_conic(c, p);
    const Complex mu(c.mu, c.mu_im);
    Json j;
    j["mu_re"] = round12(c.mu);
    j["mu_im"] = round12(c.mu_im);
    j["complex_bound"] = round12(fekete_szego_bound_complex(mu, P, p.q));
    j["real_bound"] = c.mu_im == 0.0 ? Json(round12(fekete_szego_bound_real(c.mu, P, p.q))) : Json(nullptr);
    j["breakpoint"] = round12(fekete_szego_breakpoint(p.q));
    emit_flat(f, out, j);
    return 0;
}

int cmd_oracle(const Config& c, Format f, std::ostream& out) {
    const ClassParams p = checked_params(c);
    const auto P = resolve_conic(c, p);
    check_grid(c.grid);
    Functional which;
    if (c.functional == "h2") {
        which = Functional::H2;
    } else if (c.functional == "fs") {
        which = Functional::FeketeSzego;
    } else {
        throw UsageError("--functional must be h2 or fs, got '" + c.functional + "'");
    }
    const Complex mu(c.mu, c.mu_im);
    const int threads = c.threads > 0 ? c.threads : default_thread_count();
    const auto res = which == Functional::H2 ? oracle_h2_max(P, p.q, c.grid, threads)
                                             : oracle_fs_max(mu, P, p.q, c.grid, threads);
    Json j;
    j["functional"] = c.functional;
    j["q"] = round12(c.q);
    j["k"] = round12(c.k);
    j["alpha"] = round12(c.alpha);
    if (which == Functional::FeketeSzego) {
        j["mu_re"] = round12(c.mu);
        j["mu_im"] = round12(c.mu_im);
    }
    j["max"] = round12(res.max);
    j["B1"] = round12(res.argmax.B1);
    j["x_re"] = round12(res.argmax.x.real());
    j["x_im"] = round12(res.argmax.x.imag());
    j["zeta_re"] = round12(res.argmax.zeta.real());
    j["zeta_im"] = round12(res.argmax.zeta.imag());
    j["bound"] = round12(which == Functional::H2 ? h2_bound(P, p.q) : fekete_szego_bound_complex(mu, P, p.q));
    if (c.phases > 0) {
        // Diagnostic only: per-phase maxima with complex B1.
        const auto scan = oracle_phase_scan(which, mu, P, p.q, c.grid, c.phases, threads);
        Json arr = Json::array();
        for (double v : scan) {
            arr.push_back(round12(v));
        }
        j["phase_maxima"] = std::move(arr);
    }
    emit_flat(f, out, j);
    return 0;
}

LedgerPoint parse_point(const std::string& s) {
    std::stringstream ss(s);
    std::vector<double> v;
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError("--point expects q,k,alpha[,P1,P2,P3], got '" + s + "'");
        }
    }
    if (v.size() != 3 && v.size() != 6) {
        throw UsageError("--point expects q,k,alpha[,P1,P2,P3], got '" + s + "'");
    }
    Config c;
    c.q = v[0];
    c.k = v[1];
    c.alpha = v[2];
    LedgerPoint pt{checked_params(c), std::nullopt};
    if (v.size() == 6) {
        ConicCoefficients P{v[3], v[4], v[5], ConicProvenance::User};
        try {
            P.validate();
        } catch (const ParameterError& e) {
            throw UsageError(std::string("--point: ") + e.what());
        }
        pt.user_conic = P;
    }
    return pt;
}

std::vector<LedgerPoint> read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("--points-file: cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw UsageError("--points-file: " + std::string(e.what()));
    }
    if (!j.is_array()) throw UsageError("--points-file: expected an array of {q, k, alpha[, P]}");
    std::vector<LedgerPoint> pts;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("q") || !e.contains("k") || !e.contains("alpha")) {
            throw UsageError("--points-file: every entry needs q, k and alpha");
        }
        Config c;
        c.q = e["q"].get<double>();
        c.k = e["k"].get<double>();
        c.alpha = e["alpha"].get<double>();
        LedgerPoint pt{checked_params(c), std::nullopt};
        if (e.contains("P")) {
            pt.user_conic = conic_from_json(e);
        }
        pts.push_back(pt);
    }
    return pts;
}

int cmd_ledger(const Config& c, Format f, std::ostream& out) {
    check_grid(c.grid);
    if (!(c.tolerance >= 0.0)) throw UsageError("--tol must be >= 0");
    if (c.random_members < 0) throw UsageError("--random-members must be >= 0");
    std::vector<LedgerPoint> pts;
    if (!c.points_file.empty()) {
        pts = read_points_file(c.points_file);
    }
    for (const auto& s : c.points) {
        pts.push_back(parse_point(s));
    }
    if (c.points_file.empty() && c.points.empty()) {
        pts = default_ledger_points();
    }
    LedgerOptions opt;
    opt.grid = c.grid;
    opt.tolerance = c.tolerance;
    opt.threads = c.threads;
    opt.random_members = c.random_members;
    opt.seed = c.seed;
    if (c.order > 0) {
        if (c.order < 2) throw UsageError("--order must be >= 2");
        opt.order = c.order;
    }
    const auto report = run_ledger(pts, opt);
    switch (f) {
        case Format::Json:
            emit_json(out, report_to_json(report));
            break;
        case Format::Csv:
            write_report_csv(report, out);
            break;
        case Format::Human:
            out << "symq " << report.tool_version << " ledger, " << report.record_count() << " records\n";
            for (const auto& r : report.restrictions) {
                out << "  restriction: " << r << '\n';
            }
            for (const auto& p : report.points) {
                out << "q=" << format12(p.q) << " k=" << format12(p.k) << " alpha=" << format12(p.alpha) << '\n';
                for (const auto& rec : p.records) {
                    out << "  " << to_string(rec.status) << "  " << rec.claim;
                    if (rec.bound) {
                        out << "  bound=" << format12(*rec.bound) << " oracle=" << format12(*rec.oracle)
                            << " slack=" << format12(*rec.slack);
                    }
                    out << '\n';
                }
            }
            break;
    }
    return report.has_violations() ? 2 : 0;
}

void add_class_flags(CLI::App* sub, Config& c) {
    sub->add_option("--q", c.q, "deformation parameter in (0,1]");
    sub->add_option("--k", c.k, "conic parameter k >= 0");
    sub->add_option("--alpha", c.alpha, "order alpha in [0,1)");
}

void add_conic_flags(CLI::App* sub, Config& c) {
    sub->add_option("--P1", c.P1, "user conic coefficient P1");
    sub->add_option("--P2", c.P2, "user conic coefficient P2");
    sub->add_option("--P3", c.P3, "user conic coefficient P3");
    sub->add_option("--conic", c.conic_file, "JSON file {\"P\": [P1, P2, P3]}");
}

void add_grid_flags(CLI::App* sub, Config& c) {
    sub->add_option("--nB", c.grid.nB, "B1 samples");
    sub->add_option("--nRho", c.grid.nRho, "|x| samples");
    sub->add_option("--nPhi", c.grid.nPhi, "arg x samples");
    sub->add_option("--nZeta", c.grid.nZeta, "arg zeta samples");
    sub->add_option("--refine", c.grid.refinement, "refinement levels");
    sub->add_option("--threads", c.threads, "worker threads (default SYMQ_THREADS or hardware)");
}

}  // namespace

int main(int argc, char** argv) {
    Config c;
    CLI::App app{"symq: symmetric q-calculus function classes and bound verification"};
    app.require_subcommand(1);
    app.add_option("--format", c.format, "output format: human, json or csv");
    app.add_option("--out", c.out, "write output to this file");
    app.set_version_flag("--version", std::string(kToolVersion));

    auto* qnum = app.add_subcommand("qnum", "q-number [lambda]_q or symmetric [n]~_q");
    qnum->add_option("--q", c.q, "deformation parameter in (0,1]")->required();
    qnum->add_option("--n", c.n, "index n");
    qnum->add_option("--lambda", c.lambda, "real argument of [lambda]_q")->each([&](const std::string&) {
        c.lambda_set = true;
    });
    qnum->add_flag("--symmetric", c.symmetric, "symmetric q-number");

    auto* deriv = app.add_subcommand("deriv", "q-derivative of a function file");
    deriv->add_option("--in", c.in, "function JSON file");
    deriv->add_option("--q", c.q, "deformation parameter in (0,1]");
    deriv->add_flag("--symmetric", c.symmetric, "symmetric q-derivative");

    auto* member = app.add_subcommand("member", "coefficient and sampled membership checks");
    member->add_option("--in", c.in, "function JSON file");
    add_class_flags(member, c);

    auto* extremal = app.add_subcommand("extremal", "extremal function f_n");
    extremal->add_option("--n", c.n, "index n >= 1");
    extremal->add_option("--order", c.order, "truncation order (default max(n,2))");
    add_class_flags(extremal, c);

    auto* distortion = app.add_subcommand("distortion", "growth and derivative envelopes at |z| = r");
    distortion->add_option("--r", c.r, "radius in [0,1)");
    add_class_flags(distortion, c);

    auto* decompose = app.add_subcommand("decompose", "extreme-point weights of a negative-coefficient member");
    decompose->add_option("--in", c.in, "function JSON file");
    add_class_flags(decompose, c);

    auto* hankel = app.add_subcommand("hankel-bound", "closed-form H2(2) bound");
    add_class_flags(hankel, c);
    add_conic_flags(hankel, c);

    auto* fs = app.add_subcommand("fs-bound", "Fekete-Szego bounds");
    fs->add_option("--mu", c.mu, "weight mu (real part)");
    fs->add_option("--mu-im", c.mu_im, "imaginary part of mu");
    add_class_flags(fs, c);
    add_conic_flags(fs, c);

    auto* oracle = app.add_subcommand("oracle", "brute-force maximum of H2(2) or the Fekete-Szego functional");
    oracle->add_option("--functional", c.functional, "h2 or fs");
    oracle->add_option("--mu", c.mu, "weight mu (real part)");
    oracle->add_option("--mu-im", c.mu_im, "imaginary part of mu");
    oracle->add_option("--phases", c.phases, "diagnostic scan over this many B1 phases");
    add_class_flags(oracle, c);
    add_conic_flags(oracle, c);
    add_grid_flags(oracle, c);

    auto* ledger = app.add_subcommand("ledger", "verify every bound against the oracles");
    ledger->add_option("--point", c.points, "q,k,alpha[,P1,P2,P3] (repeatable)");
    ledger->add_option("--points-file", c.points_file, "JSON array of {q, k, alpha[, P]}");
    ledger->add_option("--tol", c.tolerance, "violation tolerance");
    ledger->add_option("--order", c.order, "truncation order of class-level checks");
    ledger->add_option("--random-members", c.random_members, "random members per class check");
    ledger->add_option("--seed", c.seed, "random seed");
    add_grid_flags(ledger, c);

    // Options may also follow the subcommand name.
    for (auto* sub : app.get_subcommands({})) {
        sub->add_option("--format", c.format, "output format: human, json or csv");
        sub->add_option("--out", c.out, "write output to this file");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "symq: " << e.what() << '\n';
        return 1;
    }

    try {
        const Format f = parse_format(c.format);
        Output output(c.out);
        std::ostream& out = output.stream();
        out.precision(12);
        if (qnum->parsed()) return cmd_qnum(c, f, out);
        if (deriv->parsed()) return cmd_deriv(c, f, out);
        if (member->parsed()) return cmd_member(c, f, out);
        if (extremal->parsed()) return cmd_extremal(c, f, out);
        if (distortion->parsed()) return cmd_distortion(c, f, out);
        if (decompose->parsed()) return cmd_decompose(c, f, out);
        if (hankel->parsed()) return cmd_hankel_bound(c, f, out);
        if (fs->parsed()) return cmd_fs_bound(c, f, out);
        if (oracle->parsed()) return cmd_oracle(c, f, out);
        if (ledger->parsed()) return cmd_ledger(c, f, out);
    } catch (const std::exception& e) {
        std::string msg = e.what();
        for (auto& ch : msg) {
            if (ch == '\n') ch = ' ';
        }
        std::cerr << "symq: error: " << msg << '\n';
        return 1;
    }
    return 1;
}
