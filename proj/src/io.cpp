#include "symq/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "symq/errors.hpp"

namespace symq {

double round12(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    return std::strtod(format12(x).c_str(), nullptr);
}

std::string format12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

namespace {

Json number(double x) {
    if (!std::isfinite(x)) {
        return nullptr;
    }
    return round12(x);
}

Json optional_number(const std::optional<double>& x) { return x ? number(*x) : Json(nullptr); }

Json complex_pair(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

// Function files are exchanged between runs, so they keep every bit.
Json exact_pair(Complex z) { return Json::array({z.real(), z.imag()}); }

Json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

double finite_number(const Json& v, const std::string& where) {
    if (!v.is_number()) {
        throw FormatError(where + " is not a number");
    }
    const double x = v.get<double>();
    if (!std::isfinite(x)) {
        throw FormatError(where + " is not finite");
    }
    return x;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string csv_number(const std::optional<double>& x) { return x && std::isfinite(*x) ? format12(*x) : ""; }

}  // namespace

TruncatedSeries function_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw FormatError("function file needs an object with a \"coeffs\" array");
    }
    const auto& c = j["coeffs"];
    if (c.empty()) {
        throw FormatError("function file has no coefficients");
    }
    if (j.contains("order")) {
        if (!j["order"].is_number_integer()) {
            throw FormatError("\"order\" must be an integer");
        }
        if (j["order"].get<long long>() != static_cast<long long>(c.size())) {
            throw FormatError("\"order\" is " + j["order"].dump() + " but " + std::to_string(c.size()) +
                              " coefficients were given");
        }
    }
    std::vector<Complex> a;
    a.reserve(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::string where = "coeffs[" + std::to_string(i) + "]";
        const auto& e = c[i];
        if (e.is_number()) {
            a.emplace_back(finite_number(e, where), 0.0);
        } else if (e.is_array() && e.size() == 2) {
            a.emplace_back(finite_number(e[0], where + "[0]"), finite_number(e[1], where + "[1]"));
        } else {
            throw FormatError(where + " must be [re, im]");
        }
    }
    if (a[0] != Complex(1.0)) {
        throw FormatError("coeffs[0] (a_1) must be 1");
    }
    return TruncatedSeries::function(a);
}

TruncatedSeries read_function_file(const std::string& path) { return function_from_json(parse_file(path)); }

Json function_to_json(const TruncatedSeries& f) {
    Json coeffs = Json::array();
    for (int n = 1; n <= f.order(); ++n) {
        coeffs.push_back(exact_pair(f[n]));
    }
    Json j;
    j["order"] = f.order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json derivative_to_json(const TruncatedSeries& d) {
    Json coeffs = Json::array();
    for (int n = 0; n <= d.order(); ++n) {
        coeffs.push_back(complex_pair(d[n]));
    }
    Json j;
    j["kind"] = "derivative";
    j["order"] = d.order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

Json verdict_to_json(const MembershipVerdict& v) {
    Json j;
    j["certified"] = std::string(to_string(v.certified));
    j["margin"] = number(v.margin);
    j["witness"] = v.witness ? complex_pair(*v.witness) : Json(nullptr);
    return j;
}

ConicCoefficients conic_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("P") || !j["P"].is_array() || j["P"].size() != 3) {
        throw FormatError("conic block must be {\"P\": [P1, P2, P3]}");
    }
    ConicCoefficients c{finite_number(j["P"][0], "P[0]"), finite_number(j["P"][1], "P[1]"),
                        finite_number(j["P"][2], "P[2]"), ConicProvenance::User};
    c.validate();
    return c;
}

ConicCoefficients read_conic_file(const std::string& path) { return conic_from_json(parse_file(path)); }

Json report_to_json(const VerificationReport& r) {
    const auto& o = r.options;
    Json grid;
    grid["nB"] = o.grid.nB;
    grid["nRho"] = o.grid.nRho;
    grid["nPhi"] = o.grid.nPhi;
    grid["nZeta"] = o.grid.nZeta;
    grid["refinement"] = o.grid.refinement;
    grid["b_range"] = Json::array({number(o.grid.b_min), number(o.grid.b_max)});
    grid["rho_range"] = Json::array({number(o.grid.rho_min), number(o.grid.rho_max)});
    grid["zeta_radii"] = Json::array();
    for (double z : o.grid.zeta_radii) {
        grid["zeta_radii"].push_back(number(z));
    }
    Json disk;
    disk["radii"] = Json::array();
    for (double rad : o.disk.radii) {
        disk["radii"].push_back(number(rad));
    }
    disk["angles"] = o.disk.angles;

    Json header;
    header["grid"] = std::move(grid);
    header["disk"] = std::move(disk);
    header["restrictions"] = r.restrictions;
    header["tolerance"] = number(o.tolerance);
    header["order"] = o.order;
    header["mus"] = Json::array();
    for (double m : o.mus) {
        header["mus"].push_back(number(m));
    }
    header["random_members"] = o.random_members;
    header["seed"] = o.seed;

    Json records = Json::array();
    for (const auto& p : r.points) {
        for (const auto& rec : p.records) {
            Json j;
            j["q"] = number(p.q);
            j["k"] = number(p.k);
            j["alpha"] = number(p.alpha);
            j["P"] = p.conic ? Json::array({number(p.conic->P1), number(p.conic->P2), number(p.conic->P3)})
                             : Json(nullptr);
            j["claim"] = rec.claim;
            j["anchor"] = rec.anchor;
            j["sense"] = std::string(to_string(rec.sense));
            j["bound"] = optional_number(rec.bound);
            j["oracle"] = optional_number(rec.oracle);
            j["slack"] = optional_number(rec.slack);
            j["status"] = std::string(to_string(rec.status));
            j["argmax"] = rec.argmax;
            Json extras = Json::object();
            for (const auto& [key, value] : rec.extras) {
                extras[key] = number(value);
            }
            j["extras"] = std::move(extras);
            records.push_back(std::move(j));
        }
    }

    Json j;
    j["tool"] = {{"name", "symq"}, {"version", r.tool_version}};
    j["header"] = std::move(header);
    j["records"] = std::move(records);
    return j;
}

std::string report_csv_header() { return "q,k,alpha,P1,P2,P3,claim,anchor,sense,bound,oracle,slack,status,argmax,extras"; }

void write_report_csv(const VerificationReport& r, std::ostream& out) {
    out << report_csv_header() << '\n';
    for (const auto& p : r.points) {
        for (const auto& rec : p.records) {
            std::string extras;
            for (const auto& [key, value] : rec.extras) {
                if (!extras.empty()) {
                    extras += ';';
                }
                extras += key + "=" + (std::isfinite(value) ? format12(value) : "");
            }
            out << format12(p.q) << ',' << format12(p.k) << ',' << format12(p.alpha) << ','
                << (p.conic ? format12(p.conic->P1) : "") << ',' << (p.conic ? format12(p.conic->P2) : "") << ','
                << (p.conic ? format12(p.conic->P3) : "") << ',' << csv_field(rec.claim) << ','
                << csv_field(rec.anchor) << ',' << to_string(rec.sense) << ',' << csv_number(rec.bound) << ','
                << csv_number(rec.oracle) << ',' << csv_number(rec.slack) << ',' << to_string(rec.status) << ','
                << csv_field(rec.argmax) << ',' << csv_field(extras) << '\n';
        }
    }
}

}  // namespace symq
