#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "symq/errors.hpp"
#include "symq/io.hpp"

using namespace symq;

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (char c : line) {
        if (c == '"') {
            quoted = !quoted;
        } else if (c == ',' && !quoted) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

TEST_CASE("twelve significant digits") {
    CHECK(format12(5.25) == "5.25");
    CHECK(format12(1.0 / 3.0) == "0.333333333333");
    CHECK(round12(1.0 / 3.0) == 0.333333333333);
    CHECK(std::isnan(round12(std::nan(""))));
}

TEST_CASE("function file round trip") {
    const std::vector<Complex> a{1.0, {-0.25, 0.0}, {0.125, -0.5}};
    const auto f = TruncatedSeries::function(a);
    const Json j = function_to_json(f);
    CHECK(j["order"] == 3);
    CHECK(j["coeffs"][0][0] == 1.0);
    CHECK(j["coeffs"][1][0] == -0.25);
    CHECK(function_from_json(Json::parse(j.dump())) == f);
}

TEST_CASE("function file rejects malformed input") {
    CHECK_THROWS_AS(function_from_json(Json::parse(R"({"order": 2, "coeffs": [[1,0]]})")), FormatError);
    CHECK_THROWS_AS(function_from_json(Json::parse(R"({"coeffs": [[2,0],[1,0]]})")), FormatError);
    Json inf;
    inf["coeffs"] = Json::array({Json::array({1.0, 0.0}), Json::array({HUGE_VAL, 0.0})});
    CHECK_THROWS_AS(function_from_json(inf), FormatError);
    const auto path = std::filesystem::temp_directory_path() / "symq_io_overflow.json";
    std::ofstream(path) << R"({"coeffs": [[1,0],[1e400,0]]})";
    CHECK_THROWS_AS(read_function_file(path.string()), FormatError);
    CHECK_THROWS_AS(function_from_json(Json::parse(R"({"coeffs": [[1,0],[null,0]]})")), FormatError);
    CHECK_THROWS_AS(function_from_json(Json::parse(R"({"coeffs": [[1,0],[1,0,0]]})")), FormatError);
    CHECK_THROWS_AS(function_from_json(Json::parse(R"([1, 2])")), FormatError);
    CHECK_THROWS_AS(read_function_file("/nonexistent/f.json"), FormatError);
}

TEST_CASE("derivative and verdict serialization") {
    const auto d = symmetric_q_derivative(TruncatedSeries::identity(3), QParam(0.5));
    const Json j = derivative_to_json(d);
    CHECK(j["kind"] == "derivative");
    CHECK(j["order"] == 2);
    CHECK(j["coeffs"][0][0] == 1.0);

    const Json v = verdict_to_json({Certification::Inconclusive, 1.0, std::nullopt});
    CHECK(v["certified"] == "inconclusive");
    CHECK(v["margin"] == 1.0);
    CHECK(v["witness"].is_null());
    const Json w = verdict_to_json({Certification::NotMemberWitness, -0.5, Complex(0.25, -0.5)});
    CHECK(w["witness"][1] == -0.5);
}

TEST_CASE("conic block") {
    const auto c = conic_from_json(Json::parse(R"({"P": [1.0, 0.5, 0.25]})"));
    CHECK(c.P3 == 0.25);
    CHECK(c.provenance == ConicProvenance::User);
    CHECK_THROWS_AS(conic_from_json(Json::parse(R"({"P": [1.0, 0.5]})")), FormatError);
    CHECK_THROWS_AS(conic_from_json(Json::parse(R"({"P": [0.0, 0.5, 0.1]})")), ParameterError);
}

TEST_CASE("report JSON and CSV carry the same numbers") {
    VerificationReport r;
    r.tool_version = std::string(kToolVersion);
    r.restrictions = {"a, with comma"};
    PointReport p{0.8, 1.0, 0.5, conic_coefficients(1.0, 0.5), {}};
    ClaimRecord rec;
    rec.claim = "h2-bound";
    rec.anchor = "x";
    rec.bound = 1.0 / 7.0;
    rec.oracle = std::sqrt(2.0) / 10.0;
    rec.slack = *rec.bound - *rec.oracle;
    rec.argmax = "B1=1, x=0";
    rec.extras = {{"t", std::numbers::pi}};
    p.records.push_back(rec);
    ClaimRecord missing;
    missing.claim = "conic-input";
    missing.sense = BoundSense::Input;
    missing.status = ClaimStatus::ReconstructedInputMissing;
    p.records.push_back(missing);
    r.points.push_back(p);

    const Json j = report_to_json(r);
    CHECK(j["tool"]["version"] == "1.0.0");
    CHECK(j["header"]["restrictions"][0] == "a, with comma");
    REQUIRE(j["records"].size() == 2);
    CHECK(j["records"][1]["bound"].is_null());
    CHECK(j["records"][1]["status"] == "reconstructed-input-missing");

    std::ostringstream csv;
    write_report_csv(r, csv);
    std::istringstream in(csv.str());
    std::string header, row;
    std::getline(in, header);
    CHECK(header == report_csv_header());
    std::getline(in, row);
    const auto fields = split(row);
    const auto names = split(header);
    REQUIRE(fields.size() == names.size());
    const auto& jr = j["records"][0];
    for (const char* key : {"bound", "oracle", "slack", "q", "k", "alpha"}) {
        const auto it = std::find(names.begin(), names.end(), key);
        const std::string cell = fields[it - names.begin()];
        CHECK(std::stod(cell) == jr[key].get<double>());
    }
    CHECK(std::stod(fields[3]) == jr["P"][0].get<double>());
    CHECK(fields.back() == "t=" + format12(std::numbers::pi));
}
