#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "symq/classes.hpp"
#include "symq/verify.hpp"

namespace symq {

using Json = nlohmann::ordered_json;

/// x rounded to 12 significant digits; non-finite values pass through.
double round12(double x);
/// %.12g formatting used by every emitter except function files.
std::string format12(double x);

/// {"order": N, "coeffs": [[re, im], ...]} with coeffs[0] = a_1.
/// Throws FormatError on shape errors, non-finite entries, a length that
/// disagrees with "order", or a_1 != 1.
TruncatedSeries function_from_json(const Json& j);
TruncatedSeries read_function_file(const std::string& path);
/// Full precision (shortest round-trip form), unlike every other emitter.
Json function_to_json(const TruncatedSeries& f);

/// Derivative series as {"kind": "derivative", "order": N-1, "coeffs": [...]},
/// coeffs[0] being the constant term.
Json derivative_to_json(const TruncatedSeries& d);

/// {certified, margin, witness: [re, im] | null}
Json verdict_to_json(const MembershipVerdict& v);

/// {"P": [P1, P2, P3]}; the result has provenance User and is validated.
ConicCoefficients conic_from_json(const Json& j);
ConicCoefficients read_conic_file(const std::string& path);

Json report_to_json(const VerificationReport& r);
/// One row per record under a fixed header; numeric fields agree with the
/// JSON form digit for digit.
void write_report_csv(const VerificationReport& r, std::ostream& out);
std::string report_csv_header();

}  // namespace symq
