#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symq/classes.hpp"
#include "symq/hankel.hpp"

namespace symq {

/// Sampling of the (B1, x = rho e^{i phi}, zeta) parameter box.
///
/// B1 and rho are sampled on closed uniform grids (endpoints included), phi
/// and the zeta angle on nPhi / nZeta equally spaced angles from 0, and zeta
/// additionally over `zeta_radii`. Each refinement level re-samples a box of
/// one current step around the running argmax with 8x the density.
struct OracleGrid {
    int nB = 101;
    int nRho = 41;
    int nPhi = 64;
    int nZeta = 32;
    int refinement = 2;

    double b_min = 0.0;
    double b_max = 2.0;
    double rho_min = 0.0;
    double rho_max = 1.0;
    std::vector<double> zeta_radii{0.5, 1.0};

    /// Throws ParameterError for counts below 8 or a box outside the
    /// parameter domain.
    void validate() const;
};

struct OracleResult {
    double max = 0.0;
    SchwarzTriple argmax{0.0, 0.0, 0.0};
    /// Running maximum after the coarse pass and after each refinement level.
    std::vector<double> level_max;
};

/// Worker count from SYMQ_THREADS, else the hardware concurrency.
int default_thread_count();

/// max |a2 a4 - a3^2| over the sampled parametrization. Throws
/// std::logic_error if a sample yields |B2| or |B3| above 2 (+1e-12).
OracleResult oracle_h2_max(const ConicCoefficients& P, QParam q, const OracleGrid& g = {}, int threads = 0);

/// max |a3 - mu a2^2| over the sampled parametrization.
OracleResult oracle_fs_max(Complex mu, const ConicCoefficients& P, QParam q, const OracleGrid& g = {},
                           int threads = 0);

enum class Functional { H2, FeketeSzego };

/// Diagnostic: B1 = b e^{i theta} with B2, B3 rotated consistently, for
/// `phases` equally spaced theta. Returns the per-phase maxima; never used
/// for ledger status.
std::vector<double> oracle_phase_scan(Functional which, Complex mu, const ConicCoefficients& P, QParam q,
                                      const OracleGrid& g, int phases, int threads = 0);

enum class ClaimStatus { Verified, Violated, ReconstructedInput, ReconstructedInputMissing };
enum class BoundSense { Upper, Lower, Attained, Input };

std::string_view to_string(ClaimStatus s);
std::string_view to_string(BoundSense s);

struct ClaimRecord {
    std::string claim;
    std::string anchor;
    BoundSense sense = BoundSense::Upper;
    std::optional<double> bound;
    std::optional<double> oracle;
    std::optional<double> slack;
    ClaimStatus status = ClaimStatus::Verified;
    std::string argmax;
    std::vector<std::pair<std::string, double>> extras;
};

struct LedgerPoint {
    ClassParams params;
    std::optional<ConicCoefficients> user_conic;
};

struct PointReport {
    double q;
    double k;
    double alpha;
    std::optional<ConicCoefficients> conic;
    std::vector<ClaimRecord> records;
};

struct LedgerOptions {
    OracleGrid grid;
    DiskGrid disk = DiskGrid::standard();
    double tolerance = 1e-6;
    int order = 32;
    int threads = 0;
    /// Extra Fekete-Szego weights; the breakpoint mu* is always appended.
    std::vector<double> mus{0.0, 0.5, 1.0};
    int random_members = 256;
    std::uint64_t seed = 20170401;
};

struct VerificationReport {
    std::string tool_version;
    LedgerOptions options;
    std::vector<std::string> restrictions;
    std::vector<PointReport> points;

    bool has_violations() const;
    std::size_t record_count() const;
};

/// One record per claim per point. Status is violated iff slack < -tolerance.
VerificationReport run_ledger(std::span<const LedgerPoint> points, const LedgerOptions& options = {});

/// The acceptance grid {0.5, 0.8, 1} x {(0,0), (0,0.25), (1,0), (1,0.5)}.
std::vector<LedgerPoint> default_ledger_points();

inline constexpr std::string_view kToolVersion = "1.0.0";

}  // namespace symq
