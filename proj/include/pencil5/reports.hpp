#ifndef PENCIL5_REPORTS_HPP
#define PENCIL5_REPORTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace pencil5 {

inline constexpr const char* kSurfaceModelSchema = "pencil5/surface-model/v1";
inline constexpr const char* kFibreReportSchema = "pencil5/fibre-report/v1";
inline constexpr const char* kSlopeReportSchema = "pencil5/slope-report/v1";

enum class FibreClass { Nontrigonal, Trigonal, Degenerate };
std::string to_string(FibreClass c);

enum class SmoothStatus { Certified, NotCertified, Skipped };
std::string to_string(SmoothStatus s);

/// Per-fibre verification evidence at one base point.
struct FibreReport {
    std::string point_t0, point_t1;
    long quadric_dim = 0;
    long cubic_dim = 0;
    long mu_rank = 0;
    long coker_dim = 0;
    FibreClass classification = FibreClass::Degenerate;
    std::string degenerate_reason;
    SmoothStatus smooth = SmoothStatus::Skipped;
    std::vector<long> hilbert; // fibre Hilbert values at m = 1..4
};

/// Fundamental invariants extracted from the bigraded Hilbert fit.
struct InvariantsReport {
    int genus = 5;
    int base_genus = 0;
    long p_g = 0;
    long chi_f = 0;
    long K_f_squared = 0;
    long e_f = 0; // 12*chi_f - K_f^2 by Noether
    std::vector<int> fit_window;
    std::vector<long> fit_residuals;
    std::vector<long> h_values; // h(n) for n = 2..6
    bool regularity_crosscheck = false; // chi_f == 1 + p_g + 4
};

/// A linear-combination identity between a cubic generator and the quadrics.
struct RelationReport {
    std::string lhs;
    std::vector<std::string> multipliers;
    bool verified = false;
    std::string note;
};

/// Global trigonal locus data from the chart Smith form plus the infinity fibre.
struct TrigonalLocusReport {
    std::string last_invariant_factor;
    std::string chart_radical; // squarefree part of the last invariant factor
    std::vector<std::string> invariant_factors;
    std::vector<std::string> chart_rational_roots;
    bool infinity_trigonal = false;
    long n_trigonal = 0;
    long torsion_length = 0;
};

struct ModelSummary {
    std::string family; // example1 | example2 | example3 | custom
    long a = -1;        // example2 parameter, -1 when absent
    long d = -1;        // example3 parameter, -1 when absent
    std::uint64_t seed = 0;
    std::string mode;               // rational | prime:p | dualprime:p1,p2
    std::vector<long> fibre_weights; // chosen grading convention
    std::vector<std::string> q_bidegrees;
    long expected_pg = -1;
};

/// The full verdict on the slope equality K_f^2 = 4*chi_f + N.
struct SlopeReport {
    ModelSummary model;
    InvariantsReport invariants;
    TrigonalLocusReport locus;
    std::vector<FibreReport> fibres;
    std::vector<RelationReport> relations;
    std::vector<std::string> warnings;
    bool hypotheses_ok = true;
    bool verdict = false;
    std::string identity; // e.g. "41 = 4*10 + 1"

    // dual-prime cross-check metadata (empty / true when not in dual mode)
    std::string dual_modes;
    bool dual_agreement = true;
};

nlohmann::ordered_json to_json(const FibreReport& r);
nlohmann::ordered_json to_json(const InvariantsReport& r);
nlohmann::ordered_json to_json(const TrigonalLocusReport& r);
nlohmann::ordered_json to_json(const RelationReport& r);
nlohmann::ordered_json to_json(const SlopeReport& r);

/// Canonical string of every field-independent integer in a report; two
/// prime-field runs agree exactly iff their signatures match.
std::string integer_signature(const SlopeReport& r);

} // namespace pencil5

#endif
