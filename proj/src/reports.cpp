#include "pencil5/reports.hpp"

#include <sstream>

namespace pencil5 {

using nlohmann::ordered_json;

std::string to_string(FibreClass c) {
    switch (c) {
        case FibreClass::Nontrigonal: return "nontrigonal";
        case FibreClass::Trigonal: return "trigonal";
        case FibreClass::Degenerate: return "degenerate";
    }
    return "?";
}

std::string to_string(SmoothStatus s) {
    switch (s) {
        case SmoothStatus::Certified: return "certified";
        case SmoothStatus::NotCertified: return "not-certified";
        case SmoothStatus::Skipped: return "skipped";
    }
    return "?";
}

ordered_json to_json(const FibreReport& r) {
    ordered_json j;
    j["schema"] = kFibreReportSchema;
    j["point"] = {r.point_t0, r.point_t1};
    j["quadric_dim"] = r.quadric_dim;
    j["cubic_dim"] = r.cubic_dim;
    j["mu_rank"] = r.mu_rank;
    j["coker_dim"] = r.coker_dim;
    j["classification"] = to_string(r.classification);
    if (r.classification == FibreClass::Degenerate) j["degenerate_reason"] = r.degenerate_reason;
    j["smooth"] = to_string(r.smooth);
    j["hilbert"] = r.hilbert;
    return j;
}

ordered_json to_json(const InvariantsReport& r) {
    ordered_json j;
    j["genus"] = r.genus;
    j["base_genus"] = r.base_genus;
    j["p_g"] = r.p_g;
    j["chi_f"] = r.chi_f;
    j["K_f_squared"] = r.K_f_squared;
    j["e_f"] = r.e_f;
    j["fit_window"] = r.fit_window;
    j["fit_residuals"] = r.fit_residuals;
    j["h_values"] = r.h_values;
    j["regularity_crosscheck"] = r.regularity_crosscheck;
    return j;
}

ordered_json to_json(const TrigonalLocusReport& r) {
    ordered_json j;
    j["last_invariant_factor"] = r.last_invariant_factor;
    j["chart_radical"] = r.chart_radical;
    j["invariant_factors"] = r.invariant_factors;
    j["chart_rational_roots"] = r.chart_rational_roots;
    j["infinity_trigonal"] = r.infinity_trigonal;
    j["N"] = r.n_trigonal;
    j["torsion_length"] = r.torsion_length;
    return j;
}

ordered_json to_json(const RelationReport& r) {
    ordered_json j;
    j["lhs"] = r.lhs;
    j["multipliers"] = r.multipliers;
    j["verified"] = r.verified;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

ordered_json to_json(const SlopeReport& r) {
    ordered_json j;
    j["schema"] = kSlopeReportSchema;
    ordered_json m;
    m["family"] = r.model.family;
    if (r.model.a >= 0) m["a"] = r.model.a;
    if (r.model.d >= 0) m["d"] = r.model.d;
    m["seed"] = r.model.seed;
    m["mode"] = r.model.mode;
    m["fibre_weights"] = r.model.fibre_weights;
    m["q_bidegrees"] = r.model.q_bidegrees;
    if (r.model.expected_pg >= 0) m["expected_pg"] = r.model.expected_pg;
    j["model"] = m;
    j["invariants"] = to_json(r.invariants);
    j["trigonal_locus"] = to_json(r.locus);
    ordered_json fibres = ordered_json::array();
    for (const auto& f : r.fibres) fibres.push_back(to_json(f));
    j["fibres"] = fibres;
    ordered_json rels = ordered_json::array();
    for (const auto& rel : r.relations) rels.push_back(to_json(rel));
    j["relations"] = rels;
    j["warnings"] = r.warnings;
    j["hypotheses_ok"] = r.hypotheses_ok;
    j["verdict"] = r.verdict;
    j["identity"] = r.identity;
    if (!r.dual_modes.empty()) {
        j["dual_modes"] = r.dual_modes;
        j["dual_agreement"] = r.dual_agreement;
    }
    return j;
}

std::string integer_signature(const SlopeReport& r) {
    std::ostringstream s;
    const auto& inv = r.invariants;
    s << "pg=" << inv.p_g << ";chi=" << inv.chi_f << ";K2=" << inv.K_f_squared << ";ef=" << inv.e_f << ";h=";
    for (long h : inv.h_values) s << h << ",";
    s << ";win=";
    for (int w : inv.fit_window) s << w << ",";
    s << ";reg=" << inv.regularity_crosscheck;
    s << ";N=" << r.locus.n_trigonal << ";tors=" << r.locus.torsion_length
      << ";inf=" << r.locus.infinity_trigonal;
    s << ";fibres=";
    for (const auto& f : r.fibres)
        s << "[" << f.quadric_dim << "," << f.cubic_dim << "," << f.mu_rank << "," << f.coker_dim << ","
          << to_string(f.classification) << "]";
    s << ";verdict=" << r.verdict << ";hyp=" << r.hypotheses_ok;
    return s.str();
}

} // namespace pencil5
