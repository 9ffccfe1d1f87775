#include "morse/report.hpp"

#include <sstream>

#include "json.hpp"
#include "morse/hasse.hpp"

namespace morse {

double Report::ratio_vs_max_matching() const {
    if (max_matching_size == 0) return 1.0;
    return static_cast<double>(matched_pairs) / static_cast<double>(max_matching_size);
}

std::optional<double> Report::ratio_vs_oracle() const {
    if (!oracle_pairs) return std::nullopt;
    if (*oracle_pairs == 0) return 1.0;
    return static_cast<double>(matched_pairs) / static_cast<double>(*oracle_pairs);
}

Report make_report(const SimplicialComplex& k, const MorseMatching& m, bool with_betti) {
    Report r;
    r.simplices = k.size();
    r.dimension = k.dimension();
    r.matched_pairs = m.size();
    r.critical = critical_profile(k, m.matching());
    r.euler_characteristic = euler_characteristic(k);
    if (with_betti) {
        r.betti = betti_gf2(k);
        r.morse_inequalities = check_morse_inequalities(r.critical, *r.betti).holds;
    }
    r.max_matching_size = max_cardinality_matching(hasse(k)).size();
    r.acyclic = m.is_certified();
    for (SimplexId s : m.certificate().witness) r.witness.push_back(k.simplex(s).to_string());
    return r;
}

std::string report_json(const Report& r, bool include_timing, int indent) {
    nlohmann::ordered_json j;
    j["algorithm"] = r.algorithm;
    j["input"] = r.input;
    j["simplices"] = r.simplices;
    j["dimension"] = r.dimension;
    j["matched_pairs"] = r.matched_pairs;
    j["critical"] = r.critical.c;
    j["critical_total"] = r.critical.total();
    j["euler_characteristic"] = r.euler_characteristic;
    j["euler_consistent"] = r.euler_ok();
    if (r.betti) {
        j["betti"] = r.betti->beta;
        j["morse_inequalities"] = r.morse_inequalities;
    }
    j["max_matching"] = r.max_matching_size;
    j["matching_scan_order"] = std::string(kMatchingScanOrder);
    j["ratio_vs_max_matching"] = r.ratio_vs_max_matching();
    if (r.oracle_pairs) {
        j["oracle_pairs"] = *r.oracle_pairs;
        j["ratio_vs_oracle"] = *r.ratio_vs_oracle();
    }
    if (r.optimal) j["optimal"] = *r.optimal;
    j["acyclic"] = r.acyclic;
    if (!r.acyclic) j["witness"] = r.witness;
    if (r.canonicalized_at) j["canonicalized_at"] = *r.canonicalized_at;
    if (r.seed) j["seed"] = *r.seed;
    j["consistent"] = r.consistent();
    if (include_timing && r.elapsed_ms) j["elapsed_ms"] = *r.elapsed_ms;
    return j.dump(indent);
}

std::string report_text(const Report& r, bool include_timing) {
    std::ostringstream out;
    auto list = [&](const auto& xs) {
        out << '(';
        for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
        out << ')';
    };
    out << "algorithm       " << r.algorithm << '\n';
    if (!r.input.empty()) out << "input           " << r.input << '\n';
    out << "simplices       " << r.simplices << " (dimension " << r.dimension << ")\n";
    out << "matched pairs   " << r.matched_pairs << " of max matching " << r.max_matching_size << '\n';
    out << "critical        ";
    list(r.critical.c);
    out << " total " << r.critical.total() << '\n';
    out << "euler           " << r.euler_characteristic << (r.euler_ok() ? "" : " (MISMATCH)") << '\n';
    if (r.betti) {
        out << "betti (GF2)     ";
        list(r.betti->beta);
        out << (r.morse_inequalities ? "" : " (Morse inequalities VIOLATED)") << '\n';
    }
    if (r.oracle_pairs) out << "oracle pairs    " << *r.oracle_pairs << '\n';
    if (r.optimal) out << "optimal         " << (*r.optimal ? "yes" : "no (budget exhausted)") << '\n';
    out << "acyclic         " << (r.acyclic ? "yes" : "no") << '\n';
    if (!r.acyclic) {
        out << "witness cycle   ";
        for (std::size_t i = 0; i < r.witness.size(); ++i) out << (i ? " " : "") << r.witness[i];
        out << '\n';
    }
    if (r.canonicalized_at) out << "critical vertex " << *r.canonicalized_at << '\n';
    if (r.seed) out << "seed            " << *r.seed << '\n';
    if (include_timing && r.elapsed_ms) out << "elapsed         " << *r.elapsed_ms << " ms\n";
    return out.str();
}

}  // namespace morse
