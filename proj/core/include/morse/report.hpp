#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morse/homology.hpp"
#include "morse/morse.hpp"

namespace morse {

struct Report {
    std::string algorithm;
    std::string input;
    std::size_t simplices = 0;
    int dimension = 0;
    std::size_t matched_pairs = 0;
    CriticalProfile critical;
    std::int64_t euler_characteristic = 0;
    std::optional<BettiVector> betti;
    std::size_t max_matching_size = 0;
    std::optional<std::size_t> oracle_pairs;
    std::optional<bool> optimal;
    bool acyclic = false;
    std::vector<std::string> witness;
    bool morse_inequalities = true;
    std::optional<Vertex> canonicalized_at;
    std::optional<std::uint64_t> seed;
    std::optional<double> elapsed_ms;

    /// critical.total() + 2 * matched_pairs == simplices.
    bool consistent() const { return critical.total() + 2 * matched_pairs == simplices; }
    bool euler_ok() const { return critical.alternating_sum() == euler_characteristic; }
    /// matched pairs / maximum matching size; 1 when the maximum is 0.
    double ratio_vs_max_matching() const;
    std::optional<double> ratio_vs_oracle() const;
};

/// Fills every field derivable from k and m. The caller sets algorithm, input,
/// oracle data, seed and timing.
Report make_report(const SimplicialComplex& k, const MorseMatching& m, bool with_betti = true);

/// Stable key order. elapsed_ms is omitted when include_timing is false.
std::string report_json(const Report& r, bool include_timing = true, int indent = 2);
std::string report_text(const Report& r, bool include_timing = true);

}  // namespace morse
