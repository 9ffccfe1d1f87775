#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "morse/morse.hpp"

namespace morse {

struct HeuristicOptions {
    /// When set, ties among candidate pairs / critical simplices are broken
    /// uniformly at random under this seed instead of by smallest id.
    std::optional<std::uint64_t> tie_seed;
};

/// One deletion performed by a heuristic: a matched pair, or a single
/// critical simplex (upper == kNoSimplex).
struct HeuristicStep {
    SimplexId lower;
    SimplexId upper;

    bool is_critical() const noexcept { return upper == kNoSimplex; }
};

struct HeuristicResult {
    MorseMatching morse;
    std::vector<HeuristicStep> steps;
};

/// Repeatedly pairs a simplex beta having exactly one remaining facet alpha
/// with that facet; when no such beta is left, deletes a lowest-dimensional
/// remaining simplex as critical.
HeuristicResult coreduction_matching(const SimplicialComplex& k, const HeuristicOptions& opts = {});

/// Repeatedly pairs a simplex alpha having exactly one remaining coface beta
/// with that coface; when none is left, deletes a highest-dimensional
/// remaining simplex as critical.
HeuristicResult reduction_matching(const SimplicialComplex& k, const HeuristicOptions& opts = {});

}  // namespace morse
