#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "morse/morse.hpp"

namespace morse {

/// Exponential-time ground truth for small complexes. Budgets count search
/// node expansions, so results do not depend on machine speed.

inline constexpr std::size_t kOracleSizeLimit = 40;
inline constexpr std::uint64_t kDefaultOracleBudget = 2'000'000;

struct OracleOptions {
    /// Complexes larger than size_limit are refused unless a budget is given.
    std::optional<std::uint64_t> budget;
    std::size_t size_limit = kOracleSizeLimit;
};

struct OracleResult {
    MorseMatching morse;
    /// False when the budget ran out before the incumbent was proven optimal.
    bool optimal = false;
    /// Proven lower bound on the number of critical simplices.
    std::size_t critical_lower_bound = 0;
    std::uint64_t expansions = 0;
};

/// Maximum acyclic matching by branch-and-bound. The incumbent starts from the
/// best heuristic; the critical count is bounded below by the Morse
/// inequalities, parity, and a bipartite matching bound on undecided simplices.
OracleResult optimal_morse_matching(const SimplicialComplex& k, const OracleOptions& opts = {});

enum class Verdict { no, yes, unknown };

struct CollapsibilityResult {
    Verdict collapsible = Verdict::unknown;
    /// A collapse sequence to one vertex when collapsible == yes.
    std::vector<Pair> sequence;
    std::uint64_t expansions = 0;
};

/// Backtracking search over elementary collapse sequences. Complexes of
/// dimension <= 2 are decided greedily, which is exact there.
CollapsibilityResult is_collapsible(const SimplicialComplex& k,
                                    std::uint64_t budget = kDefaultOracleBudget);

struct ErasabilityResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    /// Triangles whose removal leaves a complex collapsing to dimension <= 1;
    /// has `upper` elements.
    std::vector<SimplexId> removed;
    std::uint64_t expansions = 0;

    bool exact() const noexcept { return lower == upper; }
};

/// Smallest number of triangles to delete from a 2-complex so that the rest
/// collapses onto a graph. Throws Error unless dim K == 2.
ErasabilityResult erasability(const SimplicialComplex& k,
                              std::uint64_t budget = kDefaultOracleBudget);

/// Triangles left after greedily collapsing every free edge of a 2-complex
/// (the same set for every collapse order).
std::vector<SimplexId> two_core(const SimplicialComplex& k);

}  // namespace morse
