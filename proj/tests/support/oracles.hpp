#pragma once

// Test-only reference implementations. Each works from first principles on
// raw simplex sets and shares no code path with the library algorithm it
// checks, only the SimplicialComplex container.

#include <cstdint>
#include <string>
#include <vector>

#include "morse/complex.hpp"
#include "morse/hasse.hpp"

namespace oracle {

/// Maximum matching of the covering graph by bitmask dynamic programming.
/// Requires k.size() <= 20.
std::size_t brute_force_max_matching(const morse::SimplicialComplex& k);

/// Whether the whole oriented Hasse diagram (all dimensions at once) has a
/// directed cycle, via transitive closure. Pairs are taken from `m`.
bool naive_has_cycle(const morse::SimplicialComplex& k, const morse::Matching& m);

/// GF(2) rank by enumerating the span of the rows (each row a bitmask).
std::size_t span_rank(const std::vector<std::uint64_t>& rows);

/// Betti numbers over GF(2) built on span_rank. Requires every dimension to
/// have at most 64 simplices.
std::vector<std::size_t> betti_by_span(const morse::SimplicialComplex& k);

/// Smallest number of critical simplices over every acyclic matching, by
/// exhaustive enumeration with naive_has_cycle. Requires k.size() <= 16.
std::size_t brute_force_min_critical(const morse::SimplicialComplex& k);

/// Replays a collapse sequence on the explicit simplex set of k, checking
/// before each step that both simplices are present, lower is a facet of
/// upper, and upper is the only present simplex strictly containing lower.
/// On success `remaining` holds what is left; on failure `error` says why.
struct ReplayResult {
    bool ok = false;
    std::string error;
    std::vector<morse::Simplex> remaining;
};
ReplayResult replay_collapses(const morse::SimplicialComplex& k, const std::vector<morse::Pair>& steps);

/// Number of (face, coface) pairs where face lies in exactly one other simplex.
std::size_t count_free_faces(const morse::SimplicialComplex& k);

/// Every non-empty proper vertex subset of every simplex is present.
bool downward_closed(const morse::SimplicialComplex& k);

}  // namespace oracle
