#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "morse/complex.hpp"
#include "morse/hasse.hpp"
#include "morse/homology.hpp"

namespace morse {

/// Outcome of an acyclicity check. When a cycle exists the witness lists it
/// as a1, b1, a2, b2, ..., ak, bk with (ai, bi) matched, b_i > a_{i+1} a
/// covering relation and bk > a1 closing the loop.
struct AcyclicityCertificate {
    bool acyclic = true;
    std::vector<SimplexId> witness;
};

/// Searches each d-interface of the oriented diagram for a directed cycle.
AcyclicityCertificate is_acyclic(const OrientedHasse& hm);
AcyclicityCertificate is_acyclic(const SimplicialComplex& k, const Matching& m);

/// A matching together with its checked acyclicity certificate.
class MorseMatching {
public:
    MorseMatching() = default;

    /// Runs the acyclicity check; never throws for cyclic input, the result
    /// simply is not certified.
    static MorseMatching certify(const SimplicialComplex& k, Matching m);

    const Matching& matching() const noexcept { return matching_; }
    const AcyclicityCertificate& certificate() const noexcept { return certificate_; }
    bool is_certified() const noexcept { return certified_ && certificate_.acyclic; }
    std::size_t size() const noexcept { return matching_.size(); }

private:
    Matching matching_;
    AcyclicityCertificate certificate_;
    bool certified_ = false;
};

/// Critical (unmatched) simplex counts c_0..c_D.
struct CriticalProfile {
    std::vector<std::size_t> c;

    std::size_t operator[](std::size_t i) const { return i < c.size() ? c[i] : 0; }
    std::size_t total() const;
    std::int64_t alternating_sum() const;

    friend bool operator==(const CriticalProfile&, const CriticalProfile&) = default;
};

CriticalProfile critical_profile(const SimplicialComplex& k, const Matching& m);

struct MorseInequalityReport {
    bool holds = true;
    /// d with sum_{i<=d} (-1)^(d-i) c_i < sum_{i<=d} (-1)^(d-i) beta_i.
    std::vector<int> violated_alternating;
    /// i with c_i < beta_i.
    std::vector<int> violated_weak;
};

MorseInequalityReport check_morse_inequalities(const CriticalProfile& c, const BettiVector& beta);

/// Vertices of K and the edges of K that are not matched upward to a triangle.
struct VertexGraph {
    struct Edge {
        SimplexId edge;
        SimplexId a;
        SimplexId b;
    };
    std::vector<SimplexId> vertices;
    std::vector<Edge> edges;

    bool is_connected() const;
};

/// Throws Error("connected complex required") for a disconnected K.
VertexGraph gamma_graph(const SimplicialComplex& k, const Matching& m);

/// Replaces the vertex-edge pairs of m by a depth-first spanning tree of
/// gamma_graph(k, m) rooted at p, so p becomes the only critical vertex.
/// Pairs in dimensions >= 2 are kept as they are.
/// Throws for a disconnected complex, an uncertified matching or an unknown p.
MorseMatching canonicalize_single_critical_vertex(const SimplicialComplex& k,
                                                  const MorseMatching& m, Vertex p);

/// Elementary collapses, in the order they are applied.
using CollapseSequence = std::vector<Pair>;

/// Orders the pairs of m covering K \ L into elementary collapses, greedily
/// taking the free pair with the smallest coface id.
/// Errors: "subcomplex not closed", "not matched away" (K \ L is not exactly
/// a union of pairs), "acyclicity violated" (no free pair left).
CollapseSequence collapse_sequence(const SimplicialComplex& k, const Matching& m,
                                   std::span<const SimplexId> keep);
CollapseSequence collapse_sequence(const SimplicialComplex& k, const Matching& m,
                                   const SimplicialComplex& l);

}  // namespace morse
