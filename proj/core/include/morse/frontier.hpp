#pragma once

#include <cstdint>
#include <vector>

#include "morse/hasse.hpp"
#include "morse/morse.hpp"

namespace morse {

struct OrientedEdge {
    EdgeId id;
    SimplexId lower;
    SimplexId upper;
    bool up;
};

/// The oriented edges between beta and its facets. Throws Error for a vertex.
std::vector<OrientedEdge> facet_edges(const OrientedHasse& hm, SimplexId beta);

/// Up-edges (alpha', beta') with alpha' a facet of beta other than alpha,
/// where chi = (alpha, beta). Ordered by alpha'. Throws Error unless chi is up.
std::vector<EdgeId> leading_up_edges(const OrientedHasse& hm, EdgeId chi);

/// Forward / backward / frontier counts after one classification.
struct ClassificationStep {
    std::size_t forward = 0;
    std::size_t backward = 0;
    std::size_t frontier = 0;
};

/// Edges claimed by one breadth-first component, all inside the d-interface.
struct EdgeComponent {
    int d = 0;
    EdgeId seed = 0;
    std::vector<EdgeId> edges;
    std::vector<EdgeId> forward;
    std::vector<EdgeId> backward;
    std::vector<ClassificationStep> trace;
};

/// Working orientation shared by successive components. Edges handed to a
/// component are consumed and never examined again.
class FrontierWorkspace {
public:
    explicit FrontierWorkspace(OrientedHasse hm);

    /// Grows the component seeded at an unconsumed up-edge. Leading up-edges
    /// are visited breadth first; each is kept (forward) when adding its
    /// facet edges to the component leaves it acyclic, and reversed
    /// (backward) otherwise. Throws Error when seed is not an available up-edge.
    EdgeComponent bfs_component(EdgeId seed);

    bool consumed(EdgeId e) const { return owner_.at(e) != 0; }
    /// 1-based index of the component that claimed e, 0 if none did.
    std::uint32_t owner(EdgeId e) const { return owner_.at(e); }
    const OrientedHasse& oriented() const noexcept { return hm_; }
    OrientedHasse release() && { return std::move(hm_); }

private:
    void claim_facet_edges(EdgeComponent& c, SimplexId beta);
    bool closes_cycle(SimplexId beta, SimplexId alpha);

    OrientedHasse hm_;
    std::vector<std::uint32_t> owner_;
    std::uint32_t current_ = 0;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
};

/// One component on a fresh workspace; reversals are written back to hm.
EdgeComponent bfs_component(OrientedHasse& hm, EdgeId seed);

struct FrontierResult {
    MorseMatching morse;
    std::vector<EdgeComponent> components;
    /// Edges no component claimed, kept with their final orientation.
    std::vector<EdgeId> residual_edges;
    Matching source;
    std::size_t source_matching_size = 0;
};

/// Maximum matching followed by breadth-first components seeded at the
/// up-edge of smallest coface id. Keeps at least (D+1)/(D^2+D+1) of the
/// maximum matching and always yields an acyclic matching.
FrontierResult frontier_edges_matching(const SimplicialComplex& k);

}  // namespace morse
