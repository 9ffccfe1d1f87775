#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "morse/complex.hpp"

namespace morse {

using EdgeId = std::uint32_t;

/// Covering pair, stored coface -> facet as in the Hasse diagram.
struct HasseEdge {
    SimplexId upper;
    SimplexId lower;

    friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

/// Covering graph of the face poset. Edges are sorted by (upper, lower), so the
/// facet edges of one simplex, and all edges of one d-interface, are
/// contiguous id ranges.
class HasseDiagram {
public:
    explicit HasseDiagram(SimplicialComplex k);

    const SimplicialComplex& complex() const noexcept { return complex_; }
    std::size_t num_nodes() const noexcept { return complex_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    std::span<const HasseEdge> edges() const noexcept { return edges_; }
    const HasseEdge& edge(EdgeId e) const { return edges_.at(e); }

    /// Edges from `upper` down to each of its facets.
    IdRange facet_edges(SimplexId upper) const;
    /// Edges from each coface of `lower` down to it, by increasing coface id.
    std::span<const EdgeId> cofacet_edges(SimplexId lower) const;

    /// All edges whose upper end has dimension d. Empty when d is out of range.
    IdRange interface_edges(int d) const;

    std::optional<EdgeId> find_edge(SimplexId lower, SimplexId upper) const;

private:
    SimplicialComplex complex_;
    std::vector<HasseEdge> edges_;
    std::vector<EdgeId> first_facet_edge_;
    std::vector<std::uint32_t> cofacet_offset_;
    std::vector<EdgeId> cofacet_edges_;
};

HasseDiagram hasse(const SimplicialComplex& k);

/// A matched covering pair, lower a facet of upper.
struct Pair {
    SimplexId lower;
    SimplexId upper;

    friend bool operator==(const Pair&, const Pair&) = default;
    friend auto operator<=>(const Pair&, const Pair&) = default;
};

/// Partial matching on covering pairs. Every simplex is in at most one pair.
class Matching {
public:
    explicit Matching(std::size_t num_simplices = 0) : mate_(num_simplices, kNoSimplex) {}

    /// Throws Error when the pair is not a covering pair of k or reuses a
    /// simplex.
    static Matching from_pairs(const SimplicialComplex& k, std::span<const Pair> pairs);

    /// Adds a covering pair; same checks as from_pairs.
    void add(const SimplicialComplex& k, Pair p);
    /// Adds without checking that p is a covering pair (both ids must be free).
    void add_unchecked(Pair p);
    void remove(Pair p);

    std::size_t size() const noexcept { return size_; }
    std::size_t num_simplices() const noexcept { return mate_.size(); }
    bool is_matched(SimplexId id) const { return mate_.at(id) != kNoSimplex; }
    SimplexId mate(SimplexId id) const { return mate_.at(id); }
    bool contains(Pair p) const {
        return p.lower < mate_.size() && mate_[p.lower] == p.upper && p.upper < mate_.size();
    }

    /// Pairs sorted by lower id.
    std::vector<Pair> pairs() const;

    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<SimplexId> mate_;
    std::size_t size_ = 0;
};

/// Hasse diagram with one orientation bit per edge: matched edges point up
/// (facet -> coface), all others down.
class OrientedHasse {
public:
    /// Throws Error when m was built for a different complex or holds a pair
    /// that is not a Hasse edge.
    OrientedHasse(HasseDiagram h, const Matching& m);

    const HasseDiagram& diagram() const noexcept { return hasse_; }
    const SimplicialComplex& complex() const noexcept { return hasse_.complex(); }

    bool is_up(EdgeId e) const { return up_.at(e) != 0; }
    /// Edge of the up-pair that `id` belongs to, if any.
    std::optional<EdgeId> up_edge_of(SimplexId id) const;
    std::size_t num_up() const noexcept { return num_up_; }

    /// Reverses an up-edge, unmatching both ends.
    void make_down(EdgeId e);

    /// The matching formed by the current up-edges.
    Matching matching() const;

private:
    HasseDiagram hasse_;
    std::vector<std::uint8_t> up_;
    std::vector<EdgeId> up_edge_;  // per simplex, kNoEdge if unmatched
    std::size_t num_up_ = 0;
};

OrientedHasse orient(const HasseDiagram& h, const Matching& m);

/// Nodes of dimension d and d-1 and the edges between them.
struct InterfaceSubgraph {
    int d = 0;
    std::vector<SimplexId> nodes;
    std::vector<EdgeId> edges;
};

/// Throws Error unless 1 <= d <= dim K.
InterfaceSubgraph d_interface(const HasseDiagram& h, int d);
InterfaceSubgraph d_interface(const OrientedHasse& h, int d);

/// Tie rule of max_cardinality_matching, echoed in reports.
inline constexpr std::string_view kMatchingScanOrder =
    "kuhn: even dimensions descending, canonical ids ascending, facets before cofacets";

/// Maximum-cardinality matching of the (bipartite) Hasse diagram via
/// augmenting paths. Deterministic; see kMatchingScanOrder.
Matching max_cardinality_matching(const HasseDiagram& h);

}  // namespace morse
