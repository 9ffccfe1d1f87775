#include "morse/frontier.hpp"

#include <deque>

namespace morse {

namespace {

// Up-edges leading from chi; `owner` (when non-null) hides consumed edges.
std::vector<EdgeId> leading_from(const OrientedHasse& hm, EdgeId chi,
                                 const std::vector<std::uint32_t>* owner) {
    const auto& h = hm.diagram();
    const HasseEdge& c = h.edge(chi);
    std::vector<EdgeId> out;
    for (EdgeId e : h.facet_edges(c.upper).ids()) {
        const SimplexId alpha = h.edge(e).lower;
        if (alpha == c.lower) continue;
        const auto up = hm.up_edge_of(alpha);
        if (!up || h.edge(*up).lower != alpha) continue;
        if (owner && (*owner)[*up] != 0) continue;
        out.push_back(*up);
    }
    return out;
}

}  // namespace

std::vector<OrientedEdge> facet_edges(const OrientedHasse& hm, SimplexId beta) {
    const auto& h = hm.diagram();
    if (beta >= h.num_nodes()) throw Error("unknown simplex");
    if (hm.complex().dim(beta) < 1) throw Error("a vertex has no facet edges");
    std::vector<OrientedEdge> out;
    for (EdgeId e : h.facet_edges(beta).ids())
        out.push_back({e, h.edge(e).lower, beta, hm.is_up(e)});
    return out;
}

std::vector<EdgeId> leading_up_edges(const OrientedHasse& hm, EdgeId chi) {
    if (chi >= hm.diagram().num_edges() || !hm.is_up(chi)) throw Error("not an up-edge");
    return leading_from(hm, chi, nullptr);
}

FrontierWorkspace::FrontierWorkspace(OrientedHasse hm)
    : hm_(std::move(hm)),
      owner_(hm_.diagram().num_edges(), 0),
      mark_(hm_.diagram().num_nodes(), 0) {}

void FrontierWorkspace::claim_facet_edges(EdgeComponent& c, SimplexId beta) {
    for (EdgeId e : hm_.diagram().facet_edges(beta).ids()) {
        if (owner_[e] != 0) throw Error("facet edge claimed twice");
        owner_[e] = current_;
        c.edges.push_back(e);
    }
}

// Does C together with facetEdges(beta) contain a directed cycle? Any new
// cycle runs through the up-edge alpha -> beta, so search from beta for alpha.
bool FrontierWorkspace::closes_cycle(SimplexId beta, SimplexId alpha) {
    const auto& h = hm_.diagram();
    ++stamp_;
    std::vector<SimplexId> stack{beta};
    mark_[beta] = stamp_;
    while (!stack.empty()) {
        const SimplexId top = stack.back();
        stack.pop_back();
        // top is a d-simplex whose facet edges are in the search graph.
        for (EdgeId e : h.facet_edges(top).ids()) {
            if (hm_.is_up(e)) continue;
            const SimplexId low = h.edge(e).lower;
            if (low == alpha) return true;
            if (mark_[low] == stamp_) continue;
            mark_[low] = stamp_;
            const auto up = hm_.up_edge_of(low);
            if (!up || h.edge(*up).lower != low || owner_[*up] != current_) continue;
            const SimplexId next = h.edge(*up).upper;
            if (mark_[next] == stamp_) continue;
            mark_[next] = stamp_;
            stack.push_back(next);
        }
    }
    return false;
}

EdgeComponent FrontierWorkspace::bfs_component(EdgeId seed) {
    const auto& h = hm_.diagram();
    if (seed >= h.num_edges() || !hm_.is_up(seed) || owner_[seed] != 0)
        throw Error("seed is not an available up-edge");
    ++current_;

    EdgeComponent c;
    c.seed = seed;
    c.d = hm_.complex().dim(h.edge(seed).upper);

    claim_facet_edges(c, h.edge(seed).upper);
    c.forward.push_back(seed);
    c.trace.push_back({1, 0, 0});

    std::deque<EdgeId> queue{seed};
    while (!queue.empty()) {
        const EdgeId chi0 = queue.front();
        queue.pop_front();
        const auto leading = leading_from(hm_, chi0, &owner_);
        std::size_t frontier = leading.size();
        for (EdgeId chi : leading) {
            const HasseEdge edge = h.edge(chi);
            if (closes_cycle(edge.upper, edge.lower)) {
                hm_.make_down(chi);
                claim_facet_edges(c, edge.upper);
                c.backward.push_back(chi);
            } else {
                claim_facet_edges(c, edge.upper);
                c.forward.push_back(chi);
                queue.push_back(chi);
            }
            --frontier;
            c.trace.push_back({c.forward.size(), c.backward.size(), frontier});
        }
    }
    return c;
}

EdgeComponent bfs_component(OrientedHasse& hm, EdgeId seed) {
    FrontierWorkspace ws(hm);
    auto c = ws.bfs_component(seed);
    hm = std::move(ws).release();
    return c;
}

FrontierResult frontier_edges_matching(const SimplicialComplex& k) {
    HasseDiagram h(k);
    FrontierResult result;
    result.source = max_cardinality_matching(h);
    result.source_matching_size = result.source.size();

    FrontierWorkspace ws(OrientedHasse(h, result.source));
    for (SimplexId beta = 0; beta < k.size(); ++beta) {
        const auto up = ws.oriented().up_edge_of(beta);
        if (!up || h.edge(*up).upper != beta || ws.consumed(*up)) continue;
        result.components.push_back(ws.bfs_component(*up));
    }
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        if (!ws.consumed(e)) result.residual_edges.push_back(e);

    result.morse = MorseMatching::certify(k, ws.oriented().matching());
    return result;
}

}  // namespace morse
