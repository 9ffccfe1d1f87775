#include "morse/morse.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace morse {

namespace {

constexpr std::uint32_t kNotOnStack = std::numeric_limits<std::uint32_t>::max();

// Iterative three-colour DFS over one d-interface of the oriented diagram.
bool find_cycle_in_interface(const OrientedHasse& hm, int d, std::vector<std::uint8_t>& color,
                             std::vector<std::uint32_t>& stack_pos,
                             std::vector<SimplexId>& witness) {
    const auto& h = hm.diagram();
    const auto& k = hm.complex();
    const IdRange lower = k.of_dimension(d - 1);
    const IdRange upper = k.of_dimension(d);

    struct Frame {
        SimplexId node;
        EdgeId next;
    };
    std::vector<Frame> stack;

    auto first_edge = [&](SimplexId x) -> EdgeId {
        return upper.contains(x) ? h.facet_edges(x).first : 0;
    };

    for (IdRange part : {lower, upper})
        for (SimplexId x : part.ids()) color[x] = 0;

    for (IdRange part : {lower, upper}) {
        for (SimplexId root : part.ids()) {
            if (color[root] != 0) continue;
            color[root] = 1;
            stack_pos[root] = 0;
            stack.push_back({root, first_edge(root)});
            while (!stack.empty()) {
                Frame& top = stack.back();
                SimplexId next = kNoSimplex;
                if (upper.contains(top.node)) {
                    const IdRange fe = h.facet_edges(top.node);
                    while (top.next < fe.last && next == kNoSimplex) {
                        const EdgeId e = top.next++;
                        if (!hm.is_up(e)) next = h.edge(e).lower;
                    }
                } else if (top.next == 0) {
                    top.next = 1;
                    if (auto e = hm.up_edge_of(top.node); e && h.edge(*e).upper != top.node &&
                                                          upper.contains(h.edge(*e).upper))
                        next = h.edge(*e).upper;
                }
                if (next == kNoSimplex) {
                    color[top.node] = 2;
                    stack_pos[top.node] = kNotOnStack;
                    stack.pop_back();
                    continue;
                }
                if (color[next] == 1) {
                    const std::size_t from = stack_pos[next];
                    std::vector<SimplexId> cycle;
                    for (std::size_t i = from; i < stack.size(); ++i) cycle.push_back(stack[i].node);
                    auto start = std::find_if(cycle.begin(), cycle.end(),
                                              [&](SimplexId s) { return lower.contains(s); });
                    std::rotate(cycle.begin(), start, cycle.end());
                    witness = std::move(cycle);
                    return true;
                }
                if (color[next] == 0) {
                    color[next] = 1;
                    stack_pos[next] = static_cast<std::uint32_t>(stack.size());
                    stack.push_back({next, first_edge(next)});
                }
            }
        }
    }
    return false;
}

}  // namespace

AcyclicityCertificate is_acyclic(const OrientedHasse& hm) {
    const auto n = hm.complex().size();
    std::vector<std::uint8_t> color(n, 0);
    std::vector<std::uint32_t> stack_pos(n, kNotOnStack);
    AcyclicityCertificate cert;
    for (int d = 1; d <= hm.complex().dimension(); ++d) {
        if (find_cycle_in_interface(hm, d, color, stack_pos, cert.witness)) {
            cert.acyclic = false;
            return cert;
        }
    }
    return cert;
}

AcyclicityCertificate is_acyclic(const SimplicialComplex& k, const Matching& m) {
    return is_acyclic(OrientedHasse(HasseDiagram(k), m));
}

MorseMatching MorseMatching::certify(const SimplicialComplex& k, Matching m) {
    MorseMatching out;
    out.certificate_ = is_acyclic(k, m);
    out.matching_ = std::move(m);
    out.certified_ = true;
    return out;
}

std::size_t CriticalProfile::total() const { return std::accumulate(c.begin(), c.end(), std::size_t{0}); }

std::int64_t CriticalProfile::alternating_sum() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < c.size(); ++i)
        s += (i % 2 == 0) ? static_cast<std::int64_t>(c[i]) : -static_cast<std::int64_t>(c[i]);
    return s;
}

CriticalProfile critical_profile(const SimplicialComplex& k, const Matching& m) {
    if (m.num_simplices() != k.size()) throw Error("matching built for a different complex");
    CriticalProfile p;
    p.c.assign(static_cast<std::size_t>(k.dimension()) + 1, 0);
    for (SimplexId id = 0; id < k.size(); ++id)
        if (!m.is_matched(id)) ++p.c[static_cast<std::size_t>(k.dim(id))];
    return p;
}

MorseInequalityReport check_morse_inequalities(const CriticalProfile& c, const BettiVector& beta) {
    MorseInequalityReport r;
    const std::size_t len = std::max(c.c.size(), beta.beta.size());
    std::int64_t alt_c = 0;
    std::int64_t alt_b = 0;
    for (std::size_t d = 0; d < len; ++d) {
        // Alternating partial sums: S_d = x_d - S_{d-1}.
        alt_c = static_cast<std::int64_t>(c[d]) - alt_c;
        alt_b = static_cast<std::int64_t>(beta[d]) - alt_b;
        if (alt_c < alt_b) r.violated_alternating.push_back(static_cast<int>(d));
        if (c[d] < beta[d]) r.violated_weak.push_back(static_cast<int>(d));
    }
    r.holds = r.violated_alternating.empty() && r.violated_weak.empty();
    return r;
}

bool VertexGraph::is_connected() const {
    if (vertices.empty()) return true;
    std::vector<SimplexId> index(vertices.back() + 1, kNoSimplex);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<SimplexId>(i);
    std::vector<std::uint32_t> parent(vertices.size());
    std::iota(parent.begin(), parent.end(), 0u);
    auto root = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = vertices.size();
    for (const auto& e : edges) {
        const auto a = root(index[e.a]);
        const auto b = root(index[e.b]);
        if (a != b) {
            parent[a] = b;
            --components;
        }
    }
    return components == 1;
}

VertexGraph gamma_graph(const SimplicialComplex& k, const Matching& m) {
    if (!k.is_connected()) throw Error("connected complex required");
    VertexGraph g;
    for (SimplexId v : k.of_dimension(0).ids()) g.vertices.push_back(v);
    for (SimplexId e : k.of_dimension(1).ids()) {
        const SimplexId mate = m.mate(e);
        if (mate != kNoSimplex && k.dim(mate) == 2) continue;
        const auto f = k.facets(e);
        g.edges.push_back({e, f[0], f[1]});
    }
    return g;
}

MorseMatching canonicalize_single_critical_vertex(const SimplicialComplex& k,
                                                  const MorseMatching& m, Vertex p) {
    if (!k.is_connected()) throw Error("connected complex required");
    if (!m.is_certified()) throw Error("matching is not acyclic");
    const auto root = k.find(Simplex{p});
    if (!root) throw Error("vertex " + std::to_string(p) + " not in complex");

    Matching out(k.size());
    for (const Pair& pr : m.matching().pairs())
        if (k.dim(pr.upper) >= 2) out.add_unchecked(pr);

    const VertexGraph gamma = gamma_graph(k, m.matching());
    const IdRange verts = k.of_dimension(0);
    // Adjacency in canonical order: edges are listed by increasing id, which
    // sorts neighbours of each vertex by their vertex id.
    std::vector<std::vector<std::pair<SimplexId, SimplexId>>> adj(verts.size());
    for (const auto& e : gamma.edges) {
        adj[e.a - verts.first].push_back({e.b, e.edge});
        adj[e.b - verts.first].push_back({e.a, e.edge});
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    std::vector<std::uint8_t> visited(verts.size(), 0);
    std::vector<std::pair<SimplexId, std::size_t>> stack;
    visited[*root - verts.first] = 1;
    stack.push_back({*root, 0});
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        const auto& list = adj[v - verts.first];
        if (next == list.size()) {
            stack.pop_back();
            continue;
        }
        const auto [w, edge] = list[next++];
        if (visited[w - verts.first]) continue;
        visited[w - verts.first] = 1;
        out.add_unchecked({w, edge});
        stack.push_back({w, 0});
    }
    return MorseMatching::certify(k, std::move(out));
}

CollapseSequence collapse_sequence(const SimplicialComplex& k, const Matching& m,
                                   std::span<const SimplexId> keep) {
    if (m.num_simplices() != k.size()) throw Error("matching built for a different complex");
    const auto n = k.size();
    std::vector<std::uint8_t> kept(n, 0);
    for (SimplexId id : keep) {
        if (id >= n) throw Error("unknown simplex in subcomplex");
        kept[id] = 1;
    }
    for (SimplexId id = 0; id < n; ++id)
        if (kept[id])
            for (SimplexId f : k.facets(id))
                if (!kept[f]) throw Error("subcomplex not closed");

    std::vector<std::uint8_t> pending(n, 0);  // upper ends of pairs still to collapse
    std::size_t remaining = 0;
    for (SimplexId id = 0; id < n; ++id) {
        if (kept[id]) continue;
        const SimplexId mate = m.mate(id);
        if (mate == kNoSimplex || kept[mate]) throw Error("not matched away");
        if (mate < id) {
            pending[id] = 1;
            ++remaining;
        }
    }

    std::vector<std::uint32_t> live_cofacets(n);
    for (SimplexId id = 0; id < n; ++id)
        live_cofacets[id] = static_cast<std::uint32_t>(k.cofacets(id).size());

    std::set<SimplexId> ready;
    auto refresh = [&](SimplexId upper) {
        if (!pending[upper]) return;
        const SimplexId lower = m.mate(upper);
        if (live_cofacets[upper] == 0 && live_cofacets[lower] == 1) ready.insert(upper);
    };
    for (SimplexId id = 0; id < n; ++id) refresh(id);

    auto touch = [&](SimplexId s) {
        // s lost a coface: it may now be the free face or the maximal face of a pending pair.
        --live_cofacets[s];
        const SimplexId mate = m.mate(s);
        if (mate == kNoSimplex) return;
        refresh(mate > s ? mate : s);
    };

    CollapseSequence seq;
    seq.reserve(remaining);
    while (remaining > 0) {
        if (ready.empty()) throw Error("acyclicity violated");
        const SimplexId upper = *ready.begin();
        ready.erase(ready.begin());
        const SimplexId lower = m.mate(upper);
        pending[upper] = 0;
        --remaining;
        seq.push_back({lower, upper});
        for (SimplexId f : k.facets(upper))
            if (f != lower) touch(f);
        live_cofacets[lower] = 0;
        for (SimplexId f : k.facets(lower)) touch(f);
    }
    return seq;
}

CollapseSequence collapse_sequence(const SimplicialComplex& k, const Matching& m,
                                   const SimplicialComplex& l) {
    std::vector<SimplexId> keep;
    keep.reserve(l.size());
    for (const Simplex& s : l.simplices()) keep.push_back(k.id_of(s));
    return collapse_sequence(k, m, keep);
}

}  // namespace morse
