#include "morse/hasse.hpp"

#include <algorithm>

namespace morse {

namespace {

constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

}  // namespace

HasseDiagram::HasseDiagram(SimplicialComplex k) : complex_(std::move(k)) {
    const auto n = static_cast<SimplexId>(complex_.size());
    first_facet_edge_.assign(n + 1, 0);
    std::vector<std::uint32_t> count(n, 0);
    for (SimplexId s = 0; s < n; ++s) {
        first_facet_edge_[s] = static_cast<EdgeId>(edges_.size());
        for (SimplexId f : complex_.facets(s)) {
            edges_.push_back({s, f});
            ++count[f];
        }
    }
    first_facet_edge_[n] = static_cast<EdgeId>(edges_.size());

    cofacet_offset_.assign(n + 1, 0);
    for (SimplexId s = 0; s < n; ++s) cofacet_offset_[s + 1] = cofacet_offset_[s] + count[s];
    cofacet_edges_.resize(edges_.size());
    std::vector<std::uint32_t> fill(cofacet_offset_.begin(), cofacet_offset_.end() - 1);
    for (EdgeId e = 0; e < edges_.size(); ++e) cofacet_edges_[fill[edges_[e].lower]++] = e;
}

IdRange HasseDiagram::facet_edges(SimplexId upper) const {
    return {first_facet_edge_.at(upper), first_facet_edge_.at(upper + 1)};
}

std::span<const EdgeId> HasseDiagram::cofacet_edges(SimplexId lower) const {
    const auto b = cofacet_offset_.at(lower);
    return std::span<const EdgeId>(cofacet_edges_).subspan(b, cofacet_offset_[lower + 1] - b);
}

IdRange HasseDiagram::interface_edges(int d) const {
    if (d < 1 || d > complex_.dimension()) return {0, 0};
    const IdRange r = complex_.of_dimension(d);
    return {first_facet_edge_[r.first], first_facet_edge_[r.last]};
}

std::optional<EdgeId> HasseDiagram::find_edge(SimplexId lower, SimplexId upper) const {
    if (upper >= num_nodes() || lower >= num_nodes()) return std::nullopt;
    const IdRange r = facet_edges(upper);
    auto first = edges_.begin() + r.first;
    auto last = edges_.begin() + r.last;
    auto it = std::lower_bound(first, last, lower,
                               [](const HasseEdge& e, SimplexId v) { return e.lower < v; });
    if (it == last || it->lower != lower) return std::nullopt;
    return static_cast<EdgeId>(it - edges_.begin());
}

HasseDiagram hasse(const SimplicialComplex& k) { return HasseDiagram(k); }

Matching Matching::from_pairs(const SimplicialComplex& k, std::span<const Pair> pairs) {
    Matching m(k.size());
    for (const auto& p : pairs) m.add(k, p);
    return m;
}

void Matching::add(const SimplicialComplex& k, Pair p) {
    if (mate_.size() != k.size()) throw Error("matching built for a different complex");
    if (p.lower >= k.size() || p.upper >= k.size()) throw Error("unknown simplex in pair");
    const auto f = k.facets(p.upper);
    if (!std::binary_search(f.begin(), f.end(), p.lower))
        throw Error(k.simplex(p.lower).to_string() + " is not a facet of " +
                    k.simplex(p.upper).to_string());
    if (mate_[p.lower] != kNoSimplex || mate_[p.upper] != kNoSimplex)
        throw Error("simplex matched twice in pair " + k.simplex(p.lower).to_string() + " < " +
                    k.simplex(p.upper).to_string());
    add_unchecked(p);
}

void Matching::add_unchecked(Pair p) {
    mate_.at(p.lower) = p.upper;
    mate_.at(p.upper) = p.lower;
    ++size_;
}

void Matching::remove(Pair p) {
    if (!contains(p)) throw Error("pair not in matching");
    mate_[p.lower] = kNoSimplex;
    mate_[p.upper] = kNoSimplex;
    --size_;
}

std::vector<Pair> Matching::pairs() const {
    std::vector<Pair> out;
    out.reserve(size_);
    for (SimplexId id = 0; id < mate_.size(); ++id)
        if (mate_[id] != kNoSimplex && mate_[id] > id) out.push_back({id, mate_[id]});
    return out;
}

OrientedHasse::OrientedHasse(HasseDiagram h, const Matching& m)
    : hasse_(std::move(h)), up_(hasse_.num_edges(), 0), up_edge_(hasse_.num_nodes(), kNoEdge) {
    if (m.num_simplices() != hasse_.num_nodes())
        throw Error("matching references simplices outside the complex");
    for (const Pair& p : m.pairs()) {
        const auto e = hasse_.find_edge(p.lower, p.upper);
        if (!e) throw Error("matched pair is not a Hasse edge");
        up_[*e] = 1;
        up_edge_[p.lower] = *e;
        up_edge_[p.upper] = *e;
        ++num_up_;
    }
}

std::optional<EdgeId> OrientedHasse::up_edge_of(SimplexId id) const {
    const EdgeId e = up_edge_.at(id);
    if (e == kNoEdge) return std::nullopt;
    return e;
}

void OrientedHasse::make_down(EdgeId e) {
    if (!is_up(e)) throw Error("edge is not an up-edge");
    up_[e] = 0;
    const auto& he = hasse_.edge(e);
    up_edge_[he.lower] = kNoEdge;
    up_edge_[he.upper] = kNoEdge;
    --num_up_;
}

Matching OrientedHasse::matching() const {
    Matching m(hasse_.num_nodes());
    for (EdgeId e = 0; e < up_.size(); ++e)
        if (up_[e]) m.add_unchecked({hasse_.edge(e).lower, hasse_.edge(e).upper});
    return m;
}

OrientedHasse orient(const HasseDiagram& h, const Matching& m) { return OrientedHasse(h, m); }

InterfaceSubgraph d_interface(const HasseDiagram& h, int d) {
    const auto& k = h.complex();
    if (d < 1 || d > k.dimension())
        throw Error("interface dimension " + std::to_string(d) + " outside [1, " +
                    std::to_string(k.dimension()) + "]");
    InterfaceSubgraph g;
    g.d = d;
    for (SimplexId s : k.of_dimension(d - 1).ids()) g.nodes.push_back(s);
    for (SimplexId s : k.of_dimension(d).ids()) g.nodes.push_back(s);
    for (EdgeId e : h.interface_edges(d).ids()) g.edges.push_back(e);
    return g;
}

InterfaceSubgraph d_interface(const OrientedHasse& h, int d) { return d_interface(h.diagram(), d); }

Matching max_cardinality_matching(const HasseDiagram& h) {
    const auto& k = h.complex();
    const auto n = k.size();
    std::vector<SimplexId> mate(n, kNoSimplex);
    std::vector<std::uint32_t> seen(n, 0);
    std::uint32_t stamp = 0;

    auto degree = [&](SimplexId u) { return k.facets(u).size() + k.cofacets(u).size(); };
    auto neighbor = [&](SimplexId u, std::size_t i) {
        const auto f = k.facets(u);
        return i < f.size() ? f[i] : k.cofacets(u)[i - f.size()];
    };

    struct Frame {
        SimplexId node;
        std::size_t next;
    };
    std::vector<Frame> stack;

    auto augment_from = [&](SimplexId root) {
        ++stamp;
        stack.clear();
        stack.push_back({root, 0});
        while (!stack.empty()) {
            Frame& top = stack.back();
            if (top.next == degree(top.node)) {
                stack.pop_back();
                continue;
            }
            const SimplexId v = neighbor(top.node, top.next++);
            if (seen[v] == stamp) continue;
            seen[v] = stamp;
            if (mate[v] == kNoSimplex) {
                for (const Frame& f : stack) {
                    const SimplexId w = neighbor(f.node, f.next - 1);
                    mate[f.node] = w;
                    mate[w] = f.node;
                }
                return true;
            }
            stack.push_back({mate[v], 0});
        }
        return false;
    };

    const int top_even = k.dimension() - (k.dimension() % 2);
    for (int d = top_even; d >= 0; d -= 2)
        for (SimplexId u : k.of_dimension(d).ids()) augment_from(u);

    Matching m(n);
    for (SimplexId id = 0; id < n; ++id)
        if (mate[id] != kNoSimplex && mate[id] > id) m.add_unchecked({id, mate[id]});
    return m;
}

}  // namespace morse
