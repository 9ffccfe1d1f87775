#include "morse/complex.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace morse {

namespace {

constexpr std::size_t kMaxFacetVertices = 24;

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw Error("empty simplex");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw Error("degenerate facet");
}

bool Simplex::is_face_of(const Simplex& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                         vertices_.end());
}

std::string Simplex::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) out << ',';
        out << vertices_[i];
    }
    out << '}';
    return out.str();
}

std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.vertices_.begin(), a.vertices_.end(),
                                                  b.vertices_.begin(), b.vertices_.end());
}

std::vector<Simplex> facets_of(const Simplex& s) {
    std::vector<Simplex> out;
    const auto& v = s.vertices_;
    if (v.size() < 2) return out;
    out.reserve(v.size());
    // Dropping vertices from the back first yields lexicographic order.
    for (std::size_t skip = v.size(); skip-- > 0;) {
        std::vector<Vertex> f;
        f.reserve(v.size() - 1);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (i != skip) f.push_back(v[i]);
        out.push_back(Simplex(Simplex::Unchecked{}, std::move(f)));
    }
    return out;
}

SimplicialComplex SimplicialComplex::from_maximal_simplices(
    const std::vector<std::vector<Vertex>>& facets) {
    std::vector<Simplex> simplices;
    simplices.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty()) throw Error("empty facet");
        simplices.emplace_back(f);
    }
    return from_facets(simplices);
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Simplex>& facets) {
    if (facets.empty()) throw Error("empty complex");
    std::vector<Simplex> all;
    for (const auto& f : facets) {
        const auto v = f.vertices();
        if (v.size() > kMaxFacetVertices)
            throw Error("facet " + f.to_string() + " too large to close");
        const std::uint32_t subsets = (1u << v.size());
        for (std::uint32_t mask = 1; mask < subsets; ++mask) {
            std::vector<Vertex> sub;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (mask & (1u << i)) sub.push_back(v[i]);
            all.push_back(Simplex(Simplex::Unchecked{}, std::move(sub)));
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return build(std::move(all));
}

SimplicialComplex SimplicialComplex::from_simplices(std::vector<Simplex> simplices) {
    if (simplices.empty()) throw Error("empty complex");
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    for (const auto& s : simplices)
        for (const auto& f : facets_of(s))
            if (!std::binary_search(simplices.begin(), simplices.end(), f))
                throw Error("not downward closed: " + f.to_string() + " missing");
    return build(std::move(simplices));
}

SimplicialComplex SimplicialComplex::build(std::vector<Simplex> sorted) {
    auto data = std::make_shared<Data>();
    data->simplices = std::move(sorted);
    const auto& s = data->simplices;
    const auto n = static_cast<SimplexId>(s.size());
    data->dimension = s.back().dimension();

    data->by_dimension.assign(static_cast<std::size_t>(data->dimension) + 1, IdRange{});
    for (SimplexId id = 0; id < n; ++id) {
        auto& r = data->by_dimension[static_cast<std::size_t>(s[id].dimension())];
        if (r.empty()) r.first = id;
        r.last = id + 1;
    }

    auto lookup = [&](const Simplex& x) {
        auto it = std::lower_bound(s.begin(), s.end(), x);
        return static_cast<SimplexId>(it - s.begin());
    };

    data->facet_offset.assign(n + 1, 0);
    std::vector<std::uint32_t> cofacet_count(n, 0);
    for (SimplexId id = 0; id < n; ++id) {
        for (const auto& f : facets_of(s[id])) {
            const SimplexId fid = lookup(f);
            data->facet_ids.push_back(fid);
            ++cofacet_count[fid];
        }
        data->facet_offset[id + 1] = static_cast<std::uint32_t>(data->facet_ids.size());
    }
    data->cofacet_offset.assign(n + 1, 0);
    for (SimplexId id = 0; id < n; ++id)
        data->cofacet_offset[id + 1] = data->cofacet_offset[id] + cofacet_count[id];
    data->cofacet_ids.resize(data->cofacet_offset[n]);
    std::vector<std::uint32_t> fill(data->cofacet_offset.begin(), data->cofacet_offset.end() - 1);
    // Cofaces are visited in increasing id, so each cofacet list comes out sorted.
    for (SimplexId id = 0; id < n; ++id)
        for (auto k = data->facet_offset[id]; k < data->facet_offset[id + 1]; ++k)
            data->cofacet_ids[fill[data->facet_ids[k]]++] = id;

    const IdRange verts = data->by_dimension[0];
    std::vector<std::uint32_t> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0u);
    if (data->dimension >= 1) {
        for (SimplexId e : data->by_dimension[1].ids()) {
            const auto f = data->facet_offset[e];
            const auto a = find_root(parent, data->facet_ids[f] - verts.first);
            const auto b = find_root(parent, data->facet_ids[f + 1] - verts.first);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    data->component.resize(verts.size());
    std::vector<std::uint32_t> label(verts.size(), std::numeric_limits<std::uint32_t>::max());
    std::uint32_t next = 0;
    for (std::uint32_t v = 0; v < verts.size(); ++v) {
        const auto r = find_root(parent, v);
        if (label[r] == std::numeric_limits<std::uint32_t>::max()) label[r] = next++;
        data->component[v] = label[r];
    }
    data->num_components = next;

    return SimplicialComplex(std::move(data));
}

std::optional<SimplexId> SimplicialComplex::find(const Simplex& x) const {
    const auto& s = data_->simplices;
    auto it = std::lower_bound(s.begin(), s.end(), x);
    if (it == s.end() || *it != x) return std::nullopt;
    return static_cast<SimplexId>(it - s.begin());
}

SimplexId SimplicialComplex::id_of(const Simplex& x) const {
    if (auto id = find(x)) return *id;
    throw Error("unknown simplex " + x.to_string());
}

std::span<const SimplexId> SimplicialComplex::facets(SimplexId id) const {
    const auto b = data_->facet_offset.at(id);
    const auto e = data_->facet_offset[id + 1];
    return std::span<const SimplexId>(data_->facet_ids).subspan(b, e - b);
}

std::span<const SimplexId> SimplicialComplex::cofacets(SimplexId id) const {
    const auto b = data_->cofacet_offset.at(id);
    const auto e = data_->cofacet_offset[id + 1];
    return std::span<const SimplexId>(data_->cofacet_ids).subspan(b, e - b);
}

IdRange SimplicialComplex::of_dimension(int d) const {
    if (d < 0 || d > data_->dimension) {
        const auto end = static_cast<SimplexId>(size());
        return d < 0 ? IdRange{0, 0} : IdRange{end, end};
    }
    return data_->by_dimension[static_cast<std::size_t>(d)];
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<Simplex> out;
    for (SimplexId id = 0; id < size(); ++id)
        if (cofacets(id).empty()) out.push_back(simplex(id));
    return out;
}

std::vector<Simplex> cofacets_of(const SimplicialComplex& k, const Simplex& s) {
    std::vector<Simplex> out;
    for (SimplexId c : k.cofacets(k.id_of(s))) out.push_back(k.simplex(c));
    return out;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
    std::int64_t chi = 0;
    for (int d = 0; d <= k.dimension(); ++d) {
        const auto c = static_cast<std::int64_t>(k.count(d));
        chi += (d % 2 == 0) ? c : -c;
    }
    return chi;
}

}  // namespace morse
