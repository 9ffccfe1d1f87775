#include "morse/generators.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include "random.hpp"

namespace morse {

ComplexWithMatching simplex_boundary(int n) {
    if (n < 1) throw Error("simplex_boundary needs n >= 1");
    if (n > 16) throw Error("simplex_boundary supports n <= 16");
    const auto verts = static_cast<std::uint32_t>(n + 1);

    std::vector<std::vector<Vertex>> facets;
    for (std::uint32_t skip = 1; skip <= verts; ++skip) {
        std::vector<Vertex> f;
        for (Vertex v = 1; v <= verts; ++v)
            if (v != skip) f.push_back(v);
        facets.push_back(std::move(f));
    }
    auto k = SimplicialComplex::from_maximal_simplices(facets);

    Matching m(k.size());
    // S ranges over non-empty proper subsets of {2..n+1}, as bitmasks over n bits.
    const std::uint32_t full = (1u << n) - 1;
    for (std::uint32_t mask = 1; mask < full; ++mask) {
        std::vector<Vertex> s;
        for (int b = 0; b < n; ++b)
            if (mask & (1u << b)) s.push_back(static_cast<Vertex>(b + 2));
        std::vector<Vertex> t{1};
        t.insert(t.end(), s.begin(), s.end());
        m.add_unchecked({k.id_of(Simplex(std::move(s))), k.id_of(Simplex(std::move(t)))});
    }
    auto morse = MorseMatching::certify(k, std::move(m));
    return {std::move(k), std::move(morse)};
}

SimplicialComplex full_simplex(int n) {
    if (n < 0) throw Error("full_simplex needs n >= 0");
    std::vector<Vertex> f(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<Vertex>(i);
    return SimplicialComplex::from_maximal_simplices({f});
}

SimplicialComplex rp2() {
    return SimplicialComplex::from_maximal_simplices({{0, 1, 2},
                                                      {0, 2, 3},
                                                      {0, 3, 4},
                                                      {0, 4, 5},
                                                      {0, 1, 5},
                                                      {1, 2, 4},
                                                      {2, 3, 5},
                                                      {1, 3, 4},
                                                      {2, 4, 5},
                                                      {1, 3, 5}});
}

SimplicialComplex dunce_hat() {
    return SimplicialComplex::from_maximal_simplices(
        {{1, 2, 4}, {1, 2, 6}, {1, 2, 8}, {1, 3, 5}, {1, 3, 6}, {1, 3, 7}, {1, 4, 8}, {1, 5, 7}, {2, 3, 4},
         {2, 3, 7}, {2, 3, 8}, {2, 6, 7}, {3, 4, 6}, {3, 5, 8}, {4, 6, 8}, {5, 7, 8}, {6, 7, 8}});
}

SimplicialComplex wedge(const SimplicialComplex& k, Vertex p, std::size_t copies) {
    if (copies == 0) throw Error("wedge needs at least one copy");
    if (!k.find(Simplex{p})) throw Error("vertex " + std::to_string(p) + " not in complex");

    std::vector<Vertex> others;
    for (SimplexId v : k.of_dimension(0).ids())
        if (k.simplex(v).front() != p) others.push_back(k.simplex(v).front());
    const auto rank = [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(others.begin(), others.end(), v) - others.begin());
    };

    const auto maximal = k.maximal_simplices();
    std::vector<std::vector<Vertex>> facets;
    facets.reserve(maximal.size() * copies);
    for (std::size_t j = 0; j < copies; ++j) {
        const auto offset = static_cast<Vertex>(1 + j * others.size());
        for (const Simplex& m : maximal) {
            std::vector<Vertex> f;
            for (Vertex v : m.vertices()) f.push_back(v == p ? 0 : offset + rank(v));
            facets.push_back(std::move(f));
        }
    }
    return SimplicialComplex::from_maximal_simplices(facets);
}

SimplicialComplex amplified(const SimplicialComplex& k, Vertex p, int c, std::size_t max_simplices) {
    if (c < 1) throw Error("amplified needs c >= 1");
    const std::size_t n = k.size();
    // (n-1) n^(c-1) + 1, watching for overflow.
    std::size_t copies = 1;
    std::size_t need = 0;
    bool overflow = false;
    for (int i = 1; i < c && !overflow; ++i) overflow = __builtin_mul_overflow(copies, n, &copies);
    overflow = overflow || __builtin_mul_overflow(n - 1, copies, &need) || __builtin_add_overflow(need, 1, &need);
    if (overflow || need > max_simplices) {
        const std::string count = overflow ? "more than " + std::to_string(SIZE_MAX) : std::to_string(need);
        throw Error("amplified complex needs " + count + " simplices, cap is " + std::to_string(max_simplices));
    }
    return wedge(k, p, copies);
}

SimplicialComplex random_complex(std::uint64_t seed, const RandomComplexParams& params) {
    const int d = params.dimension;
    if (d < 0 || d > 4) throw Error("random_complex dimension must be in [0, 4]");
    if (params.facets == 0) throw Error("random_complex needs at least one facet");
    if (params.vertices < static_cast<std::size_t>(d) + 1)
        throw Error("random_complex needs at least dimension + 1 vertices");
    if ((std::size_t{1} << (d + 1)) - 1 > params.max_simplices)
        throw Error("random_complex: a single facet exceeds max_simplices");

    std::mt19937_64 rng(seed);
    auto below = [&](std::size_t bound) { return static_cast<std::size_t>(detail::uniform_below(rng, bound)); };

    std::set<std::vector<Vertex>> closure;
    std::vector<std::vector<Vertex>> facets;
    std::vector<std::uint8_t> used(params.vertices, 0);
    std::vector<Vertex> used_list;

    auto add_closure = [&](const std::vector<Vertex>& f, std::set<std::vector<Vertex>>& into) {
        const std::size_t m = f.size();
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<Vertex> s;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (1u << b)) s.push_back(f[b]);
            into.insert(std::move(s));
        }
    };

    for (std::size_t i = 0; i < params.facets; ++i) {
        const int fd = (i == 0 || d == 0) ? d : 1 + static_cast<int>(below(static_cast<std::size_t>(d)));
        std::vector<Vertex> f;
        std::vector<std::uint8_t> taken(params.vertices, 0);
        if (params.connected && !used_list.empty()) {
            const Vertex anchor = used_list[below(used_list.size())];
            f.push_back(anchor);
            taken[anchor] = 1;
        }
        while (f.size() < static_cast<std::size_t>(fd) + 1) {
            const auto v = static_cast<Vertex>(below(params.vertices));
            if (taken[v]) continue;
            taken[v] = 1;
            f.push_back(v);
        }
        std::sort(f.begin(), f.end());

        auto grown = closure;
        add_closure(f, grown);
        if (grown.size() > params.max_simplices) continue;
        closure = std::move(grown);
        for (Vertex v : f)
            if (!used[v]) {
                used[v] = 1;
                used_list.push_back(v);
            }
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::from_maximal_simplices(facets);
}

}  // namespace morse
