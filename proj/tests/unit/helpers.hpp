#pragma once

#include <initializer_list>
#include <vector>

#include "morse/complex.hpp"
#include "morse/generators.hpp"
#include "morse/hasse.hpp"

namespace testing {

inline morse::SimplicialComplex cx(std::vector<std::vector<morse::Vertex>> facets) {
    return morse::SimplicialComplex::from_maximal_simplices(facets);
}

inline morse::SimplexId id(const morse::SimplicialComplex& k, std::initializer_list<morse::Vertex> s) {
    return k.id_of(morse::Simplex(s));
}

inline morse::Pair pair(const morse::SimplicialComplex& k, std::initializer_list<morse::Vertex> lower,
                        std::initializer_list<morse::Vertex> upper) {
    return {id(k, lower), id(k, upper)};
}

inline morse::Matching matching(const morse::SimplicialComplex& k, const std::vector<morse::Pair>& pairs) {
    return morse::Matching::from_pairs(k, pairs);
}

inline morse::SimplicialComplex triangle_boundary() { return cx({{0, 1}, {1, 2}, {0, 2}}); }
inline morse::SimplicialComplex triangle() { return cx({{0, 1, 2}}); }
inline morse::SimplicialComplex tetrahedron_boundary() { return cx({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

// Dunce hat with a 3-sphere attached at vertex 1. Betti sum 2, but any
// matching leaves at least 4 critical simplices.
inline morse::SimplicialComplex dunce_hat_with_sphere() {
    std::vector<std::vector<morse::Vertex>> facets;
    const auto d = morse::dunce_hat();
    for (morse::SimplexId t : d.of_dimension(2).ids()) {
        const auto v = d.simplex(t).vertices();
        facets.emplace_back(v.begin(), v.end());
    }
    const std::vector<morse::Vertex> ball{1, 20, 21, 22, 23};
    for (std::size_t skip = 0; skip < ball.size(); ++skip) {
        std::vector<morse::Vertex> f;
        for (std::size_t i = 0; i < ball.size(); ++i)
            if (i != skip) f.push_back(ball[i]);
        facets.push_back(f);
    }
    return cx(facets);
}

}  // namespace testing
