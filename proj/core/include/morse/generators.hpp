#pragma once

#include <cstdint>

#include "morse/morse.hpp"

namespace morse {

struct ComplexWithMatching {
    SimplicialComplex complex;
    MorseMatching morse;
};

/// All non-empty proper subsets of {1..n+1}, with the pairs (S, S u {1})
/// for non-empty S strictly inside {2..n+1}. Critical cells: {1} and {2..n+1}.
/// Throws Error for n == 0 or n > 16.
ComplexWithMatching simplex_boundary(int n);

/// Full n-simplex on vertices 0..n.
SimplicialComplex full_simplex(int n);

/// Minimal 6-vertex triangulation of the projective plane (vertices 0..5).
SimplicialComplex rp2();

/// 8-vertex, 17-triangle dunce hat (vertices 1..8). Contractible, no free edge.
SimplicialComplex dunce_hat();

/// k copies of K glued at vertex p. p becomes vertex 0; the r-th other vertex
/// of copy j becomes 1 + j*(V-1) + r. Size is (n-1)k + 1.
SimplicialComplex wedge(const SimplicialComplex& k, Vertex p, std::size_t copies);

/// Wedge of n^(c-1) copies, n = |K|. Throws Error naming the required simplex
/// count when it exceeds max_simplices.
SimplicialComplex amplified(const SimplicialComplex& k, Vertex p, int c,
                            std::size_t max_simplices = 100'000);

struct RandomComplexParams {
    int dimension = 2;
    std::size_t facets = 8;
    std::size_t vertices = 8;
    bool connected = false;
    std::size_t max_simplices = 200;
};

/// Random union of facets. The first facet has the full dimension, later ones
/// a uniform dimension in [1, dimension]. With `connected`, every facet after
/// the first reuses a vertex already placed. Facets that would push the size
/// past max_simplices are skipped. Same seed and params, same complex.
/// Throws Error for unsatisfiable params.
SimplicialComplex random_complex(std::uint64_t seed, const RandomComplexParams& params = {});

}  // namespace morse
