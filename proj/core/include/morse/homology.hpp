#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "morse/complex.hpp"

namespace morse {

/// Betti numbers over the two-element field, indexed by dimension 0..D.
struct BettiVector {
    std::vector<std::size_t> beta;

    std::size_t operator[](std::size_t i) const { return i < beta.size() ? beta[i] : 0; }
    std::size_t total() const;
    std::int64_t alternating_sum() const;

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Rank over GF(2) of the boundary map from d-chains to (d-1)-chains.
/// Zero for d <= 0 or d > dim K.
std::size_t boundary_rank_gf2(const SimplicialComplex& k, int d);

/// beta_i = dim ker(boundary_i) - rank(boundary_{i+1}).
BettiVector betti_gf2(const SimplicialComplex& k);

}  // namespace morse
