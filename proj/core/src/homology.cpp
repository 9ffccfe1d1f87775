#include "morse/homology.hpp"

#include <bit>
#include <unordered_map>

namespace morse {

namespace {

using Row = std::vector<std::uint64_t>;

int lowest_bit(const Row& r) {
    for (std::size_t w = 0; w < r.size(); ++w)
        if (r[w]) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(r[w])));
    return -1;
}

}  // namespace

std::size_t BettiVector::total() const {
    std::size_t t = 0;
    for (auto b : beta) t += b;
    return t;
}

std::int64_t BettiVector::alternating_sum() const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < beta.size(); ++i)
        s += (i % 2 == 0) ? static_cast<std::int64_t>(beta[i]) : -static_cast<std::int64_t>(beta[i]);
    return s;
}

std::size_t boundary_rank_gf2(const SimplicialComplex& k, int d) {
    if (d <= 0 || d > k.dimension()) return 0;
    const IdRange cols = k.of_dimension(d - 1);
    const std::size_t words = (cols.size() + 63) / 64;

    // Pivot rows keyed by their lowest set column.
    std::unordered_map<int, Row> pivots;
    std::size_t rank = 0;
    for (SimplexId s : k.of_dimension(d).ids()) {
        Row row(words, 0);
        for (SimplexId f : k.facets(s)) {
            const auto c = f - cols.first;
            row[c / 64] ^= (std::uint64_t{1} << (c % 64));
        }
        for (int p = lowest_bit(row); p >= 0; p = lowest_bit(row)) {
            auto it = pivots.find(p);
            if (it == pivots.end()) {
                pivots.emplace(p, std::move(row));
                ++rank;
                break;
            }
            for (std::size_t w = 0; w < words; ++w) row[w] ^= it->second[w];
        }
    }
    return rank;
}

BettiVector betti_gf2(const SimplicialComplex& k) {
    const int top = k.dimension();
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top; ++d) rank[static_cast<std::size_t>(d)] = boundary_rank_gf2(k, d);

    BettiVector out;
    out.beta.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        const auto i = static_cast<std::size_t>(d);
        out.beta[i] = k.count(d) - rank[i] - rank[i + 1];
    }
    return out;
}

}  // namespace morse
