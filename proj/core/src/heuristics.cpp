#include "morse/heuristics.hpp"

#include <iterator>
#include <random>
#include <set>

#include "random.hpp"

namespace morse {

namespace {

using detail::uniform_below;

class TieBreaker {
public:
    explicit TieBreaker(const HeuristicOptions& opts) {
        if (opts.tie_seed) rng_.emplace(*opts.tie_seed);
    }

    SimplexId pick(const std::set<SimplexId>& candidates) {
        if (!rng_) return *candidates.begin();
        auto it = candidates.begin();
        std::advance(it, static_cast<long>(uniform_below(*rng_, candidates.size())));
        return *it;
    }

private:
    std::optional<std::mt19937_64> rng_;
};

// Shared driver. `Dual` flips the roles of facets and cofacets: coreduction
// looks for a simplex with one live facet and falls back to the lowest
// dimension, reduction for one with one live coface and the highest dimension.
template <bool Dual>
HeuristicResult run(const SimplicialComplex& k, const HeuristicOptions& opts) {
    const auto n = k.size();
    auto toward = [&](SimplexId s) { return Dual ? k.cofacets(s) : k.facets(s); };
    auto away = [&](SimplexId s) { return Dual ? k.facets(s) : k.cofacets(s); };

    std::vector<std::uint8_t> alive(n, 1);
    std::vector<std::uint32_t> live(n);
    for (SimplexId s = 0; s < n; ++s) live[s] = static_cast<std::uint32_t>(toward(s).size());

    // Simplices with exactly one live neighbour in the `toward` direction.
    std::set<SimplexId> free_set;
    std::vector<std::set<SimplexId>> by_dim(static_cast<std::size_t>(k.dimension()) + 1);
    for (SimplexId s = 0; s < n; ++s) {
        if (live[s] == 1) free_set.insert(s);
        by_dim[static_cast<std::size_t>(k.dim(s))].insert(s);
    }

    TieBreaker ties(opts);
    Matching m(n);
    HeuristicResult result;
    result.steps.reserve(n);

    auto erase = [&](SimplexId s) {
        alive[s] = 0;
        free_set.erase(s);
        by_dim[static_cast<std::size_t>(k.dim(s))].erase(s);
        for (SimplexId t : away(s)) {
            if (!alive[t]) continue;
            const auto c = --live[t];
            if (c == 1)
                free_set.insert(t);
            else
                free_set.erase(t);
        }
    };

    std::size_t remaining = n;
    while (remaining > 0) {
        if (!free_set.empty()) {
            const SimplexId s = ties.pick(free_set);
            SimplexId other = kNoSimplex;
            for (SimplexId t : toward(s))
                if (alive[t]) other = t;
            const Pair p = Dual ? Pair{s, other} : Pair{other, s};
            m.add_unchecked(p);
            result.steps.push_back({p.lower, p.upper});
            erase(s);
            erase(other);
            remaining -= 2;
            continue;
        }
        std::set<SimplexId>* bucket = nullptr;
        if constexpr (Dual) {
            for (auto it = by_dim.rbegin(); it != by_dim.rend() && !bucket; ++it)
                if (!it->empty()) bucket = &*it;
        } else {
            for (auto& b : by_dim)
                if (!b.empty()) {
                    bucket = &b;
                    break;
                }
        }
        const SimplexId s = ties.pick(*bucket);
        result.steps.push_back({s, kNoSimplex});
        erase(s);
        --remaining;
    }
    result.morse = MorseMatching::certify(k, std::move(m));
    return result;
}

}  // namespace

HeuristicResult coreduction_matching(const SimplicialComplex& k, const HeuristicOptions& opts) {
    return run<false>(k, opts);
}

HeuristicResult reduction_matching(const SimplicialComplex& k, const HeuristicOptions& opts) {
    return run<true>(k, opts);
}

}  // namespace morse
