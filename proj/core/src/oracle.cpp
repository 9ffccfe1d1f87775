#include "morse/oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "morse/frontier.hpp"
#include "morse/heuristics.hpp"
#include "morse/homology.hpp"

namespace morse {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
    std::size_t operator()(const Bits& b) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (auto w : b) {
            h ^= w;
            h *= 0x100000001b3ull;
            h ^= h >> 29;
        }
        return static_cast<std::size_t>(h);
    }
};

inline bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1u; }
inline void set(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
inline void clear(Bits& b, std::size_t i) { b[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

// Triangles (by offset into the dimension-2 block) surviving greedy collapse of
// free edges, starting from the triangle set `tri`.
Bits core_of(const SimplicialComplex& k, Bits tri) {
    const IdRange edges = k.of_dimension(1);
    const IdRange tris = k.of_dimension(2);
    std::vector<std::uint32_t> count(edges.size(), 0);
    for (SimplexId t : tris.ids())
        if (test(tri, t - tris.first))
            for (SimplexId e : k.facets(t)) ++count[e - edges.first];

    std::vector<SimplexId> work;
    for (SimplexId e : edges.ids())
        if (count[e - edges.first] == 1) work.push_back(e);
    while (!work.empty()) {
        const SimplexId e = work.back();
        work.pop_back();
        if (count[e - edges.first] != 1) continue;
        for (SimplexId t : k.cofacets(e)) {
            if (!test(tri, t - tris.first)) continue;
            clear(tri, t - tris.first);
            for (SimplexId f : k.facets(t))
                if (--count[f - edges.first] == 1) work.push_back(f);
            break;
        }
    }
    return tri;
}

bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

// Components of the triangle set `tri` under sharing an edge.
std::size_t edge_components(const SimplicialComplex& k, const Bits& tri) {
    const IdRange tris = k.of_dimension(2);
    std::vector<char> seen(tris.size(), 0);
    std::size_t comps = 0;
    std::vector<SimplexId> stack;
    for (SimplexId t : tris.ids()) {
        if (!test(tri, t - tris.first) || seen[t - tris.first]) continue;
        ++comps;
        seen[t - tris.first] = 1;
        stack.push_back(t);
        while (!stack.empty()) {
            const SimplexId u = stack.back();
            stack.pop_back();
            for (SimplexId e : k.facets(u))
                for (SimplexId v : k.cofacets(e))
                    if (test(tri, v - tris.first) && !seen[v - tris.first]) {
                        seen[v - tris.first] = 1;
                        stack.push_back(v);
                    }
        }
    }
    return comps;
}

Bits all_triangles(const SimplicialComplex& k) {
    const std::size_t t = k.count(2);
    Bits b((t + 63) / 64, 0);
    for (std::size_t i = 0; i < t; ++i) set(b, i);
    return b;
}

class BranchAndBound {
public:
    BranchAndBound(const SimplicialComplex& k, std::uint64_t budget, std::size_t lower_bound,
                   const Matching& incumbent)
        : k_(k),
          n_(k.size()),
          budget_(budget),
          lower_bound_(lower_bound),
          mate_(n_, kNoSimplex),
          pos_(n_),
          mark_(n_, 0),
          kuhn_mate_(n_, kNoSimplex),
          kuhn_seen_(n_, 0),
          best_(incumbent),
          best_critical_(n_ - 2 * incumbent.size()) {
        for (int d = k.dimension(); d >= 0; --d)
            for (SimplexId s : k.of_dimension(d).ids()) order_.push_back(s);
        for (std::size_t i = 0; i < n_; ++i) pos_[order_[i]] = i;
    }

    void run() {
        if (best_critical_ > lower_bound_) search(0, 0);
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t expansions() const { return expansions_; }
    const Matching& best() const { return best_; }

private:
    void search(std::size_t idx, std::size_t critical) {
        if (exhausted_ || best_critical_ <= lower_bound_) return;
        if (++expansions_ > budget_) {
            exhausted_ = true;
            return;
        }
        if (idx == n_) {
            if (critical < best_critical_) {
                best_critical_ = critical;
                best_ = Matching(n_);
                for (SimplexId s = 0; s < n_; ++s)
                    if (mate_[s] != kNoSimplex && mate_[s] > s) best_.add_unchecked({s, mate_[s]});
            }
            return;
        }
        if (std::max(lower_bound_, critical + residual_critical(idx)) >= best_critical_) return;

        const SimplexId u = order_[idx];
        if (mate_[u] != kNoSimplex) {
            search(idx + 1, critical);
            return;
        }
        auto try_pair = [&](SimplexId lower, SimplexId upper) {
            if (creates_cycle(lower, upper)) return;
            mate_[lower] = upper;
            mate_[upper] = lower;
            search(idx + 1, critical);
            mate_[lower] = kNoSimplex;
            mate_[upper] = kNoSimplex;
        };
        for (SimplexId f : k_.facets(u))
            if (pos_[f] > idx && mate_[f] == kNoSimplex) try_pair(f, u);
        for (SimplexId c : k_.cofacets(u))
            if (pos_[c] > idx && mate_[c] == kNoSimplex) try_pair(u, c);
        search(idx + 1, critical + 1);
    }

    // Undecided, unmatched simplices that no matching among themselves can cover.
    std::size_t residual_critical(std::size_t idx) {
        std::size_t free_count = 0;
        for (std::size_t i = idx; i < n_; ++i)
            if (mate_[order_[i]] == kNoSimplex) {
                ++free_count;
                kuhn_mate_[order_[i]] = kNoSimplex;
            }
        auto available = [&](SimplexId s) { return pos_[s] >= idx && mate_[s] == kNoSimplex; };
        std::size_t matched = 0;
        for (std::size_t i = idx; i < n_; ++i) {
            const SimplexId u = order_[i];
            if (!available(u) || k_.dim(u) % 2 != 0) continue;
            ++kuhn_stamp_;
            if (augment(u, available)) ++matched;
        }
        return free_count - 2 * matched;
    }

    template <class Avail>
    bool augment(SimplexId u, const Avail& available) {
        auto visit = [&](SimplexId v) {
            if (!available(v) || kuhn_seen_[v] == kuhn_stamp_) return false;
            kuhn_seen_[v] = kuhn_stamp_;
            if (kuhn_mate_[v] == kNoSimplex || augment(kuhn_mate_[v], available)) {
                kuhn_mate_[v] = u;
                kuhn_mate_[u] = v;
                return true;
            }
            return false;
        };
        for (SimplexId v : k_.facets(u))
            if (visit(v)) return true;
        for (SimplexId v : k_.cofacets(u))
            if (visit(v)) return true;
        return false;
    }

    // Would matching lower < upper close a directed path upper -> ... -> lower?
    bool creates_cycle(SimplexId lower, SimplexId upper) {
        ++stamp_;
        std::vector<SimplexId> stack{upper};
        mark_[upper] = stamp_;
        while (!stack.empty()) {
            const SimplexId top = stack.back();
            stack.pop_back();
            for (SimplexId f : k_.facets(top)) {
                if (mate_[top] == f) continue;
                if (f == lower) return true;
                if (mark_[f] == stamp_) continue;
                mark_[f] = stamp_;
                const SimplexId next = mate_[f];
                if (next == kNoSimplex || next < f || mark_[next] == stamp_) continue;
                mark_[next] = stamp_;
                stack.push_back(next);
            }
        }
        return false;
    }

    const SimplicialComplex& k_;
    std::size_t n_;
    std::uint64_t budget_;
    std::size_t lower_bound_;
    std::vector<SimplexId> order_;
    std::vector<SimplexId> mate_;
    std::vector<std::size_t> pos_;
    std::vector<std::uint32_t> mark_;
    std::uint32_t stamp_ = 0;
    std::vector<SimplexId> kuhn_mate_;
    std::vector<std::uint64_t> kuhn_seen_;
    std::uint64_t kuhn_stamp_ = 0;
    Matching best_;
    std::size_t best_critical_;
    std::uint64_t expansions_ = 0;
    bool exhausted_ = false;
};

std::size_t critical_lower_bound(const SimplicialComplex& k) {
    const BettiVector beta = betti_gf2(k);
    std::size_t lb = beta.total();
    if (k.dimension() == 2) {
        // Each component needs a critical vertex. Each edge-connected piece of
        // the 2-core needs a critical triangle, since a fully matched piece would
        // collapse with no free edge. c0 - c1 + c2 = chi fixes the rest.
        const auto comps = static_cast<std::int64_t>(k.num_components());
        const auto pieces = static_cast<std::int64_t>(edge_components(k, core_of(k, all_triangles(k))));
        const auto c2 = std::max(static_cast<std::int64_t>(beta[2]), pieces);
        const auto bound = 2 * comps + 2 * c2 - euler_characteristic(k);
        lb = std::max(lb, static_cast<std::size_t>(std::max<std::int64_t>(bound, 0)));
    } else if (k.dimension() >= 3 && k.is_connected() && lb == 1) {
        if (is_collapsible(k, 200'000).collapsible == Verdict::no) lb = 3;
    }
    if ((lb % 2) != (k.size() % 2)) ++lb;
    return lb;
}

}  // namespace

OracleResult optimal_morse_matching(const SimplicialComplex& k, const OracleOptions& opts) {
    if (k.size() > opts.size_limit && !opts.budget)
        throw Error("complex has " + std::to_string(k.size()) + " simplices, above the oracle limit of " +
                    std::to_string(opts.size_limit) + "; pass an explicit budget");
    const std::uint64_t budget = opts.budget.value_or(kDefaultOracleBudget);

    Matching incumbent = coreduction_matching(k).morse.matching();
    for (Matching candidate : {reduction_matching(k).morse.matching(),
                               frontier_edges_matching(k).morse.matching()})
        if (candidate.size() > incumbent.size()) incumbent = std::move(candidate);

    OracleResult result;
    result.critical_lower_bound = critical_lower_bound(k);
    BranchAndBound bnb(k, budget, result.critical_lower_bound, incumbent);
    bnb.run();
    result.expansions = bnb.expansions();
    result.morse = MorseMatching::certify(k, bnb.best());
    result.optimal = !bnb.exhausted();
    const std::size_t found = k.size() - 2 * result.morse.size();
    if (result.optimal) result.critical_lower_bound = found;
    return result;
}

std::vector<SimplexId> two_core(const SimplicialComplex& k) {
    std::vector<SimplexId> out;
    if (k.dimension() < 2) return out;
    const Bits core = core_of(k, all_triangles(k));
    const IdRange tris = k.of_dimension(2);
    for (SimplexId t : tris.ids())
        if (test(core, t - tris.first)) out.push_back(t);
    return out;
}

namespace {

// Free pairs (face, coface) of the live subcomplex: face has exactly one live coface.
std::vector<Pair> free_pairs(const SimplicialComplex& k, const std::vector<std::uint8_t>& alive,
                             const std::vector<std::uint32_t>& live_cofacets) {
    std::vector<Pair> out;
    for (SimplexId s = 0; s < k.size(); ++s) {
        if (!alive[s] || live_cofacets[s] != 1) continue;
        for (SimplexId c : k.cofacets(s))
            if (alive[c]) out.push_back({s, c});
    }
    return out;
}

class CollapseSearch {
public:
    CollapseSearch(const SimplicialComplex& k, std::uint64_t budget)
        : k_(k), budget_(budget), alive_(k.size(), 1), live_(k.size()), state_((k.size() + 63) / 64, 0) {
        for (SimplexId s = 0; s < k.size(); ++s) {
            live_[s] = static_cast<std::uint32_t>(k.cofacets(s).size());
            set(state_, s);
        }
        remaining_ = k.size();
    }

    void apply(Pair p) {
        for (SimplexId s : {p.upper, p.lower}) {
            alive_[s] = 0;
            clear(state_, s);
            for (SimplexId f : k_.facets(s)) --live_[f];
        }
        remaining_ -= 2;
        sequence_.push_back(p);
    }

    void undo(Pair p) {
        for (SimplexId s : {p.lower, p.upper}) {
            alive_[s] = 1;
            set(state_, s);
            for (SimplexId f : k_.facets(s)) ++live_[f];
        }
        remaining_ += 2;
        sequence_.pop_back();
    }

    bool greedy() {
        for (auto pairs = free_pairs(k_, alive_, live_); !pairs.empty();
             pairs = free_pairs(k_, alive_, live_)) {
            ++expansions_;
            apply(pairs.front());
        }
        return remaining_ == 1;
    }

    bool dfs() {
        if (remaining_ == 1) return true;
        if (++expansions_ > budget_) {
            exhausted_ = true;
            return false;
        }
        if (failed_.contains(state_)) return false;
        for (const Pair& p : free_pairs(k_, alive_, live_)) {
            apply(p);
            if (dfs()) return true;
            undo(p);
            if (exhausted_) return false;
        }
        failed_.insert(state_);
        return false;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t expansions() const { return expansions_; }
    const std::vector<Pair>& sequence() const { return sequence_; }
    bool any_free() const { return !free_pairs(k_, alive_, live_).empty(); }

private:
    const SimplicialComplex& k_;
    std::uint64_t budget_;
    std::vector<std::uint8_t> alive_;
    std::vector<std::uint32_t> live_;
    Bits state_;
    std::size_t remaining_ = 0;
    std::vector<Pair> sequence_;
    std::unordered_set<Bits, BitsHash> failed_;
    std::uint64_t expansions_ = 0;
    bool exhausted_ = false;
};

}  // namespace

CollapsibilityResult is_collapsible(const SimplicialComplex& k, std::uint64_t budget) {
    CollapsibilityResult r;
    if (k.size() == 1) {
        r.collapsible = Verdict::yes;
        return r;
    }
    CollapseSearch search(k, budget);
    if (!search.any_free()) {
        r.collapsible = Verdict::no;
        return r;
    }
    bool ok = false;
    if (k.dimension() <= 2) {
        ok = search.greedy();
    } else {
        ok = search.dfs();
        if (!ok && search.exhausted()) {
            r.collapsible = Verdict::unknown;
            r.expansions = search.expansions();
            return r;
        }
    }
    r.collapsible = ok ? Verdict::yes : Verdict::no;
    if (ok) r.sequence = search.sequence();
    r.expansions = search.expansions();
    return r;
}

ErasabilityResult erasability(const SimplicialComplex& k, std::uint64_t budget) {
    if (k.dimension() != 2) throw Error("erasability needs a 2-dimensional complex");
    const IdRange tris = k.of_dimension(2);
    ErasabilityResult r;

    const Bits start = core_of(k, all_triangles(k));
    if (!any(start)) return r;

    // Greedy upper bound: keep deleting the first core triangle.
    {
        Bits cur = start;
        while (any(cur)) {
            std::size_t first = 0;
            while (!test(cur, first)) ++first;
            r.removed.push_back(tris.first + static_cast<SimplexId>(first));
            clear(cur, first);
            cur = core_of(k, std::move(cur));
        }
        r.upper = r.removed.size();
    }
    r.lower = std::max<std::size_t>(1, betti_gf2(k)[2]);

    // Iterative deepening. The remaining core determines everything that follows,
    // so depth_seen maps a core to the largest depth already refuted from it.
    std::unordered_map<Bits, std::size_t, BitsHash> depth_seen;
    std::vector<SimplexId> chosen;
    bool exhausted = false;

    auto dfs = [&](auto& self, const Bits& core, std::size_t depth) -> bool {
        if (!any(core)) return true;
        if (depth == 0) return false;
        if (++r.expansions > budget) {
            exhausted = true;
            return false;
        }
        if (auto it = depth_seen.find(core); it != depth_seen.end() && it->second >= depth)
            return false;
        for (std::size_t t = 0; t < tris.size(); ++t) {
            if (!test(core, t)) continue;
            Bits next = core;
            clear(next, t);
            next = core_of(k, std::move(next));
            chosen.push_back(tris.first + static_cast<SimplexId>(t));
            if (self(self, next, depth - 1)) return true;
            chosen.pop_back();
            if (exhausted) return false;
        }
        depth_seen[core] = std::max(depth_seen[core], depth);
        return false;
    };

    for (std::size_t depth = r.lower; depth < r.upper; ++depth) {
        chosen.clear();
        if (dfs(dfs, start, depth)) {
            r.upper = depth;
            r.removed = chosen;
            break;
        }
        if (exhausted) break;
        r.lower = depth + 1;
    }
    if (!exhausted) r.lower = r.upper;
    return r;
}

}  // namespace morse
