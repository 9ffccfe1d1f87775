#include "catch_amalgamated.hpp"
#include "helpers.hpp"
#include "morse/frontier.hpp"
#include "morse/generators.hpp"
#include "morse/heuristics.hpp"
#include "morse/oracle.hpp"
#include "morse/report.hpp"

using namespace morse;

TEST_CASE("every algorithm yields a consistent Morse matching", "[properties]") {
    std::size_t oracle_runs = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        RandomComplexParams p;
        p.dimension = 1 + static_cast<int>(seed % 4);
        p.facets = 3 + seed % 10;
        p.vertices = 5 + seed % 6;
        p.connected = seed % 3 == 0;
        const auto k = random_complex(seed, p);
        const auto beta = betti_gf2(k);

        std::vector<MorseMatching> results{frontier_edges_matching(k).morse, coreduction_matching(k).morse,
                                           reduction_matching(k).morse, coreduction_matching(k, {seed}).morse,
                                           reduction_matching(k, {seed}).morse};
        std::optional<std::size_t> best;
        if (k.size() <= kOracleSizeLimit) {
            const auto o = optimal_morse_matching(k);
            if (o.optimal) best = o.morse.size();
            results.push_back(o.morse);
            ++oracle_runs;
        }
        for (const auto& m : results) {
            REQUIRE(m.is_certified());
            const auto c = critical_profile(k, m.matching());
            CHECK(c.total() + 2 * m.size() == k.size());
            CHECK(c.alternating_sum() == euler_characteristic(k));
            CHECK(check_morse_inequalities(c, beta).holds);
            if (best) CHECK(m.size() <= *best);

            const auto r = make_report(k, m);
            CHECK(r.consistent());
            CHECK(r.euler_ok());
            CHECK(r.morse_inequalities);
        }
    }
    CHECK(oracle_runs >= 30);
}
