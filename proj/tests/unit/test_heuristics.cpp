#include "catch_amalgamated.hpp"
#include "helpers.hpp"
#include "morse/generators.hpp"
#include "morse/heuristics.hpp"

using namespace morse;
using testing::cx;
using testing::id;

TEST_CASE("coreduction on the full triangle", "[heuristics]") {
    const auto k = testing::triangle();
    const auto r = coreduction_matching(k);
    CHECK(critical_profile(k, r.morse.matching()).c == std::vector<std::size_t>{1, 0, 0});
    REQUIRE(r.steps.size() == 4);
    CHECK(r.steps[0].is_critical());
    CHECK(r.steps[0].lower == id(k, {0}));
    CHECK(r.steps[1].lower == id(k, {1}));
    CHECK(r.steps[1].upper == id(k, {0, 1}));
    CHECK(r.steps[2].lower == id(k, {2}));
    CHECK(r.steps[2].upper == id(k, {0, 2}));
    CHECK(r.steps[3].lower == id(k, {1, 2}));
    CHECK(r.steps[3].upper == id(k, {0, 1, 2}));
}

TEST_CASE("heuristics on small complexes", "[heuristics]") {
    const auto v = cx({{3}});
    CHECK(critical_profile(v, coreduction_matching(v).morse.matching()).c == std::vector<std::size_t>{1});
    CHECK(critical_profile(v, reduction_matching(v).morse.matching()).c == std::vector<std::size_t>{1});

    const auto s = testing::tetrahedron_boundary();
    CHECK(critical_profile(s, coreduction_matching(s).morse.matching()).c == std::vector<std::size_t>{1, 0, 1});

    const auto d2 = testing::triangle();
    const auto red = reduction_matching(d2).morse;
    CHECK(red.is_certified());
    CHECK(critical_profile(d2, red.matching()).alternating_sum() == 1);

    const auto e = cx({{0, 1}});
    const auto r = reduction_matching(e);
    CHECK(r.morse.matching().pairs() == std::vector<Pair>{testing::pair(e, {0}, {0, 1})});
    CHECK(critical_profile(e, r.morse.matching()).c == std::vector<std::size_t>{1, 0});
}

TEST_CASE("reduction on the dunce hat starts with a critical triangle", "[heuristics]") {
    const auto k = dunce_hat();
    const auto r = reduction_matching(k);
    REQUIRE_FALSE(r.steps.empty());
    CHECK(r.steps[0].is_critical());
    CHECK(k.dim(r.steps[0].lower) == 2);
    CHECK(r.morse.is_certified());
}

TEST_CASE("every simplex is deleted exactly once", "[heuristics]") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        const auto k = random_complex(seed, {.dimension = 3, .facets = 10, .vertices = 9});
        for (bool co : {true, false}) {
            for (std::optional<std::uint64_t> tie : {std::optional<std::uint64_t>{}, std::optional<std::uint64_t>{seed}}) {
                const auto r = co ? coreduction_matching(k, {tie}) : reduction_matching(k, {tie});
                std::vector<int> deleted(k.size(), 0);
                std::size_t pairs = 0, critical = 0;
                for (const auto& s : r.steps) {
                    ++deleted[s.lower];
                    if (s.is_critical()) {
                        ++critical;
                    } else {
                        ++deleted[s.upper];
                        ++pairs;
                    }
                }
                for (int d : deleted) CHECK(d == 1);
                CHECK(2 * pairs + critical == k.size());
                CHECK(pairs == r.morse.size());
                CHECK(r.morse.is_certified());
                CHECK(critical_profile(k, r.morse.matching()).alternating_sum() == euler_characteristic(k));
            }
        }
    }
}

TEST_CASE("seeded tie-breaking is deterministic", "[heuristics]") {
    const auto k = random_complex(11, {.dimension = 3, .facets = 12, .vertices = 9});
    CHECK(coreduction_matching(k, {5}).morse.matching() == coreduction_matching(k, {5}).morse.matching());
    CHECK(reduction_matching(k, {5}).morse.matching() == reduction_matching(k, {5}).morse.matching());
}
