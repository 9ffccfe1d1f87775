#include <sstream>

#include "catch_amalgamated.hpp"
#include "helpers.hpp"
#include "morse/generators.hpp"
#include "morse/io.hpp"

using namespace morse;

namespace {

SimplicialComplex parse(const std::string& text) {
    std::istringstream in(text);
    return parse_complex(in);
}

std::size_t parse_error_line(const std::string& text) {
    try {
        parse(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("complex files", "[io]") {
    CHECK(parse("0 1 2\n").size() == 7);
    const auto c = parse("# c\n0 1\n1 2\n0 2\n");
    CHECK(c.size() == 6);
    CHECK(c.count(1) == 3);
    CHECK(parse("\n  \n3\t4\n# x\n").size() == 3);
}

TEST_CASE("complex file errors carry line numbers", "[io]") {
    CHECK(parse_error_line("0 0 1\n") == 1);
    CHECK(parse_error_line("0 1\n\n0 x\n") == 3);
    CHECK(parse_error_line("0 -1\n") == 1);
    CHECK(parse_error_line("") == 0);
    CHECK(parse_error_line("# only comments\n") == 0);
    CHECK_THROWS_WITH(parse("0 0 1\n"), "line 1: degenerate facet");
}

TEST_CASE("serialize then parse is the identity", "[io]") {
    for (const auto& k : {rp2(), dunce_hat(), full_simplex(3), testing::triangle_boundary(),
                          random_complex(4, {.dimension = 3, .facets = 9, .vertices = 9})}) {
        const auto text = serialize_complex(k);
        const auto back = parse(text);
        CHECK(std::equal(k.simplices().begin(), k.simplices().end(), back.simplices().begin(), back.simplices().end()));
        CHECK(serialize_complex(back) == text);
    }
    CHECK(serialize_complex(testing::triangle()) == "0 1 2\n");
}

TEST_CASE("matching files", "[io]") {
    const auto s = simplex_boundary(3);
    const auto text = serialize_matching(s.complex, s.morse.matching());
    std::istringstream in(text);
    const auto resolved = resolve_matching(s.complex, parse_matching(in));
    CHECK(resolved.problems.empty());
    CHECK(resolved.matching == s.morse.matching());

    std::istringstream bad("0 ; 0 1\n0 ; 0 2\n5 ; 5 6\n0 ; 1 2\n1 ; 0 1 2\n");
    const auto k = testing::triangle();
    const auto r = resolve_matching(k, parse_matching(bad));
    CHECK(r.matching.size() == 1);
    REQUIRE(r.problems.size() == 5);
    CHECK(r.problems[0] == "line 2: {0} is matched twice");
    CHECK(r.problems[1] == "line 3: unknown simplex {5}");
    CHECK(r.problems[2] == "line 3: unknown simplex {5,6}");
    CHECK(r.problems[3] == "line 4: {0} is not a facet of {1,2}");
    CHECK(r.problems[4] == "line 5: {1} is not a facet of {0,1,2}");

    std::istringstream syntax("0 1 2\n");
    CHECK_THROWS_WITH(parse_matching(syntax), "line 1: expected '<lower> ; <upper>'");
}
