#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "morse/hasse.hpp"

namespace morse {

// Complex files: one maximal simplex per line as whitespace-separated vertex
// ids. Lines starting with '#' and blank lines are ignored.

/// Throws ParseError with the offending line, or line 0 for an empty input.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex read_complex(const std::filesystem::path& path);

/// Maximal simplices in canonical order, one per line.
std::string serialize_complex(const SimplicialComplex& k);
void write_complex(const SimplicialComplex& k, const std::filesystem::path& path);

// Matching files: one pair per line, "<lower vertices> ; <upper vertices>".

struct MatchingFileEntry {
    std::size_t line = 0;
    Simplex lower{0};
    Simplex upper{0};
};

/// Syntax only; simplices are not looked up. Throws ParseError.
std::vector<MatchingFileEntry> parse_matching(std::istream& in);
std::vector<MatchingFileEntry> read_matching(const std::filesystem::path& path);

/// Pairs that could be resolved against k, plus one message per entry that
/// could not (unknown simplex, not a covering pair, simplex reused).
struct ResolvedMatching {
    Matching matching;
    std::vector<std::string> problems;
};

ResolvedMatching resolve_matching(const SimplicialComplex& k, const std::vector<MatchingFileEntry>& entries);

std::string serialize_matching(const SimplicialComplex& k, const Matching& m);

}  // namespace morse
