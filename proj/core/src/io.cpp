#include "morse/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace morse {

namespace {

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

bool skippable(std::string_view line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (ch != ' ' && ch != '\t' && ch != '\r') return false;
    }
    return true;
}

Simplex parse_simplex(std::string_view text, std::size_t line) {
    std::vector<Vertex> verts;
    for (std::string_view tok : tokens(text)) {
        Vertex v = 0;
        const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc{} || end != tok.data() + tok.size())
            throw ParseError(line, "malformed token '" + std::string(tok) + "'");
        verts.push_back(v);
    }
    if (verts.empty()) throw ParseError(line, "empty simplex");
    try {
        return Simplex(std::move(verts));
    } catch (const Error& e) {
        throw ParseError(line, e.what());
    }
}

std::ifstream open_for_read(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    return in;
}

}  // namespace

SimplicialComplex parse_complex(std::istream& in) {
    std::vector<Simplex> facets;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        Simplex s = parse_simplex(line, lineno);
        if (s.vertices().size() > 24) throw ParseError(lineno, "facet has more than 24 vertices");
        facets.push_back(std::move(s));
    }
    if (facets.empty()) throw ParseError(0, "empty complex");
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex read_complex(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    return parse_complex(in);
}

std::string serialize_complex(const SimplicialComplex& k) {
    std::string out;
    for (const Simplex& s : k.maximal_simplices()) {
        bool first = true;
        for (Vertex v : s.vertices()) {
            if (!first) out += ' ';
            out += std::to_string(v);
            first = false;
        }
        out += '\n';
    }
    return out;
}

void write_complex(const SimplicialComplex& k, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << serialize_complex(k);
}

std::vector<MatchingFileEntry> parse_matching(std::istream& in) {
    std::vector<MatchingFileEntry> out;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        const auto semi = line.find(';');
        if (semi == std::string::npos || line.find(';', semi + 1) != std::string::npos)
            throw ParseError(lineno, "expected '<lower> ; <upper>'");
        const std::string_view view(line);
        out.push_back({lineno, parse_simplex(view.substr(0, semi), lineno),
                       parse_simplex(view.substr(semi + 1), lineno)});
    }
    return out;
}

std::vector<MatchingFileEntry> read_matching(const std::filesystem::path& path) {
    auto in = open_for_read(path);
    return parse_matching(in);
}

ResolvedMatching resolve_matching(const SimplicialComplex& k, const std::vector<MatchingFileEntry>& entries) {
    ResolvedMatching r{Matching(k.size()), {}};
    auto where = [](const MatchingFileEntry& e) { return "line " + std::to_string(e.line) + ": "; };
    for (const auto& e : entries) {
        const auto lo = k.find(e.lower);
        const auto up = k.find(e.upper);
        if (!lo) r.problems.push_back(where(e) + "unknown simplex " + e.lower.to_string());
        if (!up) r.problems.push_back(where(e) + "unknown simplex " + e.upper.to_string());
        if (!lo || !up) continue;
        if (e.lower.dimension() + 1 != e.upper.dimension() || !e.lower.is_face_of(e.upper)) {
            r.problems.push_back(where(e) + e.lower.to_string() + " is not a facet of " + e.upper.to_string());
            continue;
        }
        if (r.matching.is_matched(*lo) || r.matching.is_matched(*up)) {
            const Simplex& again = r.matching.is_matched(*lo) ? e.lower : e.upper;
            r.problems.push_back(where(e) + again.to_string() + " is matched twice");
            continue;
        }
        r.matching.add_unchecked({*lo, *up});
    }
    return r;
}

std::string serialize_matching(const SimplicialComplex& k, const Matching& m) {
    std::ostringstream out;
    auto put = [&](const Simplex& s) {
        bool first = true;
        for (Vertex v : s.vertices()) {
            if (!first) out << ' ';
            out << v;
            first = false;
        }
    };
    for (const Pair& p : m.pairs()) {
        put(k.simplex(p.lower));
        out << " ; ";
        put(k.simplex(p.upper));
        out << '\n';
    }
    return out.str();
}

}  // namespace morse
