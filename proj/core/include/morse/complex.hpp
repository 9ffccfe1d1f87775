#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <ranges>
#include <span>
#include <string>
#include <vector>

#include "morse/error.hpp"

namespace morse {

using Vertex = std::uint32_t;
using SimplexId = std::uint32_t;

inline constexpr SimplexId kNoSimplex = std::numeric_limits<SimplexId>::max();

/// A non-empty finite set of vertices, kept sorted so that equality is set
/// equality. Simplices order by (dimension, lexicographic vertices), which is
/// the canonical order used for every id and every tie-break downstream.
class Simplex {
public:
    /// Throws Error("empty simplex") or Error("degenerate facet") on repeated ids.
    explicit Simplex(std::vector<Vertex> vertices);
    Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

    int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    Vertex front() const noexcept { return vertices_.front(); }

    /// True when every vertex of this simplex is a vertex of `other`.
    bool is_face_of(const Simplex& other) const;

    std::string to_string() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b);

private:
    struct Unchecked {};
    Simplex(Unchecked, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}
    friend std::vector<Simplex> facets_of(const Simplex& s);
    friend class SimplicialComplex;

    std::vector<Vertex> vertices_;
};

/// Codimension-1 faces in canonical order; empty for a vertex.
std::vector<Simplex> facets_of(const Simplex& s);

/// Contiguous block of ids; all simplices of one dimension form such a block.
struct IdRange {
    SimplexId first = 0;
    SimplexId last = 0;  // one past the end

    std::size_t size() const noexcept { return last - first; }
    bool empty() const noexcept { return first == last; }
    auto ids() const { return std::views::iota(first, last); }
    bool contains(SimplexId id) const noexcept { return id >= first && id < last; }
};

/// Immutable, downward-closed set of simplices. Copies share storage.
///
/// Simplex ids are positions in the canonical order, so ids of dimension d are
/// contiguous and a facet always has a smaller id than its cofaces.
class SimplicialComplex {
public:
    /// Downward closure of the given facets.
    /// Errors: "empty complex" for an empty list, "degenerate facet" for a
    /// facet with repeated vertices, "empty facet" for an empty facet.
    static SimplicialComplex from_maximal_simplices(const std::vector<std::vector<Vertex>>& facets);
    static SimplicialComplex from_facets(const std::vector<Simplex>& facets);

    /// Builds from an explicit simplex set, which must already be downward
    /// closed (throws Error("not downward closed") otherwise).
    static SimplicialComplex from_simplices(std::vector<Simplex> simplices);

    std::size_t size() const noexcept { return data_->simplices.size(); }
    int dimension() const noexcept { return data_->dimension; }

    std::span<const Simplex> simplices() const noexcept { return data_->simplices; }
    const Simplex& simplex(SimplexId id) const { return data_->simplices.at(id); }
    int dim(SimplexId id) const { return data_->simplices[id].dimension(); }

    std::optional<SimplexId> find(const Simplex& s) const;
    /// Throws Error("unknown simplex").
    SimplexId id_of(const Simplex& s) const;

    std::span<const SimplexId> facets(SimplexId id) const;
    std::span<const SimplexId> cofacets(SimplexId id) const;

    IdRange of_dimension(int d) const;
    std::size_t count(int d) const { return of_dimension(d).size(); }

    std::vector<Simplex> maximal_simplices() const;

    std::size_t num_components() const noexcept { return data_->num_components; }
    bool is_connected() const noexcept { return data_->num_components == 1; }
    /// Component index of every vertex id (ids of dimension 0).
    std::span<const std::uint32_t> vertex_components() const noexcept { return data_->component; }

private:
    struct Data {
        std::vector<Simplex> simplices;
        std::vector<std::uint32_t> facet_offset;
        std::vector<SimplexId> facet_ids;
        std::vector<std::uint32_t> cofacet_offset;
        std::vector<SimplexId> cofacet_ids;
        std::vector<IdRange> by_dimension;
        std::vector<std::uint32_t> component;
        std::size_t num_components = 0;
        int dimension = -1;
    };

    explicit SimplicialComplex(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
    static SimplicialComplex build(std::vector<Simplex> sorted_unique);

    std::shared_ptr<const Data> data_;
};

/// Codimension-1 cofaces of `s` within `k`, canonical order.
/// Throws Error("unknown simplex") when s is not in k.
std::vector<Simplex> cofacets_of(const SimplicialComplex& k, const Simplex& s);

/// Alternating count of simplices by dimension.
std::int64_t euler_characteristic(const SimplicialComplex& k);

}  // namespace morse
