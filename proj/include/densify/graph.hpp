#ifndef DENSIFY_GRAPH_HPP
#define DENSIFY_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "densify/rational.hpp"

namespace densify {

using VertexId = std::uint32_t;

/// Thrown by load_edge_list on a malformed line. line() is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Immutable simple undirected graph stored as compressed adjacency.
///
/// Vertex ids are 0..n-1, every neighbor list is sorted ascending and each
/// edge appears in both endpoint lists. labels()[v] is the name the vertex
/// had in the input.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on n vertices. Self-loops are dropped and parallel
    /// edges collapsed. Labels default to the decimal vertex id.
    static Graph from_edges(std::size_t n, std::span<const std::pair<VertexId, VertexId>> edges,
                            std::vector<std::string> labels = {});

    [[nodiscard]] std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    [[nodiscard]] std::size_t edge_count() const noexcept { return targets_.size() / 2; }

    [[nodiscard]] std::span<const VertexId> neighbors(VertexId v) const noexcept {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
    [[nodiscard]] bool has_edge(VertexId u, VertexId w) const noexcept;

    [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
    [[nodiscard]] const std::string& label(VertexId v) const noexcept { return labels_[v]; }

    /// Edges as (u, w) with u < w, sorted lexicographically.
    [[nodiscard]] std::vector<std::pair<VertexId, VertexId>> edges() const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> targets_;
    std::vector<std::string> labels_;
};

struct LoadStats {
    std::size_t lines_read = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicates_collapsed = 0;
};

struct LoadedGraph {
    Graph graph;
    LoadStats stats;
};

/// Parses "u w" lines. '#' starts a comment line, blank lines are skipped,
/// labels become ids in order of first appearance.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

/// Writes the graph back as an edge list using its labels.
void write_edge_list(const Graph& g, std::ostream& out);

/// Subset of the vertices of a graph with n vertices, stored as a sorted id
/// list alongside a membership mask.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : mask_(universe, 0) {}
    VertexSet(std::size_t universe, std::span<const VertexId> ids);
    VertexSet(std::size_t universe, std::initializer_list<VertexId> ids)
        : VertexSet(universe, std::span<const VertexId>(ids.begin(), ids.size())) {}

    static VertexSet all(std::size_t universe);

    [[nodiscard]] std::size_t universe() const noexcept { return mask_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return ids_.size(); }
    [[nodiscard]] bool empty() const noexcept { return ids_.empty(); }
    [[nodiscard]] bool contains(VertexId v) const noexcept { return v < mask_.size() && mask_[v] != 0; }
    [[nodiscard]] const std::vector<VertexId>& ids() const noexcept { return ids_; }

    void insert(VertexId v);

    [[nodiscard]] bool is_subset_of(const VertexSet& other) const noexcept;
    [[nodiscard]] VertexSet set_union(const VertexSet& other) const;
    [[nodiscard]] VertexSet set_difference(const VertexSet& other) const;
    [[nodiscard]] bool disjoint(const VertexSet& other) const noexcept;

    friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
        return a.mask_.size() == b.mask_.size() && a.ids_ == b.ids_;
    }

private:
    std::vector<std::uint8_t> mask_;
    std::vector<VertexId> ids_;
};

/// Looks up vertices by label; throws std::out_of_range for unknown labels.
VertexSet vertex_set_by_labels(const Graph& g, std::initializer_list<std::string_view> labels);

/// |E(X)|: edges with both endpoints in X.
std::size_t internal_edge_count(const Graph& g, const VertexSet& x);

/// |cross(X, Y)| for disjoint X and Y.
std::size_t cross_edge_count(const Graph& g, const VertexSet& x, const VertexSet& y);

/// |E(X)| + |cross(X, Y)| for disjoint X and Y.
std::size_t marginal_edge_count(const Graph& g, const VertexSet& x, const VertexSet& y);

/// |E(X)| / |X|. X must be nonempty.
Rational density(const Graph& g, const VertexSet& x);

/// Outer density of X with respect to Y, taken over X \ Y:
/// (|E(X\Y)| + |cross(X\Y, Y)|) / |X\Y|. X must not be a subset of Y.
Rational outer_density(const Graph& g, const VertexSet& x, const VertexSet& y);

}  // namespace densify

#endif  // DENSIFY_GRAPH_HPP
