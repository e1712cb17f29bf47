#ifndef DENSIFY_CHAIN_HPP
#define DENSIFY_CHAIN_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "densify/graph.hpp"
#include "densify/rational.hpp"

namespace densify {

enum class ChainKind { exact, greedy, core, oracle };

std::string_view to_string(ChainKind kind) noexcept;

/// Nested chain of vertex sets  {} = B_0 < B_1 < ... < B_k = V.
///
/// Stored as one vertex order
/// plus cumulative sizes: B_i is the first sizes()[i] vertices of order().
/// Vertices inside a shell B_i \ B_{i-1} are kept in ascending id order.
///
/// step_density(i) is d(B_i, B_{i-1}) for 1 <= i <= k, always recomputed
/// from the graph when the chain is built. For the empty graph the chain is
/// the single set {} (= V) and has no steps.
class Chain {
public:
    Chain() = default;

    /// level[v] is the 1-based index of the smallest set containing v. Every
    /// level between 1 and max(level) must be used.
    static Chain from_levels(const Graph& g, ChainKind kind, std::span<const std::size_t> level);

    /// Prefixes of `order` with the given cumulative sizes (without the
    /// leading 0; the last size must equal the vertex count).
    static Chain from_prefixes(const Graph& g, ChainKind kind, std::span<const VertexId> order,
                               std::span<const std::size_t> prefix_sizes);

    [[nodiscard]] ChainKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t vertex_count() const noexcept { return order_.size(); }

    /// Number of sets including {} and V.
    [[nodiscard]] std::size_t length() const noexcept { return sizes_.size(); }
    /// Nonempty sets B_1..B_k.
    [[nodiscard]] std::size_t nonempty_count() const noexcept { return sizes_.size() - 1; }

    [[nodiscard]] const std::vector<std::size_t>& sizes() const noexcept { return sizes_; }
    [[nodiscard]] const std::vector<VertexId>& order() const noexcept { return order_; }

    [[nodiscard]] VertexSet set(std::size_t i) const;
    /// B_i \ B_{i-1}, i >= 1.
    [[nodiscard]] std::span<const VertexId> shell(std::size_t i) const;

    [[nodiscard]] const Rational& step_density(std::size_t i) const { return steps_.at(i - 1); }
    [[nodiscard]] const std::vector<Rational>& step_densities() const noexcept { return steps_; }

    /// Per-vertex 1-based index of the smallest set containing it.
    [[nodiscard]] std::vector<std::size_t> levels() const;

    /// Throws std::logic_error when a structural invariant fails: endpoints,
    /// strict nesting, step densities matching the graph, and strictly
    /// decreasing steps for exact, greedy and oracle chains.
    void validate(const Graph& g) const;

    /// Same sets; kind is ignored.
    [[nodiscard]] bool same_sets(const Chain& other) const;

private:
    ChainKind kind_ = ChainKind::exact;
    std::vector<VertexId> order_;
    std::vector<std::size_t> sizes_{0};
    std::vector<Rational> steps_;
};

/// d(B_i, B_{i-1}) for every step of a level assignment, computed in one
/// pass over the edges. Result index i-1 holds step i.
std::vector<Rational> step_densities_from_levels(const Graph& g, std::span<const std::size_t> level,
                                                 std::span<const std::size_t> sizes);

}  // namespace densify

#endif  // DENSIFY_CHAIN_HPP
