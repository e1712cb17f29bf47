#include "densify/chain.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace densify {

std::string_view to_string(ChainKind kind) noexcept {
    switch (kind) {
        case ChainKind::exact: return "exact";
        case ChainKind::greedy: return "greedy";
        case ChainKind::core: return "core";
        case ChainKind::oracle: return "oracle";
    }
    return "unknown";
}

std::vector<Rational> step_densities_from_levels(const Graph& g, std::span<const std::size_t> level,
                                                 std::span<const std::size_t> sizes) {
    const std::size_t steps = sizes.empty() ? 0 : sizes.size() - 1;
    std::vector<Rational::int_type> edges(steps, 0);
    for (const auto& [u, w] : g.edges()) ++edges[std::max(level[u], level[w]) - 1];
    std::vector<Rational> out;
    out.reserve(steps);
    for (std::size_t i = 1; i <= steps; ++i) {
        out.emplace_back(edges[i - 1], static_cast<Rational::int_type>(sizes[i] - sizes[i - 1]));
    }
    return out;
}

Chain Chain::from_levels(const Graph& g, ChainKind kind, std::span<const std::size_t> level) {
    const std::size_t n = g.vertex_count();
    if (level.size() != n) throw std::invalid_argument("level assignment has wrong length");
    const std::size_t k = n == 0 ? 0 : *std::max_element(level.begin(), level.end());

    std::vector<std::size_t> count(k + 1, 0);
    for (const std::size_t l : level) {
        if (l == 0) throw std::invalid_argument("levels are 1-based");
        ++count[l];
    }
    Chain c;
    c.kind_ = kind;
    c.sizes_.assign(k + 1, 0);
    for (std::size_t i = 1; i <= k; ++i) {
        if (count[i] == 0) throw std::invalid_argument("level " + std::to_string(i) + " is unused");
        c.sizes_[i] = c.sizes_[i - 1] + count[i];
    }
    c.order_.resize(n);
    std::vector<std::size_t> fill(c.sizes_.begin(), c.sizes_.end());
    for (VertexId v = 0; v < n; ++v) c.order_[fill[level[v] - 1]++] = v;
    c.steps_ = step_densities_from_levels(g, level, c.sizes_);
    return c;
}

Chain Chain::from_prefixes(const Graph& g, ChainKind kind, std::span<const VertexId> order,
                           std::span<const std::size_t> prefix_sizes) {
    const std::size_t n = g.vertex_count();
    if (order.size() != n) throw std::invalid_argument("order is not a permutation of the vertices");
    if (n > 0 && (prefix_sizes.empty() || prefix_sizes.back() != n)) {
        throw std::invalid_argument("last prefix must cover every vertex");
    }
    std::vector<std::size_t> level(n, 0);
    std::size_t begin = 0;
    for (std::size_t i = 0; i < prefix_sizes.size(); ++i) {
        if (prefix_sizes[i] <= begin) throw std::invalid_argument("prefix sizes must strictly increase");
        for (std::size_t p = begin; p < prefix_sizes[i]; ++p) {
            if (order[p] >= n || level[order[p]] != 0) {
                throw std::invalid_argument("order is not a permutation of the vertices");
            }
            level[order[p]] = i + 1;
        }
        begin = prefix_sizes[i];
    }
    return from_levels(g, kind, level);
}

VertexSet Chain::set(std::size_t i) const {
    const std::size_t size = sizes_.at(i);
    return VertexSet(order_.size(), std::span<const VertexId>(order_.data(), size));
}

std::span<const VertexId> Chain::shell(std::size_t i) const {
    if (i == 0 || i >= sizes_.size()) throw std::out_of_range("shell index out of range");
    return {order_.data() + sizes_[i - 1], order_.data() + sizes_[i]};
}

std::vector<std::size_t> Chain::levels() const {
    std::vector<std::size_t> level(order_.size(), 0);
    for (std::size_t i = 1; i < sizes_.size(); ++i) {
        for (std::size_t p = sizes_[i - 1]; p < sizes_[i]; ++p) level[order_[p]] = i;
    }
    return level;
}

void Chain::validate(const Graph& g) const {
    const std::size_t n = g.vertex_count();
    if (order_.size() != n) throw std::logic_error("chain: vertex count mismatch");
    if (sizes_.empty() || sizes_.front() != 0) throw std::logic_error("chain: must start with the empty set");
    if (sizes_.back() != n) throw std::logic_error("chain: must end with V");
    for (std::size_t i = 1; i < sizes_.size(); ++i) {
        if (sizes_[i] <= sizes_[i - 1]) throw std::logic_error("chain: sets must be strictly nested");
    }
    std::vector<std::uint8_t> seen(n, 0);
    for (const VertexId v : order_) {
        if (v >= n || seen[v] != 0) throw std::logic_error("chain: order is not a permutation");
        seen[v] = 1;
    }
    const auto level = levels();
    if (step_densities_from_levels(g, level, sizes_) != steps_) {
        throw std::logic_error("chain: step densities disagree with the graph");
    }
    if (kind_ != ChainKind::core) {
        for (std::size_t i = 1; i < steps_.size(); ++i) {
            if (!(steps_[i] < steps_[i - 1])) throw std::logic_error("chain: step densities must strictly decrease");
        }
    }
}

bool Chain::same_sets(const Chain& other) const {
    return sizes_ == other.sizes_ && levels() == other.levels();
}

}  // namespace densify
