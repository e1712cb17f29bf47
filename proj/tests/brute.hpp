#ifndef DENSIFY_TESTS_BRUTE_HPP
#define DENSIFY_TESTS_BRUTE_HPP

// Exhaustive reference implementations used to certify the fast algorithms.

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "densify/metrics.hpp"
#include "densify/mincut.hpp"

namespace densify::testing {

struct BruteCut {
    Capacity value = 0;
    std::vector<std::uint8_t> maximal_side;
};

inline Capacity cut_value(const FlowNetwork& net, std::uint32_t side_mask) {
    Capacity total = 0;
    for (const auto& arc : net.arcs()) {
        const bool tail_in = (side_mask >> arc.tail) & 1U;
        const bool head_in = (side_mask >> arc.head) & 1U;
        if (tail_in && !head_in) total += arc.capacity;
        if (arc.undirected && head_in && !tail_in) total += arc.capacity;
    }
    return total;
}

/// Enumerates every s-t cut. The maximal side is the union of all minimum
/// source sides.
inline BruteCut brute_min_cut(const FlowNetwork& net) {
    const std::size_t n = net.node_count();
    BruteCut best;
    best.value = std::numeric_limits<Capacity>::max();
    std::uint32_t union_mask = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        if (!((mask >> net.source()) & 1U) || ((mask >> net.sink()) & 1U)) continue;
        const Capacity v = cut_value(net, mask);
        if (v < best.value) {
            best.value = v;
            union_mask = mask;
        } else if (v == best.value) {
            union_mask |= mask;
        }
    }
    best.maximal_side.assign(n, 0);
    for (std::size_t u = 0; u < n; ++u) best.maximal_side[u] = (union_mask >> u) & 1U;
    return best;
}

/// A random network on `nodes` nodes with capacities in [0, max_cap]; node 0
/// is the source and the last node the sink.
inline FlowNetwork random_network(std::size_t nodes, Capacity max_cap, std::mt19937_64& rng) {
    FlowNetwork net(nodes, 0, static_cast<NodeId>(nodes - 1));
    std::uniform_int_distribution<Capacity> cap(0, max_cap);
    std::bernoulli_distribution present(0.45);
    std::bernoulli_distribution undirected(0.3);
    for (NodeId u = 0; u < nodes; ++u) {
        for (NodeId w = 0; w < nodes; ++w) {
            if (u == w || !present(rng)) continue;
            if (undirected(rng)) {
                if (u < w) net.add_edge(u, w, cap(rng));
            } else {
                net.add_arc(u, w, cap(rng));
            }
        }
    }
    return net;
}

/// Flow feasibility: capacity bounds, conservation, and value leaving s.
inline bool flow_is_feasible(const FlowNetwork& net, const MinCut& cut) {
    std::vector<Capacity> excess(net.node_count(), 0);
    for (std::size_t i = 0; i < net.arcs().size(); ++i) {
        const auto& arc = net.arcs()[i];
        const Capacity f = cut.flow[i];
        if (arc.undirected ? (f > arc.capacity || -f > arc.capacity) : (f < 0 || f > arc.capacity)) return false;
        excess[arc.tail] -= f;
        excess[arc.head] += f;
    }
    for (NodeId u = 0; u < net.node_count(); ++u) {
        if (u == net.source() || u == net.sink()) continue;
        if (excess[u] != 0) return false;
    }
    return excess[net.sink()] == cut.value && -excess[net.source()] == cut.value;
}

/// For each start j, the end i > j maximizing mean(y[j, i)), largest i on
/// ties. Quadratic.
inline std::vector<std::size_t> naive_intervals(std::span<const std::size_t> y) {
    std::vector<std::size_t> ends;
    std::size_t j = 0;
    while (j < y.size()) {
        std::size_t best_end = j + 1;
        std::uint64_t best_sum = y[j];
        std::uint64_t sum = 0;
        for (std::size_t i = j + 1; i <= y.size(); ++i) {
            sum += y[i - 1];
            // sum / (i - j) >= best_sum / (best_end - j)
            if (sum * (best_end - j) >= best_sum * (i - j)) {
                best_end = i;
                best_sum = sum;
            }
        }
        ends.push_back(best_end);
        j = best_end;
    }
    return ends;
}

inline KendallCounts naive_kendall_counts(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    KendallCounts c;
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            const bool ta = a[i] == a[j];
            const bool tb = b[i] == b[j];
            if (ta && tb) ++c.tied_both;
            else if (ta) ++c.tied_a_only;
            else if (tb) ++c.tied_b_only;
            else if ((a[i] < a[j]) == (b[i] < b[j])) ++c.concordant;
            else ++c.discordant;
        }
    }
    return c;
}

inline std::optional<double> naive_tau_b(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    const KendallCounts c = naive_kendall_counts(a, b);
    const double pq = static_cast<double>(c.concordant + c.discordant);
    const double left = pq + static_cast<double>(c.tied_a_only);
    const double right = pq + static_cast<double>(c.tied_b_only);
    if (left == 0 || right == 0) return std::nullopt;
    return (static_cast<double>(c.concordant) - static_cast<double>(c.discordant)) / std::sqrt(left * right);
}

}  // namespace densify::testing

#endif  // DENSIFY_TESTS_BRUTE_HPP
