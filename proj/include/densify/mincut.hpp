#ifndef DENSIFY_MINCUT_HPP
#define DENSIFY_MINCUT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace densify {

using Capacity = std::int64_t;
using NodeId = std::uint32_t;

/// Directed s-t network with nonnegative integer capacities.
///
/// add_arc(u, v, c) adds a one-way arc. add_edge(u, v, c) adds an undirected
/// edge, i.e. two opposite arcs of capacity c that share residual capacity.
class FlowNetwork {
public:
    struct Arc {
        NodeId tail;
        NodeId head;
        Capacity capacity;
        bool undirected;
    };

    FlowNetwork(std::size_t nodes, NodeId source, NodeId sink);

    std::size_t add_arc(NodeId tail, NodeId head, Capacity capacity);
    std::size_t add_edge(NodeId a, NodeId b, Capacity capacity);

    [[nodiscard]] std::size_t node_count() const noexcept { return nodes_; }
    [[nodiscard]] NodeId source() const noexcept { return source_; }
    [[nodiscard]] NodeId sink() const noexcept { return sink_; }
    [[nodiscard]] const std::vector<Arc>& arcs() const noexcept { return arcs_; }

private:
    std::size_t nodes_;
    NodeId source_;
    NodeId sink_;
    std::vector<Arc> arcs_;
};

struct MinCut {
    Capacity value = 0;
    /// source_side[u] != 0 iff u is on the source side. This is the maximal
    /// minimum cut: every node that cannot reach the sink in the residual
    /// network of the maximum flow.
    std::vector<std::uint8_t> source_side;
    /// Flow per arc, in arcs() order. For undirected edges the value is the
    /// net flow from tail to head and may be negative.
    std::vector<Capacity> flow;
};

/// Exact maximum flow / minimum cut. Throws std::overflow_error when the
/// total source capacity does not fit in a Capacity.
MinCut min_cut(const FlowNetwork& net);

}  // namespace densify

#endif  // DENSIFY_MINCUT_HPP
