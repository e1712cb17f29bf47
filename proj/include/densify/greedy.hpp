#ifndef DENSIFY_GREEDY_HPP
#define DENSIFY_GREEDY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "densify/chain.hpp"
#include "densify/graph.hpp"

namespace densify {

/// Result of minimum-degree peeling.
///
/// order lists the vertices in reverse removal order (the last vertex
/// removed comes first). din and removal_degree are indexed by position in
/// order: din[p] counts neighbors of order[p] at earlier positions, and
/// removal_degree[p] is the degree of order[p] at the moment it was removed.
struct PeelOrder {
    std::vector<VertexId> order;
    std::vector<std::size_t> din;
    std::vector<std::size_t> removal_degree;
};

/// Repeatedly removes a vertex of minimum current degree, smallest id first
/// on ties. Degree buckets give O(n + m) bucket operations.
PeelOrder peel(const Graph& g);

/// Splits y into consecutive blocks by pool-adjacent-violators so that each
/// block is the longest maximum-average extension of the previous ones.
/// Returns the block end positions j_1 < ... < j_r = y.size() (the leading
/// 0 is implicit). Block averages strictly decrease.
std::vector<std::size_t> maximal_average_intervals(std::span<const std::size_t> y);

/// Approximate locally-dense decomposition: prefixes of the peel order cut
/// at the maximal-average blocks of din.
Chain greedy_ld(const Graph& g);

}  // namespace densify

#endif  // DENSIFY_GREEDY_HPP
