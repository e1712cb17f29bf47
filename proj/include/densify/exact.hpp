#ifndef DENSIFY_EXACT_HPP
#define DENSIFY_EXACT_HPP

#include <cstddef>
#include <vector>

#include "densify/chain.hpp"
#include "densify/graph.hpp"
#include "densify/mincut.hpp"
#include "densify/rational.hpp"

namespace densify {

/// One maximization  max { |E(W)| - alpha |W| : anchor <= W <= universe }.
struct AlphaQuery {
    Rational alpha;
    VertexSet anchor;
    VertexSet universe;
};

/// Flow network for an AlphaQuery plus the graph vertex behind each
/// non-terminal node.
struct CutNetwork {
    FlowNetwork network;
    std::vector<VertexId> vertex_of_node;  ///< indexed by node id; terminals map to the sentinel
};

/// Builds the anchored Goldberg network on the vertices universe \ anchor,
/// working in the induced subgraph G(universe). With alpha = p/q in lowest
/// terms every weight is multiplied by q:
///   internal edge       q        (both directions)
///   y -> sink           2p
///   source -> y         q * (deg(y; universe \ anchor) + 2 deg(y; anchor))
/// Node 0 is the source, node 1 the sink.
CutNetwork build_cut_network(const Graph& g, const AlphaQuery& query);

/// The largest W with anchor <= W <= universe maximizing |E(W)| - alpha |W|.
VertexSet compact_graph(const Graph& g, const AlphaQuery& query);

struct ExactStats {
    std::size_t cut_calls = 0;  ///< number of min-cut solves
};

/// Exact locally-dense decomposition. Starting from ({}, V), each interval
/// (X, Y) of known chain members is probed with
///   alpha = d(Y, X) + 1/n^2
/// (n is the vertex count of the whole graph). A maximizer Z != X is a new
/// chain member strictly between X and Y and splits the interval in two;
/// Z == X proves X and Y consecutive. Uses 2k - 3 cut calls for a chain of
/// k sets (k >= 2).
Chain exact_ld(const Graph& g, ExactStats* stats = nullptr);

}  // namespace densify

#endif  // DENSIFY_EXACT_HPP
