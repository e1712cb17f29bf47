#ifndef DENSIFY_CORE_HPP
#define DENSIFY_CORE_HPP

#include <cstddef>
#include <vector>

#include "densify/chain.hpp"
#include "densify/graph.hpp"

namespace densify {

struct CoreResult {
    Chain chain;                           ///< distinct k-cores, innermost first
    std::vector<std::size_t> core_number;  ///< per vertex id
    std::vector<std::size_t> core_value;   ///< k of chain set i, at index i-1
};

/// Matula-Beck k-core decomposition on the smallest-id-first peel order.
/// A vertex's core number is the largest removal degree seen up to and
/// including its own removal.
CoreResult core_decomposition(const Graph& g);

}  // namespace densify

#endif  // DENSIFY_CORE_HPP
