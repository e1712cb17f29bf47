#include "densify/core.hpp"

#include <algorithm>

#include "densify/greedy.hpp"

namespace densify {

CoreResult core_decomposition(const Graph& g) {
    const std::size_t n = g.vertex_count();
    const PeelOrder peeled = peel(g);

    CoreResult out;
    out.core_number.assign(n, 0);
    // Walk in removal order (back to front of the reversed order).
    std::vector<std::size_t> ends;
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t p = n - 1 - i;
        k = std::max(k, peeled.removal_degree[p]);
        out.core_number[peeled.order[p]] = k;
    }
    // Core numbers are non-increasing along order, so each k-core is a prefix.
    for (std::size_t p = 0; p < n; ++p) {
        const bool last_of_shell = p + 1 == n || out.core_number[peeled.order[p + 1]] != out.core_number[peeled.order[p]];
        if (last_of_shell) {
            ends.push_back(p + 1);
            out.core_value.push_back(out.core_number[peeled.order[p]]);
        }
    }
    out.chain = Chain::from_prefixes(g, ChainKind::core, peeled.order, ends);
    return out;
}

}  // namespace densify
