#include "densify/greedy.hpp"

#include <functional>
#include <queue>
#include <stdexcept>

namespace densify {

PeelOrder peel(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> degree(n);
    std::size_t max_degree = 0;
    for (VertexId v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        max_degree = std::max(max_degree, degree[v]);
    }

    // Each bucket is a min-heap of ids. A vertex whose degree drops is pushed
    // again into the lower bucket; stale entries are skipped on pop.
    using MinHeap = std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>>;
    std::vector<MinHeap> bucket(max_degree + 1);
    for (VertexId v = 0; v < n; ++v) bucket[degree[v]].push(v);

    std::vector<std::uint8_t> removed(n, 0);
    std::vector<VertexId> removal;
    std::vector<std::size_t> removal_degree;
    removal.reserve(n);
    removal_degree.reserve(n);
    std::size_t low = 0;
    while (removal.size() < n) {
        while (bucket[low].empty()) ++low;
        const VertexId v = bucket[low].top();
        bucket[low].pop();
        if (removed[v] != 0 || degree[v] != low) continue;
        removed[v] = 1;
        removal.push_back(v);
        removal_degree.push_back(low);
        for (const VertexId w : g.neighbors(v)) {
            if (removed[w] != 0) continue;
            bucket[--degree[w]].push(w);
        }
        if (low > 0) --low;
    }

    PeelOrder out;
    out.order.assign(removal.rbegin(), removal.rend());
    out.removal_degree.assign(removal_degree.rbegin(), removal_degree.rend());
    std::vector<std::size_t> position(n);
    for (std::size_t p = 0; p < n; ++p) position[out.order[p]] = p;
    out.din.assign(n, 0);
    for (std::size_t p = 0; p < n; ++p) {
        for (const VertexId w : g.neighbors(out.order[p])) out.din[p] += position[w] < p ? 1 : 0;
    }
    return out;
}

std::vector<std::size_t> maximal_average_intervals(std::span<const std::size_t> y) {
    struct Block {
        std::size_t sum;
        std::size_t length;
    };
    // a.sum / a.length <= b.sum / b.length
    auto not_above = [](const Block& a, const Block& b) {
        return static_cast<unsigned __int128>(a.sum) * b.length <= static_cast<unsigned __int128>(b.sum) * a.length;
    };
    std::vector<Block> stack;
    for (const std::size_t value : y) {
        Block block{value, 1};
        while (!stack.empty() && not_above(stack.back(), block)) {
            block.sum += stack.back().sum;
            block.length += stack.back().length;
            stack.pop_back();
        }
        stack.push_back(block);
    }
    std::vector<std::size_t> ends;
    ends.reserve(stack.size());
    std::size_t end = 0;
    for (const Block& b : stack) ends.push_back(end += b.length);
    return ends;
}

Chain greedy_ld(const Graph& g) {
    const PeelOrder peeled = peel(g);
    const auto ends = maximal_average_intervals(peeled.din);
    Chain chain = Chain::from_prefixes(g, ChainKind::greedy, peeled.order, ends);

    // Block averages of din are the prefix outer densities.
    std::size_t begin = 0;
    for (std::size_t i = 0; i < ends.size(); ++i) {
        std::size_t sum = 0;
        for (std::size_t p = begin; p < ends[i]; ++p) sum += peeled.din[p];
        const Rational average(static_cast<Rational::int_type>(sum), static_cast<Rational::int_type>(ends[i] - begin));
        if (average != chain.step_density(i + 1)) throw std::logic_error("greedy_ld: block average mismatch");
        begin = ends[i];
    }
    chain.validate(g);
    return chain;
}

}  // namespace densify
