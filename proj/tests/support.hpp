#ifndef DENSIFY_TESTS_SUPPORT_HPP
#define DENSIFY_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "densify/graph.hpp"

namespace densify::testing {

inline constexpr const char* kG1 =
    "a b\na c\na d\nb c\nb d\nc d\nb e\nd e\ne f\n";

inline constexpr const char* kG2 =
    "a b\na c\nb c\nb d\nc d\nc e\nd e\nc h\ng h\nf h\nf g\n";

inline Graph parse(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in).graph;
}

inline Graph g1() { return parse(kG1); }
inline Graph g2() { return parse(kG2); }

inline Graph erdos_renyi(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId w = u + 1; w < n; ++w) {
            if (coin(rng)) edges.emplace_back(u, w);
        }
    }
    return Graph::from_edges(n, edges);
}

inline Graph complete(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId w = u + 1; w < n; ++w) edges.emplace_back(u, w);
    }
    return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId u = 0; u < n; ++u) edges.emplace_back(u, static_cast<VertexId>((u + 1) % n));
    return Graph::from_edges(n, edges);
}

/// Random vertex subset of g, each vertex kept with probability p.
inline VertexSet random_subset(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v) {
        if (coin(rng)) s.insert(v);
    }
    return s;
}

/// The ER corpus used by the oracle comparisons: n in [1, 12] and
/// p in {0.2, 0.5, 0.8}, `count` graphs from a fixed seed.
inline std::vector<Graph> oracle_corpus(std::size_t count, std::uint64_t seed = 20240607) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    const double probabilities[] = {0.2, 0.5, 0.8};
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(erdos_renyi(size(rng), probabilities[i % 3], rng));
    return out;
}

}  // namespace densify::testing

#endif  // DENSIFY_TESTS_SUPPORT_HPP
