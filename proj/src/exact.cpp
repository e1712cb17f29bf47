#include "densify/exact.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace densify {

namespace {

constexpr NodeId kSource = 0;
constexpr NodeId kSink = 1;
constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

enum class Role : std::uint8_t { outside, anchor, inner };

struct FrontierDegrees {
    std::vector<Capacity> inner;   // deg(y; universe \ anchor)
    std::vector<Capacity> anchor;  // deg(y; anchor)
    Capacity internal_edges = 0;
    Capacity cross_edges = 0;
};

template <class RoleOf>
FrontierDegrees frontier_degrees(const Graph& g, std::span<const VertexId> frontier, RoleOf role_of) {
    FrontierDegrees d;
    d.inner.assign(frontier.size(), 0);
    d.anchor.assign(frontier.size(), 0);
    Capacity twice_internal = 0;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        for (const VertexId w : g.neighbors(frontier[i])) {
            switch (role_of(w)) {
                case Role::inner: ++d.inner[i]; break;
                case Role::anchor: ++d.anchor[i]; break;
                case Role::outside: break;
            }
        }
        twice_internal += d.inner[i];
        d.cross_edges += d.anchor[i];
    }
    d.internal_edges = twice_internal / 2;
    return d;
}

Capacity checked_mul(Capacity a, Capacity b) {
    Capacity out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("cut network capacity overflows");
    return out;
}

// node_of is scratch indexed by vertex; entries for the frontier are
// overwritten here and only read for frontier vertices.
template <class RoleOf>
CutNetwork assemble(const Graph& g, const Rational& alpha, std::span<const VertexId> frontier,
                    const FrontierDegrees& degrees, RoleOf role_of, std::vector<NodeId>& node_of) {
    if (alpha < Rational(0)) throw std::domain_error("alpha must be nonnegative");
    const Capacity scale = alpha.den();
    const Capacity sink_cap = checked_mul(2, alpha.num());

    CutNetwork out{FlowNetwork(frontier.size() + 2, kSource, kSink), {}};
    out.vertex_of_node.assign(frontier.size() + 2, kNoVertex);
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        const auto node = static_cast<NodeId>(i + 2);
        node_of[frontier[i]] = node;
        out.vertex_of_node[node] = frontier[i];
    }
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        const auto node = static_cast<NodeId>(i + 2);
        const Capacity weight = degrees.inner[i] + 2 * degrees.anchor[i];
        out.network.add_arc(kSource, node, checked_mul(scale, weight));
        out.network.add_arc(node, kSink, sink_cap);
        const VertexId y = frontier[i];
        for (const VertexId w : g.neighbors(y)) {
            if (y < w && role_of(w) == Role::inner) out.network.add_edge(node, node_of[w], scale);
        }
    }
    return out;
}

void check_query(const Graph& g, const AlphaQuery& q) {
    const std::size_t n = g.vertex_count();
    if (q.anchor.universe() != n || q.universe.universe() != n) {
        throw std::domain_error("query sets belong to a different graph");
    }
    if (!q.anchor.is_subset_of(q.universe) || q.anchor.size() == q.universe.size()) {
        throw std::domain_error("anchor must be a proper subset of the universe");
    }
    if (q.alpha < Rational(0)) throw std::domain_error("alpha must be nonnegative");
}

}  // namespace

CutNetwork build_cut_network(const Graph& g, const AlphaQuery& query) {
    check_query(g, query);
    const VertexSet frontier = query.universe.set_difference(query.anchor);
    auto role_of = [&](VertexId v) {
        if (query.anchor.contains(v)) return Role::anchor;
        return frontier.contains(v) ? Role::inner : Role::outside;
    };
    const auto degrees = frontier_degrees(g, frontier.ids(), role_of);
    std::vector<NodeId> node_of(g.vertex_count(), 0);
    return assemble(g, query.alpha, frontier.ids(), degrees, role_of, node_of);
}

VertexSet compact_graph(const Graph& g, const AlphaQuery& query) {
    const CutNetwork net = build_cut_network(g, query);
    const MinCut cut = min_cut(net.network);
    VertexSet out = query.anchor;
    for (NodeId node = 2; node < net.vertex_of_node.size(); ++node) {
        if (cut.source_side[node] != 0) out.insert(net.vertex_of_node[node]);
    }
    return out;
}

Chain exact_ld(const Graph& g, ExactStats* stats) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return Chain::from_levels(g, ChainKind::exact, {});

    // bound[v] is the size of the smallest chain member found so far that
    // contains v. Members are nested, so v lies in a known member S exactly
    // when bound[v] <= |S|.
    std::vector<std::size_t> bound(n, n);
    std::vector<NodeId> node_of(n, 0);
    const Rational step(1, checked_mul(static_cast<Capacity>(n), static_cast<Capacity>(n)));

    struct Interval {
        std::size_t inner_size;  // |X|
        std::size_t outer_size;  // |Y|
        std::vector<VertexId> frontier;  // Y \ X
    };
    std::vector<Interval> work;
    {
        std::vector<VertexId> all(n);
        for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<VertexId>(v);
        work.push_back({0, n, std::move(all)});
    }

    std::size_t calls = 0;
    while (!work.empty()) {
        Interval item = std::move(work.back());
        work.pop_back();

        auto role_of = [&, x = item.inner_size, y = item.outer_size](VertexId v) {
            if (bound[v] <= x) return Role::anchor;
            return bound[v] <= y ? Role::inner : Role::outside;
        };
        const auto degrees = frontier_degrees(g, item.frontier, role_of);
        const Rational outer(degrees.internal_edges + degrees.cross_edges,
                             static_cast<Rational::int_type>(item.frontier.size()));
        const Rational alpha = outer + step;

        const CutNetwork net = assemble(g, alpha, item.frontier, degrees, role_of, node_of);
        const MinCut cut = min_cut(net.network);
        ++calls;

        std::vector<VertexId> taken;
        std::vector<VertexId> rest;
        for (std::size_t i = 0; i < item.frontier.size(); ++i) {
            (cut.source_side[i + 2] != 0 ? taken : rest).push_back(item.frontier[i]);
        }
        if (taken.empty()) continue;
        if (rest.empty()) throw std::logic_error("exact_ld: maximizer reached the outer member");

        const std::size_t middle = item.inner_size + taken.size();
        for (const VertexId v : taken) bound[v] = middle;
        work.push_back({item.inner_size, middle, std::move(taken)});
        work.push_back({middle, item.outer_size, std::move(rest)});
    }
    if (stats != nullptr) stats->cut_calls = calls;

    std::vector<std::size_t> sizes(bound.begin(), bound.end());
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    std::vector<std::size_t> level(n);
    for (std::size_t v = 0; v < n; ++v) {
        level[v] = static_cast<std::size_t>(std::lower_bound(sizes.begin(), sizes.end(), bound[v]) - sizes.begin()) + 1;
    }
    Chain chain = Chain::from_levels(g, ChainKind::exact, level);
    chain.validate(g);
    return chain;
}

}  // namespace densify
