#include "densify/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace densify::oracle {

namespace {

using Mask = std::uint32_t;

class MaskGraph {
public:
    MaskGraph(const Graph& g, std::size_t cap) : n_(g.vertex_count()) {
        if (n_ > cap) {
            throw TooLarge("oracle refuses graphs with more than " + std::to_string(cap) + " vertices (got " +
                           std::to_string(n_) + ")");
        }
        adj_.assign(n_, 0);
        for (VertexId v = 0; v < n_; ++v) {
            for (const VertexId w : g.neighbors(v)) adj_[v] |= Mask{1} << w;
        }
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] Mask full() const noexcept { return n_ == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n_) - 1); }

    [[nodiscard]] std::int64_t edges(Mask x) const noexcept {
        std::int64_t twice = 0;
        for (Mask rest = x; rest != 0; rest &= rest - 1) twice += std::popcount(adj_[std::countr_zero(rest)] & x);
        return twice / 2;
    }

    /// |E(X)| + |cross(X, Y)| for disjoint masks.
    [[nodiscard]] std::int64_t marginal(Mask x, Mask y) const noexcept {
        std::int64_t cross = 0;
        for (Mask rest = x; rest != 0; rest &= rest - 1) cross += std::popcount(adj_[std::countr_zero(rest)] & y);
        return edges(x) + cross;
    }

private:
    std::size_t n_;
    std::vector<Mask> adj_;
};

Mask to_mask(const VertexSet& s) {
    Mask m = 0;
    for (const VertexId v : s.ids()) m |= Mask{1} << v;
    return m;
}

VertexSet from_mask(std::size_t n, Mask m) {
    VertexSet s(n);
    for (Mask rest = m; rest != 0; rest &= rest - 1) s.insert(static_cast<VertexId>(std::countr_zero(rest)));
    return s;
}

// a/b < c/d for positive b, d.
bool less(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) { return a * d < c * b; }

}  // namespace

Densest brute_densest(const Graph& g) {
    const MaskGraph mg(g, kDensestCap);
    if (mg.n() == 0) throw std::domain_error("densest subgraph of an empty graph");
    Mask best = 0;
    std::int64_t best_edges = 0;
    std::int64_t best_size = 1;
    for (Mask m = 1; m <= mg.full() && m != 0; ++m) {
        const std::int64_t e = mg.edges(m);
        const std::int64_t s = std::popcount(m);
        if (best == 0 || less(best_edges, best_size, e, s) ||
            (!less(e, s, best_edges, best_size) && s > best_size)) {
            best = m;
            best_edges = e;
            best_size = s;
        }
    }
    return {from_mask(mg.n(), best), Rational(best_edges, best_size)};
}

Chain brute_locally_dense_chain(const Graph& g) {
    const MaskGraph mg(g, kChainCap);
    const std::size_t n = mg.n();
    std::vector<std::size_t> level(n, 0);
    Mask prev = 0;
    std::size_t index = 0;
    while (prev != mg.full()) {
        const Mask rest = mg.full() & ~prev;
        Mask best = 0;
        std::int64_t best_edges = 0;
        std::int64_t best_size = 1;
        for (Mask s = rest; s != 0; s = (s - 1) & rest) {
            const std::int64_t e = mg.marginal(s, prev);
            const std::int64_t size = std::popcount(s);
            if (best == 0 || less(best_edges, best_size, e, size) ||
                (!less(e, size, best_edges, best_size) && size > best_size)) {
                best = s;
                best_edges = e;
                best_size = size;
            }
        }
        ++index;
        for (Mask m = best; m != 0; m &= m - 1) level[static_cast<std::size_t>(std::countr_zero(m))] = index;
        prev |= best;
    }
    return Chain::from_levels(g, ChainKind::oracle, level);
}

bool is_locally_dense(const Graph& g, const VertexSet& w) {
    const MaskGraph mg(g, kChainCap);
    const Mask inside = to_mask(w);
    const Mask outside = mg.full() & ~inside;
    if (inside == 0 || outside == 0) return true;

    // Smallest d(X, W \ X) over nonempty X <= W.
    std::int64_t lo_num = 0;
    std::int64_t lo_den = 0;
    for (Mask x = inside; x != 0; x = (x - 1) & inside) {
        const std::int64_t e = mg.marginal(x, inside & ~x);
        const std::int64_t s = std::popcount(x);
        if (lo_den == 0 || less(e, s, lo_num, lo_den)) {
            lo_num = e;
            lo_den = s;
        }
    }
    // Largest d(Y, W) over nonempty Y outside W.
    std::int64_t hi_num = 0;
    std::int64_t hi_den = 0;
    for (Mask y = outside; y != 0; y = (y - 1) & outside) {
        const std::int64_t e = mg.marginal(y, inside);
        const std::int64_t s = std::popcount(y);
        if (hi_den == 0 || less(hi_num, hi_den, e, s)) {
            hi_num = e;
            hi_den = s;
        }
    }
    return less(hi_num, hi_den, lo_num, lo_den);
}

VertexSet brute_compact(const Graph& g, const Rational& alpha, const VertexSet& anchor, const VertexSet& universe) {
    const MaskGraph mg(g, kDensestCap);
    const Mask base = to_mask(anchor);
    const Mask free = to_mask(universe) & ~base;
    Mask best = base;
    std::int64_t best_score = 0;
    bool first = true;
    // Enumerate every subset of `free`, including the empty one.
    Mask s = free;
    while (true) {
        const Mask w = base | s;
        const std::int64_t score = mg.edges(w) * alpha.den() - alpha.num() * std::popcount(w);
        if (first || score > best_score || (score == best_score && std::popcount(w) > std::popcount(best))) {
            best = w;
            best_score = score;
            first = false;
        }
        if (s == 0) break;
        s = (s - 1) & free;
    }
    return from_mask(mg.n(), best);
}

}  // namespace densify::oracle
