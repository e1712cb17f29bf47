#include <doctest.h>

#include <random>

#include "densify/core.hpp"
#include "densify/exact.hpp"
#include "densify/metrics.hpp"
#include "support.hpp"

using namespace densify;
using densify::testing::g1;
using densify::testing::g2;

using Sizes = std::vector<std::size_t>;

TEST_CASE("cores of G1") {
    const Graph g = g1();
    const CoreResult r = core_decomposition(g);
    REQUIRE(r.chain.nonempty_count() == 3);
    CHECK(r.chain.set(1) == vertex_set_by_labels(g, {"a", "b", "c", "d"}));
    CHECK(r.chain.set(2) == vertex_set_by_labels(g, {"a", "b", "c", "d", "e"}));
    CHECK(r.chain.set(3) == VertexSet::all(6));
    CHECK(r.core_value == Sizes{3, 2, 1});
    CHECK(r.chain.step_densities() == std::vector<Rational>{Rational(3, 2), Rational(2), Rational(1)});
    CHECK(density(g, r.chain.set(1)) == Rational(6, 4));
    CHECK(density(g, r.chain.set(2)) == Rational(8, 5));
    CHECK(density(g, r.chain.set(3)) == Rational(9, 6));
}

TEST_CASE("cores of G2, a cycle and an empty graph") {
    const Graph g = g2();
    const CoreResult r = core_decomposition(g);
    CHECK(r.chain.nonempty_count() == 1);
    CHECK(r.core_value == Sizes{2});
    CHECK(r.chain.step_density(1) == Rational(11, 8));

    const CoreResult c5 = core_decomposition(densify::testing::cycle(5));
    CHECK(c5.chain.nonempty_count() == 1);
    CHECK(c5.core_value == Sizes{2});
    CHECK(c5.core_number == Sizes(5, 2));

    CHECK(core_decomposition(Graph()).chain.nonempty_count() == 0);
}

namespace {

// The k-core by repeated deletion of vertices with fewer than k neighbours.
VertexSet naive_core(const Graph& g, std::size_t k) {
    VertexSet alive = VertexSet::all(g.vertex_count());
    bool changed = true;
    while (changed) {
        changed = false;
        VertexSet next(g.vertex_count());
        for (const VertexId v : alive.ids()) {
            std::size_t d = 0;
            for (const VertexId w : g.neighbors(v)) d += alive.contains(w);
            if (d >= k) next.insert(v);
            else changed = true;
        }
        alive = next;
    }
    return alive;
}

}  // namespace

TEST_CASE("chain members are exactly the distinct k-cores") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 80; ++round) {
        const Graph g = densify::testing::erdos_renyi(1 + round % 35, 0.25, rng);
        const CoreResult r = core_decomposition(g);
        for (std::size_t i = 1; i < r.chain.length(); ++i) {
            CHECK(r.chain.set(i) == naive_core(g, r.core_value[i - 1]));
            if (i > 1) CHECK(r.core_value[i - 1] < r.core_value[i - 2]);
        }
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            CHECK(naive_core(g, r.core_number[v]).contains(v));
            CHECK(!naive_core(g, r.core_number[v] + 1).contains(v));
        }
    }
}

TEST_CASE("core profile stays within a factor two of the exact one") {
    const auto corpus = densify::testing::oracle_corpus(200, 59);
    for (const Graph& g : corpus) {
        CHECK(profile_ratio(core_decomposition(g).chain, exact_ld(g)) >= Rational(1, 2));
    }
}
