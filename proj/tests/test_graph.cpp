#include <doctest.h>

#include <random>
#include <sstream>
#include <stdexcept>

#include "densify/graph.hpp"
#include "support.hpp"

using namespace densify;
using densify::testing::g1;
using densify::testing::g2;

TEST_CASE("loader drops loops and collapses duplicates") {
    std::istringstream in("a b\nb c\nb c\na a");
    const LoadedGraph loaded = load_edge_list(in);
    CHECK(loaded.graph.vertex_count() == 3);
    CHECK(loaded.graph.edge_count() == 2);
    CHECK(loaded.stats.lines_read == 4);
    CHECK(loaded.stats.self_loops_dropped == 1);
    CHECK(loaded.stats.duplicates_collapsed == 1);
    CHECK(loaded.graph.label(0) == "a");
    CHECK(loaded.graph.label(2) == "c");
}

TEST_CASE("loader handles comments, blank lines and reversed duplicates") {
    std::istringstream in("# header\n\nx y\n  y x  \n# note\ny z\n");
    const LoadedGraph loaded = load_edge_list(in);
    CHECK(loaded.graph.vertex_count() == 3);
    CHECK(loaded.graph.edge_count() == 2);
    CHECK(loaded.stats.duplicates_collapsed == 1);
}

TEST_CASE("G1 and empty input") {
    const Graph g = g1();
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 9);
    std::istringstream empty("");
    const LoadedGraph e = load_edge_list(empty);
    CHECK(e.graph.vertex_count() == 0);
    CHECK(e.graph.edge_count() == 0);
}

TEST_CASE("malformed lines report their line number") {
    std::istringstream in("a b\n\nc d e\n");
    try {
        (void)load_edge_list(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    std::istringstream lone("a b\nq\n");
    CHECK_THROWS_AS((void)load_edge_list(lone), ParseError);
    CHECK_THROWS_AS((void)load_edge_list_file("/nonexistent/graph.txt"), std::runtime_error);
}

TEST_CASE("densities on the toy graphs") {
    const Graph a = g1();
    CHECK(density(a, vertex_set_by_labels(a, {"a", "b", "c", "d"})) == Rational(6, 4));
    CHECK(density(a, vertex_set_by_labels(a, {"a", "b", "c", "d", "e"})) == Rational(8, 5));
    CHECK(density(a, vertex_set_by_labels(a, {"f"})) == Rational(0));
    CHECK_THROWS_AS((void)density(a, VertexSet(a.vertex_count())), std::domain_error);
    const Graph b = g2();
    CHECK(density(b, vertex_set_by_labels(b, {"a", "b", "c", "d", "e"})) == Rational(7, 5));
    CHECK(density(b, VertexSet::all(b.vertex_count())) == Rational(11, 8));
}

TEST_CASE("outer density") {
    const Graph g = g1();
    const VertexSet abcd = vertex_set_by_labels(g, {"a", "b", "c", "d"});
    const VertexSet abcde = vertex_set_by_labels(g, {"a", "b", "c", "d", "e"});
    const VertexSet all = VertexSet::all(g.vertex_count());
    CHECK(outer_density(g, abcde, abcd) == Rational(2));
    CHECK(outer_density(g, all, abcde) == Rational(1));
    CHECK(outer_density(g, abcde, VertexSet(g.vertex_count())) == density(g, abcde));
    CHECK_THROWS_AS((void)outer_density(g, abcd, abcde), std::domain_error);
}

TEST_CASE("cross and marginal edge counts") {
    const Graph a = g1();
    const VertexSet e = vertex_set_by_labels(a, {"e"});
    const VertexSet abcd = vertex_set_by_labels(a, {"a", "b", "c", "d"});
    CHECK(cross_edge_count(a, e, abcd) == 2);
    CHECK(marginal_edge_count(a, e, abcd) == 2);
    const VertexSet none(a.vertex_count());
    CHECK(cross_edge_count(a, none, abcd) == 0);
    CHECK(marginal_edge_count(a, none, abcd) == 0);
    CHECK_THROWS_AS((void)cross_edge_count(a, abcd, abcd), std::domain_error);

    const Graph b = g2();
    const VertexSet fgh = vertex_set_by_labels(b, {"f", "g", "h"});
    const VertexSet abcde = vertex_set_by_labels(b, {"a", "b", "c", "d", "e"});
    CHECK(cross_edge_count(b, fgh, abcde) == 1);
    CHECK(marginal_edge_count(b, fgh, abcde) == 4);
}

TEST_CASE("edge counts agree with a direct pair scan") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const Graph g = densify::testing::erdos_renyi(1 + round % 15, 0.4, rng);
        const std::size_t n = g.vertex_count();
        const VertexSet x = densify::testing::random_subset(n, 0.4, rng);
        const VertexSet y = densify::testing::random_subset(n, 0.5, rng).set_difference(x);
        std::size_t inside = 0, cross = 0;
        for (VertexId u = 0; u < n; ++u) {
            for (VertexId w = u + 1; w < n; ++w) {
                if (!g.has_edge(u, w)) continue;
                if (x.contains(u) && x.contains(w)) ++inside;
                if ((x.contains(u) && y.contains(w)) || (y.contains(u) && x.contains(w))) ++cross;
            }
        }
        CHECK(internal_edge_count(g, x) == inside);
        CHECK(cross_edge_count(g, x, y) == cross);
        CHECK(marginal_edge_count(g, x, y) == inside + cross);
        if (!x.empty()) CHECK(outer_density(g, x, y) == Rational(inside + cross, x.size()));
        CHECK(density(g, VertexSet::all(n)) == Rational(g.edge_count(), n));
    }
}

TEST_CASE("writing and reloading yields the same graph") {
    std::mt19937_64 rng(3);
    for (int round = 0; round < 30; ++round) {
        const Graph g = densify::testing::erdos_renyi(2 + round, 0.3, rng);
        std::ostringstream out;
        write_edge_list(g, out);
        std::istringstream in(out.str());
        const Graph back = load_edge_list(in).graph;
        CHECK(back.edge_count() == g.edge_count());
        // isolated vertices do not survive an edge list
        std::size_t touched = 0;
        for (VertexId v = 0; v < g.vertex_count(); ++v) touched += g.degree(v) > 0;
        REQUIRE(back.vertex_count() == touched);
        for (const auto& [u, w] : back.edges()) {
            CHECK(g.has_edge(static_cast<VertexId>(std::stoul(back.label(u))),
                             static_cast<VertexId>(std::stoul(back.label(w)))));
        }
    }
}

TEST_CASE("vertex set algebra") {
    const VertexSet a(6, {0, 2, 4});
    const VertexSet b(6, {2, 3});
    CHECK(a.set_union(b) == VertexSet(6, {0, 2, 3, 4}));
    CHECK(a.set_difference(b) == VertexSet(6, {0, 4}));
    CHECK(!a.disjoint(b));
    CHECK(VertexSet(6, {2}).is_subset_of(a));
    CHECK(!b.is_subset_of(a));
    CHECK(VertexSet::all(6).size() == 6);
}
