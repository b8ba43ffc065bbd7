#include "oracles.hpp"

#include "vstab/errors.hpp"
#include "vstab/graph.hpp"

#include <doctest.h>

#include <sstream>

using namespace vstab;

namespace {

// C(r,1) directly from its definition: (y,i) ~ (y±1, j)
Graph cr1(std::size_t r) {
    std::vector<Edge> e;
    for (Point y = 0; y < r; ++y)
        for (Point i = 0; i < 2; ++i)
            for (Point j = 0; j < 2; ++j) e.emplace_back(2 * y + i, static_cast<Point>(2 * ((y + 1) % r) + j));
    return Graph::from_edges(2 * r, e);
}

Partition fibres(std::size_t r) {
    Partition p;
    for (Point y = 0; y < r; ++y) p.push_back({2 * y, 2 * y + 1});
    return p;
}

std::vector<Permutation> wreath_gens(std::size_t r) {
    std::size_t n = 2 * r;
    std::vector<Point> swap(n), rot(n), ref(n);
    for (std::size_t y = 0; y < r; ++y)
        for (std::size_t i = 0; i < 2; ++i) {
            std::size_t p = 2 * y + i;
            swap[p] = static_cast<Point>(y == 0 ? 1 - i : p);
            rot[p] = static_cast<Point>(2 * ((y + 1) % r) + i);
            ref[p] = static_cast<Point>(2 * ((r - y) % r) + i);
        }
    return {Permutation(swap), Permutation(rot), Permutation(ref)};
}

} // namespace

TEST_CASE("graph construction invariants") {
    Graph g = Graph::from_edges(4, {{2, 0}, {0, 1}, {3, 0}});
    auto nb = g.neighbours(0);
    CHECK(std::vector<Point>(nb.begin(), nb.end()) == std::vector<Point>{1, 2, 3});
    CHECK(g.adjacent(1, 0));
    CHECK(g.size() == 3);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), NotSimple);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), NotSimple);
    CHECK(Graph::from_edges_merging(3, {{0, 1}, {1, 0}}).size() == 1);
}

TEST_CASE("structural queries") {
    Graph c6 = cycle_graph(6);
    CHECK(is_connected(c6));
    CHECK(valency_list(c6) == std::vector<std::size_t>(6, 2));
    CHECK(girth(c6) == 6);
    Graph k44 = cr1(4);
    CHECK(is_connected(k44));
    CHECK(is_regular(k44, 4));
    CHECK(girth(k44) == 4);
    CHECK(girth(path_graph(4)) == 0);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(triangle_count(complete_graph(4)) == 4);
    CHECK(four_cycle_count(complete_graph(4)) == 3);
    CHECK(four_cycle_count(complete_bipartite(3, 3)) == 9);
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(is_bipartite(c6));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
}

TEST_CASE("quotient graph") {
    Graph c6 = cycle_graph(6);
    Partition singles;
    for (Point v = 0; v < 6; ++v) singles.push_back({v});
    CHECK(quotient_graph(c6, singles).graph == c6);
    for (std::size_t r = 3; r <= 8; ++r) {
        auto q = quotient_graph(cr1(r), fibres(r));
        CHECK(q.graph == cycle_graph(r));
    }
    auto q = quotient_graph(complete_graph(4), {{0, 1}, {2, 3}});
    CHECK(q.graph.order() == 2);
    CHECK(q.graph.size() == 1);
    CHECK_THROWS_AS(quotient_graph(c6, {{0, 1}, {1, 2, 3, 4, 5}}), InvalidPartition);
    CHECK_THROWS_AS(quotient_graph(c6, {{0, 1}, {2, 3, 4}}), InvalidPartition);
}

TEST_CASE("quotient action") {
    for (std::size_t r = 3; r <= 8; ++r) {
        PermGroup h(2 * r, wreath_gens(r));
        PermGroup img = quotient_action(h, fibres(r));
        CHECK(img.order() == 2 * r);
    }
    PermGroup c6 = cyclic_group(6);
    Partition singles;
    for (Point v = 0; v < 6; ++v) singles.push_back({v});
    CHECK(quotient_action(c6, singles).order() == 6);
    CHECK_THROWS_AS(quotient_action(c6, {{0, 1}, {2, 3}, {4, 5}}), PartitionNotInvariant);
    // semiregular N = <rotation by 3> in C6: image order |G|/|N|
    CHECK(quotient_action(c6, {{0, 3}, {1, 4}, {2, 5}}).order() == 3);
}

TEST_CASE("cayley graphs") {
    PermGroup c6 = cyclic_group(6);
    Permutation g = c6.generators()[0];
    Graph cg = cayley_graph(c6, {g, g.inverse()});
    CHECK(cg.order() == 6);
    CHECK(is_regular(cg, 2));
    CHECK(is_connected(cg));
    CHECK(girth(cg) == 6);
    PermGroup v4(4, {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})});
    auto els = v4.elements();
    std::vector<Permutation> inv;
    for (const auto& x : els)
        if (!x.is_identity()) inv.push_back(x);
    Graph k4 = cayley_graph(v4, inv);
    CHECK(k4.size() == 6);
    CHECK_THROWS_AS(cayley_graph(c6, {g}), ConnectionNotInverseClosed);
    CHECK_THROWS_AS(cayley_graph(c6, {Permutation(6)}), IdentityInConnection);
    // disconnected when the connection set generates a proper subgroup
    Permutation g2 = g * g;
    CHECK_FALSE(is_connected(cayley_graph(c6, {g2, g2.inverse()})));
}

TEST_CASE("coset graphs") {
    PermGroup c5 = cyclic_group(5);
    Graph g = coset_graph(c5, PermGroup(5), c5.generators()[0]);
    CHECK(g == cycle_graph(5));
    PermGroup s4 = symmetric_group(4);
    PermGroup s3(4, {Permutation({1, 0, 2, 3}), Permutation({1, 2, 0, 3})});
    Graph k = coset_graph(s4, s3, Permutation({1, 2, 3, 0}));
    CHECK(k == complete_graph(4));
    CHECK_THROWS_AS(coset_graph(s4, s3, Permutation({1, 0, 2, 3})), SelfPairedLoop);
    // action-based variant on the same data: S4 on 4 points, stabiliser of 0
    Graph k2 = coset_graph_from_action(s4, Permutation({1, 2, 3, 0}));
    CHECK(k2 == complete_graph(4));
    Graph c = coset_graph_from_action(c5, c5.generators()[0]);
    CHECK(c == cycle_graph(5));
}

TEST_CASE("edge list round trip") {
    Graph g = cr1(5);
    std::stringstream ss;
    write_edge_list(ss, g);
    CHECK(read_edge_list(ss) == g);
    std::istringstream bad("3 2\n0 1\n");
    CHECK_THROWS_AS(read_edge_list(bad), ParseError);
    std::istringstream loop("3 1\n1 1\n");
    CHECK_THROWS_AS(read_edge_list(loop), NotSimple);
}

TEST_CASE("relabel and automorphism check") {
    std::mt19937_64 rng(7);
    Graph g = cr1(6);
    Permutation p = oracle::random_perm(g.order(), rng);
    Graph h = g.relabel(p);
    for (auto [u, v] : g.edges()) CHECK(h.adjacent(p[u], p[v]));
    for (const auto& x : wreath_gens(6)) CHECK(g.is_automorphism(x));
}
