#include "oracles.hpp"

#include "vstab/automorphism.hpp"
#include "vstab/errors.hpp"

#include <doctest.h>

using namespace vstab;

namespace {

Graph petersen() {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
    std::vector<Edge> e;
    for (Point i = 0; i < 10; ++i)
        for (Point j = i + 1; j < 10; ++j) {
            auto [a, b] = pairs[i];
            auto [c, d] = pairs[j];
            if (a != c && a != d && b != c && b != d) e.emplace_back(i, j);
        }
    return Graph::from_edges(10, e);
}

Graph hypercube(int d) {
    std::vector<Edge> e;
    for (Point v = 0; v < (1u << d); ++v)
        for (int k = 0; k < d; ++k) {
            Point w = v ^ (1u << k);
            if (v < w) e.emplace_back(v, w);
        }
    return Graph::from_edges(std::size_t{1} << d, e);
}

// brute-force automorphism count for tiny graphs
std::size_t brute_aut(const Graph& g) {
    std::vector<Point> p(g.order());
    std::iota(p.begin(), p.end(), Point{0});
    std::size_t count = 0;
    do {
        if (g.is_automorphism(Permutation(p))) ++count;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

} // namespace

TEST_CASE("automorphism group orders") {
    CHECK(automorphism_group(complete_bipartite(3, 3)).order() == 72);
    CHECK(automorphism_group(petersen()).order() == 120);
    CHECK(automorphism_group(complete_bipartite(4, 4)).order() == 1152);
    CHECK(automorphism_group(hypercube(3)).order() == 48);
    CHECK(automorphism_group(hypercube(5)).order() == 3840);
    CHECK(automorphism_group(cycle_graph(7)).order() == 14);
    CHECK(automorphism_group(complete_graph(6)).order() == 720);
    CHECK(automorphism_group(Graph(4)).order() == 24);
    CHECK(automorphism_group(path_graph(3)).order() == 2);
}

TEST_CASE("automorphism counts against brute force") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 4 + rng() % 4;
        std::vector<Edge> e;
        for (Point i = 0; i < n; ++i)
            for (Point j = i + 1; j < n; ++j)
                if (rng() % 2) e.emplace_back(i, j);
        Graph g = Graph::from_edges(n, e);
        CHECK(automorphism_group(g).order() == brute_aut(g));
    }
}

TEST_CASE("generators are automorphisms and order is relabelling invariant") {
    std::mt19937_64 rng(5);
    for (const Graph& g : {petersen(), hypercube(4), complete_bipartite(3, 5)}) {
        PermGroup a = automorphism_group(g);
        for (const auto& x : a.generators()) CHECK(g.is_automorphism(x));
        for (int k = 0; k < 3; ++k) {
            Graph h = g.relabel(oracle::random_perm(g.order(), rng));
            CHECK(automorphism_group(h).order() == a.order());
        }
        // the trusted chain agrees with a fresh Schreier-Sims run
        CHECK(PermGroup(g.order(), a.generators()).order() == a.order());
    }
}

TEST_CASE("colour-preserving automorphisms") {
    SearchOptions opt;
    opt.colours = {0, 1, 1, 1, 1, 1};
    Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
    CHECK(automorphism_group(star, opt).order() == 120);
    opt.colours = {0, 1, 1, 2, 2, 2};
    CHECK(automorphism_group(star, opt).order() == 12);
}

TEST_CASE("isomorphism") {
    std::mt19937_64 rng(11);
    for (const Graph& g : {petersen(), hypercube(4), cycle_graph(9)}) {
        Permutation p = oracle::random_perm(g.order(), rng);
        Graph h = g.relabel(p);
        auto f = are_isomorphic(g, h);
        REQUIRE(f);
        for (auto [u, v] : g.edges()) CHECK(h.adjacent((*f)[u], (*f)[v]));
        auto back = are_isomorphic(h, g);
        REQUIRE(back);
        CHECK(are_isomorphic(g, g));
    }
    // same degree sequences, not isomorphic
    Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    CHECK_FALSE(are_isomorphic(two_triangles, cycle_graph(6)));
    // cubic on 6 vertices: prism vs K33
    Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
    CHECK_FALSE(are_isomorphic(prism, complete_bipartite(3, 3)));
    // Shrikhande vs the 4x4 rook graph: same parameters, different graphs
    std::vector<Edge> sh;
    auto id = [](int a, int b) { return static_cast<Point>(4 * ((a + 4) % 4) + (b + 4) % 4); };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            int d[3][2] = {{1, 0}, {0, 1}, {1, 1}};
            for (auto& x : d) sh.emplace_back(id(a, b), id(a + x[0], b + x[1]));
        }
    Graph shrikhande = Graph::from_edges(16, sh);
    std::vector<Edge> rk;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                if (c != a) rk.emplace_back(id(a, b), id(c, b));
                if (c != b) rk.emplace_back(id(a, b), id(a, c));
            }
    Graph rook = Graph::from_edges_merging(16, rk);
    CHECK(automorphism_group(shrikhande).order() == 192);
    CHECK(automorphism_group(rook).order() == 1152);
    CHECK_FALSE(are_isomorphic(shrikhande, rook));
}

TEST_CASE("subgroup index") {
    PermGroup a = automorphism_group(complete_bipartite(3, 3));
    CHECK(subgroup_index(a, a) == 1);
    PermGroup s3(6, {Permutation({1, 0, 2, 3, 4, 5}), Permutation({1, 2, 0, 3, 4, 5})});
    CHECK(subgroup_index(a, s3) == 12);
    CHECK_THROWS_AS(subgroup_index(a, PermGroup(6, {Permutation({0, 3, 2, 1, 4, 5})})), NotASubgroup);
}

TEST_CASE("search budget") {
    SearchOptions opt;
    opt.node_limit = 3;
    CHECK_THROWS_AS(automorphism_group(hypercube(4), opt), SearchBudgetExceeded);
}
