#include "vstab/automorphism.hpp"
#include "vstab/errors.hpp"
#include "vstab/graph_ops.hpp"
#include "vstab/local_action.hpp"
#include "vstab/split_merge.hpp"

#include <doctest.h>

using namespace vstab;

namespace {

ActedGraph with_aut(Graph g, std::string name) {
    ActedGraph ag;
    ag.group = automorphism_group(g);
    ag.graph = std::move(g);
    ag.provenance = std::move(name);
    return ag;
}

// prism C_n x K2 with D_n x C2: vertex-transitive, stabiliser of order 2
ActedGraph prism(Point n) {
    std::vector<Edge> e;
    for (Point i = 0; i < n; ++i) {
        e.emplace_back(2 * i, 2 * ((i + 1) % n));
        e.emplace_back(2 * i + 1, 2 * ((i + 1) % n) + 1);
        e.emplace_back(2 * i, 2 * i + 1);
    }
    std::vector<Point> rot(2 * n), refl(2 * n), sw(2 * n);
    for (Point i = 0; i < n; ++i)
        for (Point a = 0; a < 2; ++a) {
            rot[2 * i + a] = 2 * ((i + 1) % n) + a;
            refl[2 * i + a] = 2 * ((n - i) % n) + a;
            sw[2 * i + a] = 2 * i + 1 - a;
        }
    return {Graph::from_edges(2 * n, e), PermGroup(2 * n, {Permutation(rot), Permutation(refl), Permutation(sw)}),
            "prism"};
}

void round_trip(const ActedGraph& g) {
    CAPTURE(g.provenance);
    SplitGraph s = split(g);
    CHECK(s.acted.graph.order() == 2 * g.graph.order());
    CHECK(is_regular(s.acted.graph, 3));
    CHECK(is_vertex_transitive(s.acted));
    CHECK(!is_arc_transitive(s.acted));
    CHECK(is_locally(s.acted, LocalKind::C2On3));
    Integer gv = g.group.stabilizer(0).order();
    CHECK(s.acted.group.stabilizer(0).order() * 2 == gv);
    CHECK(s.acted.group.order() == g.group.order());

    MergedGraph ms = merge(s.acted);
    CHECK(ms.acted.graph.order() == g.graph.order());
    CHECK(ms.acted.group.stabilizer(0).order() == gv);
    CHECK(is_locally(ms.acted, LocalKind::D4));
    Permutation theta = merge_split_iso(g, s, ms);
    CHECK(theta.degree() == g.graph.order());

    // and the other way round, starting from the cubic pair
    SplitGraph sm = split(ms.acted);
    Permutation theta2 = split_merge_iso(s.acted, ms, sm);
    CHECK(theta2.degree() == s.acted.graph.order());
}

} // namespace

TEST_CASE("arc pairing") {
    ActedGraph c = build_crs(5, 2);
    ArcPairing p = arc_pairing(c);
    CHECK(p.arcs.size() == 4 * c.graph.order());
    for (std::size_t i = 0; i < p.arcs.size(); ++i) {
        CHECK(p.partner[p.partner[i]] == i);
        CHECK(p.arcs[p.partner[i]].first == p.arcs[i].first);
        CHECK(p.partner[i] != i);
    }
}

TEST_CASE("split examples") {
    SplitGraph s = split(build_crs(4, 1));
    CHECK(s.acted.graph.order() == 16);
    CHECK(is_regular(s.acted.graph, 3));
    CHECK(s.acted.group.stabilizer(0).order() == 8);

    SplitGraph l = split(with_aut(line_graph(seed("F6").graph), "Line(F6)"));
    CHECK(l.acted.graph.order() == 18);
    CHECK(is_vertex_transitive(l.acted));
    CHECK(l.acted.group.stabilizer(0).order() == 4);
}

TEST_CASE("round trips") {
    round_trip(build_crs(4, 1));
    round_trip(build_crs(5, 2));
    round_trip(build_crs(6, 1));
    round_trip(build_crs(6, 4));
    round_trip(build_gamma(2, 1));
    round_trip(build_gamma(3, -1));
    round_trip(with_aut(line_graph(seed("F6").graph), "Line(F6)"));
    round_trip(with_aut(line_graph(seed("Petersen").graph), "Line(Pet)"));
    round_trip(build_c333());
}

TEST_CASE("merge of split gives the original graph") {
    ActedGraph g = build_gamma(2, 1);
    MergedGraph m = merge(split(g).acted);
    CHECK(are_isomorphic(m.acted.graph, g.graph));
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(merge(with_aut(seed("Petersen").graph, "Pet")), NotLocallyC23);
    CHECK_THROWS_AS(split(build_crs(5, 4)), NotLocallyD4);
    CHECK_THROWS_AS(split(with_aut(seed("Petersen").graph, "Pet")), NotLocallyD4);
    ActedGraph p = prism(6);
    REQUIRE(is_locally(p, LocalKind::C2On3));
    CHECK_THROWS_AS(merge(p), StabTooSmall);
}
