#include "vstab/automorphism.hpp"
#include "vstab/classify.hpp"
#include "vstab/errors.hpp"
#include "vstab/graph_ops.hpp"
#include "vstab/local_action.hpp"
#include "vstab/split_merge.hpp"

#include <doctest.h>

#include <algorithm>

using namespace vstab;

namespace {

bool has(const std::vector<std::string>& v, const std::string& x) { return std::find(v.begin(), v.end(), x) != v.end(); }

} // namespace

TEST_CASE("cartesian product") {
    Graph g = cartesian_product(cycle_graph(5), cycle_graph(5));
    CHECK(g.order() == 25);
    CHECK(is_regular(g, 4));
    CHECK(girth(g) == 4);
    CHECK(automorphism_group(g).order() == 200);
    Graph k = cartesian_product(complete_graph(2), complete_graph(2));
    CHECK(are_isomorphic(k, cycle_graph(4)));
}

TEST_CASE("table rows") {
    CHECK(table_rows().size() == 18);
    CHECK(table_row("Line(Hea)").id == "(ii)");
    CHECK_THROWS_AS(table_row("(v)"), ParseError);
    auto reports = reproduce_tables(false);
    CHECK(reports.size() == 17);
    for (const auto& r : reports) {
        CAPTURE(r.id);
        for (const auto& f : r.failures) CAPTURE(f);
        CHECK(r.pass);
        CHECK(r.group_order == r.stabilizer_order * r.vertices);
    }
    auto find = [&](const std::string& id) {
        return *std::find_if(reports.begin(), reports.end(), [&](const RowReport& r) { return r.id == id; });
    };
    CHECK(find("Line(F6)").aut_order == 72);
    CHECK(find("(ii)b").group_order == 1344);
    CHECK(find("(iii)c").vertices == 135);
    CHECK(find("(iii)c").stabilizer_order == 32);
    CHECK(find("(i)c").aut_order == 720);
    CHECK(find("(i)c").group_order == 240);
    auto one = reproduce_tables(false, {"(iii)b"});
    REQUIRE(one.size() == 1);
    CHECK(one[0].stabilizer_order == 16);
}

TEST_CASE("B(Line(Pet)): the full group is locally 2-transitive") {
    ActedGraph g = table_pair("(i)c");
    ActedGraph full{g.graph, automorphism_group(g.graph), "Aut"};
    CHECK(full.group.order() == 720);
    CHECK(local_action(full, 0).type.kind == LocalKind::S4);
    CHECK(is_locally(g, LocalKind::D4));
}

TEST_CASE("classify examples") {
    Verdict a = classify(build_crs(6, 3));
    CHECK(has(a.cases(), "A(6,3)"));

    ActedGraph lh = table_pair("(ii)");
    Verdict b = classify(lh);
    CHECK(has(b.cases(), "B((ii))"));
    CHECK(b.vertices == 21);
    CHECK(b.stabilizer_order == 16);
    CHECK(b.bound == BoundCase::Below);

    Verdict c = classify(build_gamma(4, 1));
    CHECK(c.bound == BoundCase::Equality);
    CHECK(c.threshold == 256);
    CHECK(c.case_a.empty());
    REQUIRE(c.gamma);
    CHECK(*c.gamma == std::pair{4, 1});

    CHECK_THROWS_AS(classify(build_crs(5, 4)), NotLocallyD4);
    CHECK_THROWS_AS(classify({seed("Petersen").graph, automorphism_group(seed("Petersen").graph), "Pet"}),
                    NotLocallyD4);
}

TEST_CASE("equality census on Gamma_t") {
    for (int t = 2; t <= 5; ++t)
        for (int sign : {1, -1}) {
            CAPTURE(t);
            CAPTURE(sign);
            Verdict v = classify(build_gamma(t, sign));
            CHECK(v.bound == BoundCase::Equality);
            CHECK(v.case_a.empty());
            REQUIRE(v.gamma);
            CHECK(*v.gamma == std::pair{t, sign});
        }
}

TEST_CASE("C(r,s) pairs") {
    for (int r = 3; r <= 7; ++r)
        for (int s = 1; s <= r - 2; ++s) {
            CAPTURE(r);
            CAPTURE(s);
            Verdict v = classify(build_crs(r, s));
            CHECK(v.any());
            CHECK(v.bound != BoundCase::Equality);
            if (2 * s <= r) {
                CHECK(std::find(v.case_a.begin(), v.case_a.end(), CrsParams{r, s}) != v.case_a.end());
            } else {
                // the bound must hold strictly when s > r/2
                CHECK(v.bound == BoundCase::Strict);
            }
        }
}

TEST_CASE("table pairs land in case B") {
    for (const auto& row : table_rows()) {
        if (row.large) continue;
        CAPTURE(row.id);
        Verdict v = classify(table_pair(row.id));
        CHECK(has(v.case_b, row.id));
    }
}

TEST_CASE("cubic pairs") {
    ActedGraph lf6 = table_pair("Line(F6)");
    CubicVerdict s1 = classify_cubic(split(lf6).acted);
    CHECK(s1.kind == CubicKind::ViaMerge);
    CHECK(s1.case_a);
    REQUIRE(s1.merged);
    CHECK(has(s1.merged->case_b, "Line(F6)"));
    CHECK(s1.stabilizer_order == 4);

    CubicVerdict s2 = classify_cubic(split(build_crs(6, 1)).acted);
    CHECK(s2.case_a);
    REQUIRE(s2.merged);
    CHECK(std::find(s2.merged->case_a.begin(), s2.merged->case_a.end(), CrsParams{6, 1}) != s2.merged->case_a.end());

    Graph pet = seed("Petersen").graph;
    CubicVerdict p = classify_cubic({pet, automorphism_group(pet), "Pet"});
    CHECK(p.kind == CubicKind::ArcTransitive);
    CHECK(p.case_b);
    CHECK(p.stabilizer_order == 12);

    CHECK_THROWS_AS(classify_cubic(build_crs(4, 1)), NotCubic);
    CHECK_THROWS_AS(classify_cubic({pet, PermGroup(10), "Pet"}), NotVertexTransitive);
}
