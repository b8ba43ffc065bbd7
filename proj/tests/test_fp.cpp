#include "vstab/automorphism.hpp"
#include "vstab/coset_table.hpp"
#include "vstab/errors.hpp"

#include <doctest.h>

#include <sstream>

using namespace vstab;

namespace {

Integer pow2(unsigned k) { return Integer(1) << k; }

} // namespace

TEST_CASE("word parsing") {
    Presentation p({"x0", "x1", "z", "a", "b"});
    CHECK(p.parse_word("a^4 z^-1") == Word{4, 4, 4, 4, -3});
    CHECK(p.parse_word("[x0, x1]") == Word{-1, -2, 1, 2});
    CHECK(p.parse_word("b^2") == Word{5, 5});
    CHECK(p.parse_word("x0^a") == Word{-4, 1, 4});
    CHECK(p.parse_word("(a b)^-2") == Word{-5, -4, -5, -4});
    CHECK(p.parse_word("a a^-1 b") == Word{5});
    CHECK(p.parse_relator("x0^a = x1") == Word{-4, 1, 4, -2});
    CHECK(p.parse_word("1").empty());
    CHECK(p.parse_word_list("x0, [x0, x1], b").size() == 3);
    CHECK_THROWS_AS(p.parse_word("y"), ParseError);
    CHECK_THROWS_AS(p.parse_word("[x0]"), ParseError);
    CHECK(p.format_word(p.parse_word("a^4 z^-1")) == "a^4 z^-1");
}

TEST_CASE("relators are stored freely reduced") {
    Presentation p({"a", "b"});
    p.add_relator(Word{1, 2, -2, 1});
    REQUIRE(p.relators().size() == 1);
    CHECK(p.relators()[0] == Word{1, 1});
    CHECK_THROWS_AS(p.add_relator(Word{3}), ParseError);
}

TEST_CASE("presentation file round trip") {
    std::istringstream in("gens: a b\n# dihedral of order 8\na^4\nb^2\n(a b)^2\n");
    Presentation p = read_presentation(in);
    CHECK(p.generator_count() == 2);
    CHECK(p.relators().size() == 3);
    std::stringstream out;
    write_presentation(out, p);
    Presentation q = read_presentation(out);
    CHECK(q.relators() == p.relators());
    CHECK(todd_coxeter(q, {}).coset_count() == 8);
}

TEST_CASE("small enumerations") {
    Presentation c5({"a"});
    c5.add_relator("a^5");
    for (auto s : {FillStrategy::HLT, FillStrategy::Felsch}) {
        CosetTable t = todd_coxeter(c5, {}, 100, s);
        CHECK(t.coset_count() == 5);
        CHECK(t.verify());
        PermGroup g = coset_action(t);
        CHECK(g.order() == 5);
        CHECK(g.generators()[0].order() == 5);
    }
    Presentation s3({"a", "b"});
    s3.add_relator("a^3");
    s3.add_relator("b^2");
    s3.add_relator("(a b)^2");
    CHECK(todd_coxeter(s3, {}).coset_count() == 6);
    CHECK(todd_coxeter(s3, {s3.parse_word("b")}).coset_count() == 3);
    // von Dyck (2,3,5): the icosahedral group of order 60
    Presentation a5({"a", "b"});
    a5.add_relator("a^2");
    a5.add_relator("b^3");
    a5.add_relator("(a b)^5");
    CHECK(todd_coxeter(a5, {}, 1000, FillStrategy::HLT).coset_count() == 60);
    CHECK(todd_coxeter(a5, {}, 1000, FillStrategy::Felsch).coset_count() == 60);
    // infinite group runs into the budget
    Presentation z({"a"});
    CHECK_THROWS_AS(todd_coxeter(z, {}, 50), CosetLimitExceeded);
    Presentation free2({"a", "b"});
    free2.add_relator("a^2");
    CHECK_THROWS_AS(todd_coxeter(free2, {}, 200, FillStrategy::Felsch), CosetLimitExceeded);
}

TEST_CASE("gamma presentations") {
    auto gp = build_gamma_presentation(2, 1);
    CHECK(gp.presentation.generator_count() == 7);
    CHECK_THROWS_AS(build_gamma_presentation(1, 1), InvalidParams);
    CosetTable t = todd_coxeter(gp.presentation, gp.subgroup);
    CHECK(t.coset_count() == 32);
    PermGroup g = coset_action(t);
    CHECK(g.order() == 256);
    CHECK(g.is_transitive());
    // whole group as subgroup
    std::vector<Word> all;
    for (int i = 1; i <= 7; ++i) all.push_back(Word{i});
    CHECK(todd_coxeter(gp.presentation, all).coset_count() == 1);
}

TEST_CASE("gamma family orders and strategy independence") {
    for (int t = 2; t <= 5; ++t)
        for (int sign : {1, -1}) {
            CAPTURE(t);
            CAPTURE(sign);
            auto gp = build_gamma_presentation(t, sign);
            CosetTable h = todd_coxeter(gp.presentation, gp.subgroup, 1'000'000, FillStrategy::HLT);
            CosetTable f = todd_coxeter(gp.presentation, gp.subgroup, 1'000'000, FillStrategy::Felsch);
            Integer index = Integer(t) * pow2(static_cast<unsigned>(t + 2));
            CHECK(h.coset_count() == index);
            CHECK(f.coset_count() == index);
            // breadth-first numbering makes closed tables canonical
            CHECK(h.table == f.table);
            PermGroup g = coset_action(h);
            CHECK(g.order() == pow2(static_cast<unsigned>(2 * t + 1)) * 4 * t);
            // index identity
            CHECK(g.stabilizer(0).order() * h.coset_count() == g.order());
            CHECK(g.stabilizer(0).order() == pow2(static_cast<unsigned>(t + 1)));
            if (t <= 3) {
                Graph gh = coset_graph_from_action(coset_action(h), word_permutation(h, gp.edge_word));
                Graph gf = coset_graph_from_action(coset_action(f), word_permutation(f, gp.edge_word));
                CHECK(are_isomorphic(gh, gf));
            }
        }
}

TEST_CASE("G_3^- coset data") {
    auto gp = build_gamma_presentation(3, -1);
    CosetTable t = todd_coxeter(gp.presentation, gp.subgroup);
    CHECK(t.coset_count() == 96);
    CHECK(coset_action(t).order() == 1536);
}

TEST_CASE("plus and minus groups differ for t = 2") {
    // a has order 2t in the plus group and 4t in the minus group
    auto plus = build_gamma_presentation(2, 1);
    auto minus = build_gamma_presentation(2, -1);
    PermGroup gp = coset_action(todd_coxeter(plus.presentation, plus.subgroup));
    PermGroup gm = coset_action(todd_coxeter(minus.presentation, minus.subgroup));
    CHECK(gp.generators()[5].order() == 4);
    CHECK(gm.generators()[5].order() == 8);
}
