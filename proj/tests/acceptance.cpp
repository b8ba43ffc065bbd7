// Acceptance run: one PASS/FAIL line per criterion, failed sub-checks listed below it.
// Usage: acceptance [--expect-fail N]...  Exit status is 0 when every
// criterion passes except those named with --expect-fail, which must fail.

#include "vstab/automorphism.hpp"
#include "vstab/classify.hpp"
#include "vstab/coset_table.hpp"
#include "vstab/errors.hpp"
#include "vstab/local_action.hpp"
#include "vstab/ranks.hpp"
#include "vstab/split_merge.hpp"

#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace vstab;

namespace {

Integer two_to(unsigned k) { return Integer(1) << k; }

// Collects failed sub-checks of one criterion.
struct Log {
    std::vector<std::string> failed;
    int count = 0;
    void check(bool ok, const std::string& what) {
        ++count;
        if (!ok) failed.push_back(what);
    }
};

std::string crs_name(int r, int s) { return "C(" + std::to_string(r) + "," + std::to_string(s) + ")"; }
std::string gamma_name(int t, int sign) { return "Gamma_" + std::to_string(t) + (sign > 0 ? "+" : "-"); }

Integer stab(const ActedGraph& ag) { return ag.group.order() / ag.graph.order(); }

struct Named {
    std::string name;
    ActedGraph pair;
};

// locally-D4 pairs shared by criteria 10 and 11
std::vector<Named>& corpus() {
    static std::vector<Named> c;
    return c;
}

void criterion1(Log& log) {
    struct Want {
        const char* id;
        std::size_t v;
        int gv;
    };
    for (Want w : {Want{"Line(F6)", 9, 8}, {"B(Line(F6))", 18, 8}, {"C5xC5", 25, 8}, {"Line(F18)", 27, 8},
                   {"C(3,3,3)", 81, 16}}) {
        Graph g = table_graph(w.id);
        ActedGraph full{g, automorphism_group(g), std::string("Aut ") + w.id};
        log.check(g.order() == w.v, std::string(w.id) + " vertex count");
        log.check(stab(full) == w.gv, std::string(w.id) + " |G_v|");
        log.check(full.group.order() == Integer(w.v) * w.gv, std::string(w.id) + " |G| = |V||G_v|");
        log.check(is_locally(full, LocalKind::D4), std::string(w.id) + " locally D4");
        corpus().push_back({w.id, full});
    }
}

void criterion2(Log& log) {
    struct Want {
        const char* id;
        std::size_t v;
        std::vector<int> gv;
    };
    std::vector<Want> wants = {{"(i)", 15, {8}},      {"(i)a", 30, {8}},   {"(i)b", 30, {8}},
                               {"(i)c", 30, {8}},     {"(ii)", 21, {16}},  {"(ii)a", 42, {16}},
                               {"(ii)b", 84, {16}},   {"(iii)", 45, {16, 32}}, {"(iii)a", 90, {16, 32}},
                               {"(iii)b", 90, {16}},  {"(iii)c", 135, {32}}, {"(iii)d", 180, {32}}};
    std::vector<std::string> ids;
    for (const auto& w : wants) ids.push_back(w.id);
    auto reports = reproduce_tables(false, ids);
    log.check(reports.size() == wants.size(), "row count");
    for (std::size_t i = 0; i < wants.size() && i < reports.size(); ++i) {
        const auto& w = wants[i];
        const auto& rep = reports[i];
        log.check(rep.id == w.id, "row order");
        for (const auto& f : rep.failures) log.check(false, rep.id + ": " + f);
        log.check(rep.vertices == w.v, rep.id + " vertex count");
        bool gv_ok = false;
        for (int g : w.gv) gv_ok = gv_ok || rep.stabilizer_order == g;
        log.check(gv_ok, rep.id + " |G_v|");
        log.check(rep.group_order == rep.stabilizer_order * rep.vertices, rep.id + " |G| = |V||G_v|");
        corpus().push_back({rep.id, table_pair(rep.id)});
    }
    // the index facts, recomputed here rather than read from the reports
    auto index_of = [](const char* id) {
        ActedGraph g = table_pair(id);
        return subgroup_index(automorphism_group(g.graph), g.group);
    };
    log.check(index_of("(iii)") <= 2, "|Aut(Line(Tut)) : G| <= 2");
    log.check(index_of("(iii)a") <= 2, "|Aut(B(Line(Tut))) : G| <= 2");
    ActedGraph blp = table_pair("(i)c");
    PermGroup aut = automorphism_group(blp.graph);
    log.check(subgroup_index(aut, blp.group) == 3, "B(Line(Pet)): G has index 3 in Aut");
    log.check(is_locally(blp, LocalKind::D4), "B(Line(Pet)): G locally D4");
    log.check(!is_locally({blp.graph, aut, "Aut"}, LocalKind::D4), "B(Line(Pet)): Aut not locally D4");
}

void criterion3(Log& log) {
    Graph g = table_graph("(iv)");
    log.check(g.order() == 8100, "8100 vertices");
    log.check(is_connected(g), "connected");
    log.check(is_regular(g, 4), "4-valent");
}

void criterion4(Log& log) {
    for (int t = 2; t <= 6; ++t)
        for (int sign : {1, -1}) {
            std::string name = gamma_name(t, sign);
            Integer index = Integer(t) * two_to(static_cast<unsigned>(t + 2));
            auto gp = build_gamma_presentation(t, sign);
            for (auto strat : {FillStrategy::HLT, FillStrategy::Felsch}) {
                CosetTable tab = todd_coxeter(gp.presentation, gp.subgroup, 1'000'000, strat);
                log.check(tab.closed && tab.verify() && tab.coset_count() == index,
                          name + (strat == FillStrategy::HLT ? " HLT" : " Felsch") + " closes with t 2^(t+2) cosets");
            }
            ActedGraph g = build_gamma(t, sign);
            log.check(is_locally(g, LocalKind::D4), name + " locally D4");
            Integer gv = stab(g);
            log.check(compare_to_bound(g.graph.order(), gv) == 0, name + " |V| = 2|G_v| log2(|G_v|/2)");
            if (t == 2) {
                Graph c43 = build_crs(4, 3).graph;
                auto f = are_isomorphic(g.graph, c43);
                if (sign > 0) {
                    bool witness = f && g.graph.size() == c43.size();
                    for (auto [u, v] : witness ? g.graph.edges() : std::vector<Edge>{})
                        witness = witness && c43.adjacent(f->images()[u], f->images()[v]);
                    log.check(witness, "Gamma_2+ = C(4,3) with witness");
                } else {
                    log.check(subgroup_index(automorphism_group(g.graph), g.group) == 9, "|Aut(Gamma_2-) : G| = 9");
                }
            }
            if (t >= 3 && t <= 5) {
                std::size_t n = g.graph.order();
                for (int r = 3; static_cast<std::size_t>(r) <= n; ++r)
                    for (int s = 1; s <= r - 1 && static_cast<std::size_t>(r) << s <= n; ++s)
                        if (static_cast<std::size_t>(r) << s == n)
                            log.check(!are_isomorphic(g.graph, crs_graph(r, s)), name + " not " + crs_name(r, s));
            }
            corpus().push_back({name, g});
        }
}

void criterion5(Log& log) {
    for (int r = 3; r <= 8; ++r)
        for (int s = 1; s <= r - 1; ++s) {
            std::string name = crs_name(r, s);
            ActedGraph h = build_crs(r, s);
            log.check(h.graph.order() == static_cast<std::size_t>(r) << s, name + " |V| = r 2^s");
            log.check(stab(h) == two_to(static_cast<unsigned>(r - s + 1)), name + " |H_v| = 2^(r-s+1)");
            bool d4 = is_locally(h, LocalKind::D4);
            log.check(d4 == (s <= r - 2), name + " locally D4 iff s <= r-2");
            Integer idx = subgroup_index(automorphism_group(h.graph), h.group);
            int want = r != 4 ? 1 : s == 1 ? 9 : s == 2 ? 3 : 2;
            log.check(idx == want, name + " |Aut : H|");
            if (d4) corpus().push_back({name, h});
        }
}

void criterion6(Log& log) {
    for (unsigned n = 2; n <= 10; ++n)
        for (bool alt : {false, true}) {
            std::string name = std::string(alt ? "Alt(" : "Sym(") + std::to_string(n) + ")";
            PermGroup g = alt ? alternating_group(n) : symmetric_group(n);
            RankRecord rec = two_rank_bruteforce(g, 4'000'000, name);
            log.check(rec.e == e_sym_alt(n, alt), name + " formula = search");
        }
}

void criterion7(Log& log) {
    RankRecord a = two_rank_bruteforce(general_linear_group(2, 3));
    log.check(a.e == 4, "e(GL(2,3)) = 4");
    RankRecord b = two_rank_bruteforce(general_linear_group(2, 5));
    log.check(b.e <= 4, "e(GL(2,5)) <= 4");
    RankRecord c = two_rank_bruteforce(general_linear_group(3, 3));
    log.check(c.e <= 8, "e(GL(3,3)) <= 8");
}

void criterion8(Log& log) {
    struct Case {
        const char* name;
        PermGroup h, k;
    };
    std::vector<Case> cases = {{"C2 wr C3", cyclic_group(2), cyclic_group(3)},
                               {"C2 wr S3", cyclic_group(2), symmetric_group(3)},
                               {"D4 wr C2", dihedral_group(4), cyclic_group(2)},
                               {"S4 wr C2", symmetric_group(4), cyclic_group(2)}};
    for (const auto& c : cases) {
        PermGroup w = wreath_product(c.h, c.k);
        Integer ew = two_rank_bruteforce(w).e;
        Integer eh = two_rank_bruteforce(c.h).e;
        Integer bound = 1;
        for (std::size_t i = 0; i < c.k.degree(); ++i) bound *= eh;
        log.check(ew <= bound, std::string(c.name) + " e_W <= e_H^|Delta|");
        if (eh >= 2) log.check(ew <= wreath_rank_bound(eh, static_cast<unsigned>(c.k.degree())),
                               std::string(c.name) + " formula bound");
    }
}

void criterion9(Log& log) {
    auto holds = [](const char* e, unsigned l) { return dagger_inequality(simple_group_entry(e), l); };
    for (unsigned l = 1; l <= 12; ++l) {
        log.check(holds("Alt5", l) == (l >= 5), "Alt(5) l = " + std::to_string(l));
        log.check(holds("Alt6", l) == (l >= 5), "Alt(6) l = " + std::to_string(l));
        log.check(holds("A2(2)", l) == !(l == 1 || l == 2 || l == 4), "A2(2) l = " + std::to_string(l));
    }
    for (const auto& e : simple_group_entries()) {
        bool one = dagger_inequality(e, 1), two = dagger_inequality(e, 2);
        for (unsigned l = 1; l <= 12; ++l) {
            bool h = dagger_inequality(e, l);
            if (one) log.check(h, e.name + ": l = 1 implies l = " + std::to_string(l));
            if (two && l >= 2) log.check(h, e.name + ": l = 2 implies l = " + std::to_string(l));
        }
    }
}

void criterion10(Log& log) {
    for (const auto& [name, g] : corpus()) {
        try {
            SplitGraph s = split(g);
            log.check(s.acted.graph.order() == 2 * g.graph.order(), name + " split doubles |V|");
            log.check(stab(s.acted) * 2 == stab(g), name + " split halves |G_v|");
            MergedGraph ms = merge(s.acted);
            merge_split_iso(g, s, ms);
            log.check(are_isomorphic(ms.acted.graph, g.graph).has_value(), name + " Merge(Split) isomorphic");
            MergedGraph m = merge(s.acted);
            SplitGraph sm = split(m.acted);
            split_merge_iso(s.acted, m, sm);
            log.check(stab(m.acted) == 2 * stab(s.acted), name + " merge doubles |G_v|");
            log.check(are_isomorphic(sm.acted.graph, s.acted.graph).has_value(), name + " Split(Merge) isomorphic");
        } catch (const Error& e) {
            log.check(false, name + ": " + e.what());
        }
    }
}

void criterion11(Log& log) {
    std::set<std::string> census, expected;
    for (int t = 3; t <= 6; ++t)
        for (int sign : {1, -1}) expected.insert(gamma_name(t, sign));
    for (const auto& [name, g] : corpus()) {
        try {
            Verdict v = classify(g);
            log.check(v.any(), name + " has a case");
            if (v.bound == BoundCase::Equality && v.case_a.empty()) census.insert(name);
        } catch (const Error& e) {
            log.check(false, name + ": " + e.what());
        }
    }
    for (const auto& n : census)
        log.check(expected.count(n) > 0, "equality without case A on " + n + ", outside Gamma_t (t >= 3)");
    for (const auto& n : expected) log.check(census.count(n) > 0, n + " missing from the equality census");
}

void criterion12(Log& log) {
    for (int r = 3; r <= 8; ++r) {
        ActedGraph h = build_crs(r, 1);
        Partition fibres;
        for (int y = 0; y < r; ++y) fibres.push_back({static_cast<Point>(2 * y), static_cast<Point>(2 * y + 1)});
        Quotient q = quotient_graph(h.graph, fibres);
        log.check(are_isomorphic(q.graph, cycle_graph(r)).has_value(), "C(" + std::to_string(r) + ",1)/fibres is a cycle");
        log.check(quotient_action(h.group, fibres).order() == 2 * r, "image order 2r for r = " + std::to_string(r));
    }
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> expect_fail;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
            expect_fail.insert(std::atoi(argv[++i]));
        } else {
            std::cerr << "usage: acceptance [--expect-fail N]...\n";
            return 2;
        }
    }
    std::vector<std::function<void(Log&)>> crit = {criterion1, criterion2,  criterion3,  criterion4,
                                                   criterion5, criterion6,  criterion7,  criterion8,
                                                   criterion9, criterion10, criterion11, criterion12};
    bool ok = true;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        int n = static_cast<int>(i + 1);
        Log log;
        auto t0 = std::chrono::steady_clock::now();
        try {
            crit[i](log);
        } catch (const std::exception& e) {
            log.check(false, std::string("exception: ") + e.what());
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool pass = log.failed.empty();
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << n << " (" << log.count - log.failed.size() << "/"
                  << log.count << " checks, " << sec << " s)";
        if (expect_fail.count(n)) std::cout << (pass ? " [unexpected pass]" : " [expected failure]");
        std::cout << std::endl;
        for (const auto& f : log.failed) std::cout << "    failed: " << f << '\n';
        ok = ok && (pass != (expect_fail.count(n) > 0));
    }
    return ok ? 0 : 1;
}
