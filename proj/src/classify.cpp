#include "vstab/classify.hpp"

#include "vstab/automorphism.hpp"
#include "vstab/errors.hpp"
#include "vstab/graph_ops.hpp"
#include "vstab/local_action.hpp"
#include "vstab/ranks.hpp"
#include "vstab/split_merge.hpp"

#include <chrono>
#include <map>

namespace vstab {

namespace {

struct Recipe {
    std::string seed;             // empty for the two sporadic constructions
    std::vector<GraphOp> ops;     // applied left to right
};

Recipe recipe(const std::string& id) {
    using enum GraphOp;
    static const std::map<std::string, Recipe> r{
        {"Line(F6)", {"F6", {Line}}},
        {"B(Line(F6))", {"F6", {Line, BipartiteDouble}}},
        {"C5xC5", {"", {}}},
        {"Line(F18)", {"F18", {Line}}},
        {"C(3,3,3)", {"", {}}},
        {"(i)", {"Petersen", {Line}}},
        {"(i)a", {"Petersen", {Arc}}},
        {"(i)b", {"Petersen", {BipartiteDouble, Line}}},
        {"(i)c", {"Petersen", {Line, BipartiteDouble}}},
        {"(ii)", {"Heawood", {Line}}},
        {"(ii)a", {"Heawood", {Line, BipartiteDouble}}},
        {"(ii)b", {"Heawood", {HillCapping}}},
        {"(iii)", {"Tut", {Line}}},
        {"(iii)a", {"Tut", {Line, BipartiteDouble}}},
        {"(iii)b", {"Tut", {ThreeArc}}},
        {"(iii)c", {"F90", {Line}}},
        {"(iii)d", {"Tut", {HillCapping}}},
        {"(iv)", {"Tut", {SquaredArc}}},
    };
    return r.at(id);
}

Graph build_graph(const TableRow& row) {
    if (row.id == "C5xC5") return cartesian_product(cycle_graph(5), cycle_graph(5));
    if (row.id == "C(3,3,3)") return build_c333().graph;
    Recipe rc = recipe(row.id);
    Graph g = seed(rc.seed).graph;
    for (auto op : rc.ops) g = derive(op, g).graph;
    return g;
}

// colour class of each vertex of a connected bipartite graph
std::vector<int> two_colouring(const Graph& g) {
    std::vector<int> col(g.order(), -1);
    std::vector<Point> q{0};
    col[0] = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (Point w : g.neighbours(q[i]))
            if (col[w] < 0) {
                col[w] = 1 - col[q[i]];
                q.push_back(w);
            }
    return col;
}

// Row (iv). A vertex (X, Y) of AAG is a step of two interleaved non-backtracking
// walks; the tail colours of X and Y give the position mod 4 along the walk.
// Applying a to one walk and b to the other is an automorphism for any a, b
// in Aut(Tut).
ActedGraph squared_arc_tutte() {
    Graph tut = seed("Tut").graph;
    PermGroup aut = automorphism_group(tut);
    DerivedGraph d = derive(GraphOp::SquaredArc, tut);
    std::vector<int> col = two_colouring(tut);
    auto twist = [&](const Permutation& a, const Permutation& b) {
        std::vector<Point> img(d.keys.size());
        for (std::size_t i = 0; i < d.keys.size(); ++i) {
            const auto& k = d.keys[i];
            // (0,0) -> 0, (0,1) -> 1, (1,1) -> 2, (1,0) -> 3
            int c0 = col[k[0]], c1 = col[k[2]];
            int pos = c0 == 0 ? c1 : 3 - c1;
            const Permutation& x = pos % 2 == 0 ? a : b;
            const Permutation& y = pos % 2 == 0 ? b : a;
            img[i] = d.vertex_of({x[k[0]], x[k[1]], y[k[2]], y[k[3]]});
        }
        return Permutation(std::move(img));
    };
    std::vector<Permutation> gens;
    Permutation id(tut.order());
    for (const auto& g : aut.generators()) {
        gens.push_back(d.induced(g));
        gens.push_back(twist(g, id));
    }
    for (auto& e : d.extra_symmetries()) gens.push_back(std::move(e));
    ActedGraph ag{d.graph, PermGroup(d.graph.order(), std::move(gens)), "AAG(Tut)"};
    validate(ag);
    return ag;
}

Integer pow2(unsigned k) { return Integer(1) << k; }

int log2_exact(const Integer& x) {
    if (x <= 0) return -1;
    unsigned k = boost::multiprecision::msb(x);
    return x == pow2(k) ? static_cast<int>(k) : -1;
}

struct Reference {
    std::string id;
    Graph graph;
    std::size_t girth;
    std::uint64_t triangles, squares;
};

const std::vector<Reference>& references() {
    static const std::vector<Reference> refs = [] {
        std::vector<Reference> out;
        for (const auto& row : table_rows()) {
            if (row.large) continue;
            Graph g = table_graph(row.id);
            out.push_back({row.id, g, girth(g), triangle_count(g), four_cycle_count(g)});
        }
        return out;
    }();
    return refs;
}

} // namespace

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows{
        {"Line(F6)", 1, "Line(F6)", 9, {8}, false},
        {"B(Line(F6))", 1, "B(Line(F6))", 18, {8}, false},
        {"C5xC5", 1, "C5xC5", 25, {8}, false},
        {"Line(F18)", 1, "Line(F18)", 27, {8}, false},
        {"C(3,3,3)", 1, "C(3,3,3)", 81, {16}, false},
        {"(i)", 2, "Line(Pet)", 15, {8}, false},
        {"(i)a", 2, "AG(Pet)", 30, {8}, false},
        {"(i)b", 2, "Line(B(Pet))", 30, {8}, false},
        {"(i)c", 2, "B(Line(Pet))", 30, {8}, false},
        {"(ii)", 2, "Line(Hea)", 21, {16}, false},
        {"(ii)a", 2, "B(Line(Hea))", 42, {16}, false},
        {"(ii)b", 2, "HC(Hea)", 84, {16}, false},
        {"(iii)", 2, "Line(Tut)", 45, {16, 32}, false},
        {"(iii)a", 2, "B(Line(Tut))", 90, {16, 32}, false},
        {"(iii)b", 2, "AAA(Tut)", 90, {16}, false},
        {"(iii)c", 2, "Line(F90)", 135, {32}, false},
        {"(iii)d", 2, "HC(Tut)", 180, {32}, false},
        {"(iv)", 2, "AAG(Tut)", 8100, {512}, true},
    };
    return rows;
}

const TableRow& table_row(std::string_view id) {
    for (const auto& r : table_rows())
        if (r.id == id || r.graph == id) return r;
    throw ParseError("unknown table row '" + std::string(id) + "'");
}

Graph table_graph(std::string_view id) { return build_graph(table_row(id)); }

ActedGraph table_pair(std::string_view id) {
    const TableRow& row = table_row(id);
    if (row.id == "(iv)") return squared_arc_tutte();
    if (row.id == "C(3,3,3)") return build_c333();
    ActedGraph ag;
    ag.provenance = row.graph;
    if (row.id == "(i)c" || row.id == "(iii)" || row.id == "(iii)a") {
        Recipe rc = recipe(row.id);
        Graph g = seed(rc.seed).graph;
        PermGroup grp = automorphism_group(g);
        for (auto op : rc.ops) {
            DerivedGraph d = derive(op, g);
            grp = induced_group(d, grp);
            g = d.graph;
        }
        ag.graph = std::move(g);
        ag.group = std::move(grp);
    } else {
        ag.graph = build_graph(row);
        ag.group = automorphism_group(ag.graph);
    }
    validate(ag);
    return ag;
}

std::vector<std::string> Verdict::cases() const {
    std::vector<std::string> out;
    for (auto p : case_a) out.push_back("A(" + std::to_string(p.r) + "," + std::to_string(p.s) + ")");
    for (const auto& b : case_b) out.push_back("B(" + b + ")");
    if (bound == BoundCase::Strict) out.push_back("C(strict)");
    if (bound == BoundCase::Equality) out.push_back("C(equality)");
    return out;
}

Verdict classify(const ActedGraph& ag) {
    if (!is_vertex_transitive(ag) || !is_locally(ag, LocalKind::D4))
        throw NotLocallyD4(ag.provenance + " is not a locally D4 pair");
    Verdict v;
    v.vertices = ag.graph.order();
    v.stabilizer_order = ag.group.order() / v.vertices;
    v.threshold = bound_threshold(v.stabilizer_order);
    v.small_stabilizer = v.stabilizer_order <= 16 * 729;
    auto cmp = compare_to_bound(v.vertices, v.stabilizer_order);
    v.bound = cmp < 0 ? BoundCase::Below : cmp == 0 ? BoundCase::Equality : BoundCase::Strict;

    for (auto p : recognize_crs_all(ag.graph).all)
        if (2 * p.s <= p.r) v.case_a.push_back(p);

    std::size_t gi = girth(ag.graph);
    std::uint64_t tri = triangle_count(ag.graph), sq = four_cycle_count(ag.graph);
    for (const auto& ref : references()) {
        if (ref.graph.order() != ag.graph.order() || ref.girth != gi || ref.triangles != tri || ref.squares != sq)
            continue;
        const auto& row = table_row(ref.id);
        bool stab_ok = std::find(row.stabilizer_orders.begin(), row.stabilizer_orders.end(), v.stabilizer_order) !=
                       row.stabilizer_orders.end();
        if (stab_ok && are_isomorphic(ag.graph, ref.graph)) v.case_b.push_back(ref.id);
    }

    if (v.bound == BoundCase::Equality && v.case_a.empty()) {
        int t = log2_exact(v.stabilizer_order) - 1;
        if (t >= 2)
            for (int sign : {1, -1}) {
                ActedGraph g = build_gamma(t, sign);
                if (g.group.order() == ag.group.order() &&
                    (ag.graph == g.graph || are_isomorphic(ag.graph, g.graph))) {
                    v.gamma = {t, sign};
                    break;
                }
            }
    }
    if (!v.any()) throw NoCaseHolds(ag.provenance + ": no case applies");
    return v;
}

std::vector<std::string> CubicVerdict::cases() const {
    std::vector<std::string> out;
    if (case_a) out.push_back("A");
    if (case_b) out.push_back("B");
    if (case_c) out.push_back("C");
    if (kind == CubicKind::SmallStabilizer) out.push_back("small");
    return out;
}

CubicVerdict classify_cubic(const ActedGraph& ag) {
    validate(ag);
    if (!is_regular(ag.graph, 3)) throw NotCubic(ag.provenance + " is not cubic");
    if (!is_vertex_transitive(ag)) throw NotVertexTransitive(ag.provenance + " is not vertex-transitive");
    CubicVerdict cv;
    cv.vertices = ag.graph.order();
    cv.stabilizer_order = ag.group.order() / cv.vertices;
    int k = log2_exact(cv.stabilizer_order);
    if (k >= 0) cv.case_c = cv.vertices >= 8 * cv.stabilizer_order * k;
    if (is_arc_transitive(ag)) {
        cv.kind = CubicKind::ArcTransitive;
        cv.case_b = cv.stabilizer_order <= 48;
        if (!cv.case_b) throw NoCaseHolds("arc-transitive cubic pair with |G_v| > 48");
        return cv;
    }
    if (cv.stabilizer_order >= 4 && is_locally(ag, LocalKind::C2On3)) {
        cv.kind = CubicKind::ViaMerge;
        MergedGraph m = merge(ag);
        cv.merged = classify(m.acted);
        cv.case_a = !cv.merged->case_a.empty() || !cv.merged->case_b.empty();
        if (!cv.case_a && !cv.case_c) throw NoCaseHolds(ag.provenance + ": no case applies");
        return cv;
    }
    cv.kind = CubicKind::SmallStabilizer;
    return cv;
}

std::vector<RowReport> reproduce_tables(bool include_large, const std::vector<std::string>& rows) {
    std::vector<RowReport> out;
    for (const auto& row : table_rows()) {
        if (!rows.empty() && std::find(rows.begin(), rows.end(), row.id) == rows.end() &&
            std::find(rows.begin(), rows.end(), row.graph) == rows.end())
            continue;
        if (row.large && !include_large) continue;
        RowReport rep;
        rep.id = row.id;
        rep.graph = row.graph;
        auto start = std::chrono::steady_clock::now();
        auto fail = [&](std::string msg) {
            rep.pass = false;
            rep.failures.push_back(std::move(msg));
        };
        try {
            ActedGraph ag = table_pair(row.id);
            rep.vertices = ag.graph.order();
            if (rep.vertices != row.vertices) fail("vertex count " + std::to_string(rep.vertices));
            if (!is_regular(ag.graph, 4)) fail("not 4-valent");
            if (!is_connected(ag.graph)) fail("not connected");
            rep.group_order = ag.group.order();
            if (!ag.group.is_transitive()) fail("group not transitive");
            rep.stabilizer_order = ag.group.stabilizer(0).order();
            if (rep.group_order != rep.stabilizer_order * rep.vertices) fail("|G| != |V| |G_v|");
            if (std::find(row.stabilizer_orders.begin(), row.stabilizer_orders.end(), rep.stabilizer_order) ==
                row.stabilizer_orders.end())
                fail("|G_v| = " + rep.stabilizer_order.str());
            if (!is_locally(ag, LocalKind::D4)) fail("not locally D4");
            if (!row.large) {
                PermGroup aut = automorphism_group(ag.graph);
                rep.aut_order = aut.order();
                Integer idx = subgroup_index(aut, ag.group);
                if (row.id == "(iii)" || row.id == "(iii)a") {
                    if (idx > 2) fail("|Aut : G| = " + idx.str());
                } else if (row.id == "(i)c") {
                    if (idx != 3) fail("|Aut : G| = " + idx.str());
                    if (is_locally({ag.graph, aut, ""}, LocalKind::D4)) fail("Aut is locally D4");
                } else if (idx != 1) {
                    fail("G is not the full automorphism group");
                }
            }
        } catch (const Error& e) {
            fail(e.what());
        }
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace vstab
