#include "vstab/split_merge.hpp"

#include "vstab/errors.hpp"
#include "vstab/local_action.hpp"

#include <algorithm>
#include <map>

namespace vstab {

namespace {

bool fixes_all(const PermGroup& h, Point x) {
    for (const auto& g : h.generators())
        if (g[x] != x) return false;
    return true;
}

// transversal of the orbit of `rep`: element mapping rep to each orbit point
PermGroup rooted(const PermGroup& g, Point rep) { return PermGroup(g.degree(), g.generators(), {rep}); }

void check_iso(const Graph& from, const Graph& to, const Permutation& p, const char* what) {
    if (from.order() != to.order() || from.size() != to.size())
        throw NotAnAutomorphism(std::string(what) + ": sizes differ");
    for (auto [a, b] : from.edges())
        if (!to.adjacent(p[a], p[b])) throw NotAnAutomorphism(std::string(what) + ": edge not preserved");
}

} // namespace

ArcPairing arc_pairing(const ActedGraph& ag) {
    const Graph& g = ag.graph;
    ArcPairing out;
    for (Point u = 0; u < g.order(); ++u)
        for (Point v : g.neighbours(u)) out.arcs.emplace_back(u, v);
    auto arc_id = [&](Point u, Point v) {
        return static_cast<std::size_t>(std::lower_bound(out.arcs.begin(), out.arcs.end(), Edge{u, v}) -
                                        out.arcs.begin());
    };
    out.partner.assign(out.arcs.size(), SIZE_MAX);
    for (const auto& orb : ag.group.orbits()) {
        Point u = orb.front();
        PermGroup gu = ag.group.stabilizer(u);
        std::map<Point, Point> local; // neighbour -> partner at u
        for (Point v : g.neighbours(u)) {
            PermGroup guv = gu.stabilizer(v);
            std::vector<Point> fixed;
            for (Point w : g.neighbours(u))
                if (w != v && fixes_all(guv, w)) fixed.push_back(w);
            if (fixed.size() != 1) throw PairingDegenerate("arc stabiliser does not determine a unique partner");
            Point w = fixed[0];
            // G_uv = G_uw by mutual containment of generators
            if (!fixes_all(gu.stabilizer(w), v)) throw PairingDegenerate("partner arcs have different stabilisers");
            local[v] = w;
        }
        PermGroup tr = rooted(ag.group, u);
        for (Point x : orb) {
            Permutation t = x == u ? Permutation(g.order()) : tr.coset_rep(0, x);
            for (auto [v, w] : local) out.partner[arc_id(x, t[v])] = arc_id(x, t[w]);
        }
    }
    for (std::size_t i = 0; i < out.partner.size(); ++i)
        if (out.partner[i] == SIZE_MAX || out.partner[out.partner[i]] != i || out.partner[i] == i)
            throw PairingDegenerate("arc pairing is not a fixed-point-free involution");
    return out;
}

SplitGraph split(const ActedGraph& ag) {
    if (!is_locally(ag, LocalKind::D4)) throw NotLocallyD4(ag.provenance + " is not locally D4");
    ArcPairing pr = arc_pairing(ag);
    SplitGraph s;
    for (std::size_t i = 0; i < pr.arcs.size(); ++i) {
        std::size_t j = pr.partner[i];
        if (i < j) {
            Point v = pr.arcs[i].second, w = pr.arcs[j].second;
            s.keys.push_back({pr.arcs[i].first, std::min(v, w), std::max(v, w)});
        }
    }
    std::sort(s.keys.begin(), s.keys.end());
    auto class_of = [&](Point u, Point v) -> Point {
        // the class with tail u containing head v
        auto lo = std::lower_bound(s.keys.begin(), s.keys.end(), std::array<Point, 3>{u, 0, 0});
        for (auto it = lo; it != s.keys.end() && (*it)[0] == u; ++it)
            if ((*it)[1] == v || (*it)[2] == v) return static_cast<Point>(it - s.keys.begin());
        throw PairingDegenerate("arc without a class");
    };
    std::vector<Edge> e;
    for (Point i = 0; i < s.keys.size(); ++i) {
        auto [u, v, w] = s.keys[i];
        for (Point x : ag.graph.neighbours(u))
            if (x != v && x != w) {
                Point j = class_of(u, x);
                if (i < j) e.emplace_back(i, j);
                break;
            }
        for (Point h : {v, w}) {
            Point j = class_of(h, u);
            if (i < j) e.emplace_back(i, j);
        }
    }
    s.acted.graph = Graph::from_edges_merging(s.keys.size(), std::move(e));
    if (!is_regular(s.acted.graph, 3)) throw PairingDegenerate("split graph is not cubic");
    std::vector<Permutation> gens;
    for (const auto& g : ag.group.generators()) {
        std::vector<Point> img(s.keys.size());
        for (std::size_t i = 0; i < s.keys.size(); ++i) img[i] = class_of(g[s.keys[i][0]], g[s.keys[i][1]]);
        gens.emplace_back(std::move(img));
    }
    s.acted.group = PermGroup(s.keys.size(), std::move(gens));
    s.acted.provenance = "Split(" + ag.provenance + ")";
    validate(s.acted);
    return s;
}

MergedGraph merge(const ActedGraph& ag) {
    const Graph& g = ag.graph;
    if (!is_regular(g, 3) || !is_locally(ag, LocalKind::C2On3))
        throw NotLocallyC23(ag.provenance + " is not locally C2^[3]");
    std::vector<Point> mate(g.order(), UINT32_MAX);
    for (const auto& orb : ag.group.orbits()) {
        Point u = orb.front();
        PermGroup gu = ag.group.stabilizer(u);
        if (gu.order() < 4) throw StabTooSmall("vertex stabiliser has order " + gu.order().str());
        std::vector<Point> fixed;
        for (Point w : g.neighbours(u))
            if (fixes_all(gu, w)) fixed.push_back(w);
        if (fixed.size() != 1) throw NotLocallyC23("no unique fixed neighbour");
        Point up = fixed[0];
        if (!fixes_all(ag.group.stabilizer(up), u)) throw PairingDegenerate("G_v differs from G_v'");
        PermGroup tr = rooted(ag.group, u);
        for (Point x : orb) {
            Permutation t = x == u ? Permutation(g.order()) : tr.coset_rep(0, x);
            mate[x] = t[up];
        }
    }
    MergedGraph m;
    std::vector<Point> block(g.order(), UINT32_MAX);
    for (Point v = 0; v < g.order(); ++v) {
        if (mate[v] == UINT32_MAX || mate[mate[v]] != v) throw PairingDegenerate("vertex pairing is not an involution");
        if (v < mate[v]) {
            block[v] = block[mate[v]] = static_cast<Point>(m.blocks.size());
            m.blocks.emplace_back(v, mate[v]);
        }
    }
    std::map<Edge, int> count;
    for (auto [a, b] : g.edges()) {
        if (block[a] == block[b]) continue;
        Point x = std::min(block[a], block[b]), y = std::max(block[a], block[b]);
        if (++count[{x, y}] > 1) throw PairingDegenerate("4-cycle through two pairs");
    }
    for (auto [v, vp] : m.blocks)
        for (Point u : g.neighbours(v))
            if (g.adjacent(u, vp)) throw PairingDegenerate("3-cycle through a pair");
    std::vector<Edge> e;
    for (auto& [k, c] : count) e.push_back(k);
    m.acted.graph = Graph::from_edges(m.blocks.size(), std::move(e));
    Partition parts;
    for (auto [v, vp] : m.blocks) parts.push_back({v, vp});
    m.acted.group = quotient_action(ag.group, parts);
    if (m.acted.group.order() != ag.group.order()) throw PairingDegenerate("action on pairs is not faithful");
    m.acted.provenance = "Merge(" + ag.provenance + ")";
    validate(m.acted);
    return m;
}

Permutation merge_split_iso(const ActedGraph& g, const SplitGraph& s, const MergedGraph& ms) {
    std::vector<Point> img(ms.blocks.size());
    for (std::size_t i = 0; i < ms.blocks.size(); ++i) {
        Point u = s.keys[ms.blocks[i].first][0];
        if (s.keys[ms.blocks[i].second][0] != u) throw NotAnAutomorphism("merged pair has two tails");
        img[i] = u;
    }
    Permutation p(std::move(img));
    check_iso(ms.acted.graph, g.graph, p, "Merge(Split)");
    return p;
}

Permutation split_merge_iso(const ActedGraph& g, const MergedGraph& m, const SplitGraph& sm) {
    auto touches = [&](Point x, Point blk) {
        return g.graph.adjacent(x, m.blocks[blk].first) || g.graph.adjacent(x, m.blocks[blk].second);
    };
    std::vector<Point> img(sm.keys.size());
    for (std::size_t i = 0; i < sm.keys.size(); ++i) {
        auto [b, c1, c2] = sm.keys[i];
        Point x = m.blocks[b].first;
        if (!touches(x, c1)) x = m.blocks[b].second;
        if (!touches(x, c1) || !touches(x, c2)) throw NotAnAutomorphism("class does not match a vertex");
        img[i] = x;
    }
    Permutation p(std::move(img));
    check_iso(sm.acted.graph, g.graph, p, "Split(Merge)");
    return p;
}

} // namespace vstab
