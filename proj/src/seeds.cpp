#include "vstab/errors.hpp"
#include "vstab/graph_ops.hpp"

#include <algorithm>
#include <cstdint>

namespace vstab {

Graph lcf_graph(const std::vector<int>& pattern, std::size_t repeats) {
    std::size_t n = pattern.size() * repeats;
    std::vector<Edge> e;
    for (std::size_t i = 0; i < n; ++i) {
        e.emplace_back(static_cast<Point>(i), static_cast<Point>((i + 1) % n));
        long j = (static_cast<long>(i) + pattern[i % pattern.size()]) % static_cast<long>(n);
        if (j < 0) j += static_cast<long>(n);
        if (static_cast<std::size_t>(j) > i) e.emplace_back(static_cast<Point>(i), static_cast<Point>(j));
    }
    return Graph::from_edges(n, std::move(e));
}

Graph kneser_graph(std::size_t n, std::size_t k) {
    // k-subsets as bitmasks, in lexicographic order of their sorted elements
    std::vector<std::vector<Point>> sets;
    std::vector<Point> cur;
    auto rec = [&](auto&& self, Point from) -> void {
        if (cur.size() == k) {
            sets.push_back(cur);
            return;
        }
        for (Point x = from; x < n; ++x) {
            cur.push_back(x);
            self(self, x + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    std::vector<std::uint64_t> mask;
    for (auto& s : sets) {
        std::uint64_t m = 0;
        for (Point x : s) m |= std::uint64_t{1} << x;
        mask.push_back(m);
    }
    std::vector<Edge> e;
    for (Point a = 0; a < sets.size(); ++a)
        for (Point b = a + 1; b < sets.size(); ++b)
            if (!(mask[a] & mask[b])) e.emplace_back(a, b);
    return Graph::from_edges(sets.size(), std::move(e));
}

namespace {

Graph heawood() {
    // points 0..6, lines 7..13: line i = {i, i+1, i+3}
    std::vector<Edge> e;
    for (Point i = 0; i < 7; ++i)
        for (Point d : {0u, 1u, 3u}) e.emplace_back((i + d) % 7, 7 + i);
    return Graph::from_edges(14, std::move(e));
}

Graph tutte_coxeter() {
    // duads of {0..5} against synthemes (perfect matchings of K6), by containment
    std::vector<Edge> duads;
    for (Point a = 0; a < 6; ++a)
        for (Point b = a + 1; b < 6; ++b) duads.emplace_back(a, b);
    std::vector<std::vector<Point>> synthemes;
    for (Point i = 0; i < 15; ++i)
        for (Point j = i + 1; j < 15; ++j)
            for (Point k = j + 1; k < 15; ++k) {
                std::vector<Point> pts{duads[i].first, duads[i].second, duads[j].first,
                                       duads[j].second, duads[k].first, duads[k].second};
                std::sort(pts.begin(), pts.end());
                if (std::adjacent_find(pts.begin(), pts.end()) == pts.end()) synthemes.push_back({i, j, k});
            }
    std::vector<Edge> e;
    for (Point s = 0; s < synthemes.size(); ++s)
        for (Point d : synthemes[s]) e.emplace_back(d, 15 + s);
    return Graph::from_edges(15 + synthemes.size(), std::move(e));
}

std::uint64_t edge_digest(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](Point x) {
        for (int b = 0; b < 4; ++b) {
            h ^= (x >> (8 * b)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    for (auto [u, v] : g.edges()) {
        mix(u);
        mix(v);
    }
    return h;
}

constexpr std::uint64_t f90_digest = 1329241077377363634ull;

} // namespace

const std::vector<std::string>& seed_names() {
    static const std::vector<std::string> names{"F6", "Petersen", "Heawood", "F18", "Tut", "F90"};
    return names;
}

SeedGraph seed(std::string_view name) {
    SeedGraph s;
    s.name = std::string(name);
    if (name == "F6") {
        s.graph = complete_bipartite(3, 3);
        s.expected_order = 6;
        s.expected_aut_order = 72;
    } else if (name == "Petersen") {
        s.graph = kneser_graph(5, 2);
        s.expected_order = 10;
        s.expected_aut_order = 120;
    } else if (name == "Heawood") {
        s.graph = heawood();
        s.expected_order = 14;
        s.expected_aut_order = 336;
    } else if (name == "F18") {
        // Pappus graph
        s.graph = lcf_graph({5, 7, -7, 7, -7, -5}, 3);
        s.expected_order = 18;
        s.expected_aut_order = 216;
    } else if (name == "Tut") {
        s.graph = tutte_coxeter();
        s.expected_order = 30;
        s.expected_aut_order = 1440;
    } else if (name == "F90") {
        s.graph = lcf_graph({17, -9, 37, -37, 9, -17}, 15);
        s.expected_order = 90;
        s.expected_aut_order = 4320;
        if (edge_digest(s.graph) != f90_digest) throw SeedInvariantViolated("F90 edge list digest mismatch");
    } else {
        throw UnknownSeed("unknown seed graph '" + s.name + "'");
    }
    if (s.graph.order() != s.expected_order) throw SeedInvariantViolated(s.name + ": wrong vertex count");
    if (!is_regular(s.graph, 3)) throw SeedInvariantViolated(s.name + ": not cubic");
    if (!is_connected(s.graph)) throw SeedInvariantViolated(s.name + ": not connected");
    return s;
}

} // namespace vstab
