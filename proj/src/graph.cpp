#include "vstab/graph.hpp"

#include "vstab/errors.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace vstab {

namespace {

void build(std::size_t n, std::vector<Edge> edges, bool merge, std::vector<std::size_t>& offsets,
           std::vector<Point>& adj) {
    std::vector<Edge> arcs;
    arcs.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw NotSimple("edge endpoint out of range");
        if (u == v) throw NotSimple("loop at vertex " + std::to_string(u));
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    std::sort(arcs.begin(), arcs.end());
    auto dup = std::adjacent_find(arcs.begin(), arcs.end());
    if (dup != arcs.end()) {
        if (!merge)
            throw NotSimple("repeated edge " + std::to_string(dup->first) + "-" + std::to_string(dup->second));
        arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
    }
    offsets.assign(n + 1, 0);
    for (auto& a : arcs) ++offsets[a.first + 1];
    for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
    adj.resize(arcs.size());
    for (std::size_t i = 0; i < arcs.size(); ++i) adj[i] = arcs[i].second;
}

} // namespace

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges) {
    Graph g;
    build(n, std::move(edges), false, g.offsets_, g.adj_);
    return g;
}

Graph Graph::from_edges_merging(std::size_t n, std::vector<Edge> edges) {
    Graph g;
    build(n, std::move(edges), true, g.offsets_, g.adj_);
    return g;
}

bool Graph::adjacent(Point u, Point v) const {
    auto nb = neighbours(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (Point u = 0; u < order(); ++u)
        for (Point v : neighbours(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

void Graph::set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != order()) throw Error("label count differs from vertex count");
    labels_ = std::move(labels);
}

std::string Graph::label(Point v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph Graph::relabel(const Permutation& p) const {
    if (p.degree() != order()) throw DegreeMismatch("relabel");
    std::vector<Edge> e;
    for (auto [u, v] : edges()) e.emplace_back(p[u], p[v]);
    Graph g = from_edges(order(), std::move(e));
    if (!labels_.empty()) {
        std::vector<std::string> l(order());
        for (Point v = 0; v < order(); ++v) l[p[v]] = labels_[v];
        g.labels_ = std::move(l);
    }
    return g;
}

bool Graph::is_automorphism(const Permutation& p) const {
    if (p.degree() != order()) return false;
    for (Point u = 0; u < order(); ++u) {
        if (degree(p[u]) != degree(u)) return false;
        for (Point v : neighbours(u))
            if (!adjacent(p[u], p[v])) return false;
    }
    return true;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto d = distances_from(g, 0);
    return std::none_of(d.begin(), d.end(), [](std::size_t x) { return x == std::numeric_limits<std::size_t>::max(); });
}

std::vector<std::size_t> distances_from(const Graph& g, Point v) {
    std::vector<std::size_t> d(g.order(), std::numeric_limits<std::size_t>::max());
    std::vector<Point> q{v};
    d[v] = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
        for (Point w : g.neighbours(q[i]))
            if (d[w] == std::numeric_limits<std::size_t>::max()) {
                d[w] = d[q[i]] + 1;
                q.push_back(w);
            }
    return d;
}

std::vector<std::size_t> valency_list(const Graph& g) {
    std::vector<std::size_t> v(g.order());
    for (Point i = 0; i < g.order(); ++i) v[i] = g.degree(i);
    std::sort(v.begin(), v.end());
    return v;
}

bool is_regular(const Graph& g, std::size_t k) {
    for (Point v = 0; v < g.order(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

std::size_t girth(const Graph& g) {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    const std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.order(), inf);
    std::vector<Point> parent(g.order());
    std::vector<Point> q;
    for (Point s = 0; s < g.order(); ++s) {
        q.clear();
        q.push_back(s);
        dist[s] = 0;
        parent[s] = s;
        for (std::size_t i = 0; i < q.size(); ++i) {
            Point u = q[i];
            if (2 * dist[u] + 1 >= best) break;
            for (Point w : g.neighbours(u)) {
                if (dist[w] == inf) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (parent[u] != w) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
        for (Point u : q) dist[u] = inf;
    }
    return best == std::numeric_limits<std::size_t>::max() ? 0 : best;
}

std::uint64_t triangle_count(const Graph& g) {
    std::uint64_t t = 0;
    for (Point u = 0; u < g.order(); ++u)
        for (Point v : g.neighbours(u)) {
            if (v <= u) continue;
            for (Point w : g.neighbours(v))
                if (w > v && g.adjacent(u, w)) ++t;
        }
    return t;
}

std::uint64_t four_cycle_count(const Graph& g) {
    std::uint64_t total = 0;
    std::vector<std::uint32_t> cnt(g.order(), 0);
    std::vector<Point> touched;
    for (Point u = 0; u < g.order(); ++u) {
        touched.clear();
        for (Point x : g.neighbours(u))
            for (Point w : g.neighbours(x)) {
                if (w <= u) continue;
                if (cnt[w]++ == 0) touched.push_back(w);
            }
        for (Point w : touched) {
            total += std::uint64_t{cnt[w]} * (cnt[w] - 1) / 2;
            cnt[w] = 0;
        }
    }
    return total / 2;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.order(), -1);
    for (Point s = 0; s < g.order(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<Point> q{s};
        for (std::size_t i = 0; i < q.size(); ++i)
            for (Point w : g.neighbours(q[i])) {
                if (side[w] == -1) {
                    side[w] = 1 - side[q[i]];
                    q.push_back(w);
                } else if (side[w] == side[q[i]]) {
                    return false;
                }
            }
    }
    return true;
}

std::vector<Point> block_map(std::size_t n, const Partition& blocks) {
    std::vector<Point> map(n, std::numeric_limits<Point>::max());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw InvalidPartition("empty block");
        for (Point v : blocks[b]) {
            if (v >= n) throw InvalidPartition("point out of range");
            if (map[v] != std::numeric_limits<Point>::max()) throw InvalidPartition("point in two blocks");
            map[v] = static_cast<Point>(b);
        }
    }
    for (Point v = 0; v < n; ++v)
        if (map[v] == std::numeric_limits<Point>::max()) throw InvalidPartition("point " + std::to_string(v) + " not covered");
    return map;
}

Quotient quotient_graph(const Graph& g, const Partition& blocks) {
    Quotient q;
    q.block_of = block_map(g.order(), blocks);
    std::vector<Edge> e;
    for (auto [u, v] : g.edges()) {
        Point a = q.block_of[u], b = q.block_of[v];
        if (a != b) e.emplace_back(std::min(a, b), std::max(a, b));
    }
    q.graph = Graph::from_edges_merging(blocks.size(), std::move(e));
    return q;
}

PermGroup quotient_action(const PermGroup& G, const Partition& blocks) {
    auto map = block_map(G.degree(), blocks);
    std::vector<Permutation> gens;
    for (const auto& g : G.generators()) {
        std::vector<Point> im(blocks.size());
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            Point target = map[g[blocks[b][0]]];
            for (Point v : blocks[b])
                if (map[g[v]] != target) throw PartitionNotInvariant("block " + std::to_string(b) + " is split by a generator");
            im[b] = target;
        }
        gens.emplace_back(std::move(im));
    }
    return PermGroup(blocks.size(), std::move(gens));
}

Graph cayley_graph(const PermGroup& G, const std::vector<Permutation>& connection, std::uint64_t cap) {
    std::unordered_set<Permutation> conn(connection.begin(), connection.end());
    for (const auto& s : connection) {
        if (s.is_identity()) throw IdentityInConnection("identity in connection set");
        if (!conn.count(s.inverse())) throw ConnectionNotInverseClosed(s.cycle_string());
        if (!G.contains(s)) throw Error("connection element not in group: " + s.cycle_string());
    }
    if (G.order() > cap) throw OrderExceedsCap("cayley_graph");
    std::unordered_map<Permutation, Point> index;
    std::vector<Permutation> els{Permutation(G.degree())};
    index.emplace(els[0], 0);
    for (std::size_t i = 0; i < els.size(); ++i)
        for (const auto& x : G.generators()) {
            Permutation y = els[i] * x;
            if (index.emplace(y, static_cast<Point>(els.size())).second) els.push_back(std::move(y));
        }
    std::vector<Edge> e;
    for (Point i = 0; i < els.size(); ++i)
        for (const auto& s : conn) {
            Point j = index.at(s * els[i]);
            if (i < j) e.emplace_back(i, j);
        }
    Graph g = Graph::from_edges_merging(els.size(), std::move(e));
    std::vector<std::string> labels;
    for (const auto& x : els) labels.push_back(x.cycle_string());
    g.set_labels(std::move(labels));
    return g;
}

Graph coset_graph(const PermGroup& G, const PermGroup& H, const Permutation& a, std::uint64_t cap) {
    if (!H.is_subgroup_of(G)) throw NotASubgroup("coset_graph: H is not contained in G");
    if (!G.contains(a)) throw Error("coset_graph: a is not in G");
    if (H.contains(a)) throw SelfPairedLoop("a lies in H");
    if (G.order() > cap) throw OrderExceedsCap("coset_graph");
    auto helts = H.elements(cap);
    std::unordered_map<Permutation, Point> coset_of;
    std::vector<Permutation> reps;
    auto intern = [&](const Permutation& g) -> Point {
        auto it = coset_of.find(g);
        if (it != coset_of.end()) return it->second;
        auto id = static_cast<Point>(reps.size());
        reps.push_back(g);
        for (const auto& h : helts) coset_of.emplace(h * g, id);
        return id;
    };
    intern(Permutation(G.degree()));
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (const auto& x : G.generators()) intern(reps[i] * x);
    // neighbours of H: cosets inside HaH and Ha^-1H
    std::vector<Permutation> nb;
    {
        std::vector<Point> seen;
        Permutation ai = a.inverse();
        for (const auto& h : helts)
            for (const Permutation* b : std::array<const Permutation*, 2>{&a, &ai}) {
                Permutation y = *b * h;
                Point c = intern(y);
                if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
                    seen.push_back(c);
                    nb.push_back(reps[c]);
                }
            }
    }
    std::vector<Edge> e;
    for (Point i = 0; i < reps.size(); ++i)
        for (const auto& c : nb) {
            Point j = intern(c * reps[i]);
            if (i < j) e.emplace_back(i, j);
        }
    Graph g = Graph::from_edges_merging(reps.size(), std::move(e));
    std::vector<std::string> labels;
    for (Point i = 0; i < reps.size(); ++i) labels.push_back("H" + reps[i].cycle_string());
    g.set_labels(std::move(labels));
    return g;
}

Graph coset_graph_from_action(const PermGroup& G, const Permutation& a) {
    std::size_t n = G.degree();
    if (!G.is_transitive()) throw Error("coset_graph_from_action: group is not transitive");
    if (a[0] == 0) throw SelfPairedLoop("edge element fixes the base coset");
    PermGroup H = G.stabilizer(0);
    std::vector<Point> n0{a[0], a.inverse()[0]};
    if (n0[0] == n0[1]) n0.pop_back();
    for (std::size_t i = 0; i < n0.size(); ++i)
        for (const auto& h : H.generators()) {
            Point y = h[n0[i]];
            if (std::find(n0.begin(), n0.end(), y) == n0.end()) n0.push_back(y);
        }
    std::vector<std::vector<Point>> nbrs(n);
    std::vector<char> seen(n, 0);
    nbrs[0] = n0;
    seen[0] = 1;
    std::vector<Point> q{0};
    for (std::size_t i = 0; i < q.size(); ++i) {
        Point p = q[i];
        for (const auto& s : G.generators()) {
            Point r = s[p];
            if (seen[r]) continue;
            seen[r] = 1;
            for (Point y : nbrs[p]) nbrs[r].push_back(s[y]);
            q.push_back(r);
        }
    }
    std::vector<Edge> e;
    for (Point u = 0; u < n; ++u)
        for (Point v : nbrs[u])
            e.emplace_back(std::min(u, v), std::max(u, v));
    return Graph::from_edges_merging(n, std::move(e));
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    auto next_line = [&](std::istringstream& ls) {
        while (std::getline(in, line)) {
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            ls.clear();
            ls.str(line);
            return true;
        }
        return false;
    };
    std::istringstream ls;
    long long n = 0, m = 0;
    if (!next_line(ls) || !(ls >> n >> m) || n < 0 || m < 0) throw ParseError("expected header 'n m'");
    std::vector<Edge> e;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!next_line(ls) || !(ls >> u >> v)) throw ParseError("expected " + std::to_string(m) + " edge lines");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range");
        e.emplace_back(static_cast<Point>(u), static_cast<Point>(v));
    }
    return Graph::from_edges(static_cast<std::size_t>(n), std::move(e));
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Point i = 0; i < n; ++i) e.emplace_back(i, static_cast<Point>((i + 1) % n));
    return Graph::from_edges(n, std::move(e));
}

Graph path_graph(std::size_t edges) {
    std::vector<Edge> e;
    for (Point i = 0; i < edges; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(edges + 1, std::move(e));
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Point i = 0; i < n; ++i)
        for (Point j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, std::move(e));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> e;
    for (Point i = 0; i < a; ++i)
        for (Point j = 0; j < b; ++j) e.emplace_back(i, static_cast<Point>(a + j));
    return Graph::from_edges(a + b, std::move(e));
}

Graph cartesian_product(const Graph& a, const Graph& b) {
    std::size_t m = b.order();
    std::vector<Edge> e;
    for (auto [x, y] : a.edges())
        for (Point z = 0; z < m; ++z) e.emplace_back(static_cast<Point>(x * m + z), static_cast<Point>(y * m + z));
    for (Point x = 0; x < a.order(); ++x)
        for (auto [y, z] : b.edges()) e.emplace_back(static_cast<Point>(x * m + y), static_cast<Point>(x * m + z));
    return Graph::from_edges(a.order() * m, std::move(e));
}

} // namespace vstab
