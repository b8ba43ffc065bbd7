#include "vstab/graph_ops.hpp"

#include "vstab/errors.hpp"

#include <algorithm>
#include <cctype>

namespace vstab {

namespace {

using Key = DerivedGraph::Key;

std::string lower(std::string_view s) {
    std::string r(s);
    for (char& c : r) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return r;
}

// arc (u, v) -> index in lexicographic order
class ArcIndex {
public:
    explicit ArcIndex(const Graph& g) : g_(g), start_(g.order() + 1, 0) {
        for (Point v = 0; v < g.order(); ++v) start_[v + 1] = start_[v] + g.degree(v);
    }
    std::size_t count() const { return start_.back(); }
    Point operator()(Point u, Point v) const {
        auto nb = g_.neighbours(u);
        auto it = std::lower_bound(nb.begin(), nb.end(), v);
        return static_cast<Point>(start_[u] + static_cast<std::size_t>(it - nb.begin()));
    }

private:
    const Graph& g_;
    std::vector<std::size_t> start_;
};

std::vector<Key> arc_keys(const Graph& g) {
    std::vector<Key> keys;
    for (Point u = 0; u < g.order(); ++u)
        for (Point v : g.neighbours(u)) keys.push_back({u, v, 0, 0});
    return keys;
}

DerivedGraph line(const Graph& g) {
    DerivedGraph d{GraphOp::Line, {}, {}};
    auto es = g.edges();
    for (auto [u, v] : es) d.keys.push_back({u, v, 0, 0});
    std::vector<std::vector<Point>> at(g.order());
    for (Point i = 0; i < es.size(); ++i) {
        at[es[i].first].push_back(i);
        at[es[i].second].push_back(i);
    }
    std::vector<Edge> out;
    for (auto& inc : at)
        for (std::size_t a = 0; a < inc.size(); ++a)
            for (std::size_t b = a + 1; b < inc.size(); ++b) out.emplace_back(inc[a], inc[b]);
    d.graph = Graph::from_edges(es.size(), std::move(out));
    return d;
}

DerivedGraph bdouble(const Graph& g) {
    DerivedGraph d{GraphOp::BipartiteDouble, {}, {}};
    for (Point v = 0; v < g.order(); ++v) {
        d.keys.push_back({v, 0, 0, 0});
        d.keys.push_back({v, 1, 0, 0});
    }
    std::vector<Edge> out;
    for (auto [u, v] : g.edges()) {
        out.emplace_back(2 * u, 2 * v + 1);
        out.emplace_back(2 * u + 1, 2 * v);
    }
    d.graph = Graph::from_edges(2 * g.order(), std::move(out));
    return d;
}

DerivedGraph arcs(const Graph& g) {
    DerivedGraph d{GraphOp::Arc, {}, arc_keys(g)};
    ArcIndex idx(g);
    std::vector<Edge> out;
    for (Point u = 0; u < g.order(); ++u)
        for (Point v : g.neighbours(u))
            for (Point w : g.neighbours(v))
                if (w != u) out.emplace_back(idx(u, v), idx(v, w));
    d.graph = Graph::from_edges(idx.count(), std::move(out));
    return d;
}

DerivedGraph three_arcs(const Graph& g) {
    DerivedGraph d{GraphOp::ThreeArc, {}, arc_keys(g)};
    ArcIndex idx(g);
    std::vector<Edge> out;
    for (Point v1 = 0; v1 < g.order(); ++v1)
        for (Point v2 : g.neighbours(v1))
            for (Point w1 : g.neighbours(v1)) {
                if (w1 == v2) continue;
                for (Point w2 : g.neighbours(w1)) {
                    if (w2 == v1) continue;
                    Point a = idx(v1, v2), b = idx(w1, w2);
                    if (a < b) out.emplace_back(a, b);
                }
            }
    d.graph = Graph::from_edges(idx.count(), std::move(out));
    return d;
}

DerivedGraph hill(const Graph& g) {
    DerivedGraph d{GraphOp::HillCapping, {}, {}};
    auto es = g.edges();
    for (auto [u, v] : es)
        for (Point i = 0; i < 2; ++i)
            for (Point j = 0; j < 2; ++j) d.keys.push_back({u, i, v, j});
    std::sort(d.keys.begin(), d.keys.end());
    auto id = [&](Point x, Point i, Point y, Point j) {
        if (x > y) {
            std::swap(x, y);
            std::swap(i, j);
        }
        return d.vertex_of({x, i, y, j});
    };
    std::vector<Edge> out;
    for (auto [x, y] : es)
        for (Point i = 0; i < 2; ++i)
            for (Point j = 0; j < 2; ++j) {
                Point a = id(x, i, y, j);
                // shared y_j: other end x_i, new end w_{1-i}; then the mirror case
                for (Point w : g.neighbours(y))
                    if (w != x) {
                        Point b = id(y, j, w, 1 - i);
                        if (a < b) out.emplace_back(a, b);
                    }
                for (Point w : g.neighbours(x))
                    if (w != y) {
                        Point b = id(x, i, w, 1 - j);
                        if (a < b) out.emplace_back(a, b);
                    }
            }
    d.graph = Graph::from_edges(4 * es.size(), std::move(out));
    return d;
}

DerivedGraph squared_arcs(const Graph& g) {
    DerivedGraph d{GraphOp::SquaredArc, {}, {}};
    ArcIndex idx(g);
    auto ak = arc_keys(g);
    std::size_t m = ak.size();
    d.keys.reserve(m * m);
    for (auto& a : ak)
        for (auto& b : ak) d.keys.push_back({a[0], a[1], b[0], b[1]});
    std::vector<Edge> out;
    for (std::size_t a = 0; a < m; ++a) {
        Point v1 = ak[a][0], v2 = ak[a][1];
        for (Point v3 : g.neighbours(v2)) {
            if (v3 == v1) continue;
            std::size_t c = idx(v2, v3);
            for (std::size_t b = 0; b < m; ++b)
                out.emplace_back(static_cast<Point>(a * m + b), static_cast<Point>(b * m + c));
        }
    }
    d.graph = Graph::from_edges(m * m, std::move(out));
    return d;
}

} // namespace

std::string_view op_name(GraphOp op) {
    switch (op) {
    case GraphOp::Line: return "line";
    case GraphOp::BipartiteDouble: return "bipartite-double";
    case GraphOp::Arc: return "arc";
    case GraphOp::ThreeArc: return "three-arc";
    case GraphOp::HillCapping: return "hill-capping";
    case GraphOp::SquaredArc: return "squared-arc";
    }
    return "?";
}

GraphOp parse_op(std::string_view name) {
    std::string s = lower(name);
    if (s == "line" || s == "l") return GraphOp::Line;
    if (s == "bipartite-double" || s == "b" || s == "double") return GraphOp::BipartiteDouble;
    if (s == "arc" || s == "ag") return GraphOp::Arc;
    if (s == "three-arc" || s == "aaa" || s == "3-arc") return GraphOp::ThreeArc;
    if (s == "hill-capping" || s == "hc") return GraphOp::HillCapping;
    if (s == "squared-arc" || s == "aag") return GraphOp::SquaredArc;
    throw ParseError("unknown graph operator '" + std::string(name) + "'");
}

DerivedGraph derive(GraphOp op, const Graph& g) {
    switch (op) {
    case GraphOp::Line: return line(g);
    case GraphOp::BipartiteDouble: return bdouble(g);
    case GraphOp::Arc: return arcs(g);
    case GraphOp::ThreeArc: return three_arcs(g);
    case GraphOp::HillCapping: return hill(g);
    case GraphOp::SquaredArc: return squared_arcs(g);
    }
    throw InvalidParams("bad operator");
}

Point DerivedGraph::vertex_of(const Key& k) const {
    auto it = std::lower_bound(keys.begin(), keys.end(), k);
    if (it == keys.end() || *it != k) throw VertexOutOfRange("no derived vertex with this key");
    return static_cast<Point>(it - keys.begin());
}

Permutation DerivedGraph::induced(const Permutation& p) const {
    std::vector<Point> img(keys.size());
    for (std::size_t x = 0; x < keys.size(); ++x) {
        Key k = keys[x];
        switch (op) {
        case GraphOp::Line:
            k = {p[k[0]], p[k[1]], 0, 0};
            if (k[0] > k[1]) std::swap(k[0], k[1]);
            break;
        case GraphOp::BipartiteDouble: k[0] = p[k[0]]; break;
        case GraphOp::Arc:
        case GraphOp::ThreeArc: k = {p[k[0]], p[k[1]], 0, 0}; break;
        case GraphOp::HillCapping:
            k = {p[k[0]], k[1], p[k[2]], k[3]};
            if (k[0] > k[2]) k = {k[2], k[3], k[0], k[1]};
            break;
        case GraphOp::SquaredArc: k = {p[k[0]], p[k[1]], p[k[2]], p[k[3]]}; break;
        }
        img[x] = vertex_of(k);
    }
    return Permutation(std::move(img));
}

std::vector<Permutation> DerivedGraph::extra_symmetries() const {
    std::vector<Point> img(keys.size());
    for (std::size_t x = 0; x < keys.size(); ++x) {
        Key k = keys[x];
        switch (op) {
        case GraphOp::BipartiteDouble: k[1] = 1 - k[1]; break;
        case GraphOp::Arc: std::swap(k[0], k[1]); break;
        case GraphOp::HillCapping: k = {k[0], 1 - k[1], k[2], 1 - k[3]}; break;
        case GraphOp::SquaredArc: k = {k[3], k[2], k[1], k[0]}; break;
        default: return {};
        }
        img[x] = vertex_of(k);
    }
    return {Permutation(std::move(img))};
}

PermGroup induced_group(const DerivedGraph& d, const PermGroup& base, bool with_extras) {
    std::vector<Permutation> gens;
    for (const auto& p : base.generators()) gens.push_back(d.induced(p));
    if (with_extras)
        for (auto& e : d.extra_symmetries()) gens.push_back(std::move(e));
    return PermGroup(d.keys.size(), std::move(gens));
}

Graph line_graph(const Graph& g) { return line(g).graph; }
Graph bipartite_double(const Graph& g) { return bdouble(g).graph; }
Graph arc_graph(const Graph& g) { return arcs(g).graph; }
Graph three_arc_graph(const Graph& g) { return three_arcs(g).graph; }
Graph hill_capping(const Graph& g) { return hill(g).graph; }
Graph squared_arc_graph(const Graph& g) { return squared_arcs(g).graph; }

} // namespace vstab
