#include "vstab/automorphism.hpp"

#include "vstab/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace vstab {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
    return h ^ (h >> 33);
}

struct Part {
    std::vector<Point> lab;  // vertices in cell order
    std::vector<Point> pos;  // position of each vertex in lab
    std::vector<Point> cell; // start of the cell holding each vertex
    std::vector<Point> end;  // one past the end, valid at cell starts
    std::size_t ncells = 0;

    bool discrete() const { return ncells == lab.size(); }
};

class Refiner {
public:
    explicit Refiner(const Graph& g) : g_(g), cnt_(g.order(), 0), inq_(g.order(), 0) {}

    Part initial(const std::vector<std::uint32_t>& colours, std::uint64_t& trace) {
        std::size_t n = g_.order();
        Part p;
        p.lab.resize(n);
        std::iota(p.lab.begin(), p.lab.end(), Point{0});
        if (!colours.empty()) {
            if (colours.size() != n) throw Error("colour vector length differs from vertex count");
            std::stable_sort(p.lab.begin(), p.lab.end(),
                             [&](Point a, Point b) { return colours[a] < colours[b]; });
        }
        p.pos.resize(n);
        p.cell.resize(n);
        p.end.resize(n);
        std::deque<Point> q;
        trace = mix(0, n);
        for (std::size_t i = 0; i < n;) {
            std::size_t j = i;
            while (j < n && (colours.empty() || colours[p.lab[j]] == colours[p.lab[i]])) ++j;
            for (std::size_t k = i; k < j; ++k) {
                p.pos[p.lab[k]] = static_cast<Point>(k);
                p.cell[p.lab[k]] = static_cast<Point>(i);
            }
            p.end[i] = static_cast<Point>(j);
            ++p.ncells;
            q.push_back(static_cast<Point>(i));
            trace = mix(trace, colours.empty() ? 0 : colours[p.lab[i]]);
            trace = mix(trace, j - i);
            i = j;
        }
        trace = mix(trace, refine(p, q));
        return p;
    }

    // individualise v inside its cell, then refine
    std::uint64_t individualise(Part& p, Point v) {
        Point s = p.cell[v];
        Point e = p.end[s];
        Point other = p.lab[s];
        std::swap(p.lab[s], p.lab[p.pos[v]]);
        p.pos[other] = p.pos[v];
        p.pos[v] = s;
        p.end[s] = s + 1;
        for (Point i = s + 1; i < e; ++i) p.cell[p.lab[i]] = s + 1;
        p.end[s + 1] = e;
        ++p.ncells;
        std::deque<Point> q{s};
        return mix(mix(s, e - s), refine(p, q));
    }

    std::uint64_t refine(Part& p, std::deque<Point>& q) {
        std::uint64_t h = 0x1234567ull;
        for (Point c : q) inq_[c] = 1;
        std::vector<Point> touched;
        while (!q.empty() && !p.discrete()) {
            Point w = q.front();
            q.pop_front();
            inq_[w] = 0;
            touched.clear();
            for (Point i = w; i < p.end[w]; ++i)
                for (Point x : g_.neighbours(p.lab[i]))
                    if (cnt_[x]++ == 0) touched.push_back(x);
            std::sort(touched.begin(), touched.end(), [&](Point a, Point b) {
                if (p.cell[a] != p.cell[b]) return p.cell[a] < p.cell[b];
                if (cnt_[a] != cnt_[b]) return cnt_[a] < cnt_[b];
                return a < b;
            });
            h = mix(h, w);
            for (std::size_t a = 0; a < touched.size();) {
                Point x0 = p.cell[touched[a]];
                std::size_t b = a;
                while (b < touched.size() && p.cell[touched[b]] == x0) ++b;
                split(p, x0, touched.data() + a, b - a, q, h);
                a = b;
            }
            for (Point x : touched) cnt_[x] = 0;
        }
        for (Point c : q) inq_[c] = 0;
        q.clear();
        return mix(h, p.ncells);
    }

private:
    // touched vertices T of cell X, sorted by count
    void split(Part& p, Point X, const Point* T, std::size_t t, std::deque<Point>& q, std::uint64_t& h) {
        Point e = p.end[X];
        std::size_t size = e - X;
        if (size == 1) return;
        if (t == size && cnt_[T[0]] == cnt_[T[t - 1]]) return;
        // move touched vertices to the back of the cell, untouched to the front
        Point back = static_cast<Point>(e - t);
        {
            Point i = X, j = back;
            while (true) {
                while (i < back && cnt_[p.lab[i]] == 0) ++i;
                while (j < e && cnt_[p.lab[j]] != 0) ++j;
                if (i >= back || j >= e) break;
                std::swap(p.lab[i], p.lab[j]);
                p.pos[p.lab[i]] = i;
                p.pos[p.lab[j]] = j;
            }
        }
        for (std::size_t k = 0; k < t; ++k) {
            p.lab[back + k] = T[k];
            p.pos[T[k]] = static_cast<Point>(back + k);
        }
        std::vector<std::pair<Point, Point>> frags; // (start, end)
        if (back > X) frags.emplace_back(X, back);
        for (std::size_t k = 0; k < t;) {
            std::size_t m = k;
            while (m < t && cnt_[T[m]] == cnt_[T[k]]) ++m;
            frags.emplace_back(static_cast<Point>(back + k), static_cast<Point>(back + m));
            k = m;
        }
        h = mix(h, X);
        h = mix(h, frags.size());
        for (auto [s, f] : frags) {
            h = mix(h, f - s);
            h = mix(h, cnt_[p.lab[s]]);
            p.end[s] = f;
            for (Point i = s; i < f; ++i) p.cell[p.lab[i]] = s;
        }
        p.ncells += frags.size() - 1;
        if (inq_[X]) {
            for (std::size_t k = 1; k < frags.size(); ++k) {
                q.push_back(frags[k].first);
                inq_[frags[k].first] = 1;
            }
        } else {
            std::size_t largest = 0;
            for (std::size_t k = 1; k < frags.size(); ++k)
                if (frags[k].second - frags[k].first > frags[largest].second - frags[largest].first) largest = k;
            for (std::size_t k = 0; k < frags.size(); ++k) {
                if (k == largest) continue;
                q.push_back(frags[k].first);
                inq_[frags[k].first] = 1;
            }
        }
    }

    const Graph& g_;
    std::vector<std::uint32_t> cnt_;
    std::vector<char> inq_;
};

// first largest non-singleton cell
Point target_cell(const Part& p) {
    Point best = static_cast<Point>(p.lab.size());
    Point best_size = 1;
    for (Point s = 0; s < p.lab.size(); s = p.end[s])
        if (p.end[s] - s > best_size) {
            best_size = p.end[s] - s;
            best = s;
        }
    return best;
}

struct PathNode {
    Part part;
    std::uint64_t trace = 0;
    Point cell = 0;   // target cell start (when not a leaf)
    Point chosen = 0; // vertex individualised to reach the next node
};

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Point{0}); }
    Point find(Point x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(Point a, Point b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
    }

private:
    std::vector<Point> parent_;
};

class Search {
public:
    Search(const Graph& g, const std::vector<std::uint32_t>& colours, std::uint64_t limit, std::uint64_t& nodes)
        : g_(g), ref_(g), colours_(colours), limit_(limit), nodes_(nodes) {}

    // builds the first path of this graph
    void first_path() {
        PathNode root;
        root.part = ref_.initial(colours_, root.trace);
        path_.push_back(std::move(root));
        while (!path_.back().part.discrete()) {
            tick();
            PathNode& cur = path_.back();
            cur.cell = target_cell(cur.part);
            Point v = *std::min_element(cur.part.lab.begin() + cur.cell, cur.part.lab.begin() + cur.part.end[cur.cell]);
            cur.chosen = v;
            PathNode next;
            next.part = cur.part;
            next.trace = ref_.individualise(next.part, v);
            path_.push_back(std::move(next));
        }
    }

    const std::vector<PathNode>& path() const { return path_; }

    // DFS below `node` (at depth d) of `other`'s tree looking for a leaf whose labelling
    // against this search's first leaf passes `accept`. `fixed` lists the individualised
    // vertices of the node; `known` are automorphisms of the searched graph used for pruning.
    template <class Accept>
    std::optional<Permutation> dfs(Refiner& ref, const Part& node, std::size_t d, std::vector<Point>& fixed,
                                   const std::vector<Permutation>& known, const Accept& accept) {
        tick();
        if (d + 1 == path_.size()) {
            if (!node.discrete()) return std::nullopt;
            std::vector<Point> im(node.lab.size());
            const auto& z = path_.back().part.lab;
            for (std::size_t j = 0; j < z.size(); ++j) im[z[j]] = node.lab[j];
            Permutation f(std::move(im));
            if (accept(f)) return f;
            return std::nullopt;
        }
        Point c = target_cell(node);
        const PathNode& ref_node = path_[d];
        if (c != ref_node.cell || node.end[c] != ref_node.part.end[ref_node.cell]) return std::nullopt;
        std::vector<Point> cand(node.lab.begin() + c, node.lab.begin() + node.end[c]);
        std::sort(cand.begin(), cand.end());
        auto rep = orbit_reps(cand, fixed, known, node.lab.size());
        std::vector<char> failed_root(node.lab.size(), 0);
        for (std::size_t k = 0; k < cand.size(); ++k) {
            Point u = cand[k];
            if (failed_root[rep[k]]) continue;
            failed_root[rep[k]] = 1;
            Part child = node;
            std::uint64_t tr = ref.individualise(child, u);
            if (tr != path_[d + 1].trace) continue;
            fixed.push_back(u);
            auto r = dfs(ref, child, d + 1, fixed, known, accept);
            fixed.pop_back();
            if (r) return r;
        }
        return std::nullopt;
    }

    void tick() {
        if (++nodes_ > limit_) throw SearchBudgetExceeded("node limit " + std::to_string(limit_) + " reached");
    }

    // orbit representative (smallest member in cand) of each candidate under the
    // known automorphisms that fix every vertex of `fixed`
    static std::vector<Point> orbit_reps(const std::vector<Point>& cand, const std::vector<Point>& fixed,
                                         const std::vector<Permutation>& known, std::size_t n) {
        std::vector<const Permutation*> gens;
        for (const auto& g : known)
            if (std::all_of(fixed.begin(), fixed.end(), [&](Point x) { return g[x] == x; })) gens.push_back(&g);
        std::vector<Point> rep(cand.size());
        if (gens.empty()) {
            for (std::size_t k = 0; k < cand.size(); ++k) rep[k] = cand[k];
            return rep;
        }
        std::vector<Point> root(n, static_cast<Point>(n));
        for (Point u : cand) {
            if (root[u] != n) continue;
            std::vector<Point> orb{u};
            root[u] = u;
            for (std::size_t i = 0; i < orb.size(); ++i)
                for (const auto* g : gens) {
                    Point y = (*g)[orb[i]];
                    if (root[y] == n) {
                        root[y] = u;
                        orb.push_back(y);
                    }
                }
        }
        for (std::size_t k = 0; k < cand.size(); ++k) rep[k] = root[cand[k]];
        return rep;
    }

    Refiner& refiner() { return ref_; }

private:
    const Graph& g_;
    Refiner ref_;
    const std::vector<std::uint32_t>& colours_;
    std::uint64_t limit_;
    std::uint64_t& nodes_;
    std::vector<PathNode> path_;
};

bool preserves(const std::vector<std::uint32_t>& c1, const std::vector<std::uint32_t>& c2, const Permutation& f) {
    if (c1.empty() && c2.empty()) return true;
    for (Point v = 0; v < f.degree(); ++v)
        if (c1[v] != c2[f[v]]) return false;
    return true;
}

} // namespace

PermGroup automorphism_group(const Graph& g, const SearchOptions& opt, SearchStats* stats) {
    std::size_t n = g.order();
    std::uint64_t nodes = 0;
    Search s(g, opt.colours, opt.node_limit, nodes);
    s.first_path();
    const auto& path = s.path();
    std::size_t k = path.size() - 1;
    std::vector<Permutation> gens;
    std::vector<Point> base;
    for (std::size_t i = 0; i < k; ++i) base.push_back(path[i].chosen);

    auto accept = [&](const Permutation& f) {
        return g.is_automorphism(f) && preserves(opt.colours, opt.colours, f);
    };
    for (std::size_t i = k; i-- > 0;) {
        const PathNode& node = path[i];
        UnionFind uf(n);
        for (const auto& x : gens)
            for (Point v = 0; v < n; ++v) uf.unite(v, x[v]);
        std::vector<Point> cand(node.part.lab.begin() + node.cell, node.part.lab.begin() + node.part.end[node.cell]);
        std::sort(cand.begin(), cand.end());
        std::vector<char> failed(n, 0);
        Point v = node.chosen;
        std::vector<Point> fixed(base.begin(), base.begin() + static_cast<long>(i));
        for (Point w : cand) {
            if (w == v) continue;
            Point rw = uf.find(w);
            if (rw == uf.find(v) || failed[rw]) continue;
            Part child = node.part;
            std::uint64_t tr = s.refiner().individualise(child, w);
            std::optional<Permutation> found;
            if (tr == path[i + 1].trace) {
                fixed.push_back(w);
                found = s.dfs(s.refiner(), child, i + 1, fixed, gens, accept);
                fixed.pop_back();
            }
            if (found) {
                for (Point x = 0; x < n; ++x) uf.unite(x, (*found)[x]);
                gens.push_back(std::move(*found));
            } else {
                failed[rw] = 1;
            }
        }
    }
    if (stats) {
        stats->nodes = nodes;
        stats->first_path_length = k;
    }
    for (const auto& x : gens)
        if (!g.is_automorphism(x)) throw NotAnAutomorphism("search produced a non-automorphism");
    return PermGroup::from_bsgs(n, gens, base, gens);
}

std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2, const SearchOptions& opt,
                                          SearchStats* stats) {
    if (g1.order() != g2.order() || g1.size() != g2.size()) return std::nullopt;
    if (valency_list(g1) != valency_list(g2)) return std::nullopt;
    if (opt.colours.size() != opt.colours2.size()) throw Error("colour vectors must be given for both graphs");
    if (!opt.colours.empty()) {
        auto a = opt.colours, b = opt.colours2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }
    if (g1.order() == 0) return Permutation(0);
    if (triangle_count(g1) != triangle_count(g2)) return std::nullopt;
    if (four_cycle_count(g1) != four_cycle_count(g2)) return std::nullopt;

    std::uint64_t nodes = 0;
    SearchOptions o2;
    o2.node_limit = opt.node_limit;
    o2.colours = opt.colours2;
    PermGroup aut2 = automorphism_group(g2, o2);
    std::vector<Permutation> known = aut2.strong_generators();

    Search s1(g1, opt.colours, opt.node_limit, nodes);
    s1.first_path();
    Refiner ref2(g2);
    std::uint64_t tr2 = 0;
    Part root2 = ref2.initial(opt.colours2, tr2);
    std::optional<Permutation> result;
    if (tr2 == s1.path()[0].trace) {
        auto accept = [&](const Permutation& f) {
            for (auto [u, v] : g1.edges())
                if (!g2.adjacent(f[u], f[v])) return false;
            return preserves(opt.colours, opt.colours2, f);
        };
        std::vector<Point> fixed;
        result = s1.dfs(ref2, root2, 0, fixed, known, accept);
    }
    if (stats) {
        stats->nodes = nodes;
        stats->first_path_length = s1.path().size() - 1;
    }
    if (result) {
        // independent witness check
        for (auto [u, v] : g1.edges())
            if (!g2.adjacent((*result)[u], (*result)[v])) throw Error("isomorphism witness failed verification");
    }
    return result;
}

Integer subgroup_index(const PermGroup& G, const PermGroup& H) {
    for (const auto& h : H.generators())
        if (!G.contains(h)) throw NotASubgroup("generator " + h.cycle_string() + " does not sift");
    return G.order() / H.order();
}

} // namespace vstab
