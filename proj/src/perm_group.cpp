#include "vstab/perm_group.hpp"

#include "vstab/errors.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace vstab {

namespace {

// explicit inverse representatives are dropped once orbit*degree exceeds this
constexpr std::size_t kExplicitLimit = std::size_t{1} << 24;

bool fixes_all(const Permutation& p, const std::vector<ChainLevel>& levels, std::size_t upto) {
    for (std::size_t l = 0; l < upto; ++l)
        if (p[levels[l].base_point] != levels[l].base_point) return false;
    return true;
}

} // namespace

PermGroup::PermGroup(std::size_t degree) : degree_(degree) {}

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> gens,
                     std::vector<Point> base_prefix)
    : degree_(degree), gens_(std::move(gens)) {
    for (const auto& g : gens_)
        if (g.degree() != degree_) throw DegreeMismatch("generator degree differs from group degree");
    for (Point b : base_prefix)
        if (b >= degree_) throw DegreeMismatch("base point out of range");
    schreier_sims(std::move(base_prefix));
}

PermGroup PermGroup::from_bsgs(std::size_t degree, std::vector<Permutation> gens,
                               std::vector<Point> base, std::vector<Permutation> strong) {
    PermGroup g;
    g.degree_ = degree;
    g.gens_ = std::move(gens);
    for (auto& s : strong) {
        if (s.degree() != degree) throw DegreeMismatch("strong generator degree");
        if (s.is_identity()) continue;
        g.strong_inv_.push_back(s.inverse());
        g.strong_.push_back(std::move(s));
    }
    for (Point b : base) g.add_level(b);
    g.compute_order();
    return g;
}

std::vector<Point> PermGroup::base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base_point);
    return b;
}

void PermGroup::add_level(Point beta) {
    ChainLevel L;
    L.base_point = beta;
    L.label.assign(degree_, -1);
    L.label[beta] = -2;
    L.orbit.push_back(beta);
    L.explicit_reps = true;
    L.inv_reps.resize(degree_);
    L.inv_reps[beta] = Permutation(degree_);
    std::size_t idx = levels_.size();
    for (std::uint32_t s = 0; s < strong_.size(); ++s)
        if (fixes_all(strong_[s], levels_, idx)) L.gens.push_back(s);
    levels_.push_back(std::move(L));
    ChainLevel& lv = levels_.back();
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
        Point p = lv.orbit[i];
        for (std::uint32_t s : lv.gens) {
            Point q = strong_[s][p];
            if (lv.label[q] != -1) continue;
            lv.label[q] = static_cast<std::int32_t>(s);
            lv.orbit.push_back(q);
            if (lv.explicit_reps) lv.inv_reps[q] = strong_inv_[s] * lv.inv_reps[p];
            if (lv.explicit_reps && lv.orbit.size() * degree_ > kExplicitLimit) {
                lv.explicit_reps = false;
                lv.inv_reps.clear();
                lv.inv_reps.shrink_to_fit();
            }
        }
    }
}

void PermGroup::extend_orbit(std::size_t level, std::uint32_t new_gen) {
    ChainLevel& lv = levels_[level];
    auto add = [&](Point p, Point q, std::uint32_t s) {
        lv.label[q] = static_cast<std::int32_t>(s);
        lv.orbit.push_back(q);
        if (lv.explicit_reps) lv.inv_reps[q] = strong_inv_[s] * lv.inv_reps[p];
        if (lv.explicit_reps && lv.orbit.size() * degree_ > kExplicitLimit) {
            lv.explicit_reps = false;
            lv.inv_reps.clear();
            lv.inv_reps.shrink_to_fit();
        }
    };
    std::size_t old = lv.orbit.size();
    for (std::size_t i = 0; i < old; ++i) {
        Point p = lv.orbit[i];
        Point q = strong_[new_gen][p];
        if (lv.label[q] == -1) add(p, q, new_gen);
    }
    for (std::size_t i = old; i < lv.orbit.size(); ++i) {
        Point p = lv.orbit[i];
        for (std::uint32_t s : lv.gens) {
            Point q = strong_[s][p];
            if (lv.label[q] == -1) add(p, q, s);
        }
    }
}

Permutation PermGroup::inv_rep(std::size_t level, Point x) const {
    const ChainLevel& lv = levels_[level];
    if (lv.explicit_reps) return lv.inv_reps[x];
    Permutation r(degree_);
    while (lv.label[x] >= 0) {
        const Permutation& si = strong_inv_[static_cast<std::size_t>(lv.label[x])];
        r *= si;
        x = si[x];
    }
    return r;
}

Permutation PermGroup::coset_rep(std::size_t level, Point x) const {
    if (levels_[level].label[x] == -1) throw Error("coset_rep: point not in basic orbit");
    return inv_rep(level, x).inverse();
}

std::pair<Permutation, std::size_t> PermGroup::strip(Permutation g, std::size_t start) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
        const ChainLevel& lv = levels_[l];
        Point x = g[lv.base_point];
        if (lv.label[x] == -1) return {std::move(g), l};
        if (lv.explicit_reps) {
            g *= lv.inv_reps[x];
        } else {
            while (lv.label[x] >= 0) {
                const Permutation& si = strong_inv_[static_cast<std::size_t>(lv.label[x])];
                g *= si;
                x = si[x];
            }
        }
    }
    return {std::move(g), levels_.size()};
}

void PermGroup::schreier_sims(std::vector<Point> base_prefix) {
    std::unordered_set<Permutation> seen;
    for (const auto& g : gens_) {
        if (g.is_identity() || !seen.insert(g).second) continue;
        strong_.push_back(g);
        strong_inv_.push_back(g.inverse());
    }
    std::vector<Point> base;
    for (Point b : base_prefix)
        if (std::find(base.begin(), base.end(), b) == base.end()) base.push_back(b);
    for (const auto& s : strong_) {
        bool fixes = std::all_of(base.begin(), base.end(), [&](Point b) { return s[b] == b; });
        if (fixes) base.push_back(s.first_moved());
    }
    for (Point b : base) add_level(b);

    std::vector<std::unordered_set<std::uint64_t>> checked(levels_.size());
    std::size_t i = levels_.size();
    while (i > 0) {
        std::size_t cur = i - 1;
        bool restarted = false;
        ChainLevel* lv = &levels_[cur];
        for (std::size_t oi = 0; oi < lv->orbit.size() && !restarted; ++oi) {
            Point p = lv->orbit[oi];
            for (std::size_t gi = 0; gi < lv->gens.size(); ++gi) {
                std::uint32_t s = lv->gens[gi];
                std::uint64_t key = (std::uint64_t{p} << 32) | s;
                if (!checked[cur].insert(key).second) continue;
                Point q = strong_[s][p];
                if (lv->label[q] == static_cast<std::int32_t>(s)) continue; // tree edge
                Permutation g = inv_rep(cur, p).inverse() * strong_[s] * inv_rep(cur, q);
                auto [h, j] = strip(std::move(g), cur + 1);
                if (h.is_identity()) continue;
                auto idx = static_cast<std::uint32_t>(strong_.size());
                strong_inv_.push_back(h.inverse());
                strong_.push_back(h);
                std::size_t upto = std::min(j, levels_.size() - 1);
                for (std::size_t l = cur + 1; l <= upto; ++l) {
                    levels_[l].gens.push_back(idx);
                    extend_orbit(l, idx);
                }
                if (j == levels_.size()) {
                    add_level(h.first_moved());
                    checked.emplace_back();
                }
                lv = &levels_[cur];
                i = j + 1;
                restarted = true;
                break;
            }
        }
        if (!restarted) --i;
    }
    compute_order();
}

void PermGroup::compute_order() {
    order_ = 1;
    for (const auto& l : levels_) order_ *= static_cast<unsigned long long>(l.orbit.size());
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_) return false;
    auto [h, j] = strip(g, 0);
    return j == levels_.size() && h.is_identity();
}

std::vector<Point> PermGroup::orbit(Point x) const {
    std::vector<Point> orb{x};
    std::vector<char> in(degree_, 0);
    in[x] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
        for (const auto& g : strong_) {
            Point y = g[orb[i]];
            if (!in[y]) {
                in[y] = 1;
                orb.push_back(y);
            }
        }
    return orb;
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
    std::vector<std::vector<Point>> out;
    std::vector<char> done(degree_, 0);
    for (Point x = 0; x < degree_; ++x) {
        if (done[x]) continue;
        auto o = orbit(x);
        for (Point y : o) done[y] = 1;
        std::sort(o.begin(), o.end());
        out.push_back(std::move(o));
    }
    return out;
}

bool PermGroup::is_transitive() const {
    return degree_ <= 1 || orbit(0).size() == degree_;
}

PermGroup PermGroup::pointwise_stabilizer(std::span<const Point> pts) const {
    std::vector<Point> ordered(pts.begin(), pts.end());
    {
        std::vector<Point> dedup;
        for (Point p : ordered)
            if (std::find(dedup.begin(), dedup.end(), p) == dedup.end()) dedup.push_back(p);
        ordered = std::move(dedup);
    }
    // reuse this chain when the points form a prefix of the base
    const PermGroup* src = this;
    PermGroup tmp;
    bool is_prefix = ordered.size() <= levels_.size();
    for (std::size_t k = 0; is_prefix && k < ordered.size(); ++k)
        is_prefix = levels_[k].base_point == ordered[k];
    if (!is_prefix) {
        tmp = PermGroup(degree_, strong_, ordered);
        src = &tmp;
    }
    std::size_t m = ordered.size();
    std::vector<Permutation> sg;
    std::vector<Point> base;
    std::vector<Permutation> gens;
    if (m < src->levels_.size()) {
        for (std::uint32_t s : src->levels_[m].gens) gens.push_back(src->strong_[s]);
        // strong generators of the deeper levels are not always listed at level m
        std::vector<char> used(src->strong_.size(), 0);
        for (std::size_t l = m; l < src->levels_.size(); ++l) {
            base.push_back(src->levels_[l].base_point);
            for (std::uint32_t s : src->levels_[l].gens)
                if (!used[s]) {
                    used[s] = 1;
                    sg.push_back(src->strong_[s]);
                }
        }
    }
    return from_bsgs(degree_, gens, base, sg);
}

PermGroup PermGroup::stabilizer(Point v) const {
    if (v >= degree_) throw DegreeMismatch("stabilizer point out of range");
    Point pts[1] = {v};
    return pointwise_stabilizer(pts);
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
    if (order_ > cap) throw OrderExceedsCap("group order " + order_.str() + " exceeds cap " + std::to_string(cap));
    std::vector<Permutation> list{Permutation(degree_)};
    for (std::size_t l = levels_.size(); l-- > 0;) {
        std::vector<Permutation> reps;
        for (Point x : levels_[l].orbit) reps.push_back(coset_rep(l, x));
        std::vector<Permutation> next;
        next.reserve(list.size() * reps.size());
        for (const auto& h : list)
            for (const auto& u : reps) next.push_back(h * u);
        list = std::move(next);
    }
    return list;
}

bool PermGroup::is_semiregular() const {
    for (const auto& o : orbits())
        if (Integer(o.size()) != order_) return false;
    return true;
}

bool PermGroup::is_abelian() const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        for (std::size_t j = i + 1; j < gens_.size(); ++j)
            if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
    return true;
}

bool PermGroup::is_2_group() const {
    return (order_ & (order_ - 1)) == 0;
}

bool PermGroup::is_elementary_abelian_2() const {
    for (const auto& g : gens_)
        if (!(g * g).is_identity()) return false;
    return is_abelian();
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
    if (g.degree() != degree_) return false;
    return std::all_of(gens_.begin(), gens_.end(), [&](const Permutation& p) { return g.contains(p); });
}

PermGroup PermGroup::normal_closure(const std::vector<Permutation>& gens) const {
    std::vector<Permutation> ng;
    for (const auto& x : gens)
        if (!x.is_identity()) ng.push_back(x);
    PermGroup n(degree_, ng);
    for (std::size_t i = 0; i < ng.size(); ++i) {
        for (const auto& g : gens_) {
            Permutation y = conjugate(ng[i], g);
            if (!n.contains(y)) {
                ng.push_back(y);
                n = PermGroup(degree_, ng);
            }
        }
    }
    return n;
}

PermGroup PermGroup::commutator_subgroup(const PermGroup& a, const PermGroup& b) const {
    std::vector<Permutation> cs;
    for (const auto& x : a.generators())
        for (const auto& y : b.generators()) {
            Permutation c = commutator(x, y);
            if (!c.is_identity()) cs.push_back(std::move(c));
        }
    return normal_closure(cs);
}

bool PermGroup::nilpotency_class_at_most(int c, std::uint64_t cap) const {
    if (order_ > cap) throw OrderExceedsCap("nilpotency check needs |G| <= " + std::to_string(cap));
    PermGroup gamma = *this;
    for (int i = 0; i < c && !gamma.is_trivial(); ++i) gamma = commutator_subgroup(gamma, *this);
    return gamma.is_trivial();
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

PermGroup symmetric_group(std::size_t n) {
    std::vector<Permutation> gens;
    if (n >= 2) {
        std::vector<Point> cyc(n);
        std::iota(cyc.begin(), cyc.end(), Point{0});
        gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
        if (n >= 3) gens.push_back(Permutation::from_cycles(n, {cyc}));
    }
    return PermGroup(n, gens);
}

PermGroup alternating_group(std::size_t n) {
    std::vector<Permutation> gens;
    for (Point i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, i}}));
    return PermGroup(n, gens);
}

PermGroup cyclic_group(std::size_t n) {
    std::vector<Point> cyc(n);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    return PermGroup(n, {Permutation::from_cycles(n, {cyc})});
}

PermGroup dihedral_group(std::size_t n) {
    std::vector<Point> rot(n), ref(n);
    for (std::size_t i = 0; i < n; ++i) {
        rot[i] = static_cast<Point>((i + 1) % n);
        ref[i] = static_cast<Point>((n - i) % n);
    }
    return PermGroup(n, {Permutation(rot), Permutation(ref)});
}

PermGroup read_group(std::istream& in) {
    std::string line;
    std::size_t degree = 0;
    bool have_degree = false;
    std::vector<Permutation> gens;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#') continue;
        if (!have_degree) {
            if (first != "degree" || !(ls >> degree)) throw ParseError("expected 'degree k' header");
            have_degree = true;
            continue;
        }
        std::vector<Point> im;
        ls.clear();
        ls.str(line);
        long long x;
        while (ls >> x) {
            if (x < 0) throw ParseError("negative image");
            im.push_back(static_cast<Point>(x));
        }
        if (im.size() != degree) throw ParseError("generator has " + std::to_string(im.size()) + " images, expected " + std::to_string(degree));
        gens.emplace_back(std::move(im));
    }
    if (!have_degree) throw ParseError("missing degree header");
    return PermGroup(degree, std::move(gens));
}

void write_group(std::ostream& out, const PermGroup& g) {
    out << "degree " << g.degree() << '\n';
    for (const auto& p : g.generators()) {
        for (std::size_t i = 0; i < p.degree(); ++i) out << (i ? " " : "") << p[static_cast<Point>(i)];
        out << '\n';
    }
}

} // namespace vstab
