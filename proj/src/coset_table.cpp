#include "vstab/coset_table.hpp"

#include "vstab/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace vstab {

namespace {

constexpr std::uint32_t kUndef = std::numeric_limits<std::uint32_t>::max();

std::uint32_t column(int letter) {
    return letter > 0 ? 2u * static_cast<std::uint32_t>(letter - 1) : 2u * static_cast<std::uint32_t>(-letter - 1) + 1;
}

class Enumerator {
public:
    Enumerator(const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets, FillStrategy s)
        : p_(p), sub_(subgroup), max_(max_cosets), strategy_(s), ncols_(2 * p.generator_count()) {
        for (const auto& r : p.relators()) rels_.push_back(columns(r));
        if (strategy_ == FillStrategy::Felsch) {
            conj_.resize(ncols_);
            for (const auto& r : rels_) {
                std::vector<std::uint32_t> inv(r.rbegin(), r.rend());
                for (auto& c : inv) c ^= 1u;
                for (const auto* w : std::array<const std::vector<std::uint32_t>*, 2>{&r, &inv})
                    for (std::size_t k = 0; k < w->size(); ++k) {
                        std::vector<std::uint32_t> c(w->begin() + static_cast<long>(k), w->end());
                        c.insert(c.end(), w->begin(), w->begin() + static_cast<long>(k));
                        auto& list = conj_[c[0]];
                        if (std::find(list.begin(), list.end(), c) == list.end()) list.push_back(std::move(c));
                    }
            }
        }
    }

    CosetTable run() {
        if (max_ < 1) throw CosetLimitExceeded("max_cosets must be at least 1");
        new_coset();
        for (const auto& w : sub_) scan_and_fill(0, columns(w));
        if (ncols_ == 0) return finish();
        if (strategy_ == FillStrategy::HLT) {
            for (std::uint32_t a = 0; a < rows_; ++a) {
                for (const auto& r : rels_) {
                    if (!alive(a)) break;
                    scan_and_fill(a, r);
                }
                if (!alive(a)) continue;
                for (std::uint32_t x = 0; x < ncols_ && alive(a); ++x)
                    if (get(a, x) == kUndef) define(a, x);
            }
        } else {
            process_deductions();
            for (std::uint32_t a = 0; a < rows_; ++a)
                for (std::uint32_t x = 0; x < ncols_ && alive(a); ++x)
                    if (get(a, x) == kUndef) {
                        define(a, x);
                        process_deductions();
                    }
        }
        return finish();
    }

private:
    std::vector<std::uint32_t> columns(const Word& w) const {
        std::vector<std::uint32_t> c;
        for (int x : w) c.push_back(column(x));
        return c;
    }

    std::uint32_t get(std::uint32_t c, std::uint32_t x) const { return tab_[std::size_t{c} * ncols_ + x]; }
    void set(std::uint32_t c, std::uint32_t x, std::uint32_t v) { tab_[std::size_t{c} * ncols_ + x] = v; }
    bool alive(std::uint32_t c) const { return parent_[c] == c; }

    std::uint32_t new_coset() {
        if (live_ >= max_ || rows_ >= 16 * max_ + 1024)
            throw CosetLimitExceeded("more than " + std::to_string(max_) + " live cosets needed");
        std::uint32_t c = rows_++;
        tab_.resize(std::size_t{rows_} * ncols_, kUndef);
        parent_.push_back(c);
        ++live_;
        peak_ = std::max(peak_, live_);
        return c;
    }

    void define(std::uint32_t c, std::uint32_t x) {
        std::uint32_t d = new_coset();
        set(c, x, d);
        set(d, x ^ 1u, c);
        if (strategy_ == FillStrategy::Felsch) ded_.emplace_back(c, x);
    }

    void deduce(std::uint32_t f, std::uint32_t x, std::uint32_t b) {
        set(f, x, b);
        set(b, x ^ 1u, f);
        if (strategy_ == FillStrategy::Felsch) ded_.emplace_back(f, x);
    }

    std::uint32_t rep(std::uint32_t c) {
        std::uint32_t r = c;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[c] != r) {
            std::uint32_t n = parent_[c];
            parent_[c] = r;
            c = n;
        }
        return r;
    }

    void merge(std::uint32_t k, std::uint32_t l, std::vector<std::uint32_t>& q) {
        std::uint32_t a = rep(k), b = rep(l);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        --live_;
        q.push_back(b);
    }

    void coincidence(std::uint32_t a, std::uint32_t b) {
        std::vector<std::uint32_t> q;
        merge(a, b, q);
        for (std::size_t i = 0; i < q.size(); ++i) {
            std::uint32_t g = q[i];
            for (std::uint32_t x = 0; x < ncols_; ++x) {
                std::uint32_t d = get(g, x);
                if (d == kUndef) continue;
                set(g, x, kUndef);
                if (get(d, x ^ 1u) == g) set(d, x ^ 1u, kUndef);
                std::uint32_t mu = rep(g), nu = rep(d);
                if (get(mu, x) != kUndef) {
                    merge(nu, get(mu, x), q);
                } else if (get(nu, x ^ 1u) != kUndef) {
                    merge(mu, get(nu, x ^ 1u), q);
                } else {
                    deduce(mu, x, nu);
                }
            }
        }
    }

    void scan_and_fill(std::uint32_t a, const std::vector<std::uint32_t>& w) {
        std::size_t i = 0, j = w.size();
        std::uint32_t f = a, b = a;
        while (true) {
            while (i < j && get(f, w[i]) != kUndef) f = get(f, w[i++]);
            if (i == j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i && get(b, w[j - 1] ^ 1u) != kUndef) b = get(b, w[--j] ^ 1u);
            if (j == i) {
                coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                deduce(f, w[i], b);
                return;
            }
            define(f, w[i]);
        }
    }

    // scan without definitions
    void scan(std::uint32_t a, const std::vector<std::uint32_t>& w) {
        std::size_t i = 0;
        std::size_t j = w.size();
        std::uint32_t f = a, b = a;
        while (i < j && get(f, w[i]) != kUndef) f = get(f, w[i++]);
        if (i == j) {
            if (f != a) coincidence(f, a);
            return;
        }
        while (j > i && get(b, w[j - 1] ^ 1u) != kUndef) b = get(b, w[--j] ^ 1u);
        if (j == i) {
            coincidence(f, b);
        } else if (j == i + 1) {
            deduce(f, w[i], b);
        }
    }

    void process_deductions() {
        while (!ded_.empty()) {
            auto [g, x] = ded_.back();
            ded_.pop_back();
            if (!alive(g)) continue;
            for (const auto& w : conj_[x]) {
                if (!alive(g)) break;
                scan(g, w);
            }
            if (!alive(g)) continue;
            std::uint32_t d = get(g, x);
            if (d == kUndef || !alive(d)) continue;
            for (const auto& w : conj_[x ^ 1u]) {
                if (!alive(d)) break;
                scan(d, w);
            }
        }
    }

    CosetTable finish() {
        CosetTable t;
        t.presentation = p_;
        t.subgroup = sub_;
        t.max_live = peak_;
        t.total_defined = rows_;
        std::vector<std::uint32_t> newid(rows_, kUndef);
        std::vector<std::uint32_t> order{rep(0)};
        newid[order[0]] = 0;
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::uint32_t x = 0; x < ncols_; ++x) {
                std::uint32_t d = get(order[i], x);
                if (d == kUndef) throw TableNotClosed("incomplete row after enumeration");
                d = rep(d);
                if (newid[d] == kUndef) {
                    newid[d] = static_cast<std::uint32_t>(order.size());
                    order.push_back(d);
                }
            }
        t.table.assign(order.size(), std::vector<std::uint32_t>(ncols_));
        for (std::size_t i = 0; i < order.size(); ++i)
            for (std::uint32_t x = 0; x < ncols_; ++x) t.table[i][x] = newid[rep(get(order[i], x))];
        t.closed = true;
        if (!t.verify()) throw TableNotClosed("relator check failed after enumeration");
        return t;
    }

    const Presentation& p_;
    const std::vector<Word>& sub_;
    std::size_t max_;
    FillStrategy strategy_;
    std::uint32_t ncols_;
    std::vector<std::vector<std::uint32_t>> rels_;
    std::vector<std::vector<std::vector<std::uint32_t>>> conj_;
    std::vector<std::uint32_t> tab_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ded_;
    std::uint32_t rows_ = 0;
    std::size_t live_ = 0;
    std::size_t peak_ = 0;
};

} // namespace

std::uint32_t CosetTable::act(std::uint32_t coset, const Word& w) const {
    for (int x : w) coset = table[coset][column(x)];
    return coset;
}

bool CosetTable::verify() const {
    if (table.empty()) return false;
    for (const auto& row : table)
        for (auto v : row)
            if (v >= table.size()) return false;
    for (std::uint32_t c = 0; c < table.size(); ++c) {
        for (std::uint32_t x = 0; x < table[c].size(); ++x)
            if (table[table[c][x]][x ^ 1u] != c) return false;
        for (const auto& r : presentation.relators())
            if (act(c, r) != c) return false;
    }
    for (const auto& w : subgroup)
        if (act(0, w) != 0) return false;
    return true;
}

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup, std::size_t max_cosets,
                        FillStrategy strategy) {
    for (const auto& w : subgroup)
        for (int x : w)
            if (x == 0 || static_cast<std::size_t>(std::abs(x)) > p.generator_count())
                throw ParseError("subgroup word references an undeclared generator");
    std::vector<Word> sub;
    for (const auto& w : subgroup) sub.push_back(free_reduce(w));
    return Enumerator(p, sub, max_cosets, strategy).run();
}

Permutation word_permutation(const CosetTable& t, const Word& w) {
    if (!t.closed) throw TableNotClosed("word_permutation");
    std::vector<Point> im(t.coset_count());
    for (std::uint32_t c = 0; c < im.size(); ++c) im[c] = t.act(c, w);
    return Permutation(std::move(im));
}

PermGroup coset_action(const CosetTable& t) {
    if (!t.closed) throw TableNotClosed("coset_action");
    std::vector<Permutation> gens;
    for (std::size_t g = 0; g < t.presentation.generator_count(); ++g) {
        std::vector<Point> im(t.coset_count());
        for (std::uint32_t c = 0; c < im.size(); ++c) im[c] = t.table[c][2 * g];
        gens.emplace_back(std::move(im));
    }
    return PermGroup(t.coset_count(), std::move(gens));
}

GammaPresentation build_gamma_presentation(int t, int sign) {
    if (t < 2) throw InvalidParams("t must be at least 2");
    if (sign != 1 && sign != -1) throw InvalidParams("sign must be +1 or -1");
    std::vector<std::string> names;
    for (int i = 0; i < 2 * t; ++i) names.push_back("x" + std::to_string(i));
    names.insert(names.end(), {"z", "a", "b"});
    Presentation p(names);
    auto x = [&](int i) { return Word{((i % (2 * t)) + 2 * t) % (2 * t) + 1}; };
    Word z = p.gen("z"), a = p.gen("a"), b = p.gen("b");
    for (int i = 0; i < 2 * t; ++i) p.add_relator(power_word(x(i), 2));
    p.add_relator(power_word(z, 2));
    for (int i = 0; i < 2 * t; ++i) p.add_relator(commutator_word(x(i), z));
    for (int i = 0; i < 2 * t; ++i)
        for (int j = i + 1; j < 2 * t; ++j) {
            if (j - i == t)
                p.add_relator(concat(commutator_word(x(i), x(j)), inverse_word(z)));
            else
                p.add_relator(commutator_word(x(i), x(j)));
        }
    for (int i = 0; i < 2 * t; ++i) {
        p.add_relator(concat(concat(inverse_word(a), x(i)), concat(a, inverse_word(x(i + 1)))));
        p.add_relator(concat(concat(inverse_word(b), x(i)), concat(b, inverse_word(x(t - 1 - i)))));
    }
    p.add_relator(power_word(b, 2));
    p.add_relator(sign > 0 ? power_word(a, 2 * t) : concat(power_word(a, 2 * t), inverse_word(z)));
    // the dihedral relation a^b = a^-1
    p.add_relator(concat(concat(inverse_word(b), a), concat(b, a)));
    GammaPresentation out;
    out.presentation = p;
    for (int i = 0; i < t; ++i) out.subgroup.push_back(x(i));
    out.subgroup.push_back(b);
    out.edge_word = a;
    return out;
}

} // namespace vstab
