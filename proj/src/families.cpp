#include "vstab/families.hpp"

#include "vstab/automorphism.hpp"
#include "vstab/coset_table.hpp"
#include "vstab/errors.hpp"

#include <algorithm>

namespace vstab {

void validate(const ActedGraph& ag) {
    if (ag.group.degree() != ag.graph.order())
        throw DegreeMismatch("group degree " + std::to_string(ag.group.degree()) + " but graph has " +
                             std::to_string(ag.graph.order()) + " vertices");
    for (std::size_t i = 0; i < ag.group.generators().size(); ++i)
        if (!ag.graph.is_automorphism(ag.group.generators()[i]))
            throw NotAnAutomorphism("generator " + std::to_string(i) + " of " + ag.provenance +
                                    " does not preserve adjacency");
}

std::vector<Permutation> wreath_generators(int r) {
    std::size_t n = 2 * static_cast<std::size_t>(r);
    std::vector<Point> swap(n), rot(n), refl(n);
    for (Point y = 0; y < static_cast<Point>(r); ++y)
        for (Point b = 0; b < 2; ++b) {
            swap[2 * y + b] = y == 0 ? 1 - b : 2 * y + b;
            rot[2 * y + b] = 2 * ((y + 1) % r) + b;
            refl[2 * y + b] = 2 * ((r - y) % r) + b;
        }
    return {Permutation(swap), Permutation(rot), Permutation(refl)};
}

Graph crs_graph(int r, int s) {
    if (r < 3 || s < 1 || s > r - 1) throw InvalidParams("C(r,s) needs r >= 3 and 1 <= s <= r-1");
    if (s > 20 || static_cast<std::uint64_t>(r) << s > (std::uint64_t{1} << 22))
        throw InvalidParams("C(r,s) too large");
    const Point ru = static_cast<Point>(r), su = static_cast<Point>(s);
    const Point blocks = Point{1} << su, mask = blocks - 1;
    const std::size_t n = static_cast<std::size_t>(ru) * blocks;

    std::vector<Edge> e;
    std::vector<std::string> labels(n);
    for (Point y = 0; y < ru; ++y)
        for (Point bits = 0; bits < blocks; ++bits) {
            Point v = y * blocks + bits;
            std::string lab = std::to_string(y) + ":";
            for (Point k = 0; k < su; ++k) lab += static_cast<char>('0' + ((bits >> (su - 1 - k)) & 1));
            labels[v] = lab;
            for (Point c = 0; c < 2; ++c) e.emplace_back(v, ((y + 1) % ru) * blocks + (((bits << 1) & mask) | c));
        }

    Graph g = Graph::from_edges(n, std::move(e));
    g.set_labels(std::move(labels));
    return g;
}

ActedGraph build_crs(int r, int s) {
    ActedGraph ag;
    ag.graph = crs_graph(r, s);
    const Point ru = static_cast<Point>(r), su = static_cast<Point>(s);
    const Point blocks = Point{1} << su;
    const std::size_t n = ag.graph.order();

    std::vector<Permutation> gens;
    std::vector<Point> seq(su);
    for (const auto& p : wreath_generators(r)) {
        std::vector<Point> img(n);
        for (Point y = 0; y < ru; ++y)
            for (Point bits = 0; bits < blocks; ++bits) {
                for (Point k = 0; k < su; ++k)
                    seq[k] = p[2 * ((y + k) % ru) + ((bits >> (su - 1 - k)) & 1)];
                if (su > 1 && seq[1] / 2 != (seq[0] / 2 + 1) % ru) std::reverse(seq.begin(), seq.end());
                Point nb = 0;
                for (Point k = 0; k < su; ++k) nb = (nb << 1) | (seq[k] & 1);
                img[y * blocks + bits] = (seq[0] / 2) * blocks + nb;
            }
        gens.emplace_back(std::move(img));
    }
    ag.group = PermGroup(n, std::move(gens));
    ag.provenance = "C(" + std::to_string(r) + "," + std::to_string(s) + ")";
    validate(ag);
    return ag;
}

ActedGraph build_gamma(int t, int sign, std::size_t max_cosets) {
    GammaPresentation gp = build_gamma_presentation(t, sign);
    CosetTable table = todd_coxeter(gp.presentation, gp.subgroup, max_cosets);
    ActedGraph ag;
    ag.group = coset_action(table);
    ag.graph = coset_graph_from_action(ag.group, word_permutation(table, gp.edge_word));
    ag.provenance = "Gamma_" + std::to_string(t) + (sign > 0 ? "^+" : "^-");
    validate(ag);
    return ag;
}

ActedGraph build_c333() {
    Presentation p({"m1", "m2", "m3", "g"});
    for (const char* rel : {"m1^3", "m2^3", "m3^3", "[m1, m2]", "[m1, m3]", "[m2, m3]", "g^3 = m1 m2 m3",
                            "m1^g = m2", "m2^g = m3", "m3^g = m1"})
        p.add_relator(rel);
    CosetTable table = todd_coxeter(p, {});
    // right Cayley graph: x ~ x s
    std::vector<Edge> e;
    const Word conn[] = {p.parse_word("g"), p.parse_word("g m1")};
    for (std::uint32_t x = 0; x < table.coset_count(); ++x)
        for (const auto& w : conn) e.emplace_back(x, table.act(x, w));
    ActedGraph ag;
    ag.graph = Graph::from_edges_merging(table.coset_count(), std::move(e));
    ag.group = automorphism_group(ag.graph);
    ag.provenance = "C^{+-1}(3,3,3)";
    validate(ag);
    return ag;
}

CrsRecognition recognize_crs_all(const Graph& g) {
    CrsRecognition out;
    std::size_t n = g.order();
    if (!is_regular(g, 4) || !is_connected(g)) return out;
    std::size_t gi = girth(g);
    std::uint64_t tri = triangle_count(g), sq = four_cycle_count(g);
    for (int s = 1; s < 22 && (std::size_t{1} << s) <= n; ++s) {
        if (n % (std::size_t{1} << s)) continue;
        std::size_t r = n >> s;
        if (r < 3 || static_cast<int>(r) <= s) continue;
        Graph c = crs_graph(static_cast<int>(r), s);
        if (girth(c) != gi || triangle_count(c) != tri || four_cycle_count(c) != sq) continue;
        if (are_isomorphic(g, c)) out.all.push_back({static_cast<int>(r), s});
    }
    std::sort(out.all.begin(), out.all.end());
    if (!out.all.empty()) out.best = out.all.front();
    return out;
}

std::optional<CrsParams> recognize_crs(const Graph& g) { return recognize_crs_all(g).best; }

} // namespace vstab
