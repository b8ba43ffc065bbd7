#include "vstab/local_action.hpp"

#include "vstab/errors.hpp"

#include <algorithm>

namespace vstab {

std::string LocalType::name() const {
    switch (kind) {
    case LocalKind::Trivial: return "trivial";
    case LocalKind::C2On3: return "C2^[3]";
    case LocalKind::C3: return "C3";
    case LocalKind::S3: return "S3";
    case LocalKind::C4: return "C4";
    case LocalKind::V4: return "V4";
    case LocalKind::D4: return "D4";
    case LocalKind::A4: return "A4";
    case LocalKind::S4: return "S4";
    case LocalKind::Other: break;
    }
    return "other(" + std::to_string(degree) + "," + order.str() + "," + (transitive ? "transitive" : "intransitive") +
           ")";
}

LocalKind parse_local_kind(std::string_view name) {
    for (auto k : {LocalKind::Trivial, LocalKind::C2On3, LocalKind::C3, LocalKind::S3, LocalKind::C4, LocalKind::V4,
                   LocalKind::D4, LocalKind::A4, LocalKind::S4}) {
        LocalType t;
        t.kind = k;
        if (t.name() == name) return k;
    }
    if (name == "C23" || name == "C2_on_3") return LocalKind::C2On3;
    throw ParseError("unknown local type '" + std::string(name) + "'");
}

LocalType identify_local(const PermGroup& p) {
    LocalType t;
    t.degree = p.degree();
    t.order = p.order();
    t.transitive = p.degree() > 0 && p.is_transitive();
    if (t.order == 1) {
        t.kind = LocalKind::Trivial;
    } else if (t.degree == 3) {
        // order 2 in degree 3 is a single transposition, so one point is fixed
        if (t.order == 2) t.kind = LocalKind::C2On3;
        else if (t.order == 3) t.kind = LocalKind::C3;
        else if (t.order == 6) t.kind = LocalKind::S3;
    } else if (t.degree == 4 && t.transitive) {
        if (t.order == 4) {
            bool cyclic = false;
            for (const auto& g : p.elements()) cyclic = cyclic || g.order() == 4;
            t.kind = cyclic ? LocalKind::C4 : LocalKind::V4;
        } else if (t.order == 8) {
            t.kind = LocalKind::D4;
        } else if (t.order == 12) {
            t.kind = LocalKind::A4;
        } else if (t.order == 24) {
            t.kind = LocalKind::S4;
        }
    }
    return t;
}

LocalActionReport local_action(const ActedGraph& ag, Point v) {
    if (v >= ag.graph.order()) throw VertexOutOfRange("vertex " + std::to_string(v));
    if (ag.group.degree() != ag.graph.order()) throw DegreeMismatch("group and graph sizes differ");
    LocalActionReport rep;
    rep.vertex = v;
    auto nb = ag.graph.neighbours(v);
    rep.neighbourhood.assign(nb.begin(), nb.end());
    PermGroup gv = ag.group.stabilizer(v);
    rep.stabilizer_order = gv.order();
    std::vector<Permutation> gens;
    for (const auto& g : gv.generators()) {
        std::vector<Point> img(nb.size());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            auto it = std::lower_bound(nb.begin(), nb.end(), g[nb[i]]);
            if (it == nb.end() || *it != g[nb[i]]) throw NotAnAutomorphism("stabiliser does not fix the neighbourhood");
            img[i] = static_cast<Point>(it - nb.begin());
        }
        gens.emplace_back(std::move(img));
    }
    rep.induced = PermGroup(nb.size(), std::move(gens));
    rep.kernel_order = rep.stabilizer_order / rep.induced.order();
    rep.type = identify_local(rep.induced);
    return rep;
}

bool is_vertex_transitive(const ActedGraph& ag) {
    return ag.graph.order() > 0 && ag.group.degree() == ag.graph.order() && ag.group.is_transitive();
}

bool is_arc_transitive(const ActedGraph& ag) {
    if (!is_vertex_transitive(ag)) return false;
    if (ag.graph.degree(0) == 0) return false;
    return local_action(ag, 0).induced.is_transitive();
}

bool is_locally(const ActedGraph& ag, LocalKind kind) {
    validate(ag);
    for (const auto& orb : ag.group.orbits()) {
        Point rep = orb.front();
        if (local_action(ag, rep).type.kind != kind) return false;
        if (orb.size() == 1) continue;
        // carry to the rest of the orbit
        PermGroup g(ag.group.degree(), ag.group.generators(), {rep});
        if (g.chain().empty() || g.chain()[0].base_point != rep) return false;
        for (Point w : orb) {
            Permutation u = g.coset_rep(0, w);
            if (u[rep] != w) return false;
            auto a = ag.graph.neighbours(rep);
            std::vector<Point> img;
            for (Point x : a) img.push_back(u[x]);
            std::sort(img.begin(), img.end());
            auto b = ag.graph.neighbours(w);
            if (!std::equal(img.begin(), img.end(), b.begin(), b.end())) return false;
        }
    }
    return true;
}

} // namespace vstab
