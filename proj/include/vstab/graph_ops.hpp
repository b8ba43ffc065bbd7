#pragma once

#include "vstab/graph.hpp"

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace vstab {

enum class GraphOp { Line, BipartiteDouble, Arc, ThreeArc, HillCapping, SquaredArc };

std::string_view op_name(GraphOp op);
// accepts "line", "bipartite-double", "arc", "three-arc", "hill-capping", "squared-arc"
// and the short forms L, B, AG, AAA, HC, AAG; throws ParseError otherwise
GraphOp parse_op(std::string_view name);

// A derived graph with the defining tuple of each vertex. Vertices are numbered
// in lexicographic order of their keys.
//   Line      (u, v)            u < v
//   B         (v, i)
//   AG, AAA   (u, v)            arc
//   HC        (u, i, v, j)      {u_i, v_j} with u < v
//   AAG       (v1, v2, w1, w2)  pair of arcs
struct DerivedGraph {
    using Key = std::array<Point, 4>;

    GraphOp op;
    Graph graph;
    std::vector<Key> keys;

    Point vertex_of(const Key& k) const; // throws VertexOutOfRange if absent
    // permutation of derived vertices induced by an automorphism p of the base graph
    Permutation induced(const Permutation& p) const;
    // symmetries not induced from the base graph: sheet swap (B), arc reversal (AG),
    // label flip (HC), (X, Y) -> (Y^-1, X^-1) (AAG); none for the others
    std::vector<Permutation> extra_symmetries() const;
};

DerivedGraph derive(GraphOp op, const Graph& g);
PermGroup induced_group(const DerivedGraph& d, const PermGroup& base, bool with_extras = true);

Graph line_graph(const Graph& g);
Graph bipartite_double(const Graph& g);
Graph arc_graph(const Graph& g);
Graph three_arc_graph(const Graph& g);
Graph hill_capping(const Graph& g);
Graph squared_arc_graph(const Graph& g);

struct SeedGraph {
    std::string name;
    Graph graph;
    std::size_t expected_order;
    Integer expected_aut_order;
};

const std::vector<std::string>& seed_names();
// F6, Petersen, Heawood, F18, Tut, F90. Throws UnknownSeed, or
// SeedInvariantViolated if the built graph is not what it should be.
SeedGraph seed(std::string_view name);

Graph lcf_graph(const std::vector<int>& pattern, std::size_t repeats);
Graph kneser_graph(std::size_t n, std::size_t k);

} // namespace vstab
