#pragma once

#include "vstab/perm_group.hpp"

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vstab {

using Edge = std::pair<Point, Point>;
using Partition = std::vector<std::vector<Point>>;

// Finite simple undirected graph, neighbour lists sorted ascending.
class Graph {
public:
    Graph() : offsets_{0} {}
    explicit Graph(std::size_t n) : offsets_(n + 1, 0) {}

    // Throws NotSimple on loops, repeated edges or out-of-range endpoints.
    static Graph from_edges(std::size_t n, std::vector<Edge> edges);
    // Same, but silently merges repeated edges (loops still rejected).
    static Graph from_edges_merging(std::size_t n, std::vector<Edge> edges);

    std::size_t order() const { return offsets_.size() - 1; }
    std::size_t size() const { return adj_.size() / 2; }
    std::span<const Point> neighbours(Point v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    std::size_t degree(Point v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(Point u, Point v) const;
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(Point v) const;

    // vertex v of this graph becomes vertex p[v]
    Graph relabel(const Permutation& p) const;
    bool is_automorphism(const Permutation& p) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.offsets_ == b.offsets_ && a.adj_ == b.adj_;
    }

private:
    std::vector<std::size_t> offsets_;
    std::vector<Point> adj_;
    std::vector<std::string> labels_;
};

bool is_connected(const Graph& g);
std::vector<std::size_t> valency_list(const Graph& g);
bool is_regular(const Graph& g, std::size_t k);
// 0 when acyclic
std::size_t girth(const Graph& g);
std::uint64_t triangle_count(const Graph& g);
std::uint64_t four_cycle_count(const Graph& g);
bool is_bipartite(const Graph& g);
std::vector<std::size_t> distances_from(const Graph& g, Point v);

struct Quotient {
    Graph graph;
    std::vector<Point> block_of; // vertex -> block index
};
Quotient quotient_graph(const Graph& g, const Partition& blocks);
PermGroup quotient_action(const PermGroup& G, const Partition& blocks);
// vertex -> block index, validating that blocks partition {0..n-1}
std::vector<Point> block_map(std::size_t n, const Partition& blocks);

// Vertices are the elements of G in breadth-first order from the identity
// (generators of G applied on the right); x ~ s*x.
Graph cayley_graph(const PermGroup& G, const std::vector<Permutation>& connection,
                   std::uint64_t cap = 100000);
// Right cosets of H in G; Hg ~ Hag. Cosets in breadth-first order from H.
Graph coset_graph(const PermGroup& G, const PermGroup& H, const Permutation& a,
                  std::uint64_t cap = 100000);
// G transitive on points; H = G_0 and the vertices are the points, so this is
// the coset graph on G/G_0 with edge element a.
Graph coset_graph_from_action(const PermGroup& G, const Permutation& a);

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// small standard graphs
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t edges);
Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
// vertex (x, y) is x * b.order() + y
Graph cartesian_product(const Graph& a, const Graph& b);

} // namespace vstab
