#pragma once

#include "vstab/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vstab {

// A graph with a group of automorphisms acting on its vertices.
struct ActedGraph {
    Graph graph;
    PermGroup group;
    std::string provenance;
};

// Throws DegreeMismatch or NotAnAutomorphism.
void validate(const ActedGraph& ag);

struct CrsParams {
    int r = 0;
    int s = 0;
    auto operator<=>(const CrsParams&) const = default;
};

// C(r,s) with H = C2 wr D_r. Vertex (y; b_0..b_{s-1}) is the path
// (y,b_0),(y+1,b_1),...,(y+s-1,b_{s-1}) of C(r,1), numbered y*2^s + bits
// with b_0 the most significant bit.
ActedGraph build_crs(int r, int s);
// the graph alone, without building H
Graph crs_graph(int r, int s);
// generators of C2 wr D_r on the 2r points 2y+b of C(r,1)
std::vector<Permutation> wreath_generators(int r);

// Coset graph of G_t^{sign} on the cosets of <x_0..x_{t-1}, b>, edge element a.
ActedGraph build_gamma(int t, int sign, std::size_t max_cosets = 1'000'000);

// Cay(H, {g, g^-1, g m1, (g m1)^-1}) for the group H of order 81; the acting
// group is the full automorphism group.
ActedGraph build_c333();

struct CrsRecognition {
    std::optional<CrsParams> best; // lexicographically smallest match
    std::vector<CrsParams> all;
};
// Tries every (r, s) with r*2^s = |V| and decides each by isomorphism.
CrsRecognition recognize_crs_all(const Graph& g);
std::optional<CrsParams> recognize_crs(const Graph& g);

} // namespace vstab
