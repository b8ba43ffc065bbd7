#pragma once

#include "vstab/families.hpp"

#include <array>
#include <vector>

namespace vstab {

// Arc pairing of a locally-D4 pair: arcs are numbered as in the arc graph
// (lexicographic), partner[i] is the arc with the same tail and the same stabiliser.
struct ArcPairing {
    std::vector<Edge> arcs;
    std::vector<std::size_t> partner;
};
ArcPairing arc_pairing(const ActedGraph& ag);

struct SplitGraph {
    ActedGraph acted;
    // vertex i is the class {(u,v), (u,w)} stored as (u, v, w) with v < w
    std::vector<std::array<Point, 3>> keys;
};

struct MergedGraph {
    ActedGraph acted;
    // vertex i of the merged graph is the block {v, v'}, v < v'
    std::vector<Edge> blocks;
};

// throws NotLocallyD4
SplitGraph split(const ActedGraph& ag);
// throws NotLocallyC23, StabTooSmall, PairingDegenerate
MergedGraph merge(const ActedGraph& ag);

// Isomorphism Merge(Split(g)) -> g: the two classes with tail u go to u.
// Throws NotAnAutomorphism if the map fails to preserve adjacency.
Permutation merge_split_iso(const ActedGraph& g, const SplitGraph& s, const MergedGraph& ms);
// Isomorphism Split(Merge(g)) -> g: the class of arcs from {u,u'} to {v,v'} goes
// to the vertex of {u,u'} adjacent to {v,v'}.
Permutation split_merge_iso(const ActedGraph& g, const MergedGraph& m, const SplitGraph& sm);

} // namespace vstab
