#pragma once

#include "vstab/graph.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace vstab {

struct SearchOptions {
    std::uint64_t node_limit = 20'000'000;
    // optional vertex colours; automorphisms and isomorphisms must preserve them
    std::vector<std::uint32_t> colours;
    std::vector<std::uint32_t> colours2; // colours of the second graph (isomorphism only)
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::size_t first_path_length = 0;
};

// Full automorphism group. The returned chain uses the first search path as base.
PermGroup automorphism_group(const Graph& g, const SearchOptions& opt = {}, SearchStats* stats = nullptr);

// A bijection f with u ~ v in g1 iff f[u] ~ f[v] in g2, or nothing.
std::optional<Permutation> are_isomorphic(const Graph& g1, const Graph& g2, const SearchOptions& opt = {},
                                          SearchStats* stats = nullptr);

// |G : H|; throws NotASubgroup when a generator of H does not sift through G.
Integer subgroup_index(const PermGroup& G, const PermGroup& H);

} // namespace vstab
