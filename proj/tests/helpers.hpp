#pragma once

#include "vstab/perm_group.hpp"

#include <random>

namespace testutil {

// product of random coset representatives along the chain: a random element of G
inline vstab::Permutation random_element(const vstab::PermGroup& g, std::mt19937_64& rng) {
    vstab::Permutation x(g.degree());
    const auto& ch = g.chain();
    for (std::size_t l = 0; l < ch.size(); ++l) {
        std::uniform_int_distribution<std::size_t> d(0, ch[l].orbit.size() - 1);
        x = g.coset_rep(l, ch[l].orbit[d(rng)]) * x;
    }
    return x;
}

} // namespace testutil
