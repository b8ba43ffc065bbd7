#pragma once

#include "vstab/perm_group.hpp"
#include "vstab/presentation.hpp"

#include <cstdint>
#include <vector>

namespace vstab {

enum class FillStrategy { HLT, Felsch };

// Closed coset table: row 0 is the subgroup, rows in breadth-first order.
// Column 2g holds the action of generator g, column 2g+1 that of its inverse.
struct CosetTable {
    Presentation presentation;
    std::vector<Word> subgroup;
    std::vector<std::vector<std::uint32_t>> table;
    bool closed = false;
    std::size_t max_live = 0;     // peak number of live cosets during enumeration
    std::size_t total_defined = 0;

    std::size_t coset_count() const { return table.size(); }
    std::uint32_t act(std::uint32_t coset, const Word& w) const;
    // every relator fixes every coset and every subgroup word fixes coset 0
    bool verify() const;
};

CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup,
                        std::size_t max_cosets = 1'000'000, FillStrategy strategy = FillStrategy::HLT);

PermGroup coset_action(const CosetTable& t);
Permutation word_permutation(const CosetTable& t, const Word& w);

struct GammaPresentation {
    Presentation presentation;
    std::vector<Word> subgroup;
    Word edge_word;
};

// Presentation of G_t^{sign} (sign = +1 or -1) with subgroup <x_0..x_{t-1}, b>
// and edge word a.
GammaPresentation build_gamma_presentation(int t, int sign);

} // namespace vstab
