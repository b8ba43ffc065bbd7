#pragma once

#include "vstab/perm_group.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace vstab {

enum class RankMethod { Formula, Table, Bruteforce };
std::string method_name(RankMethod m);

// e = 2^r is the largest order of an elementary abelian 2-subgroup.
struct RankRecord {
    std::string group_tag;
    int r = 0;
    Integer e = 1;
    RankMethod method = RankMethod::Bruteforce;
    std::string source;
    std::vector<Permutation> witness; // basis of a maximal one (brute force only)
};

// Exhaustive search over commuting involutions. Throws OrderExceedsCap when
// |G| > cap.
RankRecord two_rank_bruteforce(const PermGroup& g, std::uint64_t cap = 100000, std::string tag = "");

// n = 4m + r: 2^{2m} for r <= 1; for r >= 2 Sym gets 2^{2m+1}, Alt 2^{2m}.
Integer e_sym_alt(unsigned n, bool alternating);
RankRecord sym_alt_rank(unsigned n, bool alternating);

Integer wreath_rank_bound(const Integer& eh, unsigned delta);
// H wr K in its imprimitive action on h.degree() * k.degree() points;
// point (i, j) is j * h.degree() + i.
PermGroup wreath_product(const PermGroup& h, const PermGroup& k);

// GL(n, p) acting on the p^n - 1 nonzero row vectors, p prime.
PermGroup general_linear_group(unsigned n, unsigned p);
// two_rank_bruteforce(GL(n,q)) <= 2^n
bool scalar_bound_check(unsigned n, unsigned q, std::uint64_t cap = 100000);

struct SimpleGroupEntry {
    std::string name;
    unsigned two_part_exponent = 0; // |T| = 2^t o
    Integer odd_part = 1;
    Integer e_t = 0;                // e of T itself when listed, else 0
    Integer e_aut_upper = 1;        // bound on (or the value of) e for Aut(T)
    bool exact = false;
    std::string source;
};
const std::vector<SimpleGroupEntry>& simple_group_entries();
const SimpleGroupEntry& simple_group_entry(std::string_view name); // throws ParseError

// l_o o^l > 6 l e^{3l/2} log2 e with l = 2^{l_e} l_o, in exact arithmetic.
bool dagger_inequality(const SimpleGroupEntry& entry, unsigned l);

// Upper bound for e_T, T of Lie type with the given family ("A", "2A", "3D",
// ...), Lie rank n and field size q. nullopt where no bound is listed for
// that characteristic. Throws ParseError on an unknown family.
std::optional<Integer> lie_e_bound(std::string_view family, unsigned n, const Integer& q);

// 2m log2(m/2) for m = 2^k, i.e. (k-1) 2^{k+1}. Throws NotPowerOfTwo.
Integer bound_threshold(const Integer& m);
std::strong_ordering compare_to_bound(const Integer& vertices, const Integer& m);

struct Lemma41Report {
    Integer order = 1;
    bool two_group = false;
    bool index2_class2 = false;  // some index-2 subgroup has class <= 2
    bool inequality = false;     // |G_v|^2 <= 4 e^3 for that subgroup
    std::vector<Permutation> p_generators;
    RankRecord rank;             // of the subgroup P
    bool pass() const { return two_group && index2_class2 && inequality; }
};
// Throws OrderExceedsCap when |G_v| > 2^20.
Lemma41Report lemma41_check(const PermGroup& gv);

} // namespace vstab
