#pragma once

#include "vstab/perm.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

namespace vstab {

using Integer = boost::multiprecision::cpp_int;

// One level of a stabiliser chain. The orbit of base_point under the level
// generators is stored as a Schreier tree; inverse coset representatives are
// kept explicitly while that stays small.
struct ChainLevel {
    Point base_point = 0;
    std::vector<std::uint32_t> gens;   // indices into the strong generating set
    std::vector<Point> orbit;          // discovery order, orbit[0] = base_point
    std::vector<std::int32_t> label;   // per point: -1 absent, -2 root, else generator index
    std::vector<Permutation> inv_reps; // per point u_x^-1, empty when not explicit
    bool explicit_reps = true;
};

class PermGroup {
public:
    PermGroup() = default;
    explicit PermGroup(std::size_t degree);
    PermGroup(std::size_t degree, std::vector<Permutation> gens,
              std::vector<Point> base_prefix = {});

    // Trusted constructor: `strong` must be a strong generating set relative to
    // `base` (for instance, generators found level by level by a backtrack search).
    static PermGroup from_bsgs(std::size_t degree, std::vector<Permutation> gens,
                               std::vector<Point> base, std::vector<Permutation> strong);

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::vector<Permutation>& strong_generators() const { return strong_; }
    std::vector<Point> base() const;
    const std::vector<ChainLevel>& chain() const { return levels_; }
    const Integer& order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }

    bool contains(const Permutation& g) const;
    // residue after sifting and the level where sifting stopped
    std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t start = 0) const;
    // u with base_point(level)^u = x
    Permutation coset_rep(std::size_t level, Point x) const;

    std::vector<Point> orbit(Point x) const;
    std::vector<std::vector<Point>> orbits() const;
    bool is_transitive() const;

    PermGroup stabilizer(Point v) const;
    PermGroup pointwise_stabilizer(std::span<const Point> pts) const;

    std::vector<Permutation> elements(std::uint64_t cap = 100000) const;

    bool is_semiregular() const;
    bool is_abelian() const;
    bool is_2_group() const;
    bool is_elementary_abelian_2() const;
    bool is_subgroup_of(const PermGroup& g) const;
    bool nilpotency_class_at_most(int c, std::uint64_t cap = std::uint64_t{1} << 20) const;

    // normal closure of `gens` under this group
    PermGroup normal_closure(const std::vector<Permutation>& gens) const;
    // [A, B] for subgroups A, B normalised by this group
    PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b) const;

private:
    void schreier_sims(std::vector<Point> base_prefix);
    void add_level(Point beta);
    void extend_orbit(std::size_t level, std::uint32_t new_gen);
    void compute_order();
    Permutation inv_rep(std::size_t level, Point x) const;

    std::size_t degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Permutation> strong_;
    std::vector<Permutation> strong_inv_;
    std::vector<ChainLevel> levels_;
    Integer order_ = 1;
};

inline PermGroup group_from_generators(std::vector<Permutation> gens, std::size_t degree) {
    return PermGroup(degree, std::move(gens));
}

Integer factorial(unsigned n);
PermGroup symmetric_group(std::size_t n);
PermGroup alternating_group(std::size_t n);
PermGroup cyclic_group(std::size_t n);
PermGroup dihedral_group(std::size_t n); // natural action on n points, order 2n

// "degree k" then one line of images per generator
PermGroup read_group(std::istream& in);
void write_group(std::ostream& out, const PermGroup& g);

} // namespace vstab
