#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace vstab {

using Point = std::uint32_t;

// Permutations act on the right: x^(p*q) = (x^p)^q.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t degree);
    explicit Permutation(std::vector<Point> images);

    static Permutation identity(std::size_t degree) { return Permutation(degree); }
    static Permutation from_cycles(std::size_t degree,
                                   const std::vector<std::vector<Point>>& cycles);

    std::size_t degree() const { return images_.size(); }
    Point operator[](Point x) const { return images_[x]; }
    const std::vector<Point>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    Permutation operator*(const Permutation& rhs) const;
    Permutation& operator*=(const Permutation& rhs);
    Permutation pow(long long e) const;
    std::uint64_t order() const;
    // points moved, ascending
    std::vector<Point> support() const;
    // smallest moved point, or degree() when identity
    Point first_moved() const;

    std::string cycle_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<Point> images_;
};

Permutation commutator(const Permutation& a, const Permutation& b);
// a^b = b^-1 a b
Permutation conjugate(const Permutation& a, const Permutation& b);

std::size_t hash_images(std::span<const Point> images);

} // namespace vstab

template <>
struct std::hash<vstab::Permutation> {
    std::size_t operator()(const vstab::Permutation& p) const noexcept {
        return vstab::hash_images(p.images());
    }
};
