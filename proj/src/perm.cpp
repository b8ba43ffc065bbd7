#include "vstab/perm.hpp"

#include "vstab/errors.hpp"

#include <numeric>
#include <sstream>

namespace vstab {

Permutation::Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (Point x : images_) {
        if (x >= images_.size() || seen[x])
            throw NotAPermutation("images do not form a bijection");
        seen[x] = 1;
    }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
    std::vector<Point> im(degree);
    std::iota(im.begin(), im.end(), Point{0});
    std::vector<char> used(degree, 0);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] >= degree || used[c[i]])
                throw NotAPermutation("bad cycle list");
            used[c[i]] = 1;
            im[c[i]] = c[(i + 1) % c.size()];
        }
    }
    return Permutation(std::move(im));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
    return r;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (rhs.degree() != degree()) throw DegreeMismatch("compose");
    Permutation r;
    r.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = rhs.images_[images_[i]];
    return r;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
    if (rhs.degree() != degree()) throw DegreeMismatch("compose");
    for (auto& x : images_) x = rhs.images_[x];
    return *this;
}

Permutation Permutation::pow(long long e) const {
    Permutation base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Permutation result(degree());
    while (n) {
        if (n & 1) result *= base;
        base = base * base;
        n >>= 1;
    }
    return result;
}

std::uint64_t Permutation::order() const {
    std::vector<char> seen(images_.size(), 0);
    std::uint64_t o = 1;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
            seen[j] = 1;
            ++len;
        }
        o = std::lcm(o, len);
    }
    return o;
}

std::vector<Point> Permutation::support() const {
    std::vector<Point> s;
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) s.push_back(static_cast<Point>(i));
    return s;
}

Point Permutation::first_moved() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return static_cast<Point>(i);
    return static_cast<Point>(images_.size());
}

std::string Permutation::cycle_string() const {
    std::ostringstream out;
    std::vector<char> seen(images_.size(), 0);
    bool any = false;
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        any = true;
        out << '(';
        Point j = static_cast<Point>(i);
        bool first = true;
        while (!seen[j]) {
            seen[j] = 1;
            if (!first) out << ' ';
            out << j;
            first = false;
            j = images_[j];
        }
        out << ')';
    }
    if (!any) out << "()";
    return out.str();
}

Permutation commutator(const Permutation& a, const Permutation& b) {
    return a.inverse() * b.inverse() * a * b;
}

Permutation conjugate(const Permutation& a, const Permutation& b) {
    return b.inverse() * a * b;
}

std::size_t hash_images(std::span<const Point> images) {
    std::uint64_t h = 1469598103934665603ull;
    for (Point x : images) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

} // namespace vstab
