#pragma once

#include <compare>
#include <iosfwd>
#include <vector>

#include "cbruhat/permutation.hpp"

namespace cbruhat {

/// Permutation of S_n with each fixed point colored black or white; `white`
/// holds the white fixed points, sorted ascending.
struct DecoratedPermutation {
    Permutation perm;
    std::vector<int> white;

    friend bool operator==(const DecoratedPermutation&, const DecoratedPermutation&) = default;
};

/// Bijection f: Z -> Z with f(i+n) = f(i)+n, stored as the window
/// [f(1), ..., f(n)]. Window values must be pairwise distinct modulo n.
/// Windows are kept as given; equality compares windows directly.
class AffinePermutation {
public:
    AffinePermutation(int n, std::vector<int> window);

    static AffinePermutation identity(int n);

    int n() const { return n_; }
    const std::vector<int>& window() const { return window_; }

    /// f(i) for arbitrary integer i, via periodicity.
    int operator()(int i) const;

    friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
    friend auto operator<=>(const AffinePermutation& a, const AffinePermutation& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.window_ <=> b.window_;
    }

private:
    int n_;
    std::vector<int> window_;
};

/// The average shift (1/n) * sum(f(i) - i). Throws std::invalid_argument if
/// the sum is not divisible by n.
int av(const AffinePermutation& f);

/// Number of inversion classes, computed by the windowed scan
/// sum_{i in [n]} #{j : i < j < f(i), f(j) < f(i)}. Requires f bounded.
int length(const AffinePermutation& f);

/// Composition (f * g)(i) = f(g(i)).
AffinePermutation compose(const AffinePermutation& f, const AffinePermutation& g);
AffinePermutation operator*(const AffinePermutation& f, const AffinePermutation& g);

/// The reflection t_{ij} for i, j in [n], i != j: the finite transposition of
/// i and j when i < j, and the affine reflection sending j to i-n and i to
/// j+n when i > j.
AffinePermutation reflection_t(int i, int j, int n);

/// The translation element t_k = [1+n, ..., k+n, k+1, ..., n].
AffinePermutation translation_element(int k, int n);

/// True iff i <= f(i) <= i+n for all i (window check suffices).
bool is_bounded(const AffinePermutation& f);

/// Positions i in [n] with f(i) > n, sorted ascending.
std::vector<int> anti_excedance_positions(const AffinePermutation& f);

/// The cyclic shift [f(0)+1, f(1)+1, ..., f(n-1)+1].
AffinePermutation cyclic_shift(const AffinePermutation& f);

/// Reduce the window modulo n; fixed points with f(i) = i+n become white,
/// those with f(i) = i stay black. Requires f bounded.
DecoratedPermutation to_decorated(const AffinePermutation& f);

/// Inverse of to_decorated: lift pi(i) < i to pi(i)+n, white fixed points to
/// i+n.
AffinePermutation from_decorated(const DecoratedPermutation& d);

/// Embed u in S_n as the affine permutation with the same window.
AffinePermutation embed(const Permutation& u);

std::ostream& operator<<(std::ostream& os, const AffinePermutation& f);

}  // namespace cbruhat
