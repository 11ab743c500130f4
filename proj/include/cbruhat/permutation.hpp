#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace cbruhat {

/// Element of the finite symmetric group S_n in window (one-line) notation.
/// All interfaces are 1-indexed: p(i) is the image of i for 1 <= i <= n.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& images() const { return images_; }

    /// Right multiplication by the transposition s_{ij}: swaps the images at
    /// positions i and j.
    Permutation with_swapped(int i, int j) const;

    Permutation inverse() const;

    /// Composition: (p * q)(i) = p(q(i)).
    friend Permutation operator*(const Permutation& p, const Permutation& q);

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.images_ <=> b.images_;
    }

private:
    std::vector<int> images_;
};

/// Number of inversions #{(i,j) : i < j, p(i) > p(j)}.
int length(const Permutation& p);

/// All pairs (p * s_{ij}, (i,j)) with i < j whose length is length(p) - 1,
/// i.e. the elements covered by p in the Bruhat order, with the transposition
/// that realizes the cover. Ordered by (i, j).
std::vector<std::pair<Permutation, std::pair<int, int>>>
bruhat_covers_below(const Permutation& p);

/// True iff p(1) < ... < p(k) and p(k+1) < ... < p(n).
bool is_k_grassmannian(const Permutation& p, int k);

/// The unique k-Grassmannian permutation whose first k images form the set
/// lambda: lambda sorted ascending, then the complement sorted ascending.
Permutation grassmannian_from_subset(const std::vector<int>& lambda, int n);

/// The k-Bruhat order on S_n: u <=_k v iff
///   (1) u(i) <= v(i) for i <= k,
///   (2) u(j) >= v(j) for j > k,
///   (3) u(i) < u(j) implies v(i) < v(j) whenever i < j <= k or k < i < j.
bool k_bruhat_leq(const Permutation& u, const Permutation& v, int k);

/// Covers of u in the k-Bruhat order: all (u * s_{pq}, (p,q)) with
/// p <= k < q, u(p) < u(q), and no position r with p < r < q and
/// u(p) < u(r) < u(q). Ordered by (p, q).
std::vector<std::pair<Permutation, std::pair<int, int>>>
k_bruhat_covers_above(const Permutation& u, int k);

/// Number of saturated chains u = x_0 <. x_1 <. ... <. x_m = w in the
/// k-Bruhat interval [u, w]_k, where m = length(w) - length(u).
/// Throws std::invalid_argument unless u <=_k w.
mpz_class k_bruhat_interval_maximal_chains(const Permutation& u,
                                           const Permutation& w, int k);

/// All n! elements of S_n in lexicographic window order.
std::vector<Permutation> all_permutations(int n);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

}  // namespace cbruhat
