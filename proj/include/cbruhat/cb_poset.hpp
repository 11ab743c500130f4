#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cbruhat/affine.hpp"

namespace cbruhat {

/// A cover edge in the Hasse diagram: elements[lower] = elements[upper] * t_{ij},
/// with rank[lower] = rank[upper] - 1. Indices i, j are 1-indexed positions.
struct CoverEdge {
    int upper;
    int lower;
    int i;
    int j;

    friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

/// The full Hasse diagram of the circular Bruhat order on bounded affine
/// permutations with average shift k, or of one of its anti-excedance fibers.
/// Elements are indexed in lexicographic window order; rank(f) =
/// k(n-k) - length(f). Immutable after construction.
class CBPoset {
public:
    CBPoset(int k, int n, std::vector<AffinePermutation> elements,
            std::vector<CoverEdge> covers,
            std::optional<std::vector<int>> lambda = std::nullopt);

    int k() const { return k_; }
    int n() const { return n_; }
    int size() const { return static_cast<int>(elements_.size()); }
    int max_rank() const { return k_ * (n_ - k_); }

    const std::vector<AffinePermutation>& elements() const { return elements_; }
    const AffinePermutation& element(int idx) const {
        return elements_[static_cast<std::size_t>(idx)];
    }
    const std::vector<CoverEdge>& covers() const { return covers_; }
    int rank(int idx) const { return rank_[static_cast<std::size_t>(idx)]; }

    /// Indices of cover edges with the given element as upper endpoint.
    const std::vector<int>& edges_below(int idx) const {
        return below_[static_cast<std::size_t>(idx)];
    }
    /// Indices of cover edges with the given element as lower endpoint.
    const std::vector<int>& edges_above(int idx) const {
        return above_[static_cast<std::size_t>(idx)];
    }

    /// Element indices of the given rank, ascending.
    const std::vector<int>& rank_bucket(int r) const {
        return buckets_[static_cast<std::size_t>(r)];
    }

    std::optional<int> index_of(const AffinePermutation& f) const;

    /// Index of the unique maximal element f_top (only for full posets).
    int top_index() const;

    /// The anti-excedance set when this is a fiber subposet.
    const std::optional<std::vector<int>>& lambda() const { return lambda_; }

private:
    int k_;
    int n_;
    std::vector<AffinePermutation> elements_;
    std::vector<CoverEdge> covers_;
    std::vector<int> rank_;
    std::vector<std::vector<int>> below_;
    std::vector<std::vector<int>> above_;
    std::vector<std::vector<int>> buckets_;
    std::optional<std::vector<int>> lambda_;
};

/// All elements of CB(k,n), sorted lexicographically by window: every
/// permutation of S_n is lifted over all black/white colorings of its fixed
/// points and kept when it has exactly k anti-excedances.
std::vector<AffinePermutation> enumerate_cb(int k, int n);

/// Elements covered by f in CB(k,n): all (f * t_{ij}, (i,j)) over ordered
/// pairs i != j such that the product is bounded and one longer than f.
/// Ordered by (i, j).
std::vector<std::pair<AffinePermutation, std::pair<int, int>>>
covers_below(const AffinePermutation& f, int k);

/// Build the full Hasse diagram of CB(k,n) and validate its structural
/// invariants (unique top of rank k(n-k), binom(n,k) minimal elements, every
/// cover dropping rank by one). Throws std::logic_error on violation.
CBPoset build_cb_poset(int k, int n, int parallelism = 1);

/// Restrict to the elements with anti-excedance set lambda and to the n-good
/// cover edges (those with i > j), which preserve anti-excedances.
CBPoset fiber_subposet(const CBPoset& p, const std::vector<int>& lambda);

/// Run fn(i) for i in [0, count), splitting across up to `degree` threads.
/// Results must only be written to per-index slots; the schedule is
/// observationally equivalent to the sequential loop.
void parallel_for(std::size_t count, int degree, const std::function<void(std::size_t)>& fn);

}  // namespace cbruhat
