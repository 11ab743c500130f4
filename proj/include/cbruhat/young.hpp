#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

namespace cbruhat {

/// A partition inside a k x m rectangle, stored weakly decreasing and
/// zero-padded to exactly k rows so the ambient rectangle is unambiguous.
struct YoungDiagram {
    std::vector<int> rows;

    friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;
    friend auto operator<=>(const YoungDiagram& a, const YoungDiagram& b) {
        return a.rows <=> b.rows;
    }
};

/// The diagram p(lambda) with p_i = (n-k) - lambda_i + i for lambda sorted
/// ascending. A bijection between k-subsets of [n] and diagrams in the
/// k x (n-k) rectangle.
YoungDiagram partition_from_subset(const std::vector<int>& lambda, int k, int n);

/// Inverse of partition_from_subset: lambda_i = (n-k) - p_i + i.
std::vector<int> subset_from_partition(const YoungDiagram& y, int k, int n);

/// Diagrams obtained from y by adding one box, staying inside k x m.
std::vector<YoungDiagram> covers_above(const YoungDiagram& y, int k, int m);

/// Diagrams obtained from y by removing one box.
std::vector<YoungDiagram> covers_below(const YoungDiagram& y);

/// Number of standard Young tableaux of the k x m rectangle by the
/// hook-length formula: (km)! / prod hooks.
mpz_class syt_count_hook(int k, int m);

/// The same count as the number of maximal chains from the empty diagram to
/// the full rectangle, by memoized recursion. Throws std::invalid_argument
/// when k*m exceeds max_boxes.
mpz_class syt_count_chains(int k, int m, int max_boxes = 16);

/// Checks that w_lambda -> Y_{p(lambda)} reverses cover relations between the
/// k-Bruhat interval [id, w_max]_k (the k-Grassmannian permutations) and the
/// rectangle lattice L(k, n-k). Writes the first failing pair into
/// counterexample when given.
bool verify_grassmannian_anti_isomorphism(int k, int n,
                                          std::string* counterexample = nullptr);

}  // namespace cbruhat
