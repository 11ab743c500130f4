#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "cbruhat/permutation.hpp"

using namespace cbruhat;

namespace {

using CoverSet = std::set<std::pair<std::vector<int>, std::pair<int, int>>>;

CoverSet as_set(const std::vector<std::pair<Permutation, std::pair<int, int>>>& covers) {
    CoverSet out;
    for (const auto& [p, ij] : covers) out.insert({p.images(), ij});
    return out;
}

}  // namespace

TEST_CASE("window validation") {
    CHECK_THROWS_AS(Permutation({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({}), std::invalid_argument);
}

TEST_CASE("length counts inversions") {
    CHECK(length(Permutation({1, 2, 3})) == 0);
    CHECK(length(Permutation({5, 4, 3, 2, 1})) == 10);
    CHECK(length(Permutation({2, 4, 1, 3})) == 3);
}

TEST_CASE("bruhat covers below") {
    CHECK(bruhat_covers_below(Permutation::identity(4)).empty());
    CHECK(as_set(bruhat_covers_below(Permutation({2, 1, 3}))) ==
          CoverSet{{{1, 2, 3}, {1, 2}}});
    CHECK(as_set(bruhat_covers_below(Permutation({3, 2, 1}))) ==
          CoverSet{{{2, 3, 1}, {1, 2}}, {{3, 1, 2}, {2, 3}}});
}

TEST_CASE("length changes by odd amount under any transposition") {
    for (const Permutation& p : all_permutations(4)) {
        int len = length(p);
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j) CHECK(length(p.with_swapped(i, j)) != len);
    }
}

TEST_CASE("grassmannian predicates") {
    CHECK(is_k_grassmannian(Permutation({2, 4, 1, 3}), 2));
    CHECK(is_k_grassmannian(Permutation({2, 4, 5, 1, 3}), 3));
    CHECK_FALSE(is_k_grassmannian(Permutation({2, 4, 1, 3}), 1));
    for (int k = 0; k <= 4; ++k) CHECK(is_k_grassmannian(Permutation::identity(4), k));
}

TEST_CASE("grassmannian from subset") {
    CHECK(grassmannian_from_subset({2, 4, 5}, 5) == Permutation({2, 4, 5, 1, 3}));
    CHECK(grassmannian_from_subset({1, 2}, 5) == Permutation::identity(5));
    CHECK(grassmannian_from_subset({4, 5}, 5) == Permutation({4, 5, 1, 2, 3}));
    CHECK_THROWS_AS(grassmannian_from_subset({2, 2}, 4), std::invalid_argument);
    CHECK_THROWS_AS(grassmannian_from_subset({0, 3}, 4), std::invalid_argument);
}

TEST_CASE("k-Bruhat comparisons") {
    Permutation u({1, 3, 2, 4});
    Permutation v({2, 4, 1, 3});
    CHECK(k_bruhat_leq(u, u, 2));
    CHECK(k_bruhat_leq(u, v, 2));
    CHECK_FALSE(k_bruhat_leq(Permutation({2, 1, 3, 4}), Permutation::identity(4), 2));
}

TEST_CASE("k-Bruhat covers above") {
    auto covers = as_set(k_bruhat_covers_above(Permutation({1, 3, 2, 4}), 2));
    CHECK(covers.count({{1, 4, 2, 3}, {2, 4}}) == 1);
    CHECK(covers.count({{2, 3, 1, 4}, {1, 3}}) == 1);
}

TEST_CASE("k-Bruhat covers agree with the order-theoretic definition") {
    // A cover in the k-Bruhat order is an ordinary Bruhat cover whose
    // transposition moves a value across position k.
    for (int n = 2; n <= 4; ++n) {
        for (const Permutation& u : all_permutations(n)) {
            for (int k = 0; k <= n; ++k) {
                CoverSet expected;
                int len = length(u);
                for (int p = 1; p <= n; ++p) {
                    for (int q = p + 1; q <= n; ++q) {
                        Permutation v = u.with_swapped(p, q);
                        if (length(v) != len + 1) continue;
                        if (p <= k && q > k) expected.insert({v.images(), {p, q}});
                    }
                }
                CHECK(as_set(k_bruhat_covers_above(u, k)) == expected);
            }
        }
    }
}

TEST_CASE("k-Bruhat covers imply comparability and unit length step") {
    for (int n = 2; n <= 5; ++n) {
        for (const Permutation& u : all_permutations(n)) {
            for (int k = 0; k <= n; ++k) {
                for (const auto& [v, pq] : k_bruhat_covers_above(u, k)) {
                    CHECK(k_bruhat_leq(u, v, k));
                    CHECK(length(v) == length(u) + 1);
                }
            }
        }
    }
}

TEST_CASE("k-Bruhat relation is a partial order") {
    for (int n = 2; n <= 5; ++n) {
        auto perms = all_permutations(n);
        const int count = static_cast<int>(perms.size());
        for (int k = 0; k <= n; ++k) {
            std::vector<std::vector<bool>> leq(
                static_cast<std::size_t>(count), std::vector<bool>(static_cast<std::size_t>(count)));
            for (int a = 0; a < count; ++a)
                for (int b = 0; b < count; ++b)
                    leq[a][b] = k_bruhat_leq(perms[static_cast<std::size_t>(a)],
                                             perms[static_cast<std::size_t>(b)], k);
            for (int a = 0; a < count; ++a) {
                CHECK(leq[a][a]);
                for (int b = 0; b < count; ++b) {
                    if (a != b && leq[a][b]) CHECK_FALSE(leq[b][a]);
                    if (!leq[a][b]) continue;
                    for (int c = 0; c < count; ++c)
                        if (leq[b][c]) CHECK(leq[a][c]);
                }
            }
        }
    }
}

TEST_CASE("the comparison matches the cover-generated order") {
    // The three-condition comparison must coincide with reachability along
    // cover steps.
    for (int n = 2; n <= 5; ++n) {
        auto perms = all_permutations(n);
        const std::size_t count = perms.size();
        std::map<std::vector<int>, int> index;
        for (std::size_t idx = 0; idx < count; ++idx)
            index.emplace(perms[idx].images(), static_cast<int>(idx));
        for (int k = 0; k <= n; ++k) {
            std::vector<std::vector<bool>> reach(count, std::vector<bool>(count, false));
            // Longest elements first so reachability propagates in one pass.
            std::vector<int> order(count);
            for (std::size_t idx = 0; idx < count; ++idx) order[idx] = static_cast<int>(idx);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return length(perms[static_cast<std::size_t>(a)]) >
                       length(perms[static_cast<std::size_t>(b)]);
            });
            for (int a : order) {
                reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = true;
                for (const auto& [v, pq] :
                     k_bruhat_covers_above(perms[static_cast<std::size_t>(a)], k)) {
                    int b = index.at(v.images());
                    for (std::size_t c = 0; c < count; ++c)
                        if (reach[static_cast<std::size_t>(b)][c])
                            reach[static_cast<std::size_t>(a)][c] = true;
                }
            }
            for (std::size_t a = 0; a < count; ++a)
                for (std::size_t b = 0; b < count; ++b)
                    CHECK(reach[a][b] == k_bruhat_leq(perms[a], perms[b], k));
        }
    }
}

TEST_CASE("the interval below w_max consists of the k-Grassmannians") {
    for (int n = 2; n <= 6; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::vector<int> top_subset;
            for (int v = n - k + 1; v <= n; ++v) top_subset.push_back(v);
            Permutation w_max = grassmannian_from_subset(top_subset, n);
            for (const Permutation& u : all_permutations(n)) {
                bool in_interval = k_bruhat_leq(Permutation::identity(n), u, k) &&
                                   k_bruhat_leq(u, w_max, k);
                CHECK(in_interval == is_k_grassmannian(u, k));
            }
        }
    }
}

TEST_CASE("interval chain counts") {
    Permutation u({1, 3, 2, 4});
    Permutation w({2, 4, 1, 3});
    CHECK(k_bruhat_interval_maximal_chains(u, u, 2) == 1);
    CHECK(k_bruhat_interval_maximal_chains(u, w, 2) == 2);
    CHECK(k_bruhat_interval_maximal_chains(Permutation::identity(4),
                                           grassmannian_from_subset({3, 4}, 4), 2) == 2);
    CHECK_THROWS_AS(k_bruhat_interval_maximal_chains(w, u, 2), std::invalid_argument);
}
