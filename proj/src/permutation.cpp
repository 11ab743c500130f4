#include "cbruhat/permutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>

namespace cbruhat {

namespace {

void check_window(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    if (n == 0) throw std::invalid_argument("Permutation: empty window");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images) {
        if (v < 1 || v > n) throw std::invalid_argument("Permutation: image out of range");
        if (seen[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("Permutation: duplicate image");
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    check_window(images_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::with_swapped(int i, int j) const {
    std::vector<int> w = images_;
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(j - 1)]);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(images_.size());
    for (int i = 1; i <= n(); ++i) w[static_cast<std::size_t>((*this)(i)-1)] = i;
    return Permutation(std::move(w));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.n() != q.n()) throw std::invalid_argument("Permutation: degree mismatch");
    std::vector<int> w(static_cast<std::size_t>(p.n()));
    for (int i = 1; i <= p.n(); ++i) w[static_cast<std::size_t>(i - 1)] = p(q(i));
    return Permutation(std::move(w));
}

int length(const Permutation& p) {
    int count = 0;
    for (int i = 1; i <= p.n(); ++i)
        for (int j = i + 1; j <= p.n(); ++j)
            if (p(i) > p(j)) ++count;
    return count;
}

std::vector<std::pair<Permutation, std::pair<int, int>>>
bruhat_covers_below(const Permutation& p) {
    std::vector<std::pair<Permutation, std::pair<int, int>>> out;
    const int len = length(p);
    for (int i = 1; i <= p.n(); ++i) {
        for (int j = i + 1; j <= p.n(); ++j) {
            Permutation q = p.with_swapped(i, j);
            if (length(q) == len - 1) out.emplace_back(std::move(q), std::make_pair(i, j));
        }
    }
    return out;
}

bool is_k_grassmannian(const Permutation& p, int k) {
    if (k < 0 || k > p.n()) throw std::invalid_argument("is_k_grassmannian: k out of range");
    for (int i = 1; i < k; ++i)
        if (p(i) > p(i + 1)) return false;
    for (int i = k + 1; i < p.n(); ++i)
        if (p(i) > p(i + 1)) return false;
    return true;
}

Permutation grassmannian_from_subset(const std::vector<int>& lambda, int n) {
    std::vector<bool> in_lambda(static_cast<std::size_t>(n), false);
    for (int v : lambda) {
        if (v < 1 || v > n) throw std::invalid_argument("grassmannian_from_subset: entry out of [n]");
        if (in_lambda[static_cast<std::size_t>(v - 1)])
            throw std::invalid_argument("grassmannian_from_subset: duplicate entry");
        in_lambda[static_cast<std::size_t>(v - 1)] = true;
    }
    std::vector<int> w;
    w.reserve(static_cast<std::size_t>(n));
    for (int v = 1; v <= n; ++v)
        if (in_lambda[static_cast<std::size_t>(v - 1)]) w.push_back(v);
    for (int v = 1; v <= n; ++v)
        if (!in_lambda[static_cast<std::size_t>(v - 1)]) w.push_back(v);
    return Permutation(std::move(w));
}

bool k_bruhat_leq(const Permutation& u, const Permutation& v, int k) {
    if (u.n() != v.n()) throw std::invalid_argument("k_bruhat_leq: degree mismatch");
    const int n = u.n();
    if (k < 0 || k > n) throw std::invalid_argument("k_bruhat_leq: k out of range");
    for (int i = 1; i <= k; ++i)
        if (u(i) > v(i)) return false;
    for (int j = k + 1; j <= n; ++j)
        if (u(j) < v(j)) return false;
    for (int i = 1; i < k; ++i)
        for (int j = i + 1; j <= k; ++j)
            if (u(i) < u(j) && v(i) > v(j)) return false;
    for (int i = k + 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (u(i) < u(j) && v(i) > v(j)) return false;
    return true;
}

std::vector<std::pair<Permutation, std::pair<int, int>>>
k_bruhat_covers_above(const Permutation& u, int k) {
    const int n = u.n();
    if (k < 0 || k > n) throw std::invalid_argument("k_bruhat_covers_above: k out of range");
    std::vector<std::pair<Permutation, std::pair<int, int>>> out;
    for (int p = 1; p <= k; ++p) {
        for (int q = k + 1; q <= n; ++q) {
            if (u(p) >= u(q)) continue;
            bool blocked = false;
            for (int r = p + 1; r < q && !blocked; ++r)
                if (u(p) < u(r) && u(r) < u(q)) blocked = true;
            if (!blocked) out.emplace_back(u.with_swapped(p, q), std::make_pair(p, q));
        }
    }
    return out;
}

namespace {

mpz_class chains_to_target(const Permutation& x, const Permutation& w, int k,
                           std::map<std::vector<int>, mpz_class>& memo) {
    if (x == w) return 1;
    auto it = memo.find(x.images());
    if (it != memo.end()) return it->second;
    mpz_class total = 0;
    for (const auto& [v, pq] : k_bruhat_covers_above(x, k)) {
        if (k_bruhat_leq(v, w, k)) total += chains_to_target(v, w, k, memo);
    }
    memo.emplace(x.images(), total);
    return total;
}

}  // namespace

mpz_class k_bruhat_interval_maximal_chains(const Permutation& u,
                                           const Permutation& w, int k) {
    if (!k_bruhat_leq(u, w, k))
        throw std::invalid_argument("k_bruhat_interval_maximal_chains: u is not <=_k w");
    std::map<std::vector<int>, mpz_class> memo;
    return chains_to_target(u, w, k, memo);
}

namespace {

std::ostream& print_window(std::ostream& os, const std::vector<int>& w) {
    os << "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    return os << "]";
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
    return print_window(os, p.images());
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace cbruhat
