#include "cbruhat/cb_poset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cbruhat {

void parallel_for(std::size_t count, int degree, const std::function<void(std::size_t)>& fn) {
    if (degree <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(degree), count);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w]() {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : threads) t.join();
}

CBPoset::CBPoset(int k, int n, std::vector<AffinePermutation> elements,
                 std::vector<CoverEdge> covers, std::optional<std::vector<int>> lambda)
    : k_(k),
      n_(n),
      elements_(std::move(elements)),
      covers_(std::move(covers)),
      lambda_(std::move(lambda)) {
    const std::size_t m = elements_.size();
    rank_.resize(m);
    below_.resize(m);
    above_.resize(m);
    buckets_.assign(static_cast<std::size_t>(max_rank()) + 1, {});
    for (std::size_t idx = 0; idx < m; ++idx) {
        int r = max_rank() - length(elements_[idx]);
        if (r < 0 || r > max_rank())
            throw std::logic_error("CBPoset: element rank out of range");
        rank_[idx] = r;
        buckets_[static_cast<std::size_t>(r)].push_back(static_cast<int>(idx));
    }
    for (std::size_t e = 0; e < covers_.size(); ++e) {
        const CoverEdge& edge = covers_[e];
        below_[static_cast<std::size_t>(edge.upper)].push_back(static_cast<int>(e));
        above_[static_cast<std::size_t>(edge.lower)].push_back(static_cast<int>(e));
    }
}

std::optional<int> CBPoset::index_of(const AffinePermutation& f) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), f);
    if (it == elements_.end() || !(*it == f)) return std::nullopt;
    return static_cast<int>(it - elements_.begin());
}

int CBPoset::top_index() const {
    const auto& top_bucket = buckets_[static_cast<std::size_t>(max_rank())];
    if (top_bucket.size() != 1) throw std::logic_error("CBPoset: no unique top element");
    return top_bucket.front();
}

std::vector<AffinePermutation> enumerate_cb(int k, int n) {
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("enumerate_cb: need 0 <= k <= n");
    std::vector<AffinePermutation> out;
    for (const Permutation& pi : all_permutations(n)) {
        std::vector<int> fixed;
        for (int i = 1; i <= n; ++i)
            if (pi(i) == i) fixed.push_back(i);
        const unsigned subsets = 1u << fixed.size();
        for (unsigned mask = 0; mask < subsets; ++mask) {
            std::vector<int> white;
            for (std::size_t b = 0; b < fixed.size(); ++b)
                if (mask & (1u << b)) white.push_back(fixed[b]);
            AffinePermutation f = from_decorated(DecoratedPermutation{pi, std::move(white)});
            if (static_cast<int>(anti_excedance_positions(f).size()) == k)
                out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<AffinePermutation, std::pair<int, int>>>
covers_below(const AffinePermutation& f, int k) {
    if (!is_bounded(f) || av(f) != k)
        throw std::invalid_argument("covers_below: f is not an element of CB(k,n)");
    const int n = f.n();
    const int len = length(f);
    std::vector<std::pair<AffinePermutation, std::pair<int, int>>> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            AffinePermutation g = f * reflection_t(i, j, n);
            if (!is_bounded(g)) continue;
            if (length(g) == len + 1) out.emplace_back(std::move(g), std::make_pair(i, j));
        }
    }
    return out;
}

CBPoset build_cb_poset(int k, int n, int parallelism) {
    std::vector<AffinePermutation> elements = enumerate_cb(k, n);
    std::map<std::vector<int>, int> index;
    for (std::size_t idx = 0; idx < elements.size(); ++idx)
        index.emplace(elements[idx].window(), static_cast<int>(idx));

    std::vector<std::vector<CoverEdge>> per_element(elements.size());
    std::vector<char> missing_target(elements.size(), 0);
    parallel_for(elements.size(), parallelism, [&](std::size_t idx) {
        for (const auto& [g, ij] : covers_below(elements[idx], k)) {
            auto it = index.find(g.window());
            if (it == index.end()) {
                missing_target[idx] = 1;
                return;
            }
            per_element[idx].push_back(
                CoverEdge{static_cast<int>(idx), it->second, ij.first, ij.second});
        }
    });
    for (std::size_t idx = 0; idx < elements.size(); ++idx) {
        if (missing_target[idx]) {
            std::ostringstream os;
            os << "build_cb_poset: cover target missing from enumeration at element " << idx;
            throw std::logic_error(os.str());
        }
    }
    std::vector<CoverEdge> covers;
    for (const auto& chunk : per_element) covers.insert(covers.end(), chunk.begin(), chunk.end());

    CBPoset poset(k, n, std::move(elements), std::move(covers));

    // Structural invariants.
    const int top_rank = poset.max_rank();
    const AffinePermutation* top = nullptr;
    long min_count = 0;
    for (int idx = 0; idx < poset.size(); ++idx) {
        const AffinePermutation& f = poset.element(idx);
        if (!is_bounded(f) || av(f) != k ||
            static_cast<int>(anti_excedance_positions(f).size()) != k)
            throw std::logic_error("build_cb_poset: element fails membership invariants");
        if (poset.rank(idx) == top_rank) {
            if (top) throw std::logic_error("build_cb_poset: multiple maximal-rank elements");
            top = &f;
        }
        if (poset.rank(idx) == 0) {
            ++min_count;
            if (!poset.edges_below(idx).empty())
                throw std::logic_error("build_cb_poset: rank-0 element has a cover below");
        } else if (poset.edges_below(idx).empty()) {
            throw std::logic_error("build_cb_poset: non-minimal element with no cover below");
        }
    }
    std::vector<int> expected_top(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) expected_top[static_cast<std::size_t>(i - 1)] = i + k;
    if (!top || !(*top == AffinePermutation(n, expected_top)))
        throw std::logic_error("build_cb_poset: top element is not [1+k,...,n+k]");
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    if (binom != min_count)
        throw std::logic_error("build_cb_poset: minimal element count differs from binom(n,k)");
    for (const CoverEdge& e : poset.covers()) {
        if (poset.rank(e.lower) != poset.rank(e.upper) - 1)
            throw std::logic_error("build_cb_poset: cover edge does not drop rank by one");
    }
    return poset;
}

CBPoset fiber_subposet(const CBPoset& p, const std::vector<int>& lambda) {
    std::vector<int> sorted = lambda;
    std::sort(sorted.begin(), sorted.end());
    if (static_cast<int>(sorted.size()) != p.k())
        throw std::invalid_argument("fiber_subposet: |lambda| != k");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("fiber_subposet: duplicate entries in lambda");
    for (int v : sorted)
        if (v < 1 || v > p.n()) throw std::invalid_argument("fiber_subposet: entry out of [n]");

    std::vector<AffinePermutation> elements;
    std::vector<int> new_index(static_cast<std::size_t>(p.size()), -1);
    for (int idx = 0; idx < p.size(); ++idx) {
        if (anti_excedance_positions(p.element(idx)) == sorted) {
            new_index[static_cast<std::size_t>(idx)] = static_cast<int>(elements.size());
            elements.push_back(p.element(idx));
        }
    }
    std::vector<CoverEdge> covers;
    for (const CoverEdge& e : p.covers()) {
        if (e.i <= e.j) continue;  // keep only n-good covers
        int up = new_index[static_cast<std::size_t>(e.upper)];
        int lo = new_index[static_cast<std::size_t>(e.lower)];
        if (up >= 0 && lo >= 0) covers.push_back(CoverEdge{up, lo, e.i, e.j});
    }
    return CBPoset(p.k(), p.n(), std::move(elements), std::move(covers), std::move(sorted));
}

}  // namespace cbruhat
