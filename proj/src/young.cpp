#include "cbruhat/young.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cbruhat/permutation.hpp"

namespace cbruhat {

namespace {

void check_diagram(const YoungDiagram& y, int k, int m) {
    if (static_cast<int>(y.rows.size()) != k)
        throw std::invalid_argument("YoungDiagram: expected exactly k rows");
    int prev = m;
    for (int r : y.rows) {
        if (r < 0 || r > prev)
            throw std::invalid_argument("YoungDiagram: rows not weakly decreasing within k x m");
        prev = r;
    }
}

}  // namespace

YoungDiagram partition_from_subset(const std::vector<int>& lambda, int k, int n) {
    if (static_cast<int>(lambda.size()) != k)
        throw std::invalid_argument("partition_from_subset: |lambda| != k");
    std::vector<int> sorted = lambda;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("partition_from_subset: duplicate entries");
    for (int v : sorted)
        if (v < 1 || v > n) throw std::invalid_argument("partition_from_subset: entry out of [n]");
    std::vector<int> rows(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        rows[static_cast<std::size_t>(i - 1)] = (n - k) - sorted[static_cast<std::size_t>(i - 1)] + i;
    YoungDiagram y{std::move(rows)};
    check_diagram(y, k, n - k);
    return y;
}

std::vector<int> subset_from_partition(const YoungDiagram& y, int k, int n) {
    check_diagram(y, k, n - k);
    std::vector<int> lambda(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i)
        lambda[static_cast<std::size_t>(i - 1)] = (n - k) - y.rows[static_cast<std::size_t>(i - 1)] + i;
    return lambda;
}

std::vector<YoungDiagram> covers_above(const YoungDiagram& y, int k, int m) {
    check_diagram(y, k, m);
    std::vector<YoungDiagram> out;
    for (int i = 0; i < k; ++i) {
        int cap = (i == 0) ? m : y.rows[static_cast<std::size_t>(i - 1)];
        if (y.rows[static_cast<std::size_t>(i)] < cap) {
            YoungDiagram up = y;
            ++up.rows[static_cast<std::size_t>(i)];
            out.push_back(std::move(up));
        }
    }
    return out;
}

std::vector<YoungDiagram> covers_below(const YoungDiagram& y) {
    std::vector<YoungDiagram> out;
    const int k = static_cast<int>(y.rows.size());
    for (int i = 0; i < k; ++i) {
        int floor_len = (i + 1 < k) ? y.rows[static_cast<std::size_t>(i + 1)] : 0;
        if (y.rows[static_cast<std::size_t>(i)] > floor_len) {
            YoungDiagram down = y;
            --down.rows[static_cast<std::size_t>(i)];
            out.push_back(std::move(down));
        }
    }
    return out;
}

mpz_class syt_count_hook(int k, int m) {
    if (k < 0 || m < 0) throw std::invalid_argument("syt_count_hook: negative rectangle");
    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(), static_cast<unsigned long>(k) * static_cast<unsigned long>(m));
    mpz_class denominator = 1;
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= m; ++b) denominator *= (k - a) + (m - b) + 1;
    if (numerator % denominator != 0)
        throw std::logic_error("syt_count_hook: hook product does not divide (km)!");
    return numerator / denominator;
}

namespace {

mpz_class chain_count_to(const YoungDiagram& y, std::map<std::vector<int>, mpz_class>& memo) {
    bool empty = std::all_of(y.rows.begin(), y.rows.end(), [](int r) { return r == 0; });
    if (empty) return 1;
    auto it = memo.find(y.rows);
    if (it != memo.end()) return it->second;
    mpz_class total = 0;
    for (const YoungDiagram& below : covers_below(y)) total += chain_count_to(below, memo);
    memo.emplace(y.rows, total);
    return total;
}

}  // namespace

mpz_class syt_count_chains(int k, int m, int max_boxes) {
    if (k < 0 || m < 0) throw std::invalid_argument("syt_count_chains: negative rectangle");
    if (k * m > max_boxes)
        throw std::invalid_argument("syt_count_chains: rectangle exceeds the box cap");
    YoungDiagram rect{std::vector<int>(static_cast<std::size_t>(k), m)};
    std::map<std::vector<int>, mpz_class> memo;
    return chain_count_to(rect, memo);
}

bool verify_grassmannian_anti_isomorphism(int k, int n, std::string* counterexample) {
    const int m = n - k;
    // All k-subsets of [n] with their Grassmannian permutations and diagrams.
    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    auto recurse = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == k) {
            subsets.push_back(current);
            return;
        }
        for (int v = next; v <= n; ++v) {
            current.push_back(v);
            self(self, v + 1);
            current.pop_back();
        }
    };
    recurse(recurse, 1);

    std::vector<Permutation> ws;
    std::vector<YoungDiagram> ys;
    ws.reserve(subsets.size());
    ys.reserve(subsets.size());
    for (const auto& lambda : subsets) {
        ws.push_back(grassmannian_from_subset(lambda, n));
        ys.push_back(partition_from_subset(lambda, k, n));
    }
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (std::size_t b = 0; b < subsets.size(); ++b) {
            if (a == b) continue;
            // Cover in the k-Bruhat interval of Grassmannians.
            bool perm_cover = false;
            for (const auto& [v, pq] : k_bruhat_covers_above(ws[a], k))
                if (v == ws[b]) perm_cover = true;
            // Cover in L(k, m) with the opposite orientation.
            bool diagram_cover = false;
            for (const YoungDiagram& up : covers_above(ys[b], k, m))
                if (up == ys[a]) diagram_cover = true;
            if (perm_cover != diagram_cover) {
                if (counterexample) {
                    std::ostringstream os;
                    os << "lambda pair #" << a << " -> #" << b << ": permutation cover="
                       << perm_cover << ", diagram cover=" << diagram_cover;
                    *counterexample = os.str();
                }
                return false;
            }
        }
    }
    return true;
}

}  // namespace cbruhat
