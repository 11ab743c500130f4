#include "cbruhat/chains.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cbruhat {

ChainSumTable compute_chain_table(const CBPoset& p, int parallelism) {
    if (p.lambda())
        throw std::invalid_argument("compute_chain_table: expected a full poset, not a fiber");
    const int n = p.n();
    ChainSumTable table;
    table.weight_from_top.assign(static_cast<std::size_t>(p.size()), MPoly(n));
    table.delta.assign(static_cast<std::size_t>(p.size()),
                       std::vector<mpz_class>(static_cast<std::size_t>(n), 0));

    // Weights: descend from the top rank.
    table.weight_from_top[static_cast<std::size_t>(p.top_index())] = MPoly::constant(n, 1);
    for (int r = p.max_rank() - 1; r >= 0; --r) {
        const std::vector<int>& bucket = p.rank_bucket(r);
        parallel_for(bucket.size(), parallelism, [&](std::size_t b) {
            const int g = bucket[b];
            MPoly total(n);
            for (int e : p.edges_above(g)) {
                const CoverEdge& edge = p.covers()[static_cast<std::size_t>(e)];
                total += table.weight_from_top[static_cast<std::size_t>(edge.upper)] *
                         cover_weight(edge.i, edge.j, n);
            }
            table.weight_from_top[static_cast<std::size_t>(g)] = std::move(total);
        });
    }

    // Delta columns: ascend from rank 0, all r at once.
    for (int idx : p.rank_bucket(0))
        table.delta[static_cast<std::size_t>(idx)].assign(static_cast<std::size_t>(n), 1);
    for (int r = 1; r <= p.max_rank(); ++r) {
        const std::vector<int>& bucket = p.rank_bucket(r);
        parallel_for(bucket.size(), parallelism, [&](std::size_t b) {
            const int f = bucket[b];
            auto& row = table.delta[static_cast<std::size_t>(f)];
            for (int e : p.edges_below(f)) {
                const CoverEdge& edge = p.covers()[static_cast<std::size_t>(e)];
                const auto& lower_row = table.delta[static_cast<std::size_t>(edge.lower)];
                for (int col = 1; col <= n; ++col) {
                    if (is_r_good(edge.i, edge.j, n, col))
                        row[static_cast<std::size_t>(col - 1)] +=
                            lower_row[static_cast<std::size_t>(col - 1)];
                }
            }
        });
    }
    return table;
}

MPoly weighted_chain_sum(const CBPoset& p, const ChainSumTable& table) {
    MPoly total(p.n());
    for (int idx : p.rank_bucket(0)) total += table.weight_from_top[static_cast<std::size_t>(idx)];
    return total;
}

MPoly weighted_chain_sum(const CBPoset& p, int parallelism) {
    return weighted_chain_sum(p, compute_chain_table(p, parallelism));
}

mpz_class delta(const CBPoset& p, int element, int r) {
    if (element < 0 || element >= p.size())
        throw std::invalid_argument("delta: element index out of range");
    if (r < 1 || r > p.n()) throw std::invalid_argument("delta: r out of [n]");
    ChainSumTable table = compute_chain_table(p);
    return table.delta[static_cast<std::size_t>(element)][static_cast<std::size_t>(r - 1)];
}

bool verify_delta_independence(const CBPoset& p, const ChainSumTable& table,
                               std::string* counterexample) {
    for (int idx = 0; idx < p.size(); ++idx) {
        const auto& row = table.delta[static_cast<std::size_t>(idx)];
        for (int r = 2; r <= p.n(); ++r) {
            if (row[static_cast<std::size_t>(r - 1)] != row[0]) {
                if (counterexample) {
                    std::ostringstream os;
                    os << "element #" << idx << ": delta_" << r << " = "
                       << row[static_cast<std::size_t>(r - 1)].get_str() << " but delta_1 = "
                       << row[0].get_str();
                    *counterexample = os.str();
                }
                return false;
            }
        }
    }
    return true;
}

bool verify_delta_independence(const CBPoset& p, std::string* counterexample) {
    return verify_delta_independence(p, compute_chain_table(p), counterexample);
}

std::optional<bool> verify_induct_identity(const CBPoset& p, const ChainSumTable& table,
                                           int element) {
    if (p.rank(element) == 0) return std::nullopt;
    const int n = p.n();
    MPoly lhs(n);
    for (int e : p.edges_below(element)) {
        const CoverEdge& edge = p.covers()[static_cast<std::size_t>(e)];
        lhs += scale(cover_weight(edge.i, edge.j, n),
                     table.delta[static_cast<std::size_t>(edge.lower)][0]);
    }
    MPoly rhs = scale(all_vars_sum(n), table.delta[static_cast<std::size_t>(element)][0]);
    return lhs == rhs;
}

std::optional<bool> verify_induct_identity(const CBPoset& p, int element) {
    return verify_induct_identity(p, compute_chain_table(p), element);
}

mpz_class n_good_maximal_chain_count(const CBPoset& p, const ChainSumTable& table) {
    return table.delta[static_cast<std::size_t>(p.top_index())][static_cast<std::size_t>(p.n() - 1)];
}

mpz_class n_good_maximal_chain_count(const CBPoset& p) {
    return n_good_maximal_chain_count(p, compute_chain_table(p));
}

AffinePermutation to_fiber_element(const Permutation& u, const std::vector<int>& lambda) {
    const int n = u.n();
    const int k = static_cast<int>(lambda.size());
    Permutation w = grassmannian_from_subset(lambda, n);
    if (!k_bruhat_leq(u, w, k))
        throw std::invalid_argument("to_fiber_element: u is not <=_k w_lambda");
    std::vector<int> window(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int value = (i <= k) ? u(i) + n : u(i);
        window[static_cast<std::size_t>(w(i) - 1)] = value;
    }
    return AffinePermutation(n, std::move(window));
}

std::pair<Permutation, std::vector<int>> from_fiber_element(const AffinePermutation& f) {
    if (!is_bounded(f)) throw std::invalid_argument("from_fiber_element: f not bounded");
    const int n = f.n();
    std::vector<int> lambda = anti_excedance_positions(f);
    const int k = static_cast<int>(lambda.size());
    Permutation w = grassmannian_from_subset(lambda, n);
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int value = f(w(i));
        images[static_cast<std::size_t>(i - 1)] = (i <= k) ? value - n : value;
    }
    return {Permutation(std::move(images)), std::move(lambda)};
}

bool verify_anti_isomorphism(const CBPoset& p, const std::vector<int>& lambda,
                             std::string* counterexample) {
    const int n = p.n();
    const int k = p.k();
    auto fail = [&](const std::string& msg) {
        if (counterexample) *counterexample = msg;
        return false;
    };

    Permutation w = grassmannian_from_subset(lambda, n);
    std::vector<Permutation> ideal;
    for (const Permutation& u : all_permutations(n))
        if (k_bruhat_leq(u, w, k)) ideal.push_back(u);

    CBPoset fiber = fiber_subposet(p, lambda);
    if (static_cast<int>(ideal.size()) != fiber.size())
        return fail("ideal and fiber have different cardinalities");

    // Two-sided inverse bijection.
    std::map<std::vector<int>, int> fiber_index_of_u;
    for (std::size_t a = 0; a < ideal.size(); ++a) {
        AffinePermutation f = to_fiber_element(ideal[a], lambda);
        auto idx = fiber.index_of(f);
        if (!idx) {
            std::ostringstream os;
            os << "image of ideal element #" << a << " is missing from the fiber";
            return fail(os.str());
        }
        auto [u_back, lambda_back] = from_fiber_element(f);
        if (!(u_back == ideal[a]) || lambda_back != *fiber.lambda()) {
            std::ostringstream os;
            os << "round trip failed for ideal element #" << a;
            return fail(os.str());
        }
        fiber_index_of_u.emplace(ideal[a].images(), *idx);
    }
    for (int idx = 0; idx < fiber.size(); ++idx) {
        auto [u, lam] = from_fiber_element(fiber.element(idx));
        if (!(to_fiber_element(u, lam) == fiber.element(idx))) {
            std::ostringstream os;
            os << "round trip failed for fiber element #" << idx;
            return fail(os.str());
        }
    }

    // Cover reversal: u <._k v within the ideal iff the fiber has the edge
    // f_u above f_v.
    std::vector<std::pair<int, int>> fiber_edges;
    for (const CoverEdge& e : fiber.covers()) fiber_edges.emplace_back(e.upper, e.lower);
    std::sort(fiber_edges.begin(), fiber_edges.end());

    std::vector<std::pair<int, int>> mapped_edges;
    for (const Permutation& u : ideal) {
        for (const auto& [v, pq] : k_bruhat_covers_above(u, k)) {
            auto it = fiber_index_of_u.find(v.images());
            if (it == fiber_index_of_u.end()) continue;  // v outside the ideal
            mapped_edges.emplace_back(fiber_index_of_u.at(u.images()), it->second);
        }
    }
    std::sort(mapped_edges.begin(), mapped_edges.end());
    if (fiber_edges != mapped_edges) return fail("cover relations are not reversed pairwise");
    return true;
}

bool verify_anti_isomorphism(int k, int n, const std::vector<int>& lambda,
                             std::string* counterexample) {
    CBPoset p = build_cb_poset(k, n);
    return verify_anti_isomorphism(p, lambda, counterexample);
}

bool verify_corollary_chains(const CBPoset& p, const ChainSumTable& table, int element) {
    auto [u, lambda] = from_fiber_element(p.element(element));
    Permutation w = grassmannian_from_subset(lambda, p.n());
    mpz_class interval_chains = k_bruhat_interval_maximal_chains(u, w, p.k());
    mpz_class dn =
        table.delta[static_cast<std::size_t>(element)][static_cast<std::size_t>(p.n() - 1)];
    return dn == interval_chains;
}

bool verify_corollary_chains(const CBPoset& p, int element) {
    return verify_corollary_chains(p, compute_chain_table(p), element);
}

bool verify_bs_consequence(const CBPoset& p, std::string* counterexample) {
    const int n = p.n();
    std::vector<int> c_window(static_cast<std::size_t>(n));
    for (int i = 1; i < n; ++i) c_window[static_cast<std::size_t>(i - 1)] = i + 1;
    c_window[static_cast<std::size_t>(n - 1)] = 1;
    Permutation c{c_window};

    for (int idx = 0; idx < p.size(); ++idx) {
        const AffinePermutation& f = p.element(idx);
        AffinePermutation shifted = cyclic_shift(f);
        auto [u_f, lam_f] = from_fiber_element(f);
        auto [u_s, lam_s] = from_fiber_element(shifted);
        Permutation w_f = grassmannian_from_subset(lam_f, n);
        Permutation w_s = grassmannian_from_subset(lam_s, n);

        Permutation lhs = c * (u_f * w_f.inverse());
        Permutation rhs = (u_s * w_s.inverse()) * c;
        if (!(lhs == rhs)) {
            if (counterexample) {
                std::ostringstream os;
                os << "conjugation identity fails at element #" << idx;
                *counterexample = os.str();
            }
            return false;
        }
        mpz_class chains_f = k_bruhat_interval_maximal_chains(u_f, w_f, p.k());
        mpz_class chains_s = k_bruhat_interval_maximal_chains(u_s, w_s, p.k());
        if (chains_f != chains_s) {
            if (counterexample) {
                std::ostringstream os;
                os << "interval chain counts differ at element #" << idx << ": "
                   << chains_f.get_str() << " vs " << chains_s.get_str();
                *counterexample = os.str();
            }
            return false;
        }
    }
    return true;
}

bool verify_main_theorem(int k, int n, int parallelism) {
    CBPoset p = build_cb_poset(k, n, parallelism);
    MPoly lhs = weighted_chain_sum(p, parallelism);
    MPoly rhs = scale(pow(all_vars_sum(n), k * (n - k)), syt_count_hook(k, n - k));
    return lhs == rhs;
}

namespace {

// Weight of the Bruhat cover pi*s_{ij} <. pi over n-1 variables: the
// consecutive sum a_i + ... + a_{j-1}.
MPoly bruhat_weight(int i, int j, int nvars) {
    MPoly out(nvars);
    for (int r = i; r < j; ++r) out += MPoly::variable(nvars, r);
    return out;
}

}  // namespace

MPoly bruhat_chain_sum(int n) {
    const int nvars = n - 1;
    std::vector<Permutation> perms = all_permutations(n);
    std::map<std::vector<int>, int> index;
    for (std::size_t idx = 0; idx < perms.size(); ++idx)
        index.emplace(perms[idx].images(), static_cast<int>(idx));

    std::vector<std::vector<int>> by_length(static_cast<std::size_t>(n * (n - 1) / 2 + 1));
    std::vector<int> lengths(perms.size());
    for (std::size_t idx = 0; idx < perms.size(); ++idx) {
        lengths[idx] = length(perms[idx]);
        by_length[static_cast<std::size_t>(lengths[idx])].push_back(static_cast<int>(idx));
    }

    std::vector<MPoly> up_sum(perms.size(), MPoly(nvars));
    up_sum[static_cast<std::size_t>(index.at(Permutation::identity(n).images()))] =
        MPoly::constant(nvars, 1);
    for (std::size_t len = 1; len < by_length.size(); ++len) {
        for (int idx : by_length[len]) {
            MPoly total(nvars);
            for (const auto& [g, ij] : bruhat_covers_below(perms[static_cast<std::size_t>(idx)])) {
                total += up_sum[static_cast<std::size_t>(index.at(g.images()))] *
                         bruhat_weight(ij.first, ij.second, nvars);
            }
            up_sum[static_cast<std::size_t>(idx)] = std::move(total);
        }
    }
    std::vector<int> top(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) top[static_cast<std::size_t>(i - 1)] = n + 1 - i;
    return up_sum[static_cast<std::size_t>(index.at(top))];
}

MPoly bruhat_chain_sum_closed_form(int n) {
    const int nvars = n - 1;
    mpz_class numerator;
    mpz_fac_ui(numerator.get_mpz_t(),
               static_cast<unsigned long>(n) * static_cast<unsigned long>(n - 1) / 2);
    mpz_class denominator = 1;
    for (int d = 1; d <= n - 1; ++d) {
        mpz_class power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d),
                      static_cast<unsigned long>(n - d));
        denominator *= power;
    }
    if (numerator % denominator != 0)
        throw std::logic_error("bruhat_chain_sum_closed_form: constant is not integral");
    MPoly out = MPoly::constant(nvars, numerator / denominator);
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) out = out * bruhat_weight(i, j, nvars);
    return out;
}

bool verify_stembridge(int n) {
    if (n < 1) throw std::invalid_argument("verify_stembridge: n must be positive");
    if (n == 1) return true;  // empty product, no chains to weigh
    return bruhat_chain_sum(n) == bruhat_chain_sum_closed_form(n);
}

}  // namespace cbruhat
