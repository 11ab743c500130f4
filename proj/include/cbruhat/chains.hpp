#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cbruhat/cb_poset.hpp"
#include "cbruhat/mpoly.hpp"
#include "cbruhat/young.hpp"

namespace cbruhat {

/// Per-element chain statistics of a full CB(k,n) poset:
///  - weight_from_top[f]: the sum over saturated chains from f_top down to f
///    of the product of cover weights (1 for f_top itself);
///  - delta[f][r-1]: the number of r-good saturated chains from f down to a
///    rank-0 element (1 at rank 0).
struct ChainSumTable {
    std::vector<MPoly> weight_from_top;
    std::vector<std::vector<mpz_class>> delta;
};

/// One rank-descending sweep for the weights and one rank-ascending sweep for
/// all n delta columns. Parallel schedules keep per-rank order deterministic.
ChainSumTable compute_chain_table(const CBPoset& p, int parallelism = 1);

/// Sum of the weights of all maximal chains of CB(k,n): the total of
/// weight_from_top over the rank-0 elements.
MPoly weighted_chain_sum(const CBPoset& p, int parallelism = 1);
MPoly weighted_chain_sum(const CBPoset& p, const ChainSumTable& table);

/// Number of r-good saturated chains from the given element down to rank 0.
mpz_class delta(const CBPoset& p, int element, int r);

/// True iff delta[f][r] agrees with delta[f][1] for every element and every r.
bool verify_delta_independence(const CBPoset& p, std::string* counterexample = nullptr);
bool verify_delta_independence(const CBPoset& p, const ChainSumTable& table,
                               std::string* counterexample = nullptr);

/// Checks sum over covers g of f of delta(g) * wt(g <. f) ==
/// delta(f) * (a1 + ... + an), with delta = delta_1. Returns nullopt for
/// rank-0 elements, where the left side is the empty sum and the identity
/// does not apply.
std::optional<bool> verify_induct_identity(const CBPoset& p, int element);
std::optional<bool> verify_induct_identity(const CBPoset& p, const ChainSumTable& table,
                                           int element);

/// delta_n at the top element: the number of n-good maximal chains.
mpz_class n_good_maximal_chain_count(const CBPoset& p);
mpz_class n_good_maximal_chain_count(const CBPoset& p, const ChainSumTable& table);

/// The fiber element u * t_k * w_lambda^{-1} of CB(k,n)_lambda attached to a
/// permutation u <=_k w_lambda. Throws std::invalid_argument otherwise.
AffinePermutation to_fiber_element(const Permutation& u, const std::vector<int>& lambda);

/// Inverse of to_fiber_element: recovers (u, Lambda(f)) from a CB(k,n)
/// element f.
std::pair<Permutation, std::vector<int>> from_fiber_element(const AffinePermutation& f);

/// Checks that u -> to_fiber_element(u, lambda) is a bijection from
/// {u : u <=_k w_lambda} onto the lambda-fiber that reverses cover relations,
/// with from_fiber_element as two-sided inverse.
bool verify_anti_isomorphism(const CBPoset& p, const std::vector<int>& lambda,
                             std::string* counterexample = nullptr);
bool verify_anti_isomorphism(int k, int n, const std::vector<int>& lambda,
                             std::string* counterexample = nullptr);

/// Checks delta_n(f) against the maximal-chain count of the k-Bruhat interval
/// [u_f, w_f]_k for one element.
bool verify_corollary_chains(const CBPoset& p, const ChainSumTable& table, int element);
bool verify_corollary_chains(const CBPoset& p, int element);

/// For every element f: the conjugation identity
/// c * (u_f w_f^{-1}) * c^{-1} == u_{chi(f)} w_{chi(f)}^{-1} with
/// c = [2,3,...,n,1], and equality of the interval chain counts of f and
/// chi(f).
bool verify_bs_consequence(const CBPoset& p, std::string* counterexample = nullptr);

/// Symbolic check of the closed form: the weighted chain sum equals
/// f(k,n) * (a1 + ... + an)^(k(n-k)) with f(k,n) the rectangle SYT count.
bool verify_main_theorem(int k, int n, int parallelism = 1);

/// Sum of maximal-chain weights of the full Bruhat order of S_n, with the
/// weight of pi*s_{ij} <. pi (i < j) being a_i + ... + a_{j-1}. Polynomials
/// use n-1 variables; a_n never occurs in these weights.
MPoly bruhat_chain_sum(int n);

/// The closed form binom(n,2)! / (1^(n-1) 2^(n-2) ... (n-1)^1) *
/// prod_{i<j} (a_i + ... + a_{j-1}).
MPoly bruhat_chain_sum_closed_form(int n);

/// Symbolic equality of the previous two.
bool verify_stembridge(int n);

}  // namespace cbruhat
