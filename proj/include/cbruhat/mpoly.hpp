#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cbruhat {

/// Orders exponent vectors by total degree, then lexicographically, so the
/// map iterates from the smallest term up to the leading term.
struct GradedLexLess {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse polynomial in a1..an over the integers. No zero coefficients are
/// stored; terms are kept in graded-lex order, which fixes rendering,
/// serialization and equality.
class MPoly {
public:
    using TermMap = std::map<std::vector<int>, mpz_class, GradedLexLess>;

    explicit MPoly(int nvars) : nvars_(nvars) {}

    static MPoly zero(int nvars) { return MPoly(nvars); }
    static MPoly constant(int nvars, mpz_class c);
    /// The variable a_i (1-indexed).
    static MPoly variable(int nvars, int i);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the given exponent vector (zero if absent).
    mpz_class coeff(const std::vector<int>& exps) const;
    /// Coefficient of the degree-one term in a_r alone.
    mpz_class linear_coeff(int r) const;

    void add_term(const std::vector<int>& exps, const mpz_class& c);

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly&, const MPoly&) = default;

    /// Sum of all coefficients (the specialization a_i = 1 for all i).
    mpz_class evaluate_all_ones() const;

    /// Rendering like "2*a1^2*a2 + a3", leading term first; "0" when empty.
    std::string to_string(bool compact = false) const;

    friend std::ostream& operator<<(std::ostream& os, const MPoly& p);

private:
    int nvars_;
    TermMap terms_;
};

MPoly pow(const MPoly& a, int e);
MPoly scale(const MPoly& a, const mpz_class& c);

/// a1 + a2 + ... + an.
MPoly all_vars_sum(int nvars);

/// The cyclic index interval {i, i+1, ..., j-1} taken modulo n: a nonempty
/// proper subset of [n] for i != j.
struct CyclicInterval {
    int i;
    int j;
    int n;

    CyclicInterval(int i_, int j_, int n_);

    bool contains(int r) const;
    /// The interval's positions in cyclic order starting at i.
    std::vector<int> positions() const;
};

/// Weight of the cover f*t_{ij} <. f: the sum of a_i through a_{j-1} in
/// cyclic order.
MPoly cover_weight(int i, int j, int n);

/// True iff a_r (with r taken modulo n into [n]) appears in
/// cover_weight(i, j, n).
bool is_r_good(int i, int j, int n, int r);

}  // namespace cbruhat
