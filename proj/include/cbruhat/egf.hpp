#pragma once

#include <vector>

#include <gmpxx.h>

namespace cbruhat {

/// Bivariate formal power series over exact rationals, truncated to x-degrees
/// 0..max_x and y-degrees 0..max_y. All operations stay inside the truncated
/// quotient ring, so coefficients within the grid are always exact.
class BiSeries {
public:
    BiSeries(int max_x, int max_y);

    static BiSeries constant(int max_x, int max_y, const mpq_class& c);
    /// The monomial x^a y^b (zero when outside the truncation grid).
    static BiSeries monomial(int max_x, int max_y, int a, int b, const mpq_class& c);

    int max_x() const { return max_x_; }
    int max_y() const { return max_y_; }

    const mpq_class& coeff(int a, int b) const {
        return grid_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
    }
    void set_coeff(int a, int b, const mpq_class& c) {
        grid_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c;
    }

    BiSeries& operator+=(const BiSeries& o);
    BiSeries& operator-=(const BiSeries& o);
    friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
    friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
    friend BiSeries operator*(const BiSeries& a, const BiSeries& b);

    friend bool operator==(const BiSeries&, const BiSeries&) = default;

private:
    int max_x_;
    int max_y_;
    std::vector<std::vector<mpq_class>> grid_;
};

/// exp of a series with zero constant term, as sum of s^j / j!.
BiSeries series_exp(const BiSeries& s);

/// a / b for b with invertible (nonzero) constant term. Throws
/// std::invalid_argument when the unit part vanishes.
BiSeries series_div(const BiSeries& a, const BiSeries& b);

/// Exact division of every y-coefficient polynomial by (x - 1), computed
/// bottom-up; the series analogue of factoring (x - 1) out of
/// e^{y(x-1)} - 1.
BiSeries divide_by_x_minus_1(const BiSeries& s);

/// Cardinalities |CB(k,n)| for 0 <= k <= n <= n_max, extracted from the
/// exponential generating function e^{xy}(x-1)/(x - e^{y(x-1)}): the
/// denominator factors as (x-1)(1-g) with g = (e^{y(x-1)} - 1)/(x - 1), so
/// the target is e^{xy}/(1-g). Row n holds the n+1 values for k = 0..n; every
/// extracted coefficient times n! must be a nonnegative integer (hard failure
/// otherwise).
std::vector<std::vector<mpz_class>> cb_cardinalities(int n_max);

}  // namespace cbruhat
