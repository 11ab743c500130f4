#include "doctest.h"

#include "cbruhat/cb_poset.hpp"
#include "cbruhat/egf.hpp"
#include "oracle.hpp"

using namespace cbruhat;

namespace {

BiSeries xy(int mx, int my) { return BiSeries::monomial(mx, my, 1, 1, 1); }

BiSeries y_times_x_minus_1(int mx, int my) {
    return BiSeries::monomial(mx, my, 1, 1, 1) - BiSeries::monomial(mx, my, 0, 1, 1);
}

}  // namespace

TEST_CASE("exponential of zero is one") {
    BiSeries zero(4, 4);
    CHECK(series_exp(zero) == BiSeries::constant(4, 4, 1));
}

TEST_CASE("exponential of xy has the diagonal factorial coefficients") {
    BiSeries e = series_exp(xy(5, 5));
    mpz_class factorial = 1;
    for (int a = 0; a <= 5; ++a) {
        if (a > 0) factorial *= a;
        for (int b = 0; b <= 5; ++b) {
            if (a == b) {
                CHECK(e.coeff(a, b) == mpq_class(1, factorial));
            } else {
                CHECK(e.coeff(a, b) == 0);
            }
        }
    }
    CHECK_THROWS_AS(series_exp(BiSeries::constant(3, 3, 1)), std::invalid_argument);
}

TEST_CASE("product truncates cleanly") {
    BiSeries one_plus_x = BiSeries::constant(3, 3, 1) + BiSeries::monomial(3, 3, 1, 0, 1);
    BiSeries one_minus_x = BiSeries::constant(3, 3, 1) - BiSeries::monomial(3, 3, 1, 0, 1);
    BiSeries expected = BiSeries::constant(3, 3, 1) - BiSeries::monomial(3, 3, 2, 0, 1);
    CHECK(one_plus_x * one_minus_x == expected);
}

TEST_CASE("division by x-1 per column") {
    // (x-1)^2 / (x-1) = x - 1.
    BiSeries squared(4, 0);
    squared.set_coeff(0, 0, 1);
    squared.set_coeff(1, 0, -2);
    squared.set_coeff(2, 0, 1);
    BiSeries expected(4, 0);
    expected.set_coeff(0, 0, -1);
    expected.set_coeff(1, 0, 1);
    CHECK(divide_by_x_minus_1(squared) == expected);
}

TEST_CASE("the denominator factors as (x-1)(1-g)") {
    const int mx = 7, my = 7;
    BiSeries expd = series_exp(y_times_x_minus_1(mx, my));
    BiSeries g = divide_by_x_minus_1(expd - BiSeries::constant(mx, my, 1));
    BiSeries lhs = BiSeries::monomial(mx, my, 1, 0, 1) - expd;  // x - e^{y(x-1)}
    BiSeries x_minus_1 =
        BiSeries::monomial(mx, my, 1, 0, 1) - BiSeries::constant(mx, my, 1);
    BiSeries rhs = x_minus_1 * (BiSeries::constant(mx, my, 1) - g);
    CHECK(lhs == rhs);
}

TEST_CASE("series division requires a unit") {
    BiSeries a = BiSeries::constant(3, 3, 1);
    BiSeries no_unit = BiSeries::monomial(3, 3, 1, 0, 1);
    CHECK_THROWS_AS(series_div(a, no_unit), std::invalid_argument);
    // 1 / (1 - x) = 1 + x + x^2 + x^3.
    BiSeries denom = BiSeries::constant(3, 0, 1) - BiSeries::monomial(3, 0, 1, 0, 1);
    BiSeries inv = series_div(BiSeries::constant(3, 0, 1), denom);
    for (int aexp = 0; aexp <= 3; ++aexp) CHECK(inv.coeff(aexp, 0) == 1);
}

TEST_CASE("cardinality triangle") {
    auto triangle = cb_cardinalities(6);
    for (int n = 0; n <= 6; ++n) CHECK(triangle[static_cast<std::size_t>(n)][0] == 1);
    CHECK(triangle[3] == std::vector<mpz_class>{1, 7, 7, 1});
    CHECK(triangle[3][2] == 7);
}

TEST_CASE("triangle agrees with direct enumeration") {
    auto triangle = cb_cardinalities(6);
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(triangle[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] ==
                  static_cast<long>(enumerate_cb(k, n).size()));
}

TEST_CASE("row sums equal the decorated permutation counts") {
    auto triangle = cb_cardinalities(8);
    for (int n = 1; n <= 8; ++n) {
        mpz_class row_sum = 0;
        for (const mpz_class& v : triangle[static_cast<std::size_t>(n)]) row_sum += v;
        CHECK(row_sum == oracle::decorated_permutation_count(n));
    }
}

TEST_CASE("complement symmetry of the triangle") {
    auto triangle = cb_cardinalities(8);
    for (int n = 0; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(triangle[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] ==
                  triangle[static_cast<std::size_t>(n)][static_cast<std::size_t>(n - k)]);
}
