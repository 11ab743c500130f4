#include "doctest.h"

#include <random>

#include "cbruhat/mpoly.hpp"

using namespace cbruhat;

namespace {

MPoly var(int i) { return MPoly::variable(3, i); }

MPoly random_poly(std::mt19937& rng, int nvars) {
    std::uniform_int_distribution<int> term_count(0, 4);
    std::uniform_int_distribution<int> exponent(0, 2);
    std::uniform_int_distribution<int> coefficient(-5, 5);
    MPoly p(nvars);
    int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = exponent(rng);
        p.add_term(e, coefficient(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("square of the variable sum") {
    MPoly square = pow(all_vars_sum(3), 2);
    CHECK(square.terms().size() == 6);
    CHECK(square.coeff({2, 0, 0}) == 1);
    CHECK(square.coeff({0, 2, 0}) == 1);
    CHECK(square.coeff({1, 1, 0}) == 2);
    CHECK(square.coeff({0, 1, 1}) == 2);
    CHECK(pow(all_vars_sum(3), 0) == MPoly::constant(3, 1));
}

TEST_CASE("the six-chain expansion collapses to the square") {
    MPoly total = var(1) * var(2) + var(1) * (var(1) + var(3)) + var(2) * (var(1) + var(2)) +
                  var(2) * var(3) + var(3) * var(1) + var(3) * (var(2) + var(3));
    CHECK(total == pow(all_vars_sum(3), 2));
}

TEST_CASE("nvars mismatch is rejected") {
    CHECK_THROWS_AS(MPoly::variable(3, 1) + MPoly::variable(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(MPoly::variable(3, 1) * MPoly::variable(4, 1), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        MPoly a = random_poly(rng, 3);
        MPoly b = random_poly(rng, 3);
        MPoly c = random_poly(rng, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == MPoly::zero(3));
        CHECK(a * MPoly::constant(3, 1) == a);
        CHECK(a * MPoly::zero(3) == MPoly::zero(3));
        CHECK(scale(a, 3) == a + a + a);
    }
}

TEST_CASE("cover weights on the three-element cycle") {
    CHECK(cover_weight(1, 2, 3) == var(1));
    CHECK(cover_weight(3, 2, 3) == var(3) + var(1));
    CHECK(cover_weight(3, 1, 3) == var(3));
}

TEST_CASE("opposite cyclic intervals partition the variables") {
    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                CHECK(cover_weight(i, j, n) + cover_weight(j, i, n) == all_vars_sum(n));
            }
}

TEST_CASE("r-goodness") {
    CHECK(is_r_good(1, 2, 3, 1));
    CHECK_FALSE(is_r_good(1, 2, 3, 2));
    CHECK(is_r_good(3, 2, 3, 1));
    for (int n = 2; n <= 5; ++n)
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                if (i > j) CHECK(is_r_good(i, j, n, n));
                for (int r = 1; r <= n; ++r) {
                    CHECK(is_r_good(i, j, n, r) ==
                          (cover_weight(i, j, n).linear_coeff(r) == 1));
                    // Arbitrary r reduces modulo n.
                    CHECK(is_r_good(i, j, n, r) == is_r_good(i, j, n, r + n));
                    CHECK(is_r_good(i, j, n, r) == is_r_good(i, j, n, r - 2 * n));
                }
            }
    CHECK_THROWS_AS(cover_weight(2, 2, 4), std::invalid_argument);
}

TEST_CASE("all-ones specialization") {
    CHECK(pow(all_vars_sum(3), 2).evaluate_all_ones() == 9);
    CHECK(pow(all_vars_sum(4), 3).evaluate_all_ones() == 64);
    CHECK(MPoly::zero(3).evaluate_all_ones() == 0);
}

TEST_CASE("rendering") {
    MPoly p = scale(pow(var(1), 2) * var(2), 2) + var(3);
    CHECK(p.to_string() == "2*a1^2*a2 + a3");
    CHECK(p.to_string(true) == "2*a1^2*a2+a3");
    CHECK((var(1) + var(3)).to_string(true) == "a1+a3");
    CHECK(MPoly::zero(3).to_string() == "0");
    CHECK((var(2) - var(1) - var(1)).to_string() == "-2*a1 + a2");
}
