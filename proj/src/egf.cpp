#include "cbruhat/egf.hpp"

#include <stdexcept>

namespace cbruhat {

BiSeries::BiSeries(int max_x, int max_y) : max_x_(max_x), max_y_(max_y) {
    if (max_x < 0 || max_y < 0)
        throw std::invalid_argument("BiSeries: truncation orders must be nonnegative");
    grid_.assign(static_cast<std::size_t>(max_x) + 1,
                 std::vector<mpq_class>(static_cast<std::size_t>(max_y) + 1, mpq_class(0)));
}

BiSeries BiSeries::constant(int max_x, int max_y, const mpq_class& c) {
    BiSeries s(max_x, max_y);
    s.set_coeff(0, 0, c);
    return s;
}

BiSeries BiSeries::monomial(int max_x, int max_y, int a, int b, const mpq_class& c) {
    BiSeries s(max_x, max_y);
    if (a <= max_x && b <= max_y) s.set_coeff(a, b, c);
    return s;
}

namespace {

void check_same_orders(const BiSeries& a, const BiSeries& b, const char* op) {
    if (a.max_x() != b.max_x() || a.max_y() != b.max_y())
        throw std::invalid_argument(std::string(op) + ": truncation order mismatch");
}

}  // namespace

BiSeries& BiSeries::operator+=(const BiSeries& o) {
    check_same_orders(*this, o, "BiSeries::add");
    for (int a = 0; a <= max_x_; ++a)
        for (int b = 0; b <= max_y_; ++b)
            grid_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] += o.coeff(a, b);
    return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
    check_same_orders(*this, o, "BiSeries::sub");
    for (int a = 0; a <= max_x_; ++a)
        for (int b = 0; b <= max_y_; ++b)
            grid_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] -= o.coeff(a, b);
    return *this;
}

BiSeries operator*(const BiSeries& a, const BiSeries& b) {
    check_same_orders(a, b, "BiSeries::mul");
    BiSeries out(a.max_x(), a.max_y());
    for (int ax = 0; ax <= a.max_x(); ++ax) {
        for (int ay = 0; ay <= a.max_y(); ++ay) {
            const mpq_class& ca = a.coeff(ax, ay);
            if (ca == 0) continue;
            for (int bx = 0; ax + bx <= a.max_x(); ++bx) {
                for (int by = 0; ay + by <= a.max_y(); ++by) {
                    const mpq_class& cb = b.coeff(bx, by);
                    if (cb == 0) continue;
                    mpq_class prod = ca * cb;
                    prod += out.coeff(ax + bx, ay + by);
                    out.set_coeff(ax + bx, ay + by, prod);
                }
            }
        }
    }
    return out;
}

BiSeries series_exp(const BiSeries& s) {
    if (s.coeff(0, 0) != 0)
        throw std::invalid_argument("series_exp: constant term must be zero");
    BiSeries result = BiSeries::constant(s.max_x(), s.max_y(), 1);
    BiSeries power = BiSeries::constant(s.max_x(), s.max_y(), 1);
    mpz_class factorial = 1;
    const int order = s.max_x() + s.max_y();
    for (int j = 1; j <= order; ++j) {
        power = power * s;
        factorial *= j;
        BiSeries term = power;
        for (int a = 0; a <= s.max_x(); ++a)
            for (int b = 0; b <= s.max_y(); ++b) {
                mpq_class c = term.coeff(a, b) / mpq_class(factorial);
                term.set_coeff(a, b, c);
            }
        result += term;
    }
    return result;
}

BiSeries series_div(const BiSeries& a, const BiSeries& b) {
    check_same_orders(a, b, "series_div");
    mpq_class unit = b.coeff(0, 0);
    if (unit == 0)
        throw std::invalid_argument("series_div: denominator has no invertible unit part");
    // 1/b = (1/b0) * sum_j (1 - b/b0)^j; the correction term has zero
    // constant coefficient, so powers past max_x + max_y vanish.
    BiSeries correction = BiSeries::constant(a.max_x(), a.max_y(), 1);
    for (int ax = 0; ax <= a.max_x(); ++ax)
        for (int ay = 0; ay <= a.max_y(); ++ay) {
            mpq_class c = -b.coeff(ax, ay) / unit;
            if (ax == 0 && ay == 0) c += 1;
            correction.set_coeff(ax, ay, c);
        }
    BiSeries inverse = BiSeries::constant(a.max_x(), a.max_y(), 1);
    BiSeries power = BiSeries::constant(a.max_x(), a.max_y(), 1);
    const int order = a.max_x() + a.max_y();
    for (int j = 1; j <= order; ++j) {
        power = power * correction;
        inverse += power;
    }
    for (int ax = 0; ax <= a.max_x(); ++ax)
        for (int ay = 0; ay <= a.max_y(); ++ay) {
            mpq_class c = inverse.coeff(ax, ay) / unit;
            inverse.set_coeff(ax, ay, c);
        }
    return a * inverse;
}

BiSeries divide_by_x_minus_1(const BiSeries& s) {
    // c(x) = (x - 1) q(x) per y-column: c_a = q_{a-1} - q_a, so
    // q_a = q_{a-1} - c_a with q_{-1} = 0.
    BiSeries out(s.max_x(), s.max_y());
    for (int b = 0; b <= s.max_y(); ++b) {
        mpq_class prev = 0;
        for (int a = 0; a <= s.max_x(); ++a) {
            mpq_class q = prev - s.coeff(a, b);
            out.set_coeff(a, b, q);
            prev = q;
        }
    }
    return out;
}

std::vector<std::vector<mpz_class>> cb_cardinalities(int n_max) {
    if (n_max < 0) throw std::invalid_argument("cb_cardinalities: n_max must be nonnegative");
    const int mx = n_max;
    const int my = n_max;

    // xy and y(x-1) as polynomial series.
    BiSeries xy = BiSeries::monomial(mx, my, 1, 1, 1);
    BiSeries y_x_minus_1 =
        BiSeries::monomial(mx, my, 1, 1, 1) - BiSeries::monomial(mx, my, 0, 1, 1);

    BiSeries exp_xy = series_exp(xy);
    BiSeries g = divide_by_x_minus_1(series_exp(y_x_minus_1) -
                                     BiSeries::constant(mx, my, 1));
    BiSeries denom = BiSeries::constant(mx, my, 1) - g;
    BiSeries egf = series_div(exp_xy, denom);

    std::vector<std::vector<mpz_class>> triangle;
    mpz_class factorial = 1;
    for (int n = 0; n <= n_max; ++n) {
        if (n > 0) factorial *= n;
        std::vector<mpz_class> row;
        for (int k = 0; k <= n; ++k) {
            mpq_class value = egf.coeff(k, n) * mpq_class(factorial);
            value.canonicalize();
            if (value.get_den() != 1)
                throw std::logic_error("cb_cardinalities: non-integer coefficient extracted");
            mpz_class count = value.get_num();
            if (count < 0)
                throw std::logic_error("cb_cardinalities: negative cardinality extracted");
            row.push_back(count);
        }
        triangle.push_back(std::move(row));
    }
    return triangle;
}

}  // namespace cbruhat
