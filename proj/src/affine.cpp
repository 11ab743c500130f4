#include "cbruhat/affine.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cbruhat {

namespace {

// Floor division and the matching nonnegative remainder.
int floor_div(int a, int b) {
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int pos_mod(int a, int b) { return a - b * floor_div(a, b); }

}  // namespace

AffinePermutation::AffinePermutation(int n, std::vector<int> window)
    : n_(n), window_(std::move(window)) {
    if (n_ < 1) throw std::invalid_argument("AffinePermutation: n must be positive");
    if (static_cast<int>(window_.size()) != n_)
        throw std::invalid_argument("AffinePermutation: window size != n");
    std::vector<bool> seen(static_cast<std::size_t>(n_), false);
    for (int v : window_) {
        int r = pos_mod(v, n_);
        if (seen[static_cast<std::size_t>(r)])
            throw std::invalid_argument("AffinePermutation: window values collide modulo n");
        seen[static_cast<std::size_t>(r)] = true;
    }
}

AffinePermutation AffinePermutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return AffinePermutation(n, std::move(w));
}

int AffinePermutation::operator()(int i) const {
    int idx = pos_mod(i - 1, n_);
    return window_[static_cast<std::size_t>(idx)] + n_ * floor_div(i - 1, n_);
}

int av(const AffinePermutation& f) {
    int sum = 0;
    for (int i = 1; i <= f.n(); ++i) sum += f(i) - i;
    if (sum % f.n() != 0)
        throw std::invalid_argument("av: shift sum not divisible by n");
    return sum / f.n();
}

int length(const AffinePermutation& f) {
    int count = 0;
    for (int i = 1; i <= f.n(); ++i) {
        const int fi = f(i);
        for (int j = i + 1; j < fi; ++j)
            if (f(j) < fi) ++count;
    }
    return count;
}

AffinePermutation compose(const AffinePermutation& f, const AffinePermutation& g) {
    if (f.n() != g.n()) throw std::invalid_argument("compose: period mismatch");
    std::vector<int> w(static_cast<std::size_t>(f.n()));
    for (int i = 1; i <= f.n(); ++i) w[static_cast<std::size_t>(i - 1)] = f(g(i));
    return AffinePermutation(f.n(), std::move(w));
}

AffinePermutation operator*(const AffinePermutation& f, const AffinePermutation& g) {
    return compose(f, g);
}

AffinePermutation reflection_t(int i, int j, int n) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("reflection_t: index out of [n]");
    if (i == j) throw std::invalid_argument("reflection_t: i must differ from j");
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    if (i < j) {
        w[static_cast<std::size_t>(i - 1)] = j;
        w[static_cast<std::size_t>(j - 1)] = i;
    } else {
        w[static_cast<std::size_t>(j - 1)] = i - n;
        w[static_cast<std::size_t>(i - 1)] = j + n;
    }
    return AffinePermutation(n, std::move(w));
}

AffinePermutation translation_element(int k, int n) {
    if (k < 0 || k > n) throw std::invalid_argument("translation_element: k out of range");
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        w[static_cast<std::size_t>(i - 1)] = (i <= k) ? i + n : i;
    return AffinePermutation(n, std::move(w));
}

bool is_bounded(const AffinePermutation& f) {
    for (int i = 1; i <= f.n(); ++i) {
        int v = f(i);
        if (v < i || v > i + f.n()) return false;
    }
    return true;
}

std::vector<int> anti_excedance_positions(const AffinePermutation& f) {
    std::vector<int> out;
    for (int i = 1; i <= f.n(); ++i)
        if (f(i) > f.n()) out.push_back(i);
    return out;
}

AffinePermutation cyclic_shift(const AffinePermutation& f) {
    std::vector<int> w(static_cast<std::size_t>(f.n()));
    for (int i = 0; i < f.n(); ++i) w[static_cast<std::size_t>(i)] = f(i) + 1;
    return AffinePermutation(f.n(), std::move(w));
}

DecoratedPermutation to_decorated(const AffinePermutation& f) {
    const int n = f.n();
    std::vector<int> images(static_cast<std::size_t>(n));
    std::vector<int> white;
    for (int i = 1; i <= n; ++i) {
        int v = pos_mod(f(i) - 1, n) + 1;
        images[static_cast<std::size_t>(i - 1)] = v;
        if (v == i && f(i) == i + n) white.push_back(i);
    }
    return DecoratedPermutation{Permutation(std::move(images)), std::move(white)};
}

AffinePermutation from_decorated(const DecoratedPermutation& d) {
    const int n = d.perm.n();
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int v = d.perm(i);
        if (v > i) {
            w[static_cast<std::size_t>(i - 1)] = v;
        } else if (v < i) {
            w[static_cast<std::size_t>(i - 1)] = v + n;
        } else {
            bool is_white = std::find(d.white.begin(), d.white.end(), i) != d.white.end();
            w[static_cast<std::size_t>(i - 1)] = is_white ? i + n : i;
        }
    }
    return AffinePermutation(n, std::move(w));
}

std::ostream& operator<<(std::ostream& os, const AffinePermutation& f) {
    os << "[";
    for (std::size_t i = 0; i < f.window().size(); ++i) {
        if (i) os << ",";
        os << f.window()[i];
    }
    return os << "]";
}

AffinePermutation embed(const Permutation& u) {
    return AffinePermutation(u.n(), u.images());
}

}  // namespace cbruhat
