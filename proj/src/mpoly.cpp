#include "cbruhat/mpoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cbruhat {

bool GradedLexLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
}

namespace {

void check_same_nvars(const MPoly& a, const MPoly& b, const char* op) {
    if (a.nvars() != b.nvars())
        throw std::invalid_argument(std::string(op) + ": nvars mismatch");
}

}  // namespace

MPoly MPoly::constant(int nvars, mpz_class c) {
    MPoly p(nvars);
    p.add_term(std::vector<int>(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

MPoly MPoly::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::invalid_argument("MPoly::variable: index out of range");
    MPoly p(nvars);
    std::vector<int> e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    p.add_term(e, 1);
    return p;
}

mpz_class MPoly::coeff(const std::vector<int>& exps) const {
    auto it = terms_.find(exps);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class MPoly::linear_coeff(int r) const {
    std::vector<int> e(static_cast<std::size_t>(nvars_), 0);
    e[static_cast<std::size_t>(r - 1)] = 1;
    return coeff(e);
}

void MPoly::add_term(const std::vector<int>& exps, const mpz_class& c) {
    if (static_cast<int>(exps.size()) != nvars_)
        throw std::invalid_argument("MPoly::add_term: exponent vector size mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    check_same_nvars(*this, o, "MPoly::add");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    check_same_nvars(*this, o, "MPoly::sub");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    check_same_nvars(a, b, "MPoly::mul");
    MPoly out(a.nvars());
    std::vector<int> e(static_cast<std::size_t>(a.nvars()));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

mpz_class MPoly::evaluate_all_ones() const {
    mpz_class total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
}

std::string MPoly::to_string(bool compact) const {
    if (terms_.empty()) return "0";
    const char* plus = compact ? "+" : " + ";
    const char* minus = compact ? "-" : " - ";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? minus : plus);
        }
        bool has_vars = false;
        std::ostringstream vars;
        for (int v = 0; v < nvars_; ++v) {
            int exp = e[static_cast<std::size_t>(v)];
            if (exp == 0) continue;
            if (has_vars) vars << "*";
            vars << "a" << (v + 1);
            if (exp > 1) vars << "^" << exp;
            has_vars = true;
        }
        if (!has_vars) {
            os << mag.get_str();
        } else if (mag == 1) {
            os << vars.str();
        } else {
            os << mag.get_str() << "*" << vars.str();
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.to_string(); }

MPoly pow(const MPoly& a, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    MPoly out = MPoly::constant(a.nvars(), 1);
    for (int i = 0; i < e; ++i) out = out * a;
    return out;
}

MPoly scale(const MPoly& a, const mpz_class& c) {
    MPoly out(a.nvars());
    if (c == 0) return out;
    for (const auto& [e, coef] : a.terms()) out.add_term(e, coef * c);
    return out;
}

MPoly all_vars_sum(int nvars) {
    MPoly out(nvars);
    for (int i = 1; i <= nvars; ++i) out += MPoly::variable(nvars, i);
    return out;
}

CyclicInterval::CyclicInterval(int i_, int j_, int n_) : i(i_), j(j_), n(n_) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("CyclicInterval: index out of [n]");
    if (i == j) throw std::invalid_argument("CyclicInterval: i must differ from j");
}

bool CyclicInterval::contains(int r) const {
    int rr = ((r - 1) % n + n) % n + 1;
    if (i < j) return i <= rr && rr < j;
    return rr >= i || rr < j;
}

std::vector<int> CyclicInterval::positions() const {
    std::vector<int> out;
    for (int r = i; r != j; r = r % n + 1) out.push_back(r);
    return out;
}

MPoly cover_weight(int i, int j, int n) {
    CyclicInterval interval(i, j, n);
    MPoly out(n);
    for (int r : interval.positions()) out += MPoly::variable(n, r);
    return out;
}

bool is_r_good(int i, int j, int n, int r) {
    return CyclicInterval(i, j, n).contains(r);
}

}  // namespace cbruhat
