#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cbruhat/chains.hpp"
#include "cbruhat/egf.hpp"
#include "cbruhat/export.hpp"
#include "cbruhat/young.hpp"

namespace {

using cbruhat::AffinePermutation;
using cbruhat::CBPoset;
using cbruhat::ChainSumTable;
using Report = nlohmann::ordered_json;

struct OutputTarget {
    std::string path;  // empty = stdout

    void write(const std::string& content) const {
        if (path.empty()) {
            std::cout << content;
            return;
        }
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot open output file: " + path);
        out << content;
    }
};

int rank_of(const AffinePermutation& f, int k) {
    return k * (f.n() - k) - cbruhat::length(f);
}

std::string format_window(const std::vector<int>& w) {
    std::string s = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    s += "]";
    return s;
}

int run_enumerate(int k, int n, const std::string& format, const OutputTarget& out) {
    std::vector<AffinePermutation> elements = cbruhat::enumerate_cb(k, n);
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const AffinePermutation& f : elements) {
            arr.push_back({{"window", f.window()},
                           {"rank", rank_of(f, k)},
                           {"decorated", cbruhat::to_json(cbruhat::to_decorated(f))}});
        }
        out.write(arr.dump(2) + "\n");
    } else {
        std::string text;
        for (const AffinePermutation& f : elements) {
            auto d = cbruhat::to_decorated(f);
            text += format_window(f.window());
            text += "  rank=" + std::to_string(rank_of(f, k));
            text += "  perm=" + format_window(d.perm.images());
            text += "  white=" + format_window(d.white);
            text += "\n";
        }
        out.write(text);
    }
    return 0;
}

int run_hasse(int k, int n, const std::optional<std::vector<int>>& lambda,
              const std::string& format, int parallelism, const OutputTarget& out) {
    CBPoset poset = cbruhat::build_cb_poset(k, n, parallelism);
    if (lambda) poset = cbruhat::fiber_subposet(poset, *lambda);
    if (format == "json") {
        out.write(cbruhat::to_json(poset).dump(2) + "\n");
    } else {
        out.write(cbruhat::to_dot(poset));
    }
    return 0;
}

int run_cardinalities(int n_max, const std::string& format, const OutputTarget& out) {
    auto triangle = cbruhat::cb_cardinalities(n_max);
    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (int n = 0; n <= n_max; ++n) {
            nlohmann::ordered_json row;
            row["n"] = n;
            nlohmann::ordered_json counts = nlohmann::ordered_json::array();
            for (const mpz_class& v : triangle[static_cast<std::size_t>(n)])
                counts.push_back(v.get_str());
            row["counts"] = counts;
            rows.push_back(row);
        }
        out.write(rows.dump(2) + "\n");
        return 0;
    }
    std::size_t width = 1;
    for (const auto& row : triangle)
        for (const mpz_class& v : row) width = std::max(width, v.get_str().size());
    std::string text;
    for (int n = 0; n <= n_max; ++n) {
        text += "n=" + std::to_string(n) + ":";
        for (const mpz_class& v : triangle[static_cast<std::size_t>(n)]) {
            std::string s = v.get_str();
            text += " " + std::string(width - s.size(), ' ') + s;
        }
        text += "\n";
    }
    out.write(text);
    return 0;
}

class VerifyRunner {
public:
    VerifyRunner(bool timing, int parallelism) : timing_(timing), parallelism_(parallelism) {}

    bool all_passed() const { return failures_ == 0; }
    int checks_run() const { return checks_; }
    int parallelism() const { return parallelism_; }

    void run(const std::string& name, Report params, const std::function<bool(Report&)>& body) {
        Report report;
        report["check"] = name;
        for (auto& [key, value] : params.items()) report[key] = value;
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = body(report);
        } catch (const std::exception& e) {
            report["error"] = e.what();
        }
        auto stop = std::chrono::steady_clock::now();
        report["pass"] = pass;
        if (timing_) {
            report["runtime_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        }
        std::cout << report.dump() << "\n";
        ++checks_;
        if (!pass) ++failures_;
    }

    const CBPoset& poset(int k, int n) {
        auto key = std::make_pair(k, n);
        auto it = posets_.find(key);
        if (it == posets_.end())
            it = posets_.emplace(key, cbruhat::build_cb_poset(k, n, parallelism_)).first;
        return it->second;
    }

    const ChainSumTable& table(int k, int n) {
        auto key = std::make_pair(k, n);
        auto it = tables_.find(key);
        if (it == tables_.end())
            it = tables_.emplace(key, cbruhat::compute_chain_table(poset(k, n), parallelism_)).first;
        return it->second;
    }

private:
    bool timing_;
    int parallelism_;
    int checks_ = 0;
    int failures_ = 0;
    std::map<std::pair<int, int>, CBPoset> posets_;
    std::map<std::pair<int, int>, ChainSumTable> tables_;
};

void check_main_theorem(VerifyRunner& r, int k, int n) {
    r.run("main_theorem", {{"k", k}, {"n", n}}, [&](Report& report) {
        const CBPoset& p = r.poset(k, n);
        cbruhat::MPoly lhs = cbruhat::weighted_chain_sum(p, r.table(k, n));
        cbruhat::MPoly rhs = cbruhat::scale(
            cbruhat::pow(cbruhat::all_vars_sum(n), k * (n - k)),
            cbruhat::syt_count_hook(k, n - k));
        report["lhs_terms"] = lhs.terms().size();
        return lhs == rhs;
    });
}

void check_delta_independence(VerifyRunner& r, int k, int n) {
    r.run("delta_independence", {{"k", k}, {"n", n}}, [&](Report& report) {
        std::string cex;
        bool ok = cbruhat::verify_delta_independence(r.poset(k, n), r.table(k, n), &cex);
        if (!ok) report["counterexample"] = cex;
        return ok;
    });
}

void check_induct_identity(VerifyRunner& r, int k, int n) {
    r.run("induct_identity", {{"k", k}, {"n", n}}, [&](Report& report) {
        const CBPoset& p = r.poset(k, n);
        const ChainSumTable& t = r.table(k, n);
        int applicable = 0;
        for (int idx = 0; idx < p.size(); ++idx) {
            std::optional<bool> result = cbruhat::verify_induct_identity(p, t, idx);
            if (!result) continue;
            ++applicable;
            if (!*result) {
                report["counterexample"] = format_window(p.element(idx).window());
                return false;
            }
        }
        report["elements_checked"] = applicable;
        return true;
    });
}

void check_lemma_count(VerifyRunner& r, int k, int n) {
    r.run("lemma_count", {{"k", k}, {"n", n}}, [&](Report& report) {
        mpz_class from_poset = cbruhat::n_good_maximal_chain_count(r.poset(k, n), r.table(k, n));
        mpz_class from_hook = cbruhat::syt_count_hook(k, n - k);
        report["n_good_chains"] = from_poset.get_str();
        return from_poset == from_hook;
    });
}

void check_corollary_chains(VerifyRunner& r, int k, int n) {
    r.run("corollary_chains", {{"k", k}, {"n", n}}, [&](Report& report) {
        const CBPoset& p = r.poset(k, n);
        const ChainSumTable& t = r.table(k, n);
        for (int idx = 0; idx < p.size(); ++idx) {
            if (!cbruhat::verify_corollary_chains(p, t, idx)) {
                report["counterexample"] = format_window(p.element(idx).window());
                return false;
            }
        }
        report["elements_checked"] = p.size();
        return true;
    });
}

void check_bs_consequence(VerifyRunner& r, int k, int n) {
    r.run("bs_consequence", {{"k", k}, {"n", n}}, [&](Report& report) {
        std::string cex;
        bool ok = cbruhat::verify_bs_consequence(r.poset(k, n), &cex);
        if (!ok) report["counterexample"] = cex;
        return ok;
    });
}

std::vector<std::vector<int>> k_subsets(int k, int n) {
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
    return subsets;
}

void check_anti_isomorphism(VerifyRunner& r, int k, int n,
                            const std::optional<std::vector<int>>& lambda) {
    std::vector<std::vector<int>> lambdas =
        lambda ? std::vector<std::vector<int>>{*lambda} : k_subsets(k, n);
    for (const auto& lam : lambdas) {
        r.run("anti_isomorphism", {{"k", k}, {"n", n}, {"lambda", lam}}, [&](Report& report) {
            std::string cex;
            bool ok = cbruhat::verify_anti_isomorphism(r.poset(k, n), lam, &cex);
            if (!ok) report["counterexample"] = cex;
            return ok;
        });
    }
}

void check_stembridge(VerifyRunner& r, int n) {
    r.run("stembridge", {{"n", n}}, [&](Report&) { return cbruhat::verify_stembridge(n); });
}

void check_egf(VerifyRunner& r, int n_max) {
    r.run("egf_cardinalities", {{"n_max", n_max}}, [&](Report& report) {
        auto triangle = cbruhat::cb_cardinalities(n_max);
        for (int n = 1; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
                mpz_class direct = static_cast<long>(cbruhat::enumerate_cb(k, n).size());
                if (triangle[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] != direct) {
                    report["counterexample"] =
                        "(k,n)=(" + std::to_string(k) + "," + std::to_string(n) + ")";
                    return false;
                }
            }
        }
        report["rows_checked"] = n_max;
        return true;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"circular Bruhat order toolkit"};
    app.require_subcommand(1);

    int k = 0;
    int n = 0;
    int max_n = 8;
    int stembridge_cap = 4;
    int parallelism = 1;
    bool timing = false;
    std::string format;
    std::string output_path;
    std::vector<int> lambda_values;

    auto* enumerate = app.add_subcommand("enumerate", "list the elements of CB(k,n)");
    enumerate->add_option("-k,--k", k, "average shift")->required();
    enumerate->add_option("-n,--n", n, "period")->required();
    enumerate->add_option("--format", format, "text or json")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json"}));
    enumerate->add_option("-o,--output", output_path, "output file (default stdout)");
    enumerate->add_option("--max-n", max_n, "enumeration cap on n")->default_val(8);

    auto* hasse = app.add_subcommand("hasse", "export the Hasse diagram of CB(k,n)");
    hasse->add_option("-k,--k", k, "average shift")->required();
    hasse->add_option("-n,--n", n, "period")->required();
    hasse->add_option("--lambda", lambda_values, "restrict to the fiber with this anti-excedance set")
        ->delimiter(',');
    hasse->add_option("--format", format, "dot or json")
        ->default_val("dot")
        ->check(CLI::IsMember({"dot", "json"}));
    hasse->add_option("-o,--output", output_path, "output file (default stdout)");
    hasse->add_option("--max-n", max_n, "enumeration cap on n")->default_val(8);
    hasse->add_option("--parallel", parallelism, "worker threads")->default_val(1);

    auto* cardinalities =
        app.add_subcommand("cardinalities", "print the |CB(k,n)| triangle from the EGF");
    cardinalities->add_option("--max-n", max_n, "largest n in the triangle")->default_val(8);
    cardinalities->add_option("--format", format, "text or json")
        ->default_val("text")
        ->check(CLI::IsMember({"text", "json"}));
    cardinalities->add_option("-o,--output", output_path, "output file (default stdout)");

    auto* verify = app.add_subcommand("verify", "machine-check the library's identities");
    std::string check_name;
    bool run_all = false;
    verify->add_option("check", check_name,
                       "one of: main-theorem, independence, induct, lemma-count, "
                       "anti-isomorphism, corollary-chains, bs-consequence, stembridge, egf");
    verify->add_flag("--all", run_all, "run the full battery up to --max-n");
    verify->add_option("-k,--k", k, "average shift");
    verify->add_option("-n,--n", n, "period (or Stembridge degree)");
    verify->add_option("--lambda", lambda_values, "anti-excedance set for anti-isomorphism")
        ->delimiter(',');
    verify->add_option("--max-n", max_n, "battery cap on n")->default_val(5);
    verify->add_option("--stembridge-cap", stembridge_cap,
                       "largest n for the S_n chain-sum check")
        ->default_val(4);
    verify->add_option("--parallel", parallelism, "worker threads")->default_val(1);
    verify->add_flag("--timing", timing, "include runtime_ms in reports");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(enumerate) || app.got_subcommand(hasse)) {
            if (n < 1 || k < 0 || k > n) {
                std::cerr << "error: need 1 <= n and 0 <= k <= n\n";
                return 1;
            }
            if (n > max_n) {
                std::cerr << "error: n = " << n << " exceeds the cap (--max-n " << max_n << ")\n";
                return 1;
            }
        }
        OutputTarget out{output_path};
        if (app.got_subcommand(enumerate)) return run_enumerate(k, n, format, out);
        if (app.got_subcommand(hasse)) {
            std::optional<std::vector<int>> lambda;
            if (!lambda_values.empty()) lambda = lambda_values;
            return run_hasse(k, n, lambda, format, parallelism, out);
        }
        if (app.got_subcommand(cardinalities)) {
            if (max_n < 0 || max_n > 12) {
                std::cerr << "error: --max-n must be between 0 and 12\n";
                return 1;
            }
            return run_cardinalities(max_n, format, out);
        }

        // verify
        auto battery_start = std::chrono::steady_clock::now();
        VerifyRunner runner(timing, parallelism);
        std::optional<std::vector<int>> lambda;
        if (!lambda_values.empty()) lambda = lambda_values;

        if (run_all) {
            for (int nn = 1; nn <= max_n; ++nn) {
                for (int kk = 0; kk <= nn; ++kk) {
                    check_main_theorem(runner, kk, nn);
                    check_delta_independence(runner, kk, nn);
                    check_induct_identity(runner, kk, nn);
                    check_lemma_count(runner, kk, nn);
                    check_corollary_chains(runner, kk, nn);
                    check_bs_consequence(runner, kk, nn);
                    check_anti_isomorphism(runner, kk, nn, std::nullopt);
                }
            }
            for (int nn = 2; nn <= std::min(max_n, stembridge_cap); ++nn)
                check_stembridge(runner, nn);
            check_egf(runner, std::min(max_n, 6));
        } else if (!check_name.empty()) {
            auto need_kn = [&]() {
                if (n < 1 || k < 0 || k > n)
                    throw std::runtime_error("need 1 <= n and 0 <= k <= n");
                if (n > max_n)
                    throw std::runtime_error("n exceeds the cap (--max-n)");
            };
            if (check_name == "main-theorem") {
                need_kn();
                check_main_theorem(runner, k, n);
            } else if (check_name == "independence") {
                need_kn();
                check_delta_independence(runner, k, n);
            } else if (check_name == "induct") {
                need_kn();
                check_induct_identity(runner, k, n);
            } else if (check_name == "lemma-count") {
                need_kn();
                check_lemma_count(runner, k, n);
            } else if (check_name == "anti-isomorphism") {
                need_kn();
                check_anti_isomorphism(runner, k, n, lambda);
            } else if (check_name == "corollary-chains") {
                need_kn();
                check_corollary_chains(runner, k, n);
            } else if (check_name == "bs-consequence") {
                need_kn();
                check_bs_consequence(runner, k, n);
            } else if (check_name == "stembridge") {
                if (n < 1) throw std::runtime_error("need n >= 1");
                if (n > stembridge_cap)
                    throw std::runtime_error("n exceeds the cap (--stembridge-cap)");
                check_stembridge(runner, n);
            } else if (check_name == "egf") {
                check_egf(runner, std::min(max_n, 8));
            } else {
                std::cerr << "error: unknown check '" << check_name << "'\n";
                return 1;
            }
        } else {
            std::cerr << "error: name a check or pass --all\n";
            return 1;
        }

        auto battery_stop = std::chrono::steady_clock::now();
        std::cerr << (runner.all_passed() ? "all " : "FAILURES among ") << runner.checks_run()
                  << " checks" << (runner.all_passed() ? " passed" : "") << " in "
                  << std::chrono::duration_cast<std::chrono::milliseconds>(battery_stop -
                                                                           battery_start)
                         .count()
                  << " ms\n";
        return runner.all_passed() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
