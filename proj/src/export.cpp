#include "cbruhat/export.hpp"

#include <sstream>

namespace cbruhat {

nlohmann::json to_json(const Permutation& p) { return nlohmann::json(p.images()); }

Permutation permutation_from_json(const nlohmann::json& j) {
    return Permutation(j.get<std::vector<int>>());
}

nlohmann::json to_json(const AffinePermutation& f) {
    return nlohmann::json{{"n", f.n()}, {"window", f.window()}};
}

AffinePermutation affine_from_json(const nlohmann::json& j) {
    return AffinePermutation(j.at("n").get<int>(), j.at("window").get<std::vector<int>>());
}

nlohmann::json to_json(const DecoratedPermutation& d) {
    return nlohmann::json{{"perm", d.perm.images()}, {"white", d.white}};
}

nlohmann::json to_json(const MPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    const auto& map = p.terms();
    for (auto it = map.rbegin(); it != map.rend(); ++it)
        terms.push_back({{"exps", it->first}, {"coef", it->second.get_str()}});
    return terms;
}

nlohmann::json to_json(const YoungDiagram& y) { return nlohmann::json(y.rows); }

nlohmann::json to_json(const CBPoset& p) {
    nlohmann::json elements = nlohmann::json::array();
    for (int idx = 0; idx < p.size(); ++idx) {
        const AffinePermutation& f = p.element(idx);
        elements.push_back({{"window", f.window()},
                            {"rank", p.rank(idx)},
                            {"decorated", to_json(to_decorated(f))}});
    }
    nlohmann::json covers = nlohmann::json::array();
    for (const CoverEdge& e : p.covers())
        covers.push_back({{"upper", e.upper}, {"lower", e.lower}, {"i", e.i}, {"j", e.j}});
    nlohmann::json out{{"k", p.k()}, {"n", p.n()}, {"elements", elements}, {"covers", covers}};
    if (p.lambda()) out["lambda"] = *p.lambda();
    return out;
}

namespace {

std::string window_label(const AffinePermutation& f) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < f.window().size(); ++i) {
        if (i) os << ",";
        os << f.window()[i];
    }
    os << "]";
    return os.str();
}

}  // namespace

std::string to_dot(const CBPoset& p) {
    std::ostringstream os;
    os << "digraph cb {\n";
    os << "  rankdir=TB;\n";
    os << "  node [shape=box];\n";
    for (int idx = 0; idx < p.size(); ++idx)
        os << "  e" << idx << " [label=\"" << window_label(p.element(idx)) << "\"];\n";
    for (int r = p.max_rank(); r >= 0; --r) {
        const auto& bucket = p.rank_bucket(r);
        if (bucket.empty()) continue;
        os << "  { rank=same;";
        for (int idx : bucket) os << " e" << idx << ";";
        os << " }\n";
    }
    for (const CoverEdge& e : p.covers()) {
        os << "  e" << e.upper << " -> e" << e.lower << " [label=\""
           << cover_weight(e.i, e.j, p.n()).to_string(/*compact=*/true) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace cbruhat
