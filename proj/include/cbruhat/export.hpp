#pragma once

#include <string>

#include "json.hpp"

#include "cbruhat/affine.hpp"
#include "cbruhat/cb_poset.hpp"
#include "cbruhat/mpoly.hpp"
#include "cbruhat/permutation.hpp"
#include "cbruhat/young.hpp"

namespace cbruhat {

/// JSON array of 1-indexed images, e.g. [2,4,1,3].
nlohmann::json to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

/// {"n": 4, "window": [2,5,4,7]}.
nlohmann::json to_json(const AffinePermutation& f);
AffinePermutation affine_from_json(const nlohmann::json& j);

/// {"perm": [1,2,3], "white": [2,3]}.
nlohmann::json to_json(const DecoratedPermutation& d);

/// List of {"exps": [...], "coef": "..."} with string-encoded integers, in
/// canonical graded-lex order (leading term first).
nlohmann::json to_json(const MPoly& p);

/// JSON array of row lengths, e.g. [2,1,0].
nlohmann::json to_json(const YoungDiagram& y);

/// Full poset export: elements with windows, ranks and decorated forms, plus
/// cover edges with their (i, j) labels.
nlohmann::json to_json(const CBPoset& p);

/// Graphviz rendering: one node per element labeled with its window, one edge
/// per cover labeled with its weight ("a1+a3" style), ranks grouped via
/// same-rank constraints.
std::string to_dot(const CBPoset& p);

}  // namespace cbruhat
