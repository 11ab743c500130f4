#include "doctest.h"

#include "cbruhat/chains.hpp"
#include "cbruhat/export.hpp"

using namespace cbruhat;

TEST_CASE("permutation JSON round trip") {
    Permutation p({2, 4, 1, 3});
    nlohmann::json j = to_json(p);
    CHECK(j.dump() == "[2,4,1,3]");
    CHECK(permutation_from_json(j) == p);
}

TEST_CASE("affine permutation JSON round trip") {
    AffinePermutation f(4, {2, 5, 4, 7});
    nlohmann::json j = to_json(f);
    CHECK(j.at("n") == 4);
    CHECK(j.at("window").dump() == "[2,5,4,7]");
    CHECK(affine_from_json(j) == f);
}

TEST_CASE("decorated permutation JSON") {
    nlohmann::json j = to_json(DecoratedPermutation{Permutation::identity(3), {2, 3}});
    CHECK(j.at("perm").dump() == "[1,2,3]");
    CHECK(j.at("white").dump() == "[2,3]");
}

TEST_CASE("polynomial JSON uses string coefficients") {
    MPoly p = scale(pow(all_vars_sum(2), 2), 3);
    nlohmann::json j = to_json(p);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 3);
    CHECK(j[0].at("coef") == "3");
    CHECK(j[0].at("exps").dump() == "[2,0]");
    CHECK(j[1].at("exps").dump() == "[1,1]");
    CHECK(j[1].at("coef") == "6");
}

TEST_CASE("young diagram JSON") {
    CHECK(to_json(YoungDiagram{{2, 1, 0}}).dump() == "[2,1,0]");
}

TEST_CASE("poset JSON schema") {
    CBPoset p = build_cb_poset(2, 3);
    nlohmann::json j = to_json(p);
    CHECK(j.at("k") == 2);
    CHECK(j.at("n") == 3);
    REQUIRE(j.at("elements").size() == 7);
    REQUIRE(j.at("covers").size() == 9);
    CHECK(j.at("elements")[0].at("window").dump() == "[1,5,6]");
    CHECK(j.at("elements")[0].at("rank") == 0);
    for (const auto& edge : j.at("covers")) {
        CHECK(edge.contains("upper"));
        CHECK(edge.contains("lower"));
        CHECK(edge.contains("i"));
        CHECK(edge.contains("j"));
    }
}

TEST_CASE("fiber JSON records lambda") {
    CBPoset fiber = fiber_subposet(build_cb_poset(2, 4), {2, 4});
    nlohmann::json j = to_json(fiber);
    CHECK(j.at("lambda").dump() == "[2,4]");
    CHECK(j.at("elements").size() == 8);
}

TEST_CASE("DOT export of the seven-element diagram") {
    CBPoset p = build_cb_poset(2, 3);
    std::string dot = to_dot(p);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("label=\"[3,4,5]\"") != std::string::npos);
    CHECK(dot.find("label=\"a1+a3\"") != std::string::npos);
    CHECK(dot.find("label=\"a2+a3\"") != std::string::npos);
    CHECK(dot.find("rank=same") != std::string::npos);
    // One line per node and per edge.
    std::size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = dot.find("[label=", pos)) != std::string::npos) {
        ++nodes;
        pos += 1;
    }
    pos = 0;
    while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
        ++edges;
        pos += 1;
    }
    CHECK(nodes == 7 + 9);  // node labels plus edge labels
    CHECK(edges == 9);
}

TEST_CASE("exports are deterministic across parallel builds") {
    CBPoset serial = build_cb_poset(2, 4, 1);
    CBPoset parallel = build_cb_poset(2, 4, 8);
    CHECK(to_json(serial).dump() == to_json(parallel).dump());
    CHECK(to_dot(serial) == to_dot(parallel));
}
