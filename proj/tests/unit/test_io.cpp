#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "blockade/io.hpp"
#include "blockade/seqcore.hpp"

using namespace blockade;
using namespace blockade::io;
using hyper::ground_space;
using hyper::hypergraph;
using hyper::space_kind;

TEST_CASE("value tables render to csv") {
    const std::string csv = table_csv(seqcore::n_table(2, 3));
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 10);
    CHECK(csv.rfind("index,word,value\n", 0) == 0);
    CHECK(csv.find("\n0,ALPHA,0\n") != std::string::npos);
    CHECK(csv.find("\n4,,4\n") != std::string::npos); // empty word
    CHECK(csv.find("\n8,OMEGA,8\n") != std::string::npos);
}

TEST_CASE("value tables render to json") {
    const json j = table_json(seqcore::n_table(3, 2));
    CHECK(j["n"] == 3);
    CHECK(j["r"] == 2);
    REQUIRE(j["entries"].size() == 5);
    CHECK(j["entries"][1]["i"] == 1);
    CHECK(j["entries"][1]["word"] == "&");
    CHECK(j["entries"][1]["value"] == "1");
    CHECK(j["entries"][4]["value"].is_string());
    CHECK(j["entries"][4]["value"] == "9");
    CHECK(json::parse(j.dump()) == j);
}

TEST_CASE("hypergraphs round trip through json") {
    hypergraph H({space_kind::partite, 3, 2});
    H.insert({1, 2});
    H.insert({3, 3});
    H.insert({2, 1});
    const json j = hypergraph_json(H);
    CHECK(j["space"]["kind"] == "partite");
    CHECK(j["edges"].size() == 3);
    CHECK(hypergraph_from_json(j) == H);

    hypergraph S({space_kind::subsets, 5, 3});
    S.insert({1, 2, 4});
    S.insert({2, 3, 5});
    CHECK(hypergraph_from_json(json::parse(hypergraph_json(S).dump())) == S);
}

TEST_CASE("hypergraph parsing rejects malformed input") {
    auto base = [] {
        return json{{"space", {{"kind", "partite"}, {"n", 2}, {"r", 2}}},
                    {"edges", json::array()}};
    };
    CHECK_NOTHROW(hypergraph_from_json(base()));

    json bad_kind = base();
    bad_kind["space"]["kind"] = "mixed";
    CHECK_THROWS_AS(hypergraph_from_json(bad_kind), parameter_error);

    json no_edges = base();
    no_edges.erase("edges");
    CHECK_THROWS_AS(hypergraph_from_json(no_edges), parameter_error);

    json edges_scalar = base();
    edges_scalar["edges"] = 7;
    CHECK_THROWS_AS(hypergraph_from_json(edges_scalar), parameter_error);

    json out_of_range = base();
    out_of_range["edges"].push_back(json::array({1, 3}));
    CHECK_THROWS_AS(hypergraph_from_json(out_of_range), parameter_error);

    json negative = base();
    negative["edges"].push_back(json::array({1, -1}));
    CHECK_THROWS_AS(hypergraph_from_json(negative), parameter_error);

    json bad_n = base();
    bad_n["space"]["n"] = "two";
    CHECK_THROWS_AS(hypergraph_from_json(bad_n), parameter_error);

    json huge_r = base();
    huge_r["space"]["r"] = 65;
    CHECK_THROWS_AS(hypergraph_from_json(huge_r), budget_error);

    const json cube = {{"space", {{"kind", "partite"}, {"n", 2}, {"r", 3}}},
                       {"edges", json::array()}};
    CHECK_THROWS_AS(hypergraph_from_json(cube, 4), budget_error);
}

TEST_CASE("optimum reports keep exact values as decimal strings") {
    const json j = opt_json(seqcore::blocker_max_partite(1, 3, 3));
    CHECK(j["value"].is_string());
    CHECK(j["value"] == "19");
    CHECK(j["family_index"] == 1);
    CHECK(j["family_word"] == "&&");
    CHECK(j["blocker_word"] == "||");
}

TEST_CASE("oracle reports carry the witness and search flags") {
    const json j = oracle_json(oracle::brute_blocker_max({space_kind::partite, 2, 2}, 2));
    CHECK(j["value"] == "2");
    CHECK(j["witness"] == json::parse("[[1,1],[1,2]]"));
    CHECK(j["exhaustive"] == true);
    CHECK(j["searched"] == 6);
    CHECK(j["reduced"] == false);
}

TEST_CASE("rainbow reports include families only on a counterexample") {
    const json jg = rainbow_json(oracle::rainbow_counterexample_search(2, 2, 2));
    CHECK(jg["counterexample"] == false);
    CHECK(jg["threshold"] == "3");
    CHECK(!jg.contains("families"));

    const json jb = rainbow_json(oracle::rainbow_pair_search(2, 2, 2, 2));
    CHECK(jb["counterexample"] == true);
    REQUIRE(jb.contains("families"));
    REQUIRE(jb["families"].size() == 2);
    CHECK(jb["families"][0] == json::parse("[[1,1],[1,2]]"));
}

TEST_CASE("cascade forms round trip through json") {
    const setfam::cascade_form c{3, {{2, 3, 4, 5}, {3, 4, 5}}, {1}};
    const json j = cascade_json(c);
    CHECK(j["k"] == 3);
    const auto back = cascade_from_json(json::parse(j.dump()));
    CHECK(back.k == c.k);
    CHECK(back.chain == c.chain);
    CHECK(back.pivots == c.pivots);

    CHECK_THROWS_AS(cascade_from_json(json{{"k", 2}}), parameter_error);
    json bad = j;
    bad["pivots"] = "one";
    CHECK_THROWS_AS(cascade_from_json(bad), parameter_error);
}

TEST_CASE("cascade blocker words serialize with truncation details") {
    const json j =
        cascade_word_json(setfam::cascade_blocker_word(5, {3, {{2, 3, 4, 5}, {3, 4, 5}}, {1}}));
    CHECK(j["word"] == "&");
    CHECK(j["labels"] == json::array({1, 2}));
    CHECK(j["truncated"] == false);
    CHECK(!j.contains("pivot_set"));

    const json jt = cascade_word_json(setfam::cascade_blocker_word(
        6, {4, {{2, 3, 4, 5, 6}, {3, 4, 5, 6}, {4, 5}}, {1, 2}}));
    CHECK(jt["truncated"] == true);
    CHECK(jt["pivot_set"] == json::array({1, 2}));
}
