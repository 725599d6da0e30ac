#include <catch2/catch_amalgamated.hpp>

#include "blockade/hyper.hpp"
#include "blockade/seqcore.hpp"

using namespace blockade;
using namespace blockade::hyper;

namespace {

hypergraph from_edges(const ground_space& sp, const std::vector<edge>& es) {
    hypergraph H(sp);
    for (const auto& e : es) H.insert(e);
    return H;
}

} // namespace

TEST_CASE("rank and unrank invert each other") {
    for (const auto& sp : {ground_space{space_kind::partite, 3, 3},
                           ground_space{space_kind::partite, 4, 2},
                           ground_space{space_kind::subsets, 6, 3},
                           ground_space{space_kind::subsets, 7, 1},
                           ground_space{space_kind::subsets, 5, 5}}) {
        const u64 usize = to_u64(sp.universe_size(), "universe");
        for (u64 i = 0; i < usize; ++i) {
            const edge e = sp.unrank(i);
            CHECK(sp.valid_edge(e));
            CHECK(sp.rank(e) == i);
        }
        CHECK_THROWS_AS(sp.unrank(usize), parameter_error);
    }
}

TEST_CASE("subset ranks are colex ordered") {
    const ground_space sp{space_kind::subsets, 5, 2};
    CHECK(sp.unrank(0) == edge{1, 2});
    CHECK(sp.unrank(1) == edge{1, 3});
    CHECK(sp.unrank(2) == edge{2, 3});
    CHECK(sp.unrank(3) == edge{1, 4});
    CHECK(sp.unrank(9) == edge{4, 5});
}

TEST_CASE("edge validity") {
    const ground_space p{space_kind::partite, 3, 2};
    CHECK(p.valid_edge({3, 1}));
    CHECK(!p.valid_edge({0, 1}));
    CHECK(!p.valid_edge({1, 4}));
    CHECK(!p.valid_edge({1}));
    const ground_space s{space_kind::subsets, 4, 2};
    CHECK(s.valid_edge({1, 4}));
    CHECK(!s.valid_edge({4, 1}));
    CHECK(!s.valid_edge({2, 2}));
}

TEST_CASE("meets") {
    const ground_space p{space_kind::partite, 3, 2};
    CHECK(p.meets({1, 2}, {1, 3}));
    CHECK(!p.meets({1, 2}, {2, 1}));
    const ground_space s{space_kind::subsets, 6, 3};
    CHECK(s.meets({1, 2, 3}, {3, 4, 5}));
    CHECK(!s.meets({1, 2, 3}, {4, 5, 6}));
}

TEST_CASE("universe budget errors name the override") {
    CHECK_THROWS_AS(hypergraph({space_kind::partite, 2, 4}, 10), budget_error);
    try {
        hypergraph H({space_kind::partite, 2, 4}, 10);
    } catch (const budget_error& e) {
        CHECK(std::string(e.what()).find("BLOCKADE_BUDGET_BITS") != std::string::npos);
    }
    const u64 saved = universe_cap();
    universe_cap() = 8;
    CHECK_THROWS_AS(hypergraph({space_kind::partite, 3, 2}), budget_error);
    universe_cap() = saved;
    CHECK_NOTHROW(hypergraph({space_kind::partite, 3, 2}));
}

TEST_CASE("blocker of a singleton and of the empty family") {
    const ground_space sp{space_kind::partite, 2, 2};
    const auto B = blocker(from_edges(sp, {{1, 1}}));
    CHECK(B.count() == 3);
    CHECK(B.contains(sp.rank({1, 1})));
    CHECK(B.contains(sp.rank({1, 2})));
    CHECK(B.contains(sp.rank({2, 1})));
    CHECK(blocker(hypergraph(sp)).count() == 4);
}

TEST_CASE("blocker is antitone and self-improving") {
    const ground_space sp{space_kind::subsets, 5, 2};
    const auto F = from_edges(sp, {{1, 2}, {1, 3}});
    const auto G = from_edges(sp, {{1, 2}, {1, 3}, {4, 5}});
    const auto BF = blocker(F), BG = blocker(G);
    for (u64 i = 0; i < BG.usize; ++i)
        if (BG.bits.test(i)) CHECK(BF.bits.test(i));
    // B(B(B(F))) = B(F)
    CHECK(blocker(blocker(BF)) == BF);
}

TEST_CASE("partite word families match the sequence calculus") {
    for (auto [n, r] : {std::pair<u64, int>{2, 2}, {3, 2}, {2, 3}, {3, 3}}) {
        for (const auto& w : seqcore::enumerate_sigma(r))
            CHECK(u128(materialize_partite_family(w, n, r).count()) ==
                  seqcore::f_value(w, n, r));
    }
    const auto H = materialize_partite_family(op_word::plain({op::AND, op::OR}), 2, 3);
    CHECK(H.count() == 3);
    CHECK(H.contains({1, 1, 1}));
    CHECK(H.contains({1, 1, 2}));
    CHECK(H.contains({1, 2, 1}));
    CHECK_THROWS_AS(materialize_partite_family(op_word::plain({op::AND, op::OR}), 2, 2),
                    parameter_error);
}

TEST_CASE("matching numbers") {
    const ground_space sp{space_kind::partite, 2, 2};
    CHECK(matching_number(hypergraph(sp)) == 0);
    CHECK(matching_number(from_edges(sp, {{1, 1}, {1, 2}})) == 1);
    CHECK(matching_number(from_edges(sp, {{1, 1}, {2, 2}, {1, 2}})) == 2);
    const ground_space s3{space_kind::subsets, 6, 2};
    CHECK(matching_number(from_edges(s3, {{1, 2}, {2, 3}, {4, 5}, {5, 6}})) == 2);
    CHECK(matching_number(from_edges(s3, {{1, 2}, {3, 4}, {5, 6}})) == 3);
}

TEST_CASE("rainbow matchings pick one edge per family, pairwise disjoint") {
    const ground_space sp{space_kind::partite, 2, 2};
    const auto F1 = from_edges(sp, {{1, 1}, {1, 2}});
    const auto F2 = from_edges(sp, {{2, 2}});
    const auto got = rainbow_matching({F1, F2});
    REQUIRE(got.has_value());
    REQUIRE(got->size() == 2);
    CHECK(F1.contains(sp.rank((*got)[0])));
    CHECK(F2.contains(sp.rank((*got)[1])));
    CHECK(!sp.meets((*got)[0], (*got)[1]));

    const auto F3 = from_edges(sp, {{1, 1}, {1, 2}});
    CHECK(!rainbow_matching({F1, F3}).has_value()); // all edges share side 1 value 1
    CHECK(!rainbow_matching({F1, hypergraph(sp)}).has_value()); // an empty family blocks all
    CHECK(rainbow_matching({}).has_value()); // the empty collection has the empty rainbow
}

TEST_CASE("single shifts move edges down, keep the size, and validate") {
    const ground_space s{space_kind::subsets, 3, 2};
    const auto H = from_edges(s, {{2, 3}});
    const auto once = shift_once(H, {0, 1}, {0, 2});
    CHECK(once.contains({1, 3}));
    CHECK(once.count() == 1);
    // blocked move: the image is already present
    const auto two = from_edges(s, {{1, 3}, {2, 3}});
    const auto kept = shift_once(two, {0, 1}, {0, 2});
    CHECK(kept == two);
    CHECK_THROWS_AS(shift_once(H, {0, 2}, {0, 2}), parameter_error);
    CHECK_THROWS_AS(shift_once(H, {1, 1}, {1, 2}), parameter_error);
    const ground_space p{space_kind::partite, 2, 2};
    CHECK_THROWS_AS(shift_once(hypergraph(p), {0, 1}, {0, 2}), parameter_error);
    CHECK_THROWS_AS(shift_once(hypergraph(p), {3, 1}, {3, 2}), parameter_error);
}

TEST_CASE("shift closure reaches the canonical compressed family") {
    const ground_space s{space_kind::subsets, 3, 2};
    CHECK(shift_closure(from_edges(s, {{2, 3}})) == from_edges(s, {{1, 2}}));
    const ground_space p{space_kind::partite, 3, 2};
    CHECK(shift_closure(from_edges(p, {{3, 2}})) == from_edges(p, {{1, 1}}));
    CHECK(shift_closure(from_edges(p, {{3, 2}, {1, 1}})) == from_edges(p, {{1, 1}, {1, 2}}));
    CHECK(shift_closure(hypergraph(p)) == hypergraph(p));
}

TEST_CASE("perfect matching decomposition of the square") {
    const auto parts = perfect_matching_decomposition(2, 2);
    REQUIRE(parts.size() == 2);
    const ground_space sp{space_kind::partite, 2, 2};
    CHECK(parts[0] == from_edges(sp, {{1, 1}, {2, 2}}));
    CHECK(parts[1] == from_edges(sp, {{1, 2}, {2, 1}}));
}

TEST_CASE("last side split projects by the anchor") {
    const ground_space sp{space_kind::partite, 2, 2};
    const auto [with, without] = last_side_split(from_edges(sp, {{1, 1}, {2, 1}, {2, 2}}));
    const ground_space sub{space_kind::partite, 2, 1};
    CHECK(with == from_edges(sub, {{1}, {2}}));
    CHECK(without == from_edges(sub, {{2}}));
    CHECK_THROWS_AS(last_side_split(hypergraph({space_kind::partite, 3, 1})), parameter_error);
    CHECK_THROWS_AS(last_side_split(hypergraph({space_kind::subsets, 4, 2})), parameter_error);
}
