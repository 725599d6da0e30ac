// End-to-end acceptance run. Each criterion prints exactly one PASS/FAIL
// line; the exit status is nonzero iff any criterion fails. Expected
// values are either frozen references or recomputed by the brute-force
// oracles; nothing here trusts the closed forms it is checking.

#include <array>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "blockade/exact.hpp"
#include "blockade/hyper.hpp"
#include "blockade/oracle.hpp"
#include "blockade/seqcore.hpp"
#include "blockade/setfam.hpp"
#include "blockade/verify.hpp"
#include "blockade/word.hpp"

using namespace blockade;
using hyper::ground_space;
using hyper::hypergraph;
using hyper::space_kind;

namespace {

int failures = 0;

void criterion(const std::string& name, const std::function<bool()>& body) {
    bool pass = false;
    std::string note;
    try {
        pass = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::printf("%s %s%s\n", pass ? "PASS" : "FAIL", name.c_str(), note.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

bool table_values_equal(const value_table& tab, const std::vector<u64>& want) {
    if (tab.entries.size() != want.size()) return false;
    for (std::size_t i = 0; i < want.size(); ++i)
        if (tab.entries[i].value != want[i]) return false;
    return true;
}

hypergraph random_family(const ground_space& sp, std::mt19937_64& rng) {
    hypergraph H(sp);
    const u64 den = rng() % 101;
    for (u64 i = 0; i < H.usize; ++i)
        if (rng() % 100 < den) H.insert(i);
    return H;
}

} // namespace

int main() {
    criterion("1 rank-3 value tables match the frozen references", [] {
        return table_values_equal(seqcore::n_table(3, 3), {0, 1, 3, 5, 9, 11, 15, 19, 27}) &&
               table_values_equal(seqcore::n_table(4, 3), {0, 1, 4, 7, 16, 19, 28, 37, 64}) &&
               table_values_equal(seqcore::n_table(5, 3), {0, 1, 5, 9, 25, 29, 45, 61, 125});
    });

    criterion("2 word indexing and closed-form values agree for n in 2..6, r in 1..10", [] {
        for (int r = 1; r <= 10; ++r) {
            const auto words = seqcore::enumerate_sigma(r);
            for (u64 n = 2; n <= 6; ++n) {
                const auto tab = seqcore::n_table(n, r);
                if (tab.entries.size() != words.size()) return false;
                for (std::size_t i = 0; i < words.size(); ++i) {
                    if (!(seqcore::word_from_index(u128(i), r) == words[i])) return false;
                    if (seqcore::index_of(words[i], r) != u128(i)) return false;
                    if (seqcore::n_explicit(u128(i), n, r) != tab.entries[i].value) return false;
                }
            }
        }
        return true;
    });

    criterion("3 partite blocker maxima match the exhaustive oracle", [] {
        for (auto [n, r] : {std::pair<u64, int>{2, 2}, {3, 2}, {2, 3}}) {
            const ground_space sp{space_kind::partite, n, r};
            const u64 usize = to_u64(sp.universe_size(), "universe");
            for (u64 t = 0; t <= usize; ++t) {
                const auto res = oracle::brute_blocker_max(sp, t);
                if (!res.exhaustive) return false;
                if (res.value != seqcore::blocker_max_partite(t, n, r).value) return false;
            }
        }
        const ground_space big{space_kind::partite, 3, 3};
        for (u64 t : {0, 1, 2, 3, 4, 23, 24, 25, 26, 27}) {
            const auto res = oracle::brute_blocker_max(big, t);
            if (!res.exhaustive) return false;
            if (res.value != seqcore::blocker_max_partite(t, 3, 3).value) return false;
        }
        return true;
    });

    criterion("4 the blocker of every word family is the complemented word's family", [] {
        for (auto [n, r] : {std::pair<u64, int>{2, 2}, {3, 2}, {2, 3}, {3, 3}})
            for (const auto& w : seqcore::enumerate_sigma(r)) {
                const auto F = hyper::materialize_partite_family(w, n, r);
                const auto D = hyper::materialize_partite_family(complemented(w), n, r);
                if (!(hyper::blocker(F) == D)) return false;
            }
        return true;
    });

    criterion("5 index suites lemma18/knuth/fractal/product pass for n in 2..6, r in 2..10", [] {
        for (const char* s : {"lemma18", "knuth", "fractal", "product"})
            if (!verify::run_suite(s).all_pass()) return false;
        return true;
    });

    criterion("6 the 3-uniform table on 7 points matches, landmarks included", [] {
        const auto tab = setfam::m_table(7, 3);
        if (!table_values_equal(tab, {0, 1, 2, 3, 5, 6, 7, 9, 10, 12, 15, 16, 17, 19, 20, 22, 25,
                                      26, 28, 31, 35}))
            return false;
        auto is = [&](u64 i, const op_word& w, u64 v) {
            return tab.entries[std::size_t(i)].word == w && tab.entries[std::size_t(i)].value == v;
        };
        using enum op;
        return is(10, op_word::plain({}), 15) &&        // C(6,2)
               is(4, op_word::plain({AND}), 5) &&       // C(5,1)
               is(1, op_word::plain({AND, AND}), 1) &&  // C(4,0)
               is(16, op_word::plain({OR}), 25) &&      // C(6,2)+C(5,2)
               is(19, op_word::plain({OR, OR}), 31);    // C(6,2)+C(5,2)+C(4,2)
    });

    criterion("7 plain-word counts match the central binomials for r in 1..8", [] {
        for (int r = 1; r <= 8; ++r)
            if (u128(setfam::enumerate_theta(r).size()) != binomial(2 * u64(r), u64(r)) + 1)
                return false;
        return true;
    });

    criterion("8 subsets blocker maxima match the oracle and land in the table", [] {
        for (auto [n, r] : {std::pair<u64, int>{4, 2}, {5, 2}}) {
            const ground_space sp{space_kind::subsets, n, r};
            const auto tab = setfam::m_table(n, r);
            const u64 usize = to_u64(sp.universe_size(), "universe");
            for (u64 t = 0; t <= usize; ++t) {
                const auto res = oracle::brute_blocker_max(sp, t);
                if (!res.exhaustive) return false;
                if (res.value != setfam::blocker_max_subsets(t, n, r).value) return false;
                bool in_table = false;
                for (const auto& e : tab.entries) in_table = in_table || e.value == res.value;
                if (!in_table) return false;
            }
        }
        const ground_space six{space_kind::subsets, 6, 3};
        for (u64 t = 0; t <= 6; ++t) {
            const auto res = oracle::brute_blocker_max(six, t);
            if (!res.exhaustive) return false;
            if (res.value != setfam::blocker_max_subsets(t, 6, 3).value) return false;
        }
        return true;
    });

    criterion("9 the shadow route to blockers agrees with the direct one", [] {
        std::mt19937_64 rng(0x5eed);
        for (auto [n, r] : {std::pair<u64, int>{5, 2}, {6, 3}, {7, 3}}) {
            const ground_space sp{space_kind::subsets, n, r};
            for (int trial = 0; trial < 100; ++trial) {
                const auto H = random_family(sp, rng);
                if (!(setfam::blocker_via_shadow(H) == hyper::blocker(H))) return false;
            }
        }
        return true;
    });

    criterion("10 shift closures hold their invariants and shifts keep rainbows", [] {
        std::mt19937_64 rng(0xc105);
        std::vector<ground_space> pool;
        for (auto [n, r] : {std::pair<u64, int>{2, 2}, {3, 2}, {2, 3}, {4, 2}, {3, 3}})
            pool.push_back({space_kind::partite, n, r});
        for (auto [n, r] : {std::pair<u64, int>{4, 2}, {5, 2}, {6, 2}, {6, 3}})
            pool.push_back({space_kind::subsets, n, r});
        for (int trial = 0; trial < 1000; ++trial) {
            const auto& sp = pool[rng() % pool.size()];
            const auto H = random_family(sp, rng);
            const auto C = hyper::shift_closure(H);
            if (!(hyper::shift_closure(C) == C)) return false;
            if (C.count() != H.count()) return false;
            if (hyper::matching_number(C) > hyper::matching_number(H)) return false;
        }
        for (int trial = 0; trial < 500; ++trial) {
            const ground_space sp = trial % 2 == 0 ? ground_space{space_kind::partite, 3, 2}
                                                   : ground_space{space_kind::partite, 2, 3};
            const std::size_t k = 2 + rng() % 2;
            std::vector<hypergraph> fams;
            for (std::size_t i = 0; i < k; ++i) fams.push_back(random_family(sp, rng));
            const int side = 1 + int(rng() % u64(sp.r));
            const u64 x = 1 + rng() % (sp.n - 1);
            const u64 y = x + 1 + rng() % (sp.n - x);
            std::vector<hypergraph> shifted;
            for (const auto& F : fams)
                shifted.push_back(hyper::shift_once(F, {side, x}, {side, y}));
            if (hyper::rainbow_matching(shifted) && !hyper::rainbow_matching(fams)) return false;
        }
        return true;
    });

    criterion("11 extremal matching-free sizes and the diagonal matching partition", [] {
        for (auto [n, r, k] : {std::array<u64, 3>{2, 2, 2}, {3, 2, 2}, {2, 3, 2}, {3, 2, 3}}) {
            const auto res =
                oracle::brute_extremal_matching_number({space_kind::partite, n, int(r)}, k);
            if (!res.exhaustive) return false;
            if (res.value != checked_mul(u128(k - 1), checked_pow(n, unsigned(r - 1))))
                return false;
        }
        for (u64 n = 2; n <= 4; ++n)
            for (int r = 2; r <= 4; ++r) {
                const auto parts = hyper::perfect_matching_decomposition(n, r);
                if (u128(parts.size()) != checked_pow(n, unsigned(r - 1))) return false;
                hypergraph all({space_kind::partite, n, r});
                for (const auto& m : parts) {
                    if (m.count() != n) return false;
                    if (hyper::matching_number(m) != n) return false;
                    for (u64 rank : m.ranks()) {
                        if (all.contains(rank)) return false;
                        all.insert(rank);
                    }
                }
                if (u128(all.count()) != all.space.universe_size()) return false;
            }
        return true;
    });

    criterion("12 two threshold-size partite families always have a rainbow pair", [] {
        for (auto [n, r] : {std::pair<u64, int>{2, 2}, {3, 2}, {2, 3}}) {
            const auto res = oracle::rainbow_counterexample_search(n, r, 2);
            if (res.vacuous || res.counterexample || !res.exhaustive) return false;
        }
        return true;
    });

    if (failures == 0) {
        std::printf("all 12 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", failures);
    return 1;
}
