#pragma once

// Named property suites. Each suite re-derives one family of identities or
// bounds over a declared grid and reports one line per checked property,
// carrying the first counterexample on failure. Suites never throw on a
// property violation; they throw only for invalid parameters or blown
// budgets, like the ops they call.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "hyper.hpp"
#include "oracle.hpp"
#include "seqcore.hpp"
#include "setfam.hpp"
#include "table.hpp"
#include "word.hpp"

namespace blockade::verify {

struct check_result {
    std::string name;
    bool pass = true;
    std::string detail; // first counterexample when failing
};

struct suite_report {
    std::string suite;
    std::vector<check_result> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct grid_point {
    u64 n;
    int r;
};

inline constexpr u64 default_seed = 0xb10c5eed;

namespace detail {

inline void add(suite_report& rep, std::string name, bool pass, std::string detail = "") {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
}

inline std::string at(u64 n, int r) {
    return "n=" + std::to_string(n) + " r=" + std::to_string(r);
}

inline std::vector<grid_point> grid_or(const std::optional<grid_point>& point, int r_from,
                                       int r_to) {
    if (point) return {*point};
    std::vector<grid_point> g;
    for (u64 n = 2; n <= 6; ++n)
        for (int r = r_from; r <= r_to; ++r) g.push_back({n, r});
    return g;
}

// subset test on equal-universe families
inline bool contained_in(const hyper::hypergraph& a, const hyper::hypergraph& b) {
    for (std::size_t i = 0; i < a.bits.w.size(); ++i)
        if (a.bits.w[i] & ~b.bits.w[i]) return false;
    return true;
}

} // namespace detail

// N(j+i) - N(j) >= (n-1) N(i) whenever i <= j and i+j fits the table
inline suite_report suite_lemma18(std::optional<grid_point> point = {}) {
    suite_report rep{"lemma18", {}};
    for (auto [n, r] : detail::grid_or(point, 2, 10)) {
        const auto tab = seqcore::n_table(n, r);
        const u64 last = tab.entries.back().index;
        bool ok = true;
        std::string detail;
        for (u64 j = 0; j <= last && ok; ++j)
            for (u64 i = 0; i <= j && i + j <= last; ++i) {
                const u128 lhs = tab.entries[j + i].value - tab.entries[j].value;
                const u128 rhs = checked_mul(u128(n - 1), tab.entries[i].value);
                if (lhs < rhs) {
                    ok = false;
                    detail = "i=" + std::to_string(i) + " j=" + std::to_string(j);
                    break;
                }
            }
        detail::add(rep, "superadditive gap " + detail::at(n, r), ok, detail);
    }
    return rep;
}

// N(k) = max{ N(j) + (n-1) N(i) : i+j = k, i <= j } for k >= 2
inline suite_report suite_knuth(std::optional<grid_point> point = {}) {
    suite_report rep{"knuth", {}};
    for (auto [n, r] : detail::grid_or(point, 2, 10)) {
        const auto tab = seqcore::n_table(n, r);
        const u64 last = tab.entries.back().index;
        bool ok = true;
        std::string detail;
        for (u64 k = 2; k <= last && ok; ++k) {
            u128 best = 0;
            for (u64 i = 0; i <= k / 2; ++i) {
                const u128 cand = checked_add(tab.entries[k - i].value,
                                              checked_mul(u128(n - 1), tab.entries[i].value));
                if (cand > best) best = cand;
            }
            if (best != tab.entries[k].value) {
                ok = false;
                detail = "k=" + std::to_string(k) + " max=" + dec_string(best) +
                         " N(k)=" + dec_string(tab.entries[k].value);
            }
        }
        detail::add(rep, "max recursion " + detail::at(n, r), ok, detail);
    }
    return rep;
}

// self-similarity of the N table: the rank r-1 table is a prefix, each
// upper block replays the lower table (n-1)-scaled, and distances across
// and beyond a power boundary are (n-1)-magnified lower distances
inline suite_report suite_fractal(std::optional<grid_point> point = {}) {
    suite_report rep{"fractal", {}};
    for (auto [n, r] : detail::grid_or(point, 2, 10)) {
        const auto tab = seqcore::n_table(n, r);
        const u64 last = tab.entries.back().index;

        if (r >= 2) {
            const auto prev = seqcore::n_table(n, r - 1);
            bool ok = true;
            std::string detail;
            for (u64 i = 0; i < prev.entries.size(); ++i)
                if (prev.entries[i].value != tab.entries[i].value) {
                    ok = false;
                    detail = "i=" + std::to_string(i);
                    break;
                }
            detail::add(rep, "lower-rank prefix " + detail::at(n, r), ok, detail);
        }

        {
            bool ok = true;
            std::string detail;
            for (u64 p = 1; p <= last / 2 && ok; p <<= 1)
                for (u64 i = 0; i <= p; ++i) {
                    const u128 want = checked_add(checked_pow(n, unsigned(__builtin_ctzll(p))),
                                                  checked_mul(u128(n - 1), tab.entries[i].value));
                    if (tab.entries[p + i].value != want) {
                        ok = false;
                        detail = "p=" + std::to_string(p) + " i=" + std::to_string(i);
                        break;
                    }
                }
            detail::add(rep, "block replay " + detail::at(n, r), ok, detail);
        }

        {
            bool ok = true;
            std::string detail;
            for (u64 p = 1; 2 * p <= last && ok; p <<= 1)
                for (u64 b = 0; b <= p && ok; ++b)
                    for (u64 c = 0; c <= b; ++c) {
                        const u128 lhs = tab.entries[p + b].value - tab.entries[p + c].value;
                        const u128 rhs = checked_mul(u128(n - 1), tab.entries[b].value -
                                                                      tab.entries[c].value);
                        if (lhs != rhs) {
                            ok = false;
                            detail = "p=" + std::to_string(p) + " b=" + std::to_string(b) +
                                     " c=" + std::to_string(c);
                            break;
                        }
                    }
            detail::add(rep, "in-block distance " + detail::at(n, r), ok, detail);
        }

        {
            bool ok = true;
            std::string detail;
            for (u64 p = 1; 4 * p <= last && ok; p <<= 1)
                for (u64 b = 0; b <= p && ok; ++b)
                    for (u64 c = 0; c <= p; ++c) {
                        const u128 lhs =
                            tab.entries[3 * p + b].value - tab.entries[2 * p + c].value;
                        const u128 rhs = checked_mul(u128(n - 1), tab.entries[p + b].value -
                                                                      tab.entries[c].value);
                        if (lhs != rhs) {
                            ok = false;
                            detail = "p=" + std::to_string(p) + " b=" + std::to_string(b) +
                                     " c=" + std::to_string(c);
                            break;
                        }
                    }
            detail::add(rep, "cross-block distance " + detail::at(n, r), ok, detail);
        }
    }
    return rep;
}

// N(a) N(b) <= N(ab), and the matched extremes N(q) N(2^r - q) <= n^{2(r-1)}
inline suite_report suite_product(std::optional<grid_point> point = {}) {
    suite_report rep{"product", {}};
    for (auto [n, r] : detail::grid_or(point, 2, 10)) {
        const auto tab = seqcore::n_table(n, r);
        const u64 last = tab.entries.back().index;
        {
            bool ok = true;
            std::string detail;
            for (u64 a = 1; a <= last && ok; ++a)
                for (u64 b = 1; a * b <= last; ++b) {
                    const u128 lhs = checked_mul(tab.entries[a].value, tab.entries[b].value);
                    if (lhs > tab.entries[a * b].value) {
                        ok = false;
                        detail = "a=" + std::to_string(a) + " b=" + std::to_string(b);
                        break;
                    }
                }
            detail::add(rep, "index product " + detail::at(n, r), ok, detail);
        }
        {
            bool ok = true;
            std::string detail;
            const u128 cap = checked_pow(n, unsigned(2 * (r - 1)));
            for (u64 q = 0; q <= last / 2; ++q) {
                const u128 lhs = checked_mul(tab.entries[q].value, tab.entries[last - q].value);
                if (lhs > cap) {
                    ok = false;
                    detail = "q=" + std::to_string(q);
                    break;
                }
            }
            detail::add(rep, "family-blocker product " + detail::at(n, r), ok, detail);
        }
    }
    return rep;
}

// blocker(family(word)) equals family(complemented word), edge for edge
inline suite_report suite_demorgan(std::optional<grid_point> point = {}) {
    suite_report rep{"demorgan", {}};
    std::vector<grid_point> partite_pts{{2, 2}, {3, 2}, {2, 3}, {3, 3}};
    std::vector<grid_point> subsets_pts{{4, 2}, {5, 2}, {6, 3}};
    if (point) {
        partite_pts = {*point};
        subsets_pts.clear();
        if (point->n >= 2 * u64(point->r) - 1) subsets_pts = {*point};
    }
    for (auto [n, r] : partite_pts) {
        bool ok = true;
        std::string detail;
        for (const auto& w : seqcore::enumerate_sigma(r)) {
            const auto F = hyper::materialize_partite_family(w, n, r);
            if (hyper::blocker(F) != hyper::materialize_partite_family(complemented(w), n, r)) {
                ok = false;
                detail = "word " + render_word(w);
                break;
            }
        }
        detail::add(rep, "partite " + detail::at(n, r), ok, detail);
    }
    for (auto [n, r] : subsets_pts) {
        bool ok = true;
        std::string detail;
        for (const auto& w : setfam::enumerate_theta(r)) {
            const auto F = setfam::materialize_subset_family(w, n, r);
            if (hyper::blocker(F) != setfam::materialize_subset_family(complemented(w), n, r)) {
                ok = false;
                detail = "word " + render_word(w);
                break;
            }
        }
        detail::add(rep, "subsets " + detail::at(n, r), ok, detail);
    }
    return rep;
}

// the four landmark identities of the M table, i = 1..r
inline suite_report suite_landmarks(std::optional<grid_point> point = {}) {
    suite_report rep{"landmarks", {}};
    std::vector<grid_point> pts{{7, 3}, {9, 4}, {11, 5}};
    if (point) pts = {*point};
    for (auto [n, r] : pts) {
        const auto tab = setfam::m_table(n, r);
        const u64 last = tab.entries.back().index;
        bool ok = true;
        std::string detail;
        for (int i = 1; i <= r && ok; ++i) {
            const u64 lo = to_u64(binomial(2 * u64(r) - u64(i), u64(r)), "landmark");
            const u64 hi = last - to_u64(binomial(2 * u64(r) - u64(i), u64(r) - u64(i)), "landmark");
            u128 tail = 0;
            for (u64 j = 1; j <= u64(i); ++j) tail = checked_add(tail, binomial(n - j, u64(r) - 1));
            const bool here =
                tab.entries[lo].word == op_word::plain(std::vector<op>(std::size_t(i - 1), op::AND)) &&
                tab.entries[hi].word == op_word::plain(std::vector<op>(std::size_t(i - 1), op::OR)) &&
                tab.entries[lo].value == binomial(n - u64(i), u64(r) - u64(i)) &&
                tab.entries[hi].value == tail;
            if (!here) {
                ok = false;
                detail = "i=" + std::to_string(i);
            }
        }
        detail::add(rep, "landmarks " + detail::at(n, r), ok, detail);
    }
    return rep;
}

// exhaustive blocker maxima over r-subsets agree with the M-table reading,
// and every optimum value is itself a table value
inline suite_report suite_theorem_bisa(std::optional<grid_point> point = {},
                                       oracle::search_budget budget = {}) {
    suite_report rep{"theorem-bisa", {}};
    std::vector<grid_point> pts{{4, 2}, {5, 2}};
    if (point) pts = {*point};
    for (auto [n, r] : pts) {
        const auto tab = setfam::m_table(n, r);
        const hyper::ground_space sp{hyper::space_kind::subsets, n, r};
        const u64 usize = to_u64(sp.universe_size(), "universe");
        bool agree = true, in_table = true;
        std::string agree_detail, table_detail;
        for (u64 t = 0; t <= usize; ++t) {
            const auto brute = oracle::brute_blocker_max(sp, t, budget);
            if (!brute.exhaustive) {
                agree = false;
                agree_detail = "non-exhaustive at t=" + std::to_string(t);
                break;
            }
            if (brute.value != setfam::blocker_max_subsets(t, tab).value) {
                agree = false;
                agree_detail = "t=" + std::to_string(t);
            }
            bool found = false;
            for (const auto& e : tab.entries)
                if (e.value == brute.value) found = true;
            if (!found) {
                in_table = false;
                table_detail = "t=" + std::to_string(t);
            }
        }
        detail::add(rep, "oracle agreement " + detail::at(n, r), agree, agree_detail);
        detail::add(rep, "optimum in table " + detail::at(n, r), in_table, table_detail);
    }
    return rep;
}

namespace detail {

inline hyper::hypergraph random_family(const hyper::ground_space& sp, std::mt19937_64& rng) {
    hyper::hypergraph H(sp);
    const u64 den = rng() % 101; // percent
    for (u64 i = 0; i < H.usize; ++i)
        if (rng() % 100 < den) H.bits.set(i);
    return H;
}

} // namespace detail

// randomized closure and single-shift checks: closures are fixpoints,
// preserve size, never raise the matching number, and leave a partite
// family nested over its last side with the blocker splitting accordingly;
// a single synchronized shift never destroys the last rainbow matching
inline suite_report suite_shifting(std::optional<grid_point> point = {},
                                   u64 seed = default_seed) {
    suite_report rep{"shifting", {}};
    std::mt19937_64 rng(seed);

    std::vector<hyper::ground_space> pool;
    if (point) {
        pool.push_back({hyper::space_kind::partite, point->n, point->r});
    } else {
        for (auto [n, r] : {grid_point{2, 2}, {3, 2}, {2, 3}, {4, 2}, {3, 3}})
            pool.push_back({hyper::space_kind::partite, n, r});
        for (auto [n, r] : {grid_point{4, 2}, {5, 2}, {6, 2}, {6, 3}})
            pool.push_back({hyper::space_kind::subsets, n, r});
    }

    const int instances = 1000;
    int bad_fix = -1, bad_size = -1, bad_nu = -1, bad_nest = -1, bad_split = -1;
    for (int it = 0; it < instances; ++it) {
        const auto& sp = pool[rng() % pool.size()];
        const auto H = detail::random_family(sp, rng);
        const auto C = hyper::shift_closure(H);
        if (bad_fix < 0 && !(hyper::shift_closure(C) == C)) bad_fix = it;
        if (bad_size < 0 && C.count() != H.count()) bad_size = it;
        if (bad_nu < 0 && hyper::matching_number(C) > hyper::matching_number(H)) bad_nu = it;
        if (sp.kind == hyper::space_kind::partite && sp.r >= 2) {
            const auto [plus, minus] = hyper::last_side_split(C);
            if (bad_nest < 0 && !detail::contained_in(minus, plus)) bad_nest = it;
            const u128 split = checked_add(u128(hyper::blocker(minus).count()),
                                           checked_mul(u128(sp.n - 1),
                                                       u128(hyper::blocker(plus).count())));
            if (bad_split < 0 && u128(hyper::blocker(C).count()) != split) bad_split = it;
        }
    }
    auto inst = [](int i) { return i < 0 ? std::string() : "instance " + std::to_string(i); };
    detail::add(rep, "closure is a fixpoint (1000 instances)", bad_fix < 0, inst(bad_fix));
    detail::add(rep, "closure preserves size", bad_size < 0, inst(bad_size));
    detail::add(rep, "closure never raises the matching number", bad_nu < 0, inst(bad_nu));
    detail::add(rep, "closed partite family nests over its last side", bad_nest < 0,
                inst(bad_nest));
    detail::add(rep, "blocker splits by the last-side anchor", bad_split < 0, inst(bad_split));

    const int collections = 500;
    int bad_rainbow = -1;
    for (int it = 0; it < collections; ++it) {
        const hyper::ground_space sp = (it % 2 == 0)
                                           ? hyper::ground_space{hyper::space_kind::partite, 3, 2}
                                           : hyper::ground_space{hyper::space_kind::partite, 2, 3};
        const std::size_t k = 2 + rng() % 2;
        std::vector<hyper::hypergraph> fams;
        for (std::size_t i = 0; i < k; ++i) fams.push_back(detail::random_family(sp, rng));
        const int side = 1 + int(rng() % u64(sp.r));
        const u64 x = 1 + rng() % (sp.n - 1);
        const u64 y = x + 1 + rng() % (sp.n - x);
        std::vector<hyper::hypergraph> shifted;
        for (const auto& F : fams) shifted.push_back(hyper::shift_once(F, {side, x}, {side, y}));
        if (bad_rainbow < 0 && hyper::rainbow_matching(shifted) &&
            !hyper::rainbow_matching(fams))
            bad_rainbow = it;
    }
    detail::add(rep, "one shift preserves having a rainbow matching (500 collections)",
                bad_rainbow < 0, inst(bad_rainbow));
    return rep;
}

// exhaustive extremal families without k disjoint edges match (k-1) n^{r-1},
// the slab family attains it, and the diagonal matchings partition [n]^r
inline suite_report suite_g_lemma(oracle::search_budget budget = {}) {
    suite_report rep{"g-lemma", {}};
    struct pt {
        u64 n;
        int r;
        u64 k;
    };
    for (auto [n, r, k] : {pt{2, 2, 2}, {3, 2, 2}, {2, 3, 2}, {3, 2, 3}}) {
        const hyper::ground_space sp{hyper::space_kind::partite, n, r};
        const u128 want = checked_mul(u128(k - 1), checked_pow(n, unsigned(r - 1)));
        const auto brute = oracle::brute_extremal_matching_number(sp, k, budget);
        detail::add(rep,
                    "extremal size " + detail::at(n, r) + " k=" + std::to_string(k),
                    brute.exhaustive && brute.value == want,
                    brute.exhaustive ? "value " + dec_string(brute.value) + " want " +
                                           dec_string(want)
                                     : "non-exhaustive");
        hyper::hypergraph slab(sp);
        for (u64 i = 0; i < slab.usize; ++i)
            if (slab.space.unrank(i)[0] <= k - 1) slab.bits.set(i);
        detail::add(rep, "slab attains it " + detail::at(n, r) + " k=" + std::to_string(k),
                    u128(slab.count()) == want && hyper::matching_number(slab) == k - 1);
    }
    for (u64 n = 2; n <= 4; ++n)
        for (int r = 2; r <= 4; ++r) {
            const auto parts = hyper::perfect_matching_decomposition(n, r);
            bool ok = u128(parts.size()) == checked_pow(n, unsigned(r - 1));
            for (const auto& m : parts)
                ok = ok && m.count() == n && hyper::matching_number(m) == n;
            detail::add(rep, "matching decomposition " + detail::at(n, r), ok);
        }
    return rep;
}

// no pair of threshold-size families in [n]^r lacks a rainbow matching,
// symmetric sizes (k-1) n^{r-1} + 1 and the sharper split sizes
// (n^{r-1} + 1, n^{r-1})
inline suite_report suite_rainbow_k2(std::optional<grid_point> point = {},
                                     oracle::search_budget budget = {}) {
    suite_report rep{"rainbow-k2", {}};
    std::vector<grid_point> pts{{2, 2}, {3, 2}, {2, 3}};
    if (point) pts = {*point};
    for (auto [n, r] : pts) {
        const auto sym = oracle::rainbow_counterexample_search(n, r, 2, budget);
        detail::add(rep, "threshold pairs " + detail::at(n, r),
                    sym.exhaustive && !sym.counterexample,
                    sym.exhaustive ? "" : "non-exhaustive");
        const u64 base = to_u64(checked_pow(n, unsigned(r - 1)), "threshold");
        const auto split = oracle::rainbow_pair_search(n, r, base + 1, base, budget);
        detail::add(rep, "split-size pairs " + detail::at(n, r),
                    split.exhaustive && !split.counterexample,
                    split.exhaustive ? "" : "non-exhaustive");
    }
    return rep;
}

inline suite_report run_suite(const std::string& name, std::optional<grid_point> point = {},
                              oracle::search_budget budget = {}, u64 seed = default_seed) {
    if (name == "lemma18") return suite_lemma18(point);
    if (name == "knuth") return suite_knuth(point);
    if (name == "fractal") return suite_fractal(point);
    if (name == "product") return suite_product(point);
    if (name == "demorgan") return suite_demorgan(point);
    if (name == "landmarks") return suite_landmarks(point);
    if (name == "theorem-bisa") return suite_theorem_bisa(point, budget);
    if (name == "shifting") return suite_shifting(point, seed);
    if (name == "g-lemma") return suite_g_lemma(budget);
    if (name == "rainbow-k2") return suite_rainbow_k2(point, budget);
    throw parameter_error("unknown suite \"" + name + "\"");
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "lemma18", "knuth",        "fractal",  "product", "demorgan",
        "landmarks", "theorem-bisa", "shifting", "g-lemma", "rainbow-k2"};
    return names;
}

} // namespace blockade::verify
