#pragma once

// Brute-force reference searches. Everything here enumerates explicitly and
// independently of the closed-form machinery, so the fast paths can be
// checked against it. Universes are limited to 63 edges (family subsets are
// u64 masks). No symmetry reduction is applied; results record that. A
// search that hits its enumeration budget stops and reports itself as
// non-exhaustive rather than failing.

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "hyper.hpp"
#include "setfam.hpp"

namespace blockade::oracle {

using hyper::bitvec;
using hyper::edge;
using hyper::ground_space;
using hyper::space_kind;

struct search_budget {
    u64 max_families = 10'000'000; // family (or tuple) enumerations before giving up
};

struct oracle_result {
    u128 value = 0;
    std::vector<edge> witness; // first family attaining the final optimum
    bool exhaustive = true;    // full enumeration completed
    u64 searched = 0;          // families examined
    bool reduced = false;      // always false: no symmetry reduction
};

namespace detail {

inline u64 universe_mask_size(const ground_space& sp) {
    const u128 u = sp.universe_size();
    if (u > 63)
        throw budget_error("universe of " + dec_string(u) +
                           " edges exceeds the exhaustive-search limit of 63");
    return u64(u);
}

inline u64 next_same_popcount(u64 mask) {
    const u64 c = mask & (~mask + 1);
    const u64 up = mask + c;
    return (((mask ^ up) >> 2) / c) | up;
}

inline std::vector<edge> mask_edges(const ground_space& sp, u64 mask) {
    std::vector<edge> out;
    for (u64 i = 0; i < 64; ++i)
        if ((mask >> i) & 1) out.push_back(sp.unrank(i));
    return out;
}

// true if the masked family contains k pairwise disjoint edges
inline bool has_k_matching(const ground_space& sp, const std::vector<bitvec>& vmask, u64 mask,
                           u64 k) {
    if (k == 0) return true;
    std::vector<u64> idx;
    for (u64 i = 0; i < 64; ++i)
        if ((mask >> i) & 1) idx.push_back(i);
    if (idx.size() < k) return false;
    auto rec = [&](auto&& self, std::size_t from, const bitvec& used, u64 picked) -> bool {
        if (picked == k) return true;
        if (idx.size() - from < k - picked) return false;
        for (std::size_t p = from; p < idx.size(); ++p) {
            if (!used.disjoint(vmask[idx[p]])) continue;
            bitvec next = used;
            next.or_with(vmask[idx[p]]);
            if (self(self, p + 1, next, picked + 1)) return true;
        }
        return false;
    };
    return rec(rec, 0, bitvec(sp.vertex_bits()), 0);
}

// every chain-and-pivots family of k-subsets of {1..n} with exactly m edges
template <class Fn>
void for_each_cascade(u64 n, u64 k, u128 m, Fn&& visit) {
    if (n > 20) throw budget_error("cascade enumeration supports n <= 20");
    std::vector<u64> ground(static_cast<std::size_t>(n));
    for (u64 v = 1; v <= n; ++v) ground[std::size_t(v - 1)] = v;
    std::vector<edge> subsets_by_mask;
    for (u64 mask = 0; mask < (u64(1) << n); ++mask) {
        edge b;
        for (u64 v = 1; v <= n; ++v)
            if ((mask >> (v - 1)) & 1) b.push_back(v);
        subsets_by_mask.push_back(std::move(b));
    }
    setfam::cascade_form form;
    form.k = k;
    auto edges_of = [&](const std::vector<edge>& chain) {
        u128 total = 0;
        for (std::size_t i = 0; i < chain.size(); ++i)
            total = checked_add(total, binomial(u64(chain[i].size()), k - u64(i)));
        return total;
    };
    auto rec = [&](auto&& self) -> void {
        const u128 have = edges_of(form.chain);
        const std::size_t s = form.pivots.size();
        if (have == m && u64(form.chain.back().size()) >= k - u64(s)) visit(form);
        if (have >= m || s + 1 > k) return; // another level only adds edges
        if (form.chain.back().empty()) return; // nothing nests strictly below
        // copies, not references: the recursive push_back below may
        // reallocate form.chain
        const edge upper = s == 0 ? ground : form.chain[form.chain.size() - 2];
        const edge last = form.chain.back();
        u64 last_mask = 0;
        for (u64 v : last) last_mask |= u64(1) << (v - 1);
        for (u64 x : upper) {
            if (std::binary_search(last.begin(), last.end(), x)) continue;
            // proper subsets of the current last chain set
            for (u64 sub = (last_mask - 1) & last_mask;; sub = (sub - 1) & last_mask) {
                form.pivots.push_back(x);
                form.chain.push_back(subsets_by_mask[sub]);
                self(self);
                form.chain.pop_back();
                form.pivots.pop_back();
                if (sub == 0) break;
            }
        }
    };
    for (u64 mask = 0; mask < (u64(1) << n); ++mask) {
        form.chain.push_back(subsets_by_mask[mask]);
        rec(rec);
        form.chain.pop_back();
    }
}

} // namespace detail

// max |B(F)| over all t-edge families F in the space, by enumerating every
// t-subset of the universe. The winning witness is re-verified through the
// hypergraph blocker before it is returned.
inline oracle_result brute_blocker_max(const ground_space& sp, u64 t,
                                       search_budget budget = {}) {
    const u64 usize = detail::universe_mask_size(sp);
    if (t > usize) throw parameter_error("t exceeds the universe size");
    std::vector<u64> meets_mask(usize, 0);
    std::vector<edge> all;
    all.reserve(usize);
    for (u64 i = 0; i < usize; ++i) all.push_back(sp.unrank(i));
    for (u64 i = 0; i < usize; ++i)
        for (u64 j = 0; j < usize; ++j)
            if (sp.meets(all[i], all[j])) meets_mask[i] |= u64(1) << j;

    oracle_result out;
    bool have = false;
    u64 best_mask = 0;
    u64 mask = t == 0 ? 0 : (u64(1) << t) - 1;
    for (;;) {
        u64 cnt = 0;
        for (u64 i = 0; i < usize; ++i)
            if ((mask & ~meets_mask[i]) == 0) ++cnt;
        ++out.searched;
        if (!have || cnt > u64(out.value)) {
            have = true;
            out.value = cnt;
            best_mask = mask;
        }
        if (t == 0) break;
        const u64 next = detail::next_same_popcount(mask);
        if (next >= (u64(1) << usize)) break;
        if (out.searched >= budget.max_families) {
            out.exhaustive = false;
            break;
        }
        mask = next;
    }
    out.witness = detail::mask_edges(sp, best_mask);

    hyper::hypergraph W(sp);
    for (const edge& e : out.witness) W.insert(e);
    if (u128(hyper::blocker(W).count()) != out.value)
        throw consistency_error("witness blocker size disagrees with the search value");
    return out;
}

// Min |S_r(F)| over all m-edge families F of k-subsets of {1..n}. When the
// sweep is exhaustive the minimum is also recomputed over all cascade
// families with m edges, which must agree.
inline oracle_result brute_min_shadow(u64 n, int k, u64 m, int r, search_budget budget = {}) {
    const ground_space big{space_kind::subsets, n, k};
    const ground_space small{space_kind::subsets, n, r};
    if (r > k) throw parameter_error("shadow uniformity must not exceed the family's");
    const u64 usize = detail::universe_mask_size(big);
    if (m > usize) throw parameter_error("m exceeds the universe size");
    const u64 ssize = to_u64(small.universe_size(), "shadow universe");

    // the r-shadow of each k-edge, as a bitmask over the r-subsets space
    std::vector<bitvec> shadow_of(usize, bitvec(ssize));
    for (u64 i = 0; i < usize; ++i) {
        const hyper::hypergraph one = setfam::shadow(n, r, {big.unrank(i)});
        shadow_of[i] = one.bits;
    }

    oracle_result out;
    bool have = false;
    u64 best_mask = 0;
    u64 mask = m == 0 ? 0 : (u64(1) << m) - 1;
    for (;;) {
        bitvec sh(ssize);
        for (u64 i = 0; i < usize; ++i)
            if ((mask >> i) & 1) sh.or_with(shadow_of[i]);
        const u64 cnt = sh.popcount();
        ++out.searched;
        if (!have || cnt < u64(out.value)) {
            have = true;
            out.value = cnt;
            best_mask = mask;
        }
        if (m == 0) break;
        const u64 next = detail::next_same_popcount(mask);
        if (next >= (u64(1) << usize)) break;
        if (out.searched >= budget.max_families) {
            out.exhaustive = false;
            break;
        }
        mask = next;
    }
    out.witness = detail::mask_edges(big, best_mask);

    if (out.exhaustive && m > 0) {
        bool found = false;
        u64 cascade_min = 0;
        detail::for_each_cascade(n, u64(k), m, [&](const setfam::cascade_form& form) {
            const hyper::hypergraph F = setfam::cascade_build(n, form);
            const u64 cnt = setfam::shadow(n, r, F.edges()).count();
            if (!found || cnt < cascade_min) {
                found = true;
                cascade_min = cnt;
            }
        });
        if (!found || u128(cascade_min) != out.value)
            throw consistency_error("cascade minimum disagrees with the exhaustive minimum");
    }
    return out;
}

// max |F| over families in the space with no k pairwise disjoint edges, by
// sweeping every subfamily of the universe
inline oracle_result brute_extremal_matching_number(const ground_space& sp, u64 k,
                                                    search_budget budget = {}) {
    if (k == 0) throw parameter_error("k must be positive");
    const u64 usize = detail::universe_mask_size(sp);
    std::vector<bitvec> vmask;
    vmask.reserve(usize);
    for (u64 i = 0; i < usize; ++i)
        vmask.push_back(hyper::vertex_mask(sp, sp.unrank(i)));

    oracle_result out;
    bool have = false;
    u64 best_mask = 0;
    const u64 total = u64(1) << usize;
    for (u64 mask = 0; mask < total; ++mask) {
        ++out.searched;
        const u64 size = u64(__builtin_popcountll(mask));
        if ((!have || size > u64(out.value)) && !detail::has_k_matching(sp, vmask, mask, k)) {
            have = true;
            out.value = size;
            best_mask = mask;
        }
        if (mask + 1 < total && out.searched >= budget.max_families) {
            out.exhaustive = false;
            break;
        }
    }
    out.witness = detail::mask_edges(sp, best_mask);
    return out;
}

struct rainbow_search {
    bool counterexample = false;
    std::vector<std::vector<edge>> families; // the violating tuple when found
    u64 searched = 0;
    bool exhaustive = true;
    bool vacuous = false; // threshold size exceeds the universe
    u128 threshold = 0;   // family size searched: (k-1) n^{r-1} + 1
};

// Search [n]^r for k families of threshold size with no rainbow matching.
// Any larger violating tuple restricts to one at exactly the threshold, so
// an empty exhaustive run settles every size above it; the tuple order
// never matters, so only nondecreasing mask tuples are walked.
inline rainbow_search rainbow_counterexample_search(u64 n, int r, u64 k,
                                                    search_budget budget = {}) {
    if (k == 0) throw parameter_error("k must be positive");
    const ground_space sp{space_kind::partite, n, r};
    const u64 usize = detail::universe_mask_size(sp);
    rainbow_search out;
    out.threshold = checked_add(checked_mul(u128(k - 1), checked_pow(n, unsigned(r - 1))), u128(1));
    if (out.threshold > usize) {
        out.vacuous = true;
        return out;
    }
    const u64 s = u64(out.threshold);

    std::vector<u64> disj(usize, 0);
    for (u64 i = 0; i < usize; ++i) {
        const edge a = sp.unrank(i);
        for (u64 j = 0; j < usize; ++j)
            if (!sp.meets(a, sp.unrank(j))) disj[i] |= u64(1) << j;
    }
    const u64 all_edges = usize == 64 ? ~u64(0) : (u64(1) << usize) - 1;

    std::vector<u64> fams(k, 0);
    auto has_rainbow = [&](auto&& self, std::size_t level, u64 allowed) -> bool {
        if (level == k) return true;
        u64 cand = fams[level] & allowed;
        while (cand) {
            const u64 bit = cand & (~cand + 1);
            const u64 i = u64(__builtin_ctzll(bit));
            if (self(self, level + 1, allowed & disj[i])) return true;
            cand ^= bit;
        }
        return false;
    };
    const u64 limit = u64(1) << usize;
    bool stopped = false;
    auto walk = [&](auto&& self, std::size_t level, u64 from) -> bool {
        // nondecreasing tuples of edge masks, each of popcount s
        if (level == k) {
            ++out.searched;
            if (!has_rainbow(has_rainbow, 0, all_edges)) {
                out.counterexample = true;
                for (u64 f : fams) out.families.push_back(detail::mask_edges(sp, f));
                return true;
            }
            if (out.searched >= budget.max_families) {
                stopped = true;
                return true;
            }
            return false;
        }
        for (u64 mask = from;;) {
            fams[level] = mask;
            if (self(self, level + 1, mask)) return true;
            const u64 next = detail::next_same_popcount(mask);
            if (next >= limit) return false;
            mask = next;
        }
    };
    walk(walk, 0, (u64(1) << s) - 1);
    if (stopped) out.exhaustive = false;
    return out;
}

// Search [n]^r for a pair (F1, F2) with |F1| = s1, |F2| = s2 and no two
// disjoint edges e1 in F1, e2 in F2; the asymmetric-size variant of the
// k = 2 search above.
inline rainbow_search rainbow_pair_search(u64 n, int r, u64 s1, u64 s2,
                                          search_budget budget = {}) {
    const ground_space sp{space_kind::partite, n, r};
    const u64 usize = detail::universe_mask_size(sp);
    rainbow_search out;
    out.threshold = std::max(s1, s2);
    if (s1 > usize || s2 > usize) {
        out.vacuous = true;
        return out;
    }
    if (s1 == 0 || s2 == 0) throw parameter_error("family sizes must be positive");

    std::vector<u64> disj(usize, 0);
    for (u64 i = 0; i < usize; ++i) {
        const edge a = sp.unrank(i);
        for (u64 j = 0; j < usize; ++j)
            if (!sp.meets(a, sp.unrank(j))) disj[i] |= u64(1) << j;
    }
    auto has_rainbow = [&](u64 m1, u64 m2) {
        for (u64 i = 0; i < usize; ++i)
            if (((m1 >> i) & 1) && (m2 & disj[i])) return true;
        return false;
    };

    const u64 limit = u64(1) << usize;
    for (u64 m1 = (u64(1) << s1) - 1; m1 < limit;) {
        for (u64 m2 = (u64(1) << s2) - 1; m2 < limit;) {
            ++out.searched;
            if (!has_rainbow(m1, m2)) {
                out.counterexample = true;
                out.families.push_back(detail::mask_edges(sp, m1));
                out.families.push_back(detail::mask_edges(sp, m2));
                return out;
            }
            if (out.searched >= budget.max_families) {
                out.exhaustive = false;
                return out;
            }
            const u64 next = detail::next_same_popcount(m2);
            if (next >= limit) break;
            m2 = next;
        }
        const u64 next = detail::next_same_popcount(m1);
        if (next >= limit) break;
        m1 = next;
    }
    return out;
}

} // namespace blockade::oracle
