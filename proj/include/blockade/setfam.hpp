#pragma once

// The subsets calculus: families of r-subsets of {1..n} indexed by operator
// words with fewer than r ANDs and fewer than r ORs (plus the sentinels),
// C(2r,r)+1 words in all. The atoms of a word of length m are the
// memberships "1 in E", ..., "m+1 in E". Word order is lexicographic with a
// terminator sorting between AND and OR, which the enumerator realizes as an
// in-order walk. The M table lists the family sizes in word order; the
// blocker maximum b(t) over t-edge families is read off the table by the
// same index reflection as in the partite calculus.
//
// Also here: shadows, the blocker through the shadow of the complement
// family, cascade-shaped families, and the labeled word that describes the
// blocker of a cascade's complement family.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "hyper.hpp"
#include "table.hpp"
#include "word.hpp"

namespace blockade::setfam {

using hyper::edge;
using hyper::ground_space;
using hyper::hypergraph;
using hyper::space_kind;

inline void check_rank(int r) {
    if (r < 1) throw parameter_error("r must be at least 1");
}

// plain theta words carry fewer than r ANDs and fewer than r ORs
inline bool valid_theta_word(const op_word& w, int r) {
    if (!w.is_plain()) return true;
    return count_of(w, op::AND) < std::size_t(r) && count_of(w, op::OR) < std::size_t(r);
}

// All C(2r,r)+1 words in table order, ALPHA first, OMEGA last. In-order
// walk: go AND-ward while ANDs remain, emit the node, then OR-ward.
inline std::vector<op_word> enumerate_theta(int r, std::size_t max_entries = default_table_cap) {
    check_rank(r);
    const u128 expected = checked_add(binomial(2 * u64(r), u64(r)), u128(1));
    if (expected > max_entries)
        throw budget_error("theta table for r=" + std::to_string(r) + " has " +
                           dec_string(expected) + " entries, over the cap of " +
                           std::to_string(max_entries));
    std::vector<op_word> out;
    out.reserve(std::size_t(expected));
    out.push_back(op_word::alpha());
    std::vector<op> cur;
    std::size_t ands = 0, ors = 0;
    auto rec = [&](auto&& self) -> void {
        if (ands + 1 < std::size_t(r)) {
            cur.push_back(op::AND);
            ++ands;
            self(self);
            cur.pop_back();
            --ands;
        }
        out.push_back(op_word::plain(cur));
        if (ors + 1 < std::size_t(r)) {
            cur.push_back(op::OR);
            ++ors;
            self(self);
            cur.pop_back();
            --ors;
        }
    };
    rec(rec);
    out.push_back(op_word::omega());
    if (out.size() != std::size_t(expected))
        throw consistency_error("theta enumeration produced " + std::to_string(out.size()) +
                                " words, expected " + dec_string(expected));
    return out;
}

// |T(w)| in C([n],r) without materializing: a suffix scan counts the
// membership patterns of the m+1 named elements that satisfy the condition,
// by pattern size; each pattern extends by any r-p of the other n-m-1
// elements.
inline u128 t_value(const op_word& w, u64 n, int r) {
    check_rank(r);
    if (n < u64(r)) throw parameter_error("subsets space needs r <= n");
    if (w.is_alpha()) return 0;
    if (w.is_omega()) return binomial(n, u64(r));
    const std::size_t m = w.length();
    if (m + 1 > n) throw parameter_error("word of length " + std::to_string(m) +
                                         " names elements beyond n=" + std::to_string(n));
    // cnt_true[p] / cnt_false[p]: patterns of the atoms j..m+1 of size p
    // under which the suffix condition from atom j evaluates true / false
    std::vector<u64> cnt_true(m + 2, 0), cnt_false(m + 2, 0);
    cnt_true[1] = 1;
    cnt_false[0] = 1;
    for (std::size_t j = m; j >= 1; --j) {
        std::vector<u64> nt(m + 2, 0), nf(m + 2, 0);
        for (std::size_t p = 0; p <= m + 1 - j; ++p) {
            if (w.syms[j - 1] == op::AND) {
                nt[p + 1] += cnt_true[p];
                nf[p + 1] += cnt_false[p];
                nf[p] += cnt_true[p] + cnt_false[p];
            } else {
                nt[p + 1] += cnt_true[p] + cnt_false[p];
                nt[p] += cnt_true[p];
                nf[p] += cnt_false[p];
            }
        }
        cnt_true.swap(nt);
        cnt_false.swap(nf);
    }
    u128 total = 0;
    for (std::size_t p = 0; p <= m + 1 && p <= std::size_t(r); ++p)
        if (cnt_true[p])
            total = checked_add(total, checked_mul(u128(cnt_true[p]),
                                                   binomial(n - (m + 1), u64(r) - p)));
    return total;
}

// M table: the word list in order with t-values. Strict ascent holds from
// n >= 2r on; at n = 2r-1 the words still apply but values repeat, which is
// reported as a parameter error naming the first flat step.
inline value_table m_table(u64 n, int r, std::size_t max_entries = default_table_cap) {
    check_rank(r);
    if (n < 2 * u64(r) - 1)
        throw parameter_error("m_table needs n >= 2r-1 so every word applies");
    auto words = enumerate_theta(r, max_entries);
    value_table tab;
    tab.n = n;
    tab.r = r;
    tab.entries.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        const u128 v = t_value(words[i], n, r);
        tab.entries.push_back({u64(i), std::move(words[i]), v});
    }
    for (std::size_t i = 1; i < tab.entries.size(); ++i)
        if (!(tab.entries[i - 1].value < tab.entries[i].value)) {
            const std::string msg = "M values are not strictly ascending at indices " +
                                    std::to_string(i - 1) + " and " + std::to_string(i);
            if (n == 2 * u64(r) - 1)
                throw parameter_error(msg + " (n = 2r-1 is too small for a lookup table)");
            throw consistency_error(msg);
        }
    // landmark rows pin the order and the values in one check per end
    const u64 last = u64(tab.entries.size() - 1); // C(2r,r)
    for (int i = 1; i <= r; ++i) {
        const u64 lo = to_u64(binomial(2 * u64(r) - u64(i), u64(r)), "landmark index");
        const u64 hi = last - to_u64(binomial(2 * u64(r) - u64(i), u64(r) - u64(i)),
                                     "landmark index");
        const op_word lo_word = op_word::plain(std::vector<op>(std::size_t(i - 1), op::AND));
        const op_word hi_word = op_word::plain(std::vector<op>(std::size_t(i - 1), op::OR));
        if (tab.entries[lo].word != lo_word || tab.entries[hi].word != hi_word)
            throw consistency_error("landmark word out of place at i=" + std::to_string(i));
        if (tab.entries[lo].value != binomial(n - u64(i), u64(r) - u64(i)))
            throw consistency_error("landmark value mismatch at index " + std::to_string(lo));
        u128 tail = 0;
        for (u64 j = 1; j <= u64(i); ++j)
            tail = checked_add(tail, binomial(n - j, u64(r) - 1));
        if (tab.entries[hi].value != tail)
            throw consistency_error("landmark value mismatch at index " + std::to_string(hi));
    }
    return tab;
}

// T(w) with explicit atom vertices: atom j is "labels[j-1] in E". Labels
// must be distinct values in 1..n, one per atom; sentinels take no labels.
inline hypergraph materialize_labeled(const op_word& w, const std::vector<u64>& labels, u64 n,
                                      int r, u64 cap = hyper::universe_cap()) {
    hypergraph out({space_kind::subsets, n, r}, cap);
    const std::size_t atoms = w.is_plain() ? w.length() + 1 : 0;
    if (labels.size() != atoms)
        throw parameter_error("label count does not match the word's atom count");
    for (std::size_t a = 0; a < labels.size(); ++a) {
        if (labels[a] < 1 || labels[a] > n) throw parameter_error("label out of range");
        for (std::size_t b = a + 1; b < labels.size(); ++b)
            if (labels[a] == labels[b]) throw parameter_error("labels must be distinct");
    }
    if (w.is_alpha()) return out;
    for (u64 i = 0; i < out.usize; ++i) {
        if (w.is_omega()) {
            out.bits.set(i);
            continue;
        }
        const edge e = out.space.unrank(i);
        auto has = [&](u64 v) { return std::binary_search(e.begin(), e.end(), v); };
        if (eval_word(w.syms, [&](std::size_t j) { return has(labels[j - 1]); }))
            out.bits.set(i);
    }
    return out;
}

// T(w) with the canonical atoms 1..m+1
inline hypergraph materialize_subset_family(const op_word& w, u64 n, int r,
                                            u64 cap = hyper::universe_cap()) {
    std::vector<u64> labels;
    if (w.is_plain())
        for (u64 v = 1; v <= u64(w.length()) + 1; ++v) labels.push_back(v);
    return materialize_labeled(w, labels, n, r, cap);
}

// b(t) over t-edge families of r-subsets: with i the least index such that
// M(i) >= t, the maximum is M(C(2r,r) - i), witnessed by the family of the
// word at i, whose blocker is the family of the complemented word.
inline blocker_opt blocker_max_subsets(u128 t, const value_table& tab) {
    const u64 i = table_lower_index(tab, t);
    const u64 last = tab.entries.back().index; // C(2r,r)
    blocker_opt out;
    out.family_index = i;
    out.family_word = tab.entries[i].word;
    out.blocker_word = tab.entries[last - i].word;
    out.value = tab.entries[last - i].value;
    if (complemented(out.family_word) != out.blocker_word)
        throw consistency_error("complement word mismatch in blocker_max_subsets");
    return out;
}

inline blocker_opt blocker_max_subsets(u128 t, u64 n, int r) {
    return blocker_max_subsets(t, m_table(n, r));
}

// complements within {1..n} of all edges of a subsets family, in rank order
inline std::vector<edge> set_complements(const hypergraph& H) {
    if (H.space.kind != space_kind::subsets)
        throw parameter_error("set_complements needs a subsets space");
    std::vector<edge> out;
    for (const edge& e : H.edges()) {
        edge c;
        c.reserve(std::size_t(H.space.n) - e.size());
        std::size_t k = 0;
        for (u64 v = 1; v <= H.space.n; ++v) {
            if (k < e.size() && e[k] == v) ++k;
            else c.push_back(v);
        }
        out.push_back(std::move(c));
    }
    return out;
}

// all r-subsets of the given member sets (members of size < r contribute
// nothing); members must be strictly ascending within 1..n
inline hypergraph shadow(u64 n, int r, const std::vector<edge>& members,
                         u64 cap = hyper::universe_cap()) {
    hypergraph out({space_kind::subsets, n, r}, cap);
    for (const edge& f : members) {
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (f[j] < 1 || f[j] > n) throw parameter_error("member element out of range");
            if (j > 0 && f[j] <= f[j - 1]) throw parameter_error("member sets must ascend");
        }
        if (f.size() < std::size_t(r)) continue;
        std::vector<std::size_t> pick(static_cast<std::size_t>(r));
        for (std::size_t j = 0; j < pick.size(); ++j) pick[j] = j;
        for (;;) {
            edge e(pick.size());
            for (std::size_t j = 0; j < pick.size(); ++j) e[j] = f[pick[j]];
            out.insert(e);
            std::size_t j = pick.size();
            while (j-- > 0)
                if (pick[j] != f.size() - pick.size() + j) break;
            if (j == std::size_t(-1)) break;
            ++pick[j];
            for (std::size_t q = j + 1; q < pick.size(); ++q) pick[q] = pick[q - 1] + 1;
        }
    }
    return out;
}

// B(H) through the complement shadow: the blocker is exactly the set of
// r-subsets missing from the r-shadow of the complement family. Needs
// 2r <= n so the complements are at least r big.
inline hypergraph blocker_via_shadow(const hypergraph& H) {
    if (H.space.kind != space_kind::subsets)
        throw parameter_error("blocker_via_shadow needs a subsets space");
    if (2 * u64(H.space.r) > H.space.n)
        throw parameter_error("blocker_via_shadow needs 2r <= n");
    const hypergraph sh = shadow(H.space.n, H.space.r, set_complements(H));
    hypergraph out(H.space);
    for (u64 i = 0; i < out.usize; ++i)
        if (!sh.bits.test(i)) out.bits.set(i);
    return out;
}

// A family of k-subsets in cascade form: with B_0 = {1..n},
//
//   F = C(B_1,k)  u  x_1*C(B_2,k-1)  u  ...  u  x_1*..*x_s*C(B_{s+1},k-s)
//
// where B_0 >= B_1 > B_2 > ... > B_{s+1} (strict from B_1 on), each pivot
// x_i lies in B_{i-1} but not B_i, and the last block is nonempty. chain
// holds B_1..B_{s+1}, pivots holds x_1..x_s.
struct cascade_form {
    u64 k = 0;
    std::vector<edge> chain;
    std::vector<u64> pivots;
};

inline void validate_cascade(u64 n, const cascade_form& form) {
    if (n < 1 || form.k < 1) throw parameter_error("cascade needs n >= 1 and k >= 1");
    if (form.chain.empty() || form.pivots.size() + 1 != form.chain.size())
        throw parameter_error("cascade chain must hold one more set than there are pivots");
    const std::size_t s = form.pivots.size();
    if (form.k < s) throw parameter_error("cascade has more pivots than its uniformity");
    for (const edge& b : form.chain)
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] < 1 || b[j] > n) throw parameter_error("chain element out of range");
            if (j > 0 && b[j] <= b[j - 1]) throw parameter_error("chain sets must ascend");
        }
    for (std::size_t i = 1; i < form.chain.size(); ++i) {
        const edge& hi = form.chain[i - 1];
        const edge& lo = form.chain[i];
        if (lo.size() >= hi.size() || !std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()))
            throw parameter_error("chain must strictly nest");
    }
    for (std::size_t i = 0; i < s; ++i) {
        const u64 x = form.pivots[i];
        if (x < 1 || x > n) throw parameter_error("pivot out of range");
        const edge& lo = form.chain[i];
        if (std::binary_search(lo.begin(), lo.end(), x))
            throw parameter_error("pivot " + std::to_string(x) + " lies in its lower chain set");
        if (i > 0) {
            const edge& hi = form.chain[i - 1];
            if (!std::binary_search(hi.begin(), hi.end(), x))
                throw parameter_error("pivot " + std::to_string(x) +
                                      " is missing from its upper chain set");
        }
    }
    if (form.chain.back().size() < form.k - s)
        throw parameter_error("final cascade block is empty");
}

inline hypergraph cascade_build(u64 n, const cascade_form& form,
                                u64 cap = hyper::universe_cap()) {
    validate_cascade(n, form);
    hypergraph out({space_kind::subsets, n, int(form.k)}, cap);
    u128 expected = 0;
    edge prefix;
    for (std::size_t i = 0; i < form.chain.size(); ++i) {
        const edge& b = form.chain[i];
        const u64 take = form.k - u64(i);
        expected = checked_add(expected, binomial(u64(b.size()), take));
        if (take == 0) {
            edge e = prefix;
            std::sort(e.begin(), e.end());
            out.insert(e);
        } else if (b.size() >= take) {
            std::vector<std::size_t> pick(static_cast<std::size_t>(take));
            for (std::size_t j = 0; j < pick.size(); ++j) pick[j] = j;
            for (;;) {
                edge e = prefix;
                for (std::size_t idx : pick) e.push_back(b[idx]);
                std::sort(e.begin(), e.end());
                out.insert(e);
                std::size_t j = pick.size();
                while (j-- > 0)
                    if (pick[j] != b.size() - pick.size() + j) break;
                if (j == std::size_t(-1)) break;
                ++pick[j];
                for (std::size_t q = j + 1; q < pick.size(); ++q) pick[q] = pick[q - 1] + 1;
            }
        }
        if (i < form.pivots.size()) prefix.push_back(form.pivots[i]);
    }
    if (u128(out.count()) != expected)
        throw consistency_error("cascade blocks overlap; the family is smaller than its blocks");
    return out;
}

// The labeled condition word for the blocker of the complement family of a
// cascade: with F of uniformity k in cascade form, H the family of the
// (n-k)-subset complements of F's edges, and r = n-k, B(H) is the labeled
// family of `word`, unless `truncated`. The word lists, level by level, the
// members of B_i minus the next chain set and its pivot (OR atoms), then
// the pivot itself (AND); the last level lists all of B_s minus B_{s+1}.
// When at least r pivots exist the word is cut after pivot x_r; the cut
// drops only the distinction at the single edge {x_1..x_r}, so then the
// labeled family is B(H) together with that edge.
struct cascade_word {
    op_word word;
    std::vector<u64> labels;
    bool truncated = false;
    edge pivot_set; // {x_1..x_r}, sorted, when truncated
};

inline cascade_word cascade_blocker_word(u64 n, const cascade_form& form) {
    validate_cascade(n, form);
    if (form.k >= n) throw parameter_error("cascade uniformity must stay below n");
    const u64 r = n - form.k;
    if (r > form.k) throw parameter_error("needs r = n-k at most k, so 2k >= n");

    edge full(static_cast<std::size_t>(n));
    for (u64 v = 1; v <= n; ++v) full[std::size_t(v - 1)] = v;
    if (form.chain.front() == full) return {op_word::alpha(), {}, false, {}};

    const std::size_t s = form.pivots.size();
    std::vector<u64> labels;
    std::vector<op> syms;
    auto minus = [](const edge& a, const edge& b, u64 skip) {
        edge out;
        for (u64 v : a)
            if (v != skip && !std::binary_search(b.begin(), b.end(), v)) out.push_back(v);
        return out;
    };
    for (std::size_t i = 0; i < s; ++i) {
        const edge& upper = i == 0 ? full : form.chain[i - 1];
        for (u64 z : minus(upper, form.chain[i], form.pivots[i])) {
            labels.push_back(z);
            syms.push_back(op::OR);
        }
        labels.push_back(form.pivots[i]);
        syms.push_back(op::AND);
    }
    const edge& upper = s == 0 ? full : form.chain[s - 1];
    for (u64 w : minus(upper, form.chain[s], 0)) {
        labels.push_back(w);
        syms.push_back(op::OR);
    }
    syms.pop_back(); // the final atom carries no connective

    cascade_word out;
    if (s >= r) {
        // atom position of pivot x_r, 1-based
        std::size_t pos = 0, pivots_seen = 0;
        for (std::size_t a = 0; a < labels.size(); ++a)
            if (a < syms.size() && syms[a] == op::AND && ++pivots_seen == r) {
                pos = a + 1;
                break;
            }
        labels.resize(pos);
        syms.resize(pos - 1);
        out.truncated = true;
        out.pivot_set.assign(form.pivots.begin(), form.pivots.begin() + std::ptrdiff_t(r));
        std::sort(out.pivot_set.begin(), out.pivot_set.end());
    }
    out.word = op_word::plain(std::move(syms));
    out.labels = std::move(labels);
    return out;
}

} // namespace blockade::setfam
