#pragma once

// Partite word calculus. Ground set: [n]^r, the complete r-partite
// hypergraph with n vertices per side; an edge picks one vertex per side,
// and two edges meet iff they agree in some coordinate.
//
// A word w of length m <= r-1 describes the family F_r(w) of edges e
// satisfying
//
//     e_1 = 1  s_1  ( e_2 = 1  s_2  ( ... s_m  e_{m+1} = 1 ))
//
// (atom j is "side j picked its first vertex"). ALPHA is the empty family,
// OMEGA all of [n]^r. The 2^r + 1 admissible words are ordered by in-order
// depth-first search of the binary word tree (AND child, node, OR child);
// this order provably coincides with ordering by family size, which the
// table builder asserts rather than assumes. The family sizes N(i) along
// that order form a self-similar sequence satisfying
//
//     N(2^p + i) = n^p + (n-1) N(i)   for i <= 2^p,
//
// and the maximum blocker size over t-edge families is
// N(2^r - q) where q is the least index with N(q) >= t.

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "table.hpp"
#include "word.hpp"

namespace blockade::seqcore {

// words are short (length <= r-1) but indices reach 2^r, so keep r small
// enough that 2^r fits comfortably in u128 arithmetic
inline constexpr int max_rank = 120;

inline void check_rank(int r) {
    if (r < 1) throw parameter_error("r must be >= 1");
    if (r > max_rank) throw budget_error("r too large for index arithmetic (max 120)");
}

inline void check_side(u64 n) {
    if (n < 2) throw parameter_error("n must be >= 2");
}

inline bool valid_sigma_word(const op_word& w, int r) {
    return !w.is_plain() || w.length() + 1 <= std::size_t(r);
}

// All 2^r + 1 words in order: ALPHA, in-order DFS of words of length
// <= r-1, OMEGA. The empty word lands at index 2^{r-1}.
inline std::vector<op_word> enumerate_sigma(int r, std::size_t max_entries = default_table_cap) {
    check_rank(r);
    if (r > 62 || (std::size_t(1) << r) + 1 > max_entries)
        throw budget_error("sigma table of size 2^" + std::to_string(r) + "+1 exceeds the table budget");
    std::vector<op_word> out;
    out.reserve((std::size_t(1) << r) + 1);
    out.push_back(op_word::alpha());
    std::vector<op> cur;
    auto rec = [&](auto&& self) -> void {
        if (cur.size() + 1 < std::size_t(r)) {
            cur.push_back(op::AND);
            self(self);
            cur.pop_back();
        }
        out.push_back(op_word::plain(cur));
        if (cur.size() + 1 < std::size_t(r)) {
            cur.push_back(op::OR);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    out.push_back(op_word::omega());
    return out;
}

// Word at index i, by the explicit rule from the binary decomposition
// i = 2^{k_0} + ... + 2^{k_s} with k_0 > ... > k_s: the word has length
// r - k_s - 1 and reads as r-1-k_0 ANDs, then for each consecutive exponent
// pair one OR followed by k_{j-1} - k_j - 1 ANDs. Index 0 is ALPHA, 2^r is
// OMEGA. index_of() inverts this by interval bisection; the two routes are
// cross-checked against enumerate_sigma() in the test suite.
inline op_word word_from_index(u128 i, int r) {
    check_rank(r);
    if (i > (u128(1) << r)) throw parameter_error("word index exceeds 2^r");
    if (i == 0) return op_word::alpha();
    if (i == (u128(1) << r)) return op_word::omega();
    std::vector<int> ks; // exponents, descending
    for (int k = r - 1; k >= 0; --k)
        if ((i >> k) & 1) ks.push_back(k);
    std::vector<op> syms;
    syms.reserve(std::size_t(r - ks.back() - 1));
    for (int a = 0; a < r - 1 - ks.front(); ++a) syms.push_back(op::AND);
    for (std::size_t j = 1; j < ks.size(); ++j) {
        syms.push_back(op::OR);
        for (int a = 0; a < ks[j - 1] - ks[j] - 1; ++a) syms.push_back(op::AND);
    }
    return op_word::plain(std::move(syms));
}

// In-order index of a word: bisect [0, 2^r], AND goes left, OR goes right.
inline u128 index_of(const op_word& w, int r) {
    check_rank(r);
    if (!valid_sigma_word(w, r)) throw parameter_error("word longer than r-1");
    if (w.is_alpha()) return 0;
    if (w.is_omega()) return u128(1) << r;
    u128 lo = 0, hi = u128(1) << r;
    for (op s : w.syms) {
        u128 mid = (lo + hi) / 2;
        if (s == op::AND) hi = mid;
        else lo = mid;
    }
    return (lo + hi) / 2;
}

// |F_r(w)| by the size recursion: the empty word counts n^{r-1} edges,
// an AND head restricts to the next side's calculus, an OR head adds the
// n^{r-1} edges with e_1 = 1 plus n-1 copies of the tail family.
inline u128 f_value(const op_word& w, u64 n, int r) {
    check_rank(r);
    check_side(n);
    if (!valid_sigma_word(w, r)) throw parameter_error("word longer than r-1");
    if (w.is_alpha()) return 0;
    if (w.is_omega()) return checked_pow(n, unsigned(r));
    // evaluate from the last symbol outward: acc holds the size of the
    // suffix family at rank r - (number of unconsumed symbols)
    int rank = r - int(w.syms.size());
    u128 acc = checked_pow(n, unsigned(rank - 1));
    for (std::size_t j = w.syms.size(); j-- > 0;) {
        ++rank;
        if (w.syms[j] == op::AND) {
            // acc unchanged: f_rank(AND, tail) = f_{rank-1}(tail)
        } else {
            acc = checked_add(checked_pow(n, unsigned(rank - 1)),
                              checked_mul(u128(n - 1), acc));
        }
    }
    return acc;
}

// Full table of N(i) for i = 0..2^r. Build-time checks (any failure throws
// consistency_error): values strictly increase along the word order, the
// empty word at 2^{r-1} counts n^{r-1}, and the self-similar identity
// N(2^p + i) = n^p + (n-1) N(i) holds for every i <= 2^p <= 2^{r-1}.
inline value_table n_table(u64 n, int r, std::size_t max_entries = default_table_cap) {
    check_side(n);
    auto words = enumerate_sigma(r, max_entries);
    value_table tab;
    tab.n = n;
    tab.r = r;
    tab.entries.reserve(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        const u128 v = f_value(words[i], n, r);
        tab.entries.push_back({u64(i), std::move(words[i]), v});
    }
    for (std::size_t i = 1; i < tab.entries.size(); ++i)
        if (tab.entries[i - 1].value >= tab.entries[i].value)
            throw consistency_error("partite table not strictly increasing at indices " +
                                    std::to_string(i - 1) + "," + std::to_string(i));
    const std::size_t half = tab.entries.size() / 2; // 2^{r-1}
    if (tab.entries[half].value != checked_pow(n, unsigned(r - 1)))
        throw consistency_error("empty word value != n^{r-1}");
    for (std::size_t p = 1; (p << 1) < tab.entries.size(); p <<= 1) {
        const u128 base = tab.entries[p].value;
        for (std::size_t i = 0; i <= p; ++i)
            if (tab.entries[p + i].value != checked_add(base, checked_mul(u128(n - 1), tab.entries[i].value)))
                throw consistency_error("self-similar identity fails at p=" + std::to_string(p) +
                                        " i=" + std::to_string(i));
    }
    return tab;
}

// N(i) in closed form from the binary decomposition i = sum 2^{k_j},
// k_0 > ... > k_s:  N(i) = sum_j n^{k_j} (n-1)^j.
inline u128 n_explicit(u128 i, u64 n, int r) {
    check_rank(r);
    check_side(n);
    if (i > (u128(1) << r)) throw parameter_error("index exceeds 2^r");
    u128 acc = 0;
    unsigned j = 0;
    for (int k = r; k >= 0; --k) {
        if ((i >> k) & 1) {
            acc = checked_add(acc, checked_mul(checked_pow(n, unsigned(k)),
                                               checked_pow(u128(n - 1), j)));
            ++j;
        }
    }
    return acc;
}

// least q with N(q) >= t (so N(q-1) < t <= N(q) for t >= 1, and 0 for t = 0)
inline u64 n_star(u128 t, const value_table& tab) {
    return table_lower_index(tab, t);
}

inline u64 n_star(u128 t, u64 n, int r) {
    return n_star(t, n_table(n, r));
}

// Maximum blocker size b(t) = N(2^r - q) with q the least index such that
// N(q) >= t. The witness family F(word(q)) has at least t edges and its
// blocker is exactly F(word(2^r - q)).
inline blocker_opt blocker_max_partite(u128 t, const value_table& tab) {
    const u64 q = n_star(t, tab);
    const u64 last = tab.entries.back().index; // 2^r
    blocker_opt out;
    out.family_index = q;
    out.family_word = tab.entries[q].word;
    out.blocker_word = tab.entries[last - q].word;
    out.value = tab.entries[last - q].value;
    if (complemented(out.family_word) != out.blocker_word)
        throw consistency_error("complement word mismatch in blocker_max_partite");
    return out;
}

inline blocker_opt blocker_max_partite(u128 t, u64 n, int r) {
    return blocker_max_partite(t, n_table(n, r));
}

} // namespace blockade::seqcore
