#pragma once

// Hypergraph machinery over two ground spaces:
//   partite  — [n]^r, edges pick one vertex per side (an r-tuple of values
//              in 1..n); two edges meet iff they agree in some coordinate
//   subsets  — all r-subsets of {1..n}; two edges meet iff they intersect
//
// Families are stored as dense bitmasks over canonical edge ranks (partite:
// big-endian mixed radix, so rank order = lexicographic order on tuples;
// subsets: colexicographic rank). Universes larger than the cap are rejected
// with a budget error at construction; BLOCKADE_BUDGET_BITS raises the cap
// in the CLI.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "exact.hpp"
#include "word.hpp"

namespace blockade::hyper {

inline constexpr u64 default_universe_cap = u64(1) << 24;

// process-wide cap on materialized universe bits, overridable at startup
// (the CLI maps BLOCKADE_BUDGET_BITS onto it)
inline u64& universe_cap() {
    static u64 cap = default_universe_cap;
    return cap;
}

enum class space_kind : unsigned char { partite, subsets };

// an edge: r values in 1..n; strictly ascending for subsets spaces
using edge = std::vector<u64>;

// a vertex: side 0 in subsets spaces, 1..r in partite spaces
struct vertex {
    int side = 0;
    u64 value = 0;
    friend bool operator==(const vertex&, const vertex&) = default;
};

struct ground_space {
    space_kind kind = space_kind::partite;
    u64 n = 0;
    int r = 0;

    friend bool operator==(const ground_space&, const ground_space&) = default;

    void check() const {
        if (n < 1 || r < 1) throw parameter_error("ground space needs n >= 1 and r >= 1");
        if (kind == space_kind::subsets && u64(r) > n)
            throw parameter_error("subsets space needs r <= n");
        if (r > 64) throw budget_error("r > 64 unsupported");
    }

    u128 universe_size() const {
        check();
        return kind == space_kind::partite ? checked_pow(n, unsigned(r)) : binomial(n, u64(r));
    }

    bool valid_edge(const edge& e) const {
        if (e.size() != std::size_t(r)) return false;
        for (std::size_t j = 0; j < e.size(); ++j) {
            if (e[j] < 1 || e[j] > n) return false;
            if (kind == space_kind::subsets && j > 0 && e[j] <= e[j - 1]) return false;
        }
        return true;
    }

    u64 rank(const edge& e) const {
        if (!valid_edge(e)) throw parameter_error("edge not valid in this space");
        if (kind == space_kind::partite) {
            u128 acc = 0;
            for (u64 v : e) acc = checked_add(checked_mul(acc, n), u128(v - 1));
            return to_u64(acc, "edge rank");
        }
        u128 acc = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            acc = checked_add(acc, binomial(e[i] - 1, u64(i + 1)));
        return to_u64(acc, "edge rank");
    }

    edge unrank(u64 m) const {
        check();
        edge e(static_cast<std::size_t>(r));
        if (kind == space_kind::partite) {
            u64 rem = m;
            for (int j = r - 1; j >= 0; --j) {
                e[std::size_t(j)] = rem % n + 1;
                rem /= n;
            }
            if (rem != 0) throw parameter_error("edge rank out of range");
            return e;
        }
        u128 rem = m;
        u64 upper = n;
        for (int i = r; i >= 1; --i) {
            u64 c = upper;
            while (binomial(c - 1, u64(i)) > rem) --c; // c >= i always terminates
            e[std::size_t(i - 1)] = c;
            rem -= binomial(c - 1, u64(i));
            upper = c - 1;
        }
        if (rem != 0) throw parameter_error("edge rank out of range");
        return e;
    }

    bool meets(const edge& a, const edge& b) const {
        if (kind == space_kind::partite) {
            for (std::size_t j = 0; j < a.size(); ++j)
                if (a[j] == b[j]) return true;
            return false;
        }
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            (a[i] < b[j]) ? ++i : ++j;
        }
        return false;
    }

    // total number of vertices, for incidence bitmasks
    u64 vertex_bits() const { return kind == space_kind::partite ? n * u64(r) : n; }

    u64 vertex_bit(int side, u64 value) const {
        return kind == space_kind::partite ? u64(side - 1) * n + (value - 1) : value - 1;
    }
};

// small dynamic bitset used for universes and vertex-incidence masks
struct bitvec {
    std::vector<std::uint64_t> w;

    bitvec() = default;
    explicit bitvec(u64 nbits) : w((nbits + 63) / 64, 0) {}

    bool test(u64 i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
    void set(u64 i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }

    bool disjoint(const bitvec& o) const {
        for (std::size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return false;
        return true;
    }
    void or_with(const bitvec& o) {
        for (std::size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    u64 popcount() const {
        u64 c = 0;
        for (auto x : w) c += u64(__builtin_popcountll(x));
        return c;
    }
    friend bool operator==(const bitvec&, const bitvec&) = default;
};

struct hypergraph {
    ground_space space;
    u64 usize = 0; // |U|
    bitvec bits;   // one bit per canonical edge rank

    hypergraph() = default;

    explicit hypergraph(ground_space sp, u64 cap = universe_cap()) : space(sp) {
        const u128 u = sp.universe_size();
        if (u > cap)
            throw budget_error("universe size " + dec_string(u) + " exceeds the cap " + dec_string(cap) +
                               " (raise BLOCKADE_BUDGET_BITS or the budget)");
        usize = u64(u);
        bits = bitvec(usize);
    }

    bool contains(u64 rank) const { return bits.test(rank); }
    bool contains(const edge& e) const { return bits.test(space.rank(e)); }
    void insert(u64 rank) {
        if (rank >= usize) throw parameter_error("edge rank out of range");
        bits.set(rank);
    }
    void insert(const edge& e) { insert(space.rank(e)); }

    u64 count() const { return bits.popcount(); }

    std::vector<u64> ranks() const {
        std::vector<u64> out;
        out.reserve(count());
        for (u64 i = 0; i < usize; ++i)
            if (bits.test(i)) out.push_back(i);
        return out;
    }

    std::vector<edge> edges() const {
        std::vector<edge> out;
        out.reserve(count());
        for (u64 i = 0; i < usize; ++i)
            if (bits.test(i)) out.push_back(space.unrank(i));
        return out;
    }

    friend bool operator==(const hypergraph&, const hypergraph&) = default;
};

inline bitvec vertex_mask(const ground_space& sp, const edge& e) {
    bitvec m(sp.vertex_bits());
    if (sp.kind == space_kind::partite) {
        for (std::size_t j = 0; j < e.size(); ++j) m.set(sp.vertex_bit(int(j + 1), e[j]));
    } else {
        for (u64 v : e) m.set(sp.vertex_bit(0, v));
    }
    return m;
}

// B(F): all edges of the universe meeting every edge of F. B of the empty
// family is the whole universe.
inline hypergraph blocker(const hypergraph& H) {
    hypergraph out(H.space, H.usize ? H.usize : 1);
    const auto fam = H.edges();
    for (u64 i = 0; i < H.usize; ++i) {
        const edge e = H.space.unrank(i);
        bool meets_all = true;
        for (const edge& f : fam)
            if (!H.space.meets(e, f)) {
                meets_all = false;
                break;
            }
        if (meets_all) out.bits.set(i);
    }
    return out;
}

// F_r(w): partite edges satisfying the word condition with atoms
// "coordinate j equals 1"
inline hypergraph materialize_partite_family(const op_word& w, u64 n, int r,
                                             u64 cap = universe_cap()) {
    if (w.is_plain() && w.length() + 1 > std::size_t(r))
        throw parameter_error("word longer than r-1");
    hypergraph out({space_kind::partite, n, r}, cap);
    if (w.is_alpha()) return out;
    for (u64 i = 0; i < out.usize; ++i) {
        if (w.is_omega()) {
            out.bits.set(i);
            continue;
        }
        const edge e = out.space.unrank(i);
        if (eval_word(w.syms, [&](std::size_t j) { return e[j - 1] == 1; }))
            out.bits.set(i);
    }
    return out;
}

namespace detail {

inline u64 match_capacity(const ground_space& sp, u64 picked, u64 used_vertices) {
    if (sp.kind == space_kind::partite) return sp.n - picked; // one value per side per edge
    return (sp.n - used_vertices) / u64(sp.r);
}

inline void matching_rec(const ground_space& sp, const std::vector<bitvec>& masks,
                         std::size_t from, bitvec& used, u64 picked, u64 used_vertices,
                         u64& best) {
    if (picked > best) best = picked;
    if (picked + match_capacity(sp, picked, used_vertices) <= best) return;
    for (std::size_t i = from; i < masks.size(); ++i) {
        if (!used.disjoint(masks[i])) continue;
        bitvec next = used;
        next.or_with(masks[i]);
        matching_rec(sp, masks, i + 1, next, picked + 1, used_vertices + u64(sp.r), best);
    }
}

} // namespace detail

// maximum number of pairwise disjoint edges, by branch and bound
inline u64 matching_number(const hypergraph& H) {
    const auto fam = H.edges();
    std::vector<bitvec> masks;
    masks.reserve(fam.size());
    for (const edge& e : fam) masks.push_back(vertex_mask(H.space, e));
    u64 best = 0;
    bitvec used(H.space.vertex_bits());
    detail::matching_rec(H.space, masks, 0, used, 0, 0, best);
    return best;
}

// One edge from each family, pairwise disjoint, if such a choice exists.
// Families are explored in order of increasing size (ties by input
// position) and edges in ascending rank, so the reported witness is
// deterministic; the result is indexed like the input.
inline std::optional<std::vector<edge>> rainbow_matching(const std::vector<hypergraph>& families) {
    if (families.empty()) return std::vector<edge>{};
    const ground_space sp = families.front().space;
    for (const auto& H : families)
        if (!(H.space == sp)) throw parameter_error("rainbow families must share one ground space");

    std::vector<std::size_t> order(families.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::vector<u64> sizes;
    sizes.reserve(families.size());
    for (const auto& H : families) sizes.push_back(H.count());
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return sizes[a] < sizes[b]; });

    std::vector<std::vector<u64>> fam_ranks;
    fam_ranks.reserve(order.size());
    for (std::size_t i : order) fam_ranks.push_back(families[i].ranks());

    std::vector<u64> picked(order.size(), 0);
    bitvec used(sp.vertex_bits());
    auto rec = [&](auto&& self, std::size_t level, bitvec cur) -> bool {
        if (level == order.size()) return true;
        for (u64 rk : fam_ranks[level]) {
            const bitvec m = vertex_mask(sp, sp.unrank(rk));
            if (!cur.disjoint(m)) continue;
            bitvec next = cur;
            next.or_with(m);
            picked[level] = rk;
            if (self(self, level + 1, next)) return true;
        }
        return false;
    };
    if (!rec(rec, 0, used)) return std::nullopt;
    std::vector<edge> out(families.size());
    for (std::size_t lvl = 0; lvl < order.size(); ++lvl)
        out[order[lvl]] = sp.unrank(picked[lvl]);
    return out;
}

// One compression step: replace y by x (same side) in every edge that
// contains y, misses x, and whose image is not already present. The map is
// injective on the family, so the size is preserved.
inline hypergraph shift_once(const hypergraph& H, vertex x, vertex y) {
    const ground_space& sp = H.space;
    if (sp.kind == space_kind::partite) {
        if (x.side < 1 || x.side > sp.r || y.side < 1 || y.side > sp.r)
            throw parameter_error("shift side out of range");
        if (x.side != y.side) throw parameter_error("shift vertices must lie in the same side");
    } else {
        if (x.side != 0 || y.side != 0)
            throw parameter_error("subsets-space vertices carry side 0");
    }
    if (x.value < 1 || y.value > sp.n || x.value >= y.value)
        throw parameter_error("shift needs 1 <= x < y <= n in the vertex order");

    hypergraph out(sp, H.usize ? H.usize : 1);
    for (u64 i = 0; i < H.usize; ++i) {
        if (!H.bits.test(i)) continue;
        edge e = sp.unrank(i);
        bool moved = false;
        if (sp.kind == space_kind::partite) {
            if (e[std::size_t(x.side - 1)] == y.value) {
                edge img = e;
                img[std::size_t(x.side - 1)] = x.value;
                if (!H.contains(sp.rank(img))) {
                    out.insert(img);
                    moved = true;
                }
            }
        } else {
            const bool has_y = std::find(e.begin(), e.end(), y.value) != e.end();
            const bool has_x = std::find(e.begin(), e.end(), x.value) != e.end();
            if (has_y && !has_x) {
                edge img = e;
                *std::find(img.begin(), img.end(), y.value) = x.value;
                std::sort(img.begin(), img.end());
                if (!H.contains(sp.rank(img))) {
                    out.insert(img);
                    moved = true;
                }
            }
        }
        if (!moved) out.bits.set(i);
    }
    if (out.count() != H.count()) throw consistency_error("shift changed the family size");
    return out;
}

// Apply shifts in a fixed sweep order (sides in index order, then pairs
// (x, y) lexicographic) until a full sweep changes nothing. Terminates
// because every applied shift strictly lowers the sum of edge ranks.
inline hypergraph shift_closure(const hypergraph& H) {
    hypergraph cur = H;
    const int sides_from = cur.space.kind == space_kind::partite ? 1 : 0;
    const int sides_to = cur.space.kind == space_kind::partite ? cur.space.r : 0;
    for (;;) {
        const bitvec before = cur.bits;
        for (int side = sides_from; side <= sides_to; ++side)
            for (u64 x = 1; x < cur.space.n; ++x)
                for (u64 y = x + 1; y <= cur.space.n; ++y)
                    cur = shift_once(cur, {side, x}, {side, y});
        if (cur.bits == before) return cur;
    }
}

// Partition of [n]^r into n^{r-1} perfect matchings: the matching with
// offset tuple (b_2..b_r), offsets 0..n-1 in lexicographic order, holds the
// edges (x, x+b_2, ..., x+b_r) with 1-based wraparound, x = 1..n. The first
// matching is the identity diagonal.
inline std::vector<hypergraph> perfect_matching_decomposition(u64 n, int r,
                                                              u64 cap = universe_cap()) {
    const ground_space sp{space_kind::partite, n, r};
    if (sp.universe_size() > cap)
        throw budget_error("universe too large for matching decomposition");
    std::vector<hypergraph> out;
    std::vector<u64> offs(std::size_t(r - 1), 0);
    bitvec seen(u64(sp.universe_size()));
    for (;;) {
        hypergraph m(sp, cap);
        for (u64 x = 1; x <= n; ++x) {
            edge e(static_cast<std::size_t>(r));
            e[0] = x;
            for (int j = 2; j <= r; ++j) e[std::size_t(j - 1)] = (x - 1 + offs[std::size_t(j - 2)]) % n + 1;
            const u64 rk = sp.rank(e);
            if (seen.test(rk)) throw consistency_error("matchings overlap in the decomposition");
            seen.set(rk);
            m.bits.set(rk);
        }
        out.push_back(std::move(m));
        int j = r - 2;
        while (j >= 0 && offs[std::size_t(j)] == n - 1) offs[std::size_t(j--)] = 0;
        if (j < 0) break;
        ++offs[std::size_t(j)];
    }
    if (seen.popcount() != u64(sp.universe_size()))
        throw consistency_error("matchings do not cover the universe");
    return out;
}

// Split a partite family by its last side: the projections to [n]^{r-1} of
// the edges whose last coordinate is the anchor value 1, and of those whose
// last coordinate is not. After a full shift closure the second family is
// contained in the first.
inline std::pair<hypergraph, hypergraph> last_side_split(const hypergraph& H) {
    if (H.space.kind != space_kind::partite || H.space.r < 2)
        throw parameter_error("last_side_split needs a partite space with r >= 2");
    const ground_space sub{space_kind::partite, H.space.n, H.space.r - 1};
    hypergraph with_anchor(sub), without_anchor(sub);
    for (u64 i = 0; i < H.usize; ++i) {
        if (!H.bits.test(i)) continue;
        edge e = H.space.unrank(i);
        const u64 last = e.back();
        e.pop_back();
        (last == 1 ? with_anchor : without_anchor).insert(e);
    }
    return {std::move(with_anchor), std::move(without_anchor)};
}

} // namespace blockade::hyper
