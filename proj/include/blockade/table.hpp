#pragma once

// A value table maps word indices 0..last to (word, exact value), strictly
// increasing in value. Both the partite table (indices 0..2^r, built by
// seqcore) and the subsets table (indices 0..C(2r,r), built by setfam) use
// this one shape and serialize identically.

#include <cstddef>
#include <vector>

#include "exact.hpp"
#include "word.hpp"

namespace blockade {

struct table_entry {
    u64 index;
    op_word word;
    u128 value;

    friend bool operator==(const table_entry&, const table_entry&) = default;
};

struct value_table {
    u64 n = 0;
    int r = 0;
    std::vector<table_entry> entries;

    friend bool operator==(const value_table&, const value_table&) = default;
};

// default cap on the number of table entries a builder will materialize
inline constexpr std::size_t default_table_cap = (std::size_t(1) << 20) + 2;

// Optimum reported by a blocker-size lookup: the table index of a witness
// family with at least t edges, its word, and the word whose family is the
// blocker. Both calculi fill this the same way.
struct blocker_opt {
    u128 value;          // max blocker size over t-edge families
    u64 family_index;    // index of a family attaining the bound
    op_word family_word; // word of that family, value >= t
    op_word blocker_word;// complement word; its family is the blocker
};

// least index q with value(q) >= t; requires t <= last value.
// With t = 0 this is 0 because the first entry's value is 0.
inline u64 table_lower_index(const value_table& tab, u128 t) {
    std::size_t lo = 0, hi = tab.entries.size() - 1;
    if (t > tab.entries[hi].value)
        throw parameter_error("t exceeds the final table value");
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (tab.entries[mid].value >= t) hi = mid;
        else lo = mid + 1;
    }
    return tab.entries[lo].index;
}

} // namespace blockade
