#pragma once

// Exact unsigned arithmetic on 128-bit integers with explicit overflow
// detection. Every table value and count in this library goes through these
// helpers; wraparound is never silent. Values are serialized as decimal
// strings, never as floating point.

#include <cstdint>
#include <string>
#include <string_view>
#include <stdexcept>

#include "errors.hpp"

namespace blockade {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u128 checked_add(u128 a, u128 b) {
    u128 s;
    if (__builtin_add_overflow(a, b, &s)) throw std::overflow_error("128-bit add overflow");
    return s;
}

inline u128 checked_sub(u128 a, u128 b) {
    if (b > a) throw std::overflow_error("128-bit subtraction underflow");
    return a - b;
}

inline u128 checked_mul(u128 a, u128 b) {
    u128 p;
    if (__builtin_mul_overflow(a, b, &p)) throw std::overflow_error("128-bit mul overflow");
    return p;
}

inline u128 checked_pow(u128 base, unsigned exp) {
    u128 acc = 1;
    while (exp) {
        if (exp & 1u) acc = checked_mul(acc, base);
        exp >>= 1;
        if (exp) base = checked_mul(base, base);
    }
    return acc;
}

// C(n, k); 0 when k > n. Intermediate products are overflow-checked and the
// division at step i is exact (the accumulator holds C(n-k+i, i)).
inline u128 binomial(u64 n, u64 k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    u128 acc = 1;
    for (u64 i = 1; i <= k; ++i) {
        acc = checked_mul(acc, u128(n - k + i));
        acc /= i;
    }
    return acc;
}

inline std::string dec_string(u128 v) {
    if (v == 0) return "0";
    char buf[48];
    int pos = 48;
    while (v) {
        buf[--pos] = char('0' + unsigned(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, buf + 48);
}

inline u128 parse_dec(std::string_view s) {
    if (s.empty()) throw parameter_error("empty integer literal");
    u128 v = 0;
    for (char c : s) {
        if (c < '0' || c > '9')
            throw parameter_error("bad digit in integer literal: " + std::string(s));
        v = checked_add(checked_mul(v, 10), u128(c - '0'));
    }
    return v;
}

// narrowing helper for values that must index in-memory structures
inline u64 to_u64(u128 v, const char* what) {
    if (v > u128(~std::uint64_t(0))) throw std::overflow_error(std::string(what) + " exceeds 64 bits");
    return u64(v);
}

} // namespace blockade
