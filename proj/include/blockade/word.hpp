#pragma once

// Words over the two-symbol operator alphabet {AND, OR} plus two sentinels:
// ALPHA sits below every word, OMEGA above every word. A word of length m
// encodes the membership condition
//
//     a_1 s_1 (a_2 s_2 ( ... s_m a_{m+1} ))
//
// over m+1 atoms, parenthesized from the right. Both family calculi in this
// library (partite and subsets) are indexed by such words; they differ only
// in which words are admitted and in what the atoms mean. ALPHA denotes the
// empty family, OMEGA the full one.
//
// Text form: '&' for AND, '|' for OR, the empty string for the empty word,
// and the literals "ALPHA" / "OMEGA" for the sentinels.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace blockade {

enum class op : unsigned char { AND, OR };

enum class word_kind : unsigned char { alpha, plain, omega };

struct op_word {
    word_kind kind = word_kind::plain;
    std::vector<op> syms; // empty for sentinels and for the empty word

    static op_word alpha() { return {word_kind::alpha, {}}; }
    static op_word omega() { return {word_kind::omega, {}}; }
    static op_word plain(std::vector<op> s) { return {word_kind::plain, std::move(s)}; }

    bool is_alpha() const { return kind == word_kind::alpha; }
    bool is_omega() const { return kind == word_kind::omega; }
    bool is_plain() const { return kind == word_kind::plain; }
    std::size_t length() const { return syms.size(); }

    friend bool operator==(const op_word&, const op_word&) = default;
};

// Evaluate the membership condition of a plain word against atoms
// p_1..p_{m+1}, supplied as a predicate on the 1-based atom position.
// Right-nested, so evaluation runs from the last atom back.
template <class Atom>
bool eval_word(const std::vector<op>& syms, Atom&& atom) {
    bool acc = atom(syms.size() + 1);
    for (std::size_t j = syms.size(); j-- > 0;)
        acc = (syms[j] == op::AND) ? (atom(j + 1) && acc) : (atom(j + 1) || acc);
    return acc;
}

inline std::size_t count_of(const op_word& w, op s) {
    std::size_t c = 0;
    for (op x : w.syms)
        if (x == s) ++c;
    return c;
}

// swap AND <-> OR and ALPHA <-> OMEGA
inline op_word complemented(const op_word& w) {
    if (w.is_alpha()) return op_word::omega();
    if (w.is_omega()) return op_word::alpha();
    op_word out = w;
    for (op& s : out.syms) s = (s == op::AND) ? op::OR : op::AND;
    return out;
}

inline std::string render_word(const op_word& w) {
    if (w.is_alpha()) return "ALPHA";
    if (w.is_omega()) return "OMEGA";
    std::string s;
    s.reserve(w.syms.size());
    for (op x : w.syms) s.push_back(x == op::AND ? '&' : '|');
    return s;
}

inline op_word parse_word(std::string_view text) {
    if (text == "ALPHA") return op_word::alpha();
    if (text == "OMEGA") return op_word::omega();
    std::vector<op> syms;
    syms.reserve(text.size());
    for (char c : text) {
        if (c == '&') syms.push_back(op::AND);
        else if (c == '|') syms.push_back(op::OR);
        else throw parameter_error("bad word character '" + std::string(1, c) +
                                   "' (expected '&', '|', \"ALPHA\" or \"OMEGA\")");
    }
    return op_word::plain(std::move(syms));
}

} // namespace blockade
