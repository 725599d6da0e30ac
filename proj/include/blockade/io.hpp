#pragma once

// Serialization: CSV for value tables, JSON for tables, hypergraphs,
// optimum reports, oracle results and cascades. Exact values are written
// as decimal strings, never as JSON numbers, so nothing is rounded.
// Parsers validate shape and content and throw parameter_error on any
// mismatch.

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "errors.hpp"
#include "exact.hpp"
#include "hyper.hpp"
#include "oracle.hpp"
#include "setfam.hpp"
#include "table.hpp"
#include "word.hpp"

namespace blockade::io {

using nlohmann::json;

inline std::string table_csv(const value_table& tab) {
    std::string out = "index,word,value\n";
    for (const auto& e : tab.entries) {
        out += std::to_string(e.index);
        out += ',';
        out += render_word(e.word);
        out += ',';
        out += dec_string(e.value);
        out += '\n';
    }
    return out;
}

inline json table_json(const value_table& tab) {
    json entries = json::array();
    for (const auto& e : tab.entries)
        entries.push_back({{"i", e.index}, {"word", render_word(e.word)}, {"value", dec_string(e.value)}});
    return {{"n", tab.n}, {"r", tab.r}, {"entries", std::move(entries)}};
}

inline json edge_json(const hyper::edge& e) {
    json a = json::array();
    for (u64 v : e) a.push_back(v);
    return a;
}

inline json edges_json(const std::vector<hyper::edge>& es) {
    json a = json::array();
    for (const auto& e : es) a.push_back(edge_json(e));
    return a;
}

inline json hypergraph_json(const hyper::hypergraph& H) {
    return {{"space",
             {{"kind", H.space.kind == hyper::space_kind::partite ? "partite" : "subsets"},
              {"n", H.space.n},
              {"r", H.space.r}}},
            {"edges", edges_json(H.edges())}};
}

namespace detail {

inline const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        throw parameter_error(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

inline u64 uint_field(const json& j, const char* name) {
    const json& f = field(j, name);
    // is_number_integer covers both signed and unsigned storage
    if (!f.is_number_integer() || (!f.is_number_unsigned() && f.get<std::int64_t>() < 0))
        throw parameter_error(std::string("field \"") + name + "\" must be a nonnegative integer");
    return f.get<u64>();
}

inline hyper::edge parse_edge(const json& j) {
    if (!j.is_array()) throw parameter_error("an edge must be an array of integers");
    hyper::edge e;
    for (const json& v : j) {
        if (!v.is_number_integer() || (!v.is_number_unsigned() && v.get<std::int64_t>() < 0))
            throw parameter_error("edge entries must be nonnegative integers");
        e.push_back(v.get<u64>());
    }
    return e;
}

} // namespace detail

inline hyper::hypergraph hypergraph_from_json(const json& j,
                                              u64 cap = hyper::universe_cap()) {
    const json& sp = detail::field(j, "space");
    const json& kind = detail::field(sp, "kind");
    if (!kind.is_string() || (kind != "partite" && kind != "subsets"))
        throw parameter_error("space kind must be \"partite\" or \"subsets\"");
    hyper::ground_space space;
    space.kind = kind == "partite" ? hyper::space_kind::partite : hyper::space_kind::subsets;
    space.n = detail::uint_field(sp, "n");
    const u64 r = detail::uint_field(sp, "r");
    if (r > 64) throw budget_error("r > 64 unsupported");
    space.r = int(r);
    space.check();
    hyper::hypergraph H(space, cap);
    const json& edges = detail::field(j, "edges");
    if (!edges.is_array()) throw parameter_error("\"edges\" must be an array");
    for (const json& je : edges) {
        const hyper::edge e = detail::parse_edge(je);
        if (!space.valid_edge(e))
            throw parameter_error("edge " + je.dump() + " is not valid in this space");
        H.insert(e);
    }
    return H;
}

inline json opt_json(const blocker_opt& o) {
    return {{"value", dec_string(o.value)},
            {"family_index", o.family_index},
            {"family_word", render_word(o.family_word)},
            {"blocker_word", render_word(o.blocker_word)}};
}

inline json oracle_json(const oracle::oracle_result& o) {
    return {{"value", dec_string(o.value)},
            {"witness", edges_json(o.witness)},
            {"exhaustive", o.exhaustive},
            {"searched", o.searched},
            {"reduced", o.reduced}};
}

inline json rainbow_json(const oracle::rainbow_search& s) {
    json out = {{"counterexample", s.counterexample},
                {"searched", s.searched},
                {"exhaustive", s.exhaustive},
                {"vacuous", s.vacuous}};
    out["threshold"] = dec_string(s.threshold);
    if (s.counterexample) {
        json fams = json::array();
        for (const auto& f : s.families) fams.push_back(edges_json(f));
        out["families"] = fams;
    }
    return out;
}

inline json cascade_json(const setfam::cascade_form& c) {
    json chain = json::array();
    for (const auto& b : c.chain) chain.push_back(edge_json(b));
    json pivots = json::array();
    for (u64 x : c.pivots) pivots.push_back(x);
    return {{"k", c.k}, {"chain", std::move(chain)}, {"pivots", std::move(pivots)}};
}

inline setfam::cascade_form cascade_from_json(const json& j) {
    setfam::cascade_form c;
    c.k = detail::uint_field(j, "k");
    const json& chain = detail::field(j, "chain");
    if (!chain.is_array()) throw parameter_error("\"chain\" must be an array of sets");
    for (const json& b : chain) c.chain.push_back(detail::parse_edge(b));
    const json& pivots = detail::field(j, "pivots");
    if (!pivots.is_array()) throw parameter_error("\"pivots\" must be an array of integers");
    for (const json& x : pivots) {
        if (!x.is_number_integer() || (!x.is_number_unsigned() && x.get<std::int64_t>() < 0))
            throw parameter_error("pivots must be nonnegative integers");
        c.pivots.push_back(x.get<u64>());
    }
    return c;
}

inline json cascade_word_json(const setfam::cascade_word& w) {
    json labels = json::array();
    for (u64 v : w.labels) labels.push_back(v);
    json out = {{"word", render_word(w.word)},
                {"labels", std::move(labels)},
                {"truncated", w.truncated}};
    if (w.truncated) out["pivot_set"] = edge_json(w.pivot_set);
    return out;
}

} // namespace blockade::io
