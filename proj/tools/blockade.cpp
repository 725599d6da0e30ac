// blockade: exact tables, blocker maxima, family materialization, invariant
// suites, and brute-force oracles over partite and subset ground spaces.
//
// Exit codes: 0 success, 2 usage or parameter error, 3 budget exceeded
// (partial JSON is still emitted when a search stopped early), 4 internal
// consistency failure (a cross-check or invariant suite disagreed).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "blockade/errors.hpp"
#include "blockade/exact.hpp"
#include "blockade/hyper.hpp"
#include "blockade/io.hpp"
#include "blockade/oracle.hpp"
#include "blockade/seqcore.hpp"
#include "blockade/setfam.hpp"
#include "blockade/table.hpp"
#include "blockade/verify.hpp"
#include "blockade/word.hpp"

using namespace blockade;
using nlohmann::json;

namespace {

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw parameter_error("cannot open output file \"" + path + "\"");
    f << text;
}

std::string read_all(const std::string& path) {
    std::ostringstream ss;
    if (path.empty() || path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw parameter_error("cannot open input file \"" + path + "\"");
        ss << f.rdbuf();
    }
    return ss.str();
}

std::string edges_csv(const std::vector<hyper::edge>& edges) {
    std::string out;
    for (const auto& e : edges) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(e[i]);
        }
        out += '\n';
    }
    return out;
}

struct common_opts {
    std::string space = "partite";
    u64 n = 0;
    int r = 0;
    std::string format = "csv";
    std::string output;
};

void add_format(CLI::App* cmd, common_opts& o) {
    cmd->add_option("--format", o.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("-o,--output", o.output, "output file (default: stdout)");
}

value_table table_for(const common_opts& o) {
    return o.space == "partite" ? seqcore::n_table(o.n, o.r) : setfam::m_table(o.n, o.r);
}

} // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("BLOCKADE_BUDGET_BITS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') {
            std::cerr << "error: parameter: BLOCKADE_BUDGET_BITS must be an unsigned integer\n";
            return 2;
        }
        hyper::universe_cap() = v;
    }

    CLI::App app{"exact blocker computations over partite and subset ground spaces"};
    app.require_subcommand(1);
    int rc = 0;

    // table / mtable
    common_opts topt;
    auto* table_cmd = app.add_subcommand("table", "emit the indexed word/value table");
    table_cmd->add_option("--space", topt.space, "partite|subsets")
        ->required()
        ->check(CLI::IsMember({"partite", "subsets"}));
    table_cmd->add_option("-n", topt.n, "side size / ground-set size")->required();
    table_cmd->add_option("-r", topt.r, "rank")->required();
    add_format(table_cmd, topt);
    table_cmd->callback([&] {
        const auto tab = table_for(topt);
        emit(topt.output,
             topt.format == "csv" ? io::table_csv(tab) : io::table_json(tab).dump(2) + "\n");
    });

    common_opts mopt;
    mopt.space = "subsets";
    auto* mtable_cmd = app.add_subcommand("mtable", "emit the subsets table (table --space subsets)");
    mtable_cmd->add_option("-n", mopt.n, "ground-set size")->required();
    mtable_cmd->add_option("-r", mopt.r, "rank")->required();
    add_format(mtable_cmd, mopt);
    mtable_cmd->callback([&] {
        const auto tab = setfam::m_table(mopt.n, mopt.r);
        emit(mopt.output,
             mopt.format == "csv" ? io::table_csv(tab) : io::table_json(tab).dump(2) + "\n");
    });

    // blocker-max
    common_opts bopt;
    u64 bopt_t = 0;
    auto* bmax_cmd = app.add_subcommand("blocker-max",
                                        "largest blocker over families of at least t edges");
    bmax_cmd->add_option("--space", bopt.space, "partite|subsets")
        ->required()
        ->check(CLI::IsMember({"partite", "subsets"}));
    bmax_cmd->add_option("-n", bopt.n, "side size / ground-set size")->required();
    bmax_cmd->add_option("-r", bopt.r, "rank")->required();
    bmax_cmd->add_option("-t", bopt_t, "minimum family size")->required();
    add_format(bmax_cmd, bopt);
    bmax_cmd->callback([&] {
        const blocker_opt opt = bopt.space == "partite"
                                    ? seqcore::blocker_max_partite(bopt_t, bopt.n, bopt.r)
                                    : setfam::blocker_max_subsets(bopt_t, bopt.n, bopt.r);
        if (bopt.format == "csv") {
            std::string out = "t,value,family_index,family_word,blocker_word\n";
            out += std::to_string(bopt_t) + ',' + dec_string(opt.value) + ',' +
                   std::to_string(opt.family_index) + ',' + render_word(opt.family_word) + ',' +
                   render_word(opt.blocker_word) + '\n';
            emit(bopt.output, out);
        } else {
            json j = io::opt_json(opt);
            j["t"] = bopt_t;
            emit(bopt.output, j.dump(2) + "\n");
        }
    });

    // family
    common_opts fopt;
    fopt.format = "json";
    std::string fopt_word;
    auto* family_cmd = app.add_subcommand("family", "materialize the family named by a word");
    family_cmd->add_option("--space", fopt.space, "partite|subsets")
        ->required()
        ->check(CLI::IsMember({"partite", "subsets"}));
    family_cmd->add_option("-n", fopt.n, "side size / ground-set size")->required();
    family_cmd->add_option("-r", fopt.r, "rank")->required();
    family_cmd
        ->add_option("--word", fopt_word,
                     "word over & and |, or ALPHA / OMEGA; empty string for the empty word")
        ->required();
    add_format(family_cmd, fopt);
    family_cmd->callback([&] {
        const op_word w = parse_word(fopt_word);
        const auto H = fopt.space == "partite"
                           ? hyper::materialize_partite_family(w, fopt.n, fopt.r)
                           : setfam::materialize_subset_family(w, fopt.n, fopt.r);
        emit(fopt.output, fopt.format == "csv" ? edges_csv(H.edges())
                                               : io::hypergraph_json(H).dump(2) + "\n");
    });

    // blocker
    common_opts kopt;
    kopt.format = "json";
    std::string kopt_input;
    auto* blocker_cmd =
        app.add_subcommand("blocker", "blocker of a hypergraph read as JSON from a file or stdin");
    blocker_cmd->add_option("-i,--input", kopt_input, "input file (default: stdin)");
    blocker_cmd->add_option("--format", kopt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    blocker_cmd->add_option("-o,--output", kopt.output, "output file (default: stdout)");
    blocker_cmd->callback([&] {
        const auto H = io::hypergraph_from_json(json::parse(read_all(kopt_input)));
        const auto B = hyper::blocker(H);
        emit(kopt.output, kopt.format == "csv" ? edges_csv(B.edges())
                                               : io::hypergraph_json(B).dump(2) + "\n");
    });

    // verify
    std::string suite;
    u64 vopt_n = 0;
    int vopt_r = 0;
    u64 seed = verify::default_seed;
    u64 vbudget = oracle::search_budget{}.max_families;
    auto* verify_cmd = app.add_subcommand("verify", "run a named invariant suite");
    verify_cmd
        ->add_option("suite", suite,
                     "lemma18|knuth|fractal|product|demorgan|landmarks|theorem-bisa|shifting|"
                     "g-lemma|rainbow-k2")
        ->required();
    auto* vn = verify_cmd->add_option("-n", vopt_n, "grid point override: side/ground-set size");
    auto* vr = verify_cmd->add_option("-r", vopt_r, "grid point override: rank");
    vn->needs(vr);
    vr->needs(vn);
    verify_cmd->add_option("--seed", seed, "seed for randomized suites");
    verify_cmd->add_option("--budget", vbudget, "max families searched per oracle call");
    verify_cmd->callback([&] {
        std::optional<verify::grid_point> point;
        if (*vn) point = verify::grid_point{vopt_n, vopt_r};
        const auto rep = verify::run_suite(suite, point, {vbudget}, seed);
        std::string out;
        for (const auto& c : rep.checks) {
            out += c.pass ? "PASS " : "FAIL ";
            out += c.name;
            if (!c.pass && !c.detail.empty()) out += ": " + c.detail;
            out += '\n';
        }
        std::size_t passed = 0;
        for (const auto& c : rep.checks) passed += c.pass;
        out += "suite " + rep.suite + ": " + std::to_string(passed) + "/" +
               std::to_string(rep.checks.size()) + " checks passed\n";
        std::cout << out;
        if (!rep.all_pass()) rc = 4;
    });

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force searches with cross-checks");
    oracle_cmd->require_subcommand(1);
    // inherited by the subcommands, so --budget may follow the subcommand name
    oracle_cmd->fallthrough();
    u64 obudget = oracle::search_budget{}.max_families;
    oracle_cmd->add_option("--budget", obudget, "max families searched")
        ->capture_default_str();

    common_opts oopt;
    oopt.format = "json";
    u64 oopt_t = 0, oopt_k = 0, oopt_m = 0;

    auto* ob = oracle_cmd->add_subcommand("blocker-max", "exhaustive blocker maximum");
    ob->add_option("--space", oopt.space, "partite|subsets")
        ->required()
        ->check(CLI::IsMember({"partite", "subsets"}));
    ob->add_option("-n", oopt.n, "side size / ground-set size")->required();
    ob->add_option("-r", oopt.r, "rank")->required();
    ob->add_option("-t", oopt_t, "minimum family size")->required();
    ob->add_option("-o,--output", oopt.output, "output file (default: stdout)");
    ob->callback([&] {
        const hyper::ground_space sp{oopt.space == "partite" ? hyper::space_kind::partite
                                                             : hyper::space_kind::subsets,
                                     oopt.n, oopt.r};
        const auto res = oracle::brute_blocker_max(sp, oopt_t, {obudget});
        json j = io::oracle_json(res);
        j["op"] = "blocker-max";
        std::optional<u128> closed;
        if (res.exhaustive) {
            try {
                closed = oopt.space == "partite"
                             ? seqcore::blocker_max_partite(oopt_t, oopt.n, oopt.r).value
                             : setfam::blocker_max_subsets(oopt_t, oopt.n, oopt.r).value;
            } catch (const parameter_error&) {
                // closed form not applicable at these parameters
            }
        }
        if (closed) j["closed_form"] = dec_string(*closed);
        emit(oopt.output, j.dump(2) + "\n");
        if (!res.exhaustive) {
            rc = 3;
        } else if (closed) {
            const bool agree = *closed == res.value;
            std::cout << (agree ? "AGREE\n" : "DISAGREE\n");
            if (!agree) rc = 4;
        }
    });

    auto* om = oracle_cmd->add_subcommand("min-shadow",
                                          "minimum shadow size over m-edge k-uniform families");
    om->add_option("-n", oopt.n, "ground-set size")->required();
    om->add_option("-k", oopt_k, "edge size")->required();
    om->add_option("-m", oopt_m, "family size")->required();
    om->add_option("-r", oopt.r, "shadow rank")->required();
    om->add_option("-o,--output", oopt.output, "output file (default: stdout)");
    om->callback([&] {
        const auto res = oracle::brute_min_shadow(oopt.n, oopt_k, oopt_m, oopt.r, {obudget});
        json j = io::oracle_json(res);
        j["op"] = "min-shadow";
        emit(oopt.output, j.dump(2) + "\n");
        if (!res.exhaustive) rc = 3;
    });

    auto* oe = oracle_cmd->add_subcommand(
        "extremal", "largest family without k pairwise disjoint edges");
    oe->add_option("--space", oopt.space, "partite|subsets")
        ->required()
        ->check(CLI::IsMember({"partite", "subsets"}));
    oe->add_option("-n", oopt.n, "side size / ground-set size")->required();
    oe->add_option("-r", oopt.r, "rank")->required();
    oe->add_option("-k", oopt_k, "forbidden matching size")->required();
    oe->add_option("-o,--output", oopt.output, "output file (default: stdout)");
    oe->callback([&] {
        const hyper::ground_space sp{oopt.space == "partite" ? hyper::space_kind::partite
                                                             : hyper::space_kind::subsets,
                                     oopt.n, oopt.r};
        const auto res = oracle::brute_extremal_matching_number(sp, oopt_k, {obudget});
        json j = io::oracle_json(res);
        j["op"] = "extremal";
        std::optional<u128> closed;
        if (res.exhaustive && oopt.space == "partite")
            closed = checked_mul(u128(oopt_k - 1), checked_pow(oopt.n, unsigned(oopt.r - 1)));
        if (closed) j["closed_form"] = dec_string(*closed);
        emit(oopt.output, j.dump(2) + "\n");
        if (!res.exhaustive) {
            rc = 3;
        } else if (closed) {
            const bool agree = *closed == res.value;
            std::cout << (agree ? "AGREE\n" : "DISAGREE\n");
            if (!agree) rc = 4;
        }
    });

    auto* og = oracle_cmd->add_subcommand(
        "rainbow", "search k threshold-size partite families without a rainbow matching");
    og->add_option("-n", oopt.n, "side size")->required();
    og->add_option("-r", oopt.r, "rank")->required();
    og->add_option("-k", oopt_k, "number of families")->required();
    og->add_option("-o,--output", oopt.output, "output file (default: stdout)");
    og->callback([&] {
        const auto res = oracle::rainbow_counterexample_search(oopt.n, oopt.r, oopt_k, {obudget});
        json j = io::rainbow_json(res);
        j["op"] = "rainbow";
        emit(oopt.output, j.dump(2) + "\n");
        if (!res.exhaustive) {
            rc = 3;
        } else {
            std::cout << (res.vacuous ? "vacuous\n"
                                      : res.counterexample ? "counterexample\n" : "verified\n");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const parameter_error& e) {
        std::cerr << "error: parameter: " << e.what() << "\n";
        return 2;
    } catch (const budget_error& e) {
        std::cerr << "error: budget: " << e.what() << "\n";
        return 3;
    } catch (const consistency_error& e) {
        std::cerr << "error: consistency: " << e.what() << "\n";
        return 4;
    } catch (const json::exception& e) {
        std::cerr << "error: parameter: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 4;
    }
    return rc;
}
