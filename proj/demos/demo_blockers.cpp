// A quick tour on desk-size instances: a value table, extremal blocker
// sizes, a cascade blocker word, and one oracle cross-check.

#include <iostream>

#include "blockade/io.hpp"
#include "blockade/oracle.hpp"
#include "blockade/seqcore.hpp"
#include "blockade/setfam.hpp"

using namespace blockade;

int main() {
    std::cout << "value table for words on 3 sides of size 3:\n"
              << io::table_csv(seqcore::n_table(3, 3)) << '\n';

    std::cout << "largest blockers of t-edge families in [3]^3:\n";
    for (u64 t : {1, 2, 4, 10}) {
        const auto opt = seqcore::blocker_max_partite(t, 3, 3);
        std::cout << "  t=" << t << "  b(t)=" << dec_string(opt.value) << "  family word \""
                  << render_word(opt.family_word) << "\", blocker word \""
                  << render_word(opt.blocker_word) << "\"\n";
    }

    const setfam::cascade_form chain{3, {{2, 3, 4, 5}, {3, 4, 5}}, {1}};
    std::cout << "\ncascade " << io::cascade_json(chain).dump() << "\n  blocker word "
              << io::cascade_word_json(setfam::cascade_blocker_word(5, chain)).dump() << '\n';

    const auto res = oracle::brute_blocker_max({hyper::space_kind::partite, 2, 3}, 2);
    const auto closed = seqcore::blocker_max_partite(2, 2, 3);
    std::cout << "\nexhaustive check in [2]^3 at t=2: oracle " << dec_string(res.value)
              << ", closed form " << dec_string(closed.value)
              << (res.value == closed.value ? " (agree)\n" : " (DISAGREE)\n");
    return res.value == closed.value ? 0 : 1;
}
