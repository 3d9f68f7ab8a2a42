#ifndef ANNKH_TESTS_CORPUS_HPP
#define ANNKH_TESTS_CORPUS_HPP

#include <string>
#include <vector>

#include "annkh/tangle.hpp"

namespace corpus {

// Diagrams shared across the test suites, as DSL sources so the parser is on
// every path.

inline const char* essential_unknot =
    "m=1\n"
    "closure=annular\n";

inline const char* trivial_circle =
    "m=0\n"
    "closure=annular\n"
    "slice: cup@1\n"
    "slice: cap@1\n";

inline const char* identity2 =
    "m=2\n"
    "closure=annular\n";

inline const char* e1_closure =
    "m=2\n"
    "closure=annular\n"
    "slice: cap@1\n"
    "slice: cup@1\n";

inline const char* sigma1 =
    "m=2\n"
    "closure=annular\n"
    "slice: x+@1\n";

inline const char* sigma1_sq =
    "m=2\n"
    "closure=annular\n"
    "slice: x+@1\n"
    "slice: x+@1\n";

inline const char* trefoil =
    "m=2\n"
    "closure=annular\n"
    "slice: x+@1\n"
    "slice: x+@1\n"
    "slice: x+@1\n";

inline const char* braid3_mixed =
    "m=3\n"
    "closure=annular\n"
    "slice: x+@1, id@3\n"
    "slice: id@1, x-@2\n";

inline const char* braid3_s1s2s1 =
    "m=3\n"
    "closure=annular\n"
    "slice: x+@1, id@3\n"
    "slice: id@1, x+@2\n"
    "slice: x+@1, id@3\n";

inline std::string sigma1_power(int n) {
    std::string s = "m=2\nclosure=annular\n";
    for (int i = 0; i < n; ++i) s += "slice: x+@1\n";
    return s;
}

// kinked unknot: cup, positive crossing on the new strands, cap
inline const char* kink =
    "m=0\n"
    "closure=annular\n"
    "slice: cup@1\n"
    "slice: x+@1\n"
    "slice: cap@1\n";

struct Entry {
    std::string name;
    std::string text;
};

inline std::vector<Entry> diagrams() {
    return {
        {"essential_unknot", essential_unknot},
        {"trivial_circle", trivial_circle},
        {"identity2", identity2},
        {"e1_closure", e1_closure},
        {"sigma1", sigma1},
        {"sigma1_sq", sigma1_sq},
        {"trefoil", trefoil},
        {"braid3_mixed", braid3_mixed},
        {"braid3_s1s2s1", braid3_s1s2s1},
        {"kink", kink},
        {"sigma1_pow8", sigma1_power(8)},
    };
}

inline annkh::TangleDiagram make(const std::string& text) { return annkh::parse_diagram(text); }

}  // namespace corpus

#endif
