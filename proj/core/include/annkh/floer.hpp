#ifndef ANNKH_FLOER_HPP
#define ANNKH_FLOER_HPP

#include <string>
#include <vector>

#include "annkh/resolution.hpp"
#include "annkh/tangle.hpp"

namespace annkh {

// Alexander grading of a generator, stored as 2*A_S so all arithmetic is
// exact over the integers.  A_S itself is a half-integer in [-m/2, m/2].
struct ASGrading {
    int twice = 0;
    bool operator==(const ASGrading&) const = default;
};

// Euler characteristic of the double cover of a disk branched over m points.
int surface_euler(int m);

// An enhanced state viewed as a generator on the branched-cover side: all
// that matters there is how many of the m marked strand crossings are
// occupied (point down).
struct GeneratorModel {
    EnhancedState state;
    int occupied = 0;
};

// A_S = -m/2 + occupied; computed both directly and through surface_euler
// and asserted equal.
ASGrading as_grading(int m, int occupied);
ASGrading as_grading(const GeneratorModel& g, int m);

// Number of closure strands pointing down under the given state.
int occupied_count(const DiagramGraph& g, const FlatDiagram& f, std::uint64_t eps_mask);
GeneratorModel model_generator(const DiagramGraph& g, const FlatDiagram& f,
                               std::uint64_t eps_mask);

struct TheoremViolation {
    ResolutionIndex res;
    std::uint64_t eps_mask = 0;
    int k = 0;
    int twice_as = 0;
};

struct TheoremReport {
    int m = 0;
    long long states_checked = 0;
    long long resolutions = 0;
    std::vector<TheoremViolation> violations;

    bool ok() const { return violations.empty(); }
};

// Verifies k(x) = -2 A_S(x) over every enhanced state of every resolution.
TheoremReport check_theorem(const TangleDiagram& d, unsigned threads = 0);

std::string format_report(const TheoremReport& rep, bool verbose = false);

}  // namespace annkh

#endif
