#ifndef ANNKH_KHCOMPLEX_HPP
#define ANNKH_KHCOMPLEX_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "annkh/f2.hpp"
#include "annkh/resolution.hpp"
#include "annkh/tangle.hpp"

namespace annkh {

enum class Eps : int { Plus = 0, Minus = 1 };

// Frobenius multiplication on circle labels over F_2; empty result means the
// product vanishes ((-,-) -> 0).
std::optional<Eps> apply_merge(Eps a, Eps b);
// Comultiplication: + -> (+,-) + (-,+), - -> (-,-).
std::vector<std::pair<Eps, Eps>> apply_split(Eps a);

struct Generator {
    ResolutionIndex res;
    std::uint64_t eps_mask = 0;
    int i = 0;  // homological degree: |I| - n_minus
    int j = 0;  // quantum degree: j_deg + |I| + n_plus - 2 n_minus (+1 reduced)
    int k = 0;  // annular degree
};

struct BuildOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
};

// F_2 chain complex graded by (i, j, k); the differential raises i by one,
// preserves j, and is non-increasing in k with steps of 2.
struct GradedComplexF2 {
    bool reduced = false;
    CrossingCount crossings;
    int i_min = 0;
    std::vector<std::vector<Generator>> gens;  // gens[t] lives in degree i_min + t
    std::vector<SparseMatrixF2> diffs;         // diffs[t] : gens[t] -> gens[t+1]

    int degree_count() const { return static_cast<int>(gens.size()); }
    long long total_generators() const;
    int k_min() const;
    int k_max() const;
};

GradedComplexF2 build_complex(const TangleDiagram& d, bool reduced = false,
                              const BuildOptions& opts = {});

// Associated graded complex: the k-lowering components of the differential
// are removed.  Throws if some entry changes k by anything other than 0 or -2.
GradedComplexF2 annular_part(const GradedComplexF2& c);

// Invariant checks used by the verification suite: d^2 = 0 and the grading
// behavior of every differential entry.
struct StructureReport {
    bool d_squared_zero = true;
    bool gradings_ok = true;  // every entry has delta j = 0 and delta k in {0,-2}
    std::string detail;
};
StructureReport verify_structure(const GradedComplexF2& c);

}  // namespace annkh

#endif
