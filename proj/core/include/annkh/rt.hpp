#ifndef ANNKH_RT_HPP
#define ANNKH_RT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "annkh/laurent.hpp"
#include "annkh/resolution.hpp"
#include "annkh/tangle.hpp"

namespace annkh {

// Sequence of up/down arrows at the m tangle endpoints; the standard basis of
// V_1^{tensor m}.  Renders as 'u'/'d' per position.
struct ArrowSeq {
    int m = 0;
    std::uint32_t up_mask = 0;  // bit i set = arrow at position i+1 points up

    bool up(int pos) const { return (up_mask >> (pos - 1)) & 1; }
    int weight() const;  // #up - #down
    std::string str() const;
    bool operator==(const ArrowSeq&) const = default;
};

// All arrow sequences of the given weight, in lexicographic order reading
// position 1 first with 'u' before 'd'.
std::vector<ArrowSeq> weight_basis(int m, int lambda);

// Weight-graded matrix over Z[q^±1] acting on V_1^{tensor m}.  Block lambda
// is square in the weight_basis(m, lambda) ordering; absent blocks are zero.
struct BlockMatrixQ {
    int m = 0;
    std::map<int, std::vector<std::vector<LaurentQT>>> blocks;

    BlockMatrixQ() = default;
    explicit BlockMatrixQ(int m_);
    LaurentQT& entry(int lambda, int row, int col);
    const LaurentQT& entry(int lambda, int row, int col) const;
    BlockMatrixQ& operator+=(const BlockMatrixQ& o);
    BlockMatrixQ scaled(const LaurentQT& c) const;
    bool operator==(const BlockMatrixQ& o) const;
};

// Raw state-sum matrix over the full 2^m basis, used by the weight
// preservation check and its negative control.
struct FullMatrixQ {
    int m = 0;
    std::map<std::pair<std::uint32_t, std::uint32_t>, LaurentQT> entries;  // (a, b) up-masks
};

// Per-resolution state sum: entry (a, b) collects q^{j(S)} over enhanced
// resolutions of the open tangle with top sequence a and bottom sequence b.
BlockMatrixQ rt_matrix_resolution(const TangleDiagram& t, ResolutionIndex idx);
FullMatrixQ rt_matrix_resolution_full(const TangleDiagram& t, ResolutionIndex idx);

// Assembled tangle invariant: sum over the cube with the same coefficients
// as the state-sum polynomial; crossing signs are those of the annular
// closure under the default orientation rule.
BlockMatrixQ rt_matrix(const TangleDiagram& t, unsigned threads = 0);
FullMatrixQ rt_matrix_full(const TangleDiagram& t, unsigned threads = 0);

int weight(const ArrowSeq& a);
LaurentQT quantum_trace(const BlockMatrixQ& m);   // sum_lambda q^lambda tr(block)
LaurentQT sj_via_trace(const TangleDiagram& t, unsigned threads = 0);  // (qt)^lambda weights

bool check_weight_preservation(const FullMatrixQ& m);

// For every tangle state with equal top and bottom sequences, closing the
// state must shift j by exactly its weight.
struct ClosureGradingReport {
    long long states_checked = 0;
    long long violations = 0;
};
ClosureGradingReport check_closure_grading(const TangleDiagram& t);

TangleDiagram annular_closure(const TangleDiagram& t);
TangleDiagram open_tangle(const TangleDiagram& d);  // strips the closure

}  // namespace annkh

#endif
