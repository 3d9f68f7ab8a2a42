#ifndef ANNKH_INVARIANTS_HPP
#define ANNKH_INVARIANTS_HPP

#include "annkh/homology.hpp"
#include "annkh/khcomplex.hpp"
#include "annkh/laurent.hpp"
#include "annkh/tangle.hpp"

namespace annkh {

// Triply graded Euler characteristic sum_{i,j,k} (-1)^i q^j t^k dim.
LaurentQT euler_sj(const GradedComplexF2& c);
LaurentQT euler_sj(const DimsIJK& homology);

// The same polynomial as a direct sum over enhanced states, weighted by the
// per-resolution coefficient (-1)^{|I| - n_-} q^{|I| + n_+ - 2 n_-}; no chain
// complex is built.
LaurentQT sj_statesum(const TangleDiagram& d, unsigned threads = 0);

// Specialization t = 1.
LaurentQT jones(const TangleDiagram& d, unsigned threads = 0);

}  // namespace annkh

#endif
