#ifndef ANNKH_HOMOLOGY_HPP
#define ANNKH_HOMOLOGY_HPP

#include <map>
#include <tuple>
#include <vector>

#include "annkh/khcomplex.hpp"

namespace annkh {

using DimsIJ = std::map<std::pair<int, int>, int>;          // (i, j) -> dim
using DimsIJK = std::map<std::tuple<int, int, int>, int>;   // (i, j, k) -> dim

// Homology of the full complex, per (i, j) block (the differential preserves j).
DimsIJ homology_dims_ij(const GradedComplexF2& c);

// Homology per (i, j, k) block; requires a k-preserving differential, i.e.
// the annular (associated graded) complex.
DimsIJK homology_dims_ijk(const GradedComplexF2& c);

long long total_dim(const DimsIJ& d);
long long total_dim(const DimsIJK& d);

// One page of the spectral sequence of the k-filtration.  Page r carries the
// differential connecting filtration levels k and k - 2r.
struct PageTable {
    int r = 1;
    bool is_infinity = false;
    std::map<std::tuple<int, int, int>, int> dims;  // (k, i, j) -> dim

    long long total() const;
};

// Pages 1, 2, ... until stabilization; the last page is flagged E-infinity.
// max_page > 0 truncates the list (the flag is then only set if the sequence
// stabilized within the limit).
std::vector<PageTable> spectral_pages(const GradedComplexF2& c, int max_page = 0);

}  // namespace annkh

#endif
