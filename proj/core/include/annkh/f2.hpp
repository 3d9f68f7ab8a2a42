#ifndef ANNKH_F2_HPP
#define ANNKH_F2_HPP

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

namespace annkh {

// Sparse matrix over F_2 with set semantics: adding an entry twice cancels it.
struct SparseMatrixF2 {
    int rows = 0;
    int cols = 0;
    std::set<std::pair<int, int>> entries;  // (row, col)

    SparseMatrixF2() = default;
    SparseMatrixF2(int r, int c) : rows(r), cols(c) {}

    void toggle(int r, int c);
    bool at(int r, int c) const { return entries.count({r, c}) != 0; }
    std::size_t nnz() const { return entries.size(); }
};

// Dense bit vector of fixed length.
class F2Vec {
public:
    F2Vec() = default;
    explicit F2Vec(int n) : n_(n), w_((static_cast<std::size_t>(n) + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1; }
    void set(int i) { w_[static_cast<std::size_t>(i) >> 6] |= (1ull << (i & 63)); }
    void operator^=(const F2Vec& o);
    bool is_zero() const;
    int lowest_set() const;  // -1 if zero

private:
    int n_ = 0;
    std::vector<std::uint64_t> w_;
};

int rank_f2(const SparseMatrixF2& m);

// dim of the span of a set of vectors (all the same length)
int rank_of(std::vector<F2Vec> vecs);

// Basis of { x : M x = 0 } as vectors of length cols.
std::vector<F2Vec> kernel_basis(const SparseMatrixF2& m);

// Rank of M restricted to the given rows and columns.
int rank_restricted(const SparseMatrixF2& m, const std::vector<int>& row_ids,
                    const std::vector<int>& col_ids);

// Kernel of the restriction of M to (row_ids x col_ids), embedded back into
// the full column space.
std::vector<F2Vec> kernel_restricted(const SparseMatrixF2& m, const std::vector<int>& row_ids,
                                     const std::vector<int>& col_ids);

// y = M x
F2Vec apply(const SparseMatrixF2& m, const F2Vec& x);

// true iff B*A = 0 (composable differentials)
bool product_is_zero(const SparseMatrixF2& b, const SparseMatrixF2& a);

}  // namespace annkh

#endif
