#include "annkh/f2.hpp"

#include <algorithm>
#include <stdexcept>

namespace annkh {

void SparseMatrixF2::toggle(int r, int c) {
    if (r < 0 || r >= rows || c < 0 || c >= cols)
        throw std::out_of_range("SparseMatrixF2::toggle out of bounds");
    auto it = entries.find({r, c});
    if (it == entries.end())
        entries.insert({r, c});
    else
        entries.erase(it);
}

void F2Vec::operator^=(const F2Vec& o) {
    if (n_ != o.n_) throw std::invalid_argument("F2Vec size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

bool F2Vec::is_zero() const {
    for (auto w : w_)
        if (w) return false;
    return true;
}

int F2Vec::lowest_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return static_cast<int>(i * 64) + __builtin_ctzll(w_[i]);
    return -1;
}

namespace {

// Row echelon form in place; returns pivot columns in elimination order.
// Pivoting is first-nonzero, so results are deterministic.
std::vector<int> eliminate(std::vector<F2Vec>& rows) {
    std::vector<int> pivot_cols;
    std::size_t next_row = 0;
    while (next_row < rows.size()) {
        // find the row (from next_row on) with the smallest leading column
        int best = -1;
        std::size_t best_row = 0;
        for (std::size_t r = next_row; r < rows.size(); ++r) {
            int l = rows[r].lowest_set();
            if (l < 0) continue;
            if (best < 0 || l < best) {
                best = l;
                best_row = r;
            }
        }
        if (best < 0) break;
        std::swap(rows[next_row], rows[best_row]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != next_row && rows[r].get(best)) rows[r] ^= rows[next_row];
        pivot_cols.push_back(best);
        ++next_row;
    }
    return pivot_cols;
}

std::vector<F2Vec> rows_of(const SparseMatrixF2& m) {
    std::vector<F2Vec> rows(static_cast<std::size_t>(m.rows), F2Vec(m.cols));
    for (const auto& [r, c] : m.entries) rows[static_cast<std::size_t>(r)].set(c);
    return rows;
}

}  // namespace

int rank_f2(const SparseMatrixF2& m) {
    auto rows = rows_of(m);
    return static_cast<int>(eliminate(rows).size());
}

int rank_of(std::vector<F2Vec> vecs) {
    return static_cast<int>(eliminate(vecs).size());
}

std::vector<F2Vec> kernel_basis(const SparseMatrixF2& m) {
    auto rows = rows_of(m);
    std::vector<int> pivots = eliminate(rows);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<F2Vec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        F2Vec x(m.cols);
        x.set(f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (rows[r].get(f)) x.set(pivots[r]);
        basis.push_back(std::move(x));
    }
    return basis;
}

namespace {

SparseMatrixF2 restrict_matrix(const SparseMatrixF2& m, const std::vector<int>& row_ids,
                               const std::vector<int>& col_ids) {
    std::vector<int> rmap(static_cast<std::size_t>(m.rows), -1);
    std::vector<int> cmap(static_cast<std::size_t>(m.cols), -1);
    for (std::size_t i = 0; i < row_ids.size(); ++i) rmap[static_cast<std::size_t>(row_ids[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < col_ids.size(); ++i) cmap[static_cast<std::size_t>(col_ids[i])] = static_cast<int>(i);
    SparseMatrixF2 sub(static_cast<int>(row_ids.size()), static_cast<int>(col_ids.size()));
    for (const auto& [r, c] : m.entries) {
        int rr = rmap[static_cast<std::size_t>(r)];
        int cc = cmap[static_cast<std::size_t>(c)];
        if (rr >= 0 && cc >= 0) sub.entries.insert({rr, cc});
    }
    return sub;
}

}  // namespace

int rank_restricted(const SparseMatrixF2& m, const std::vector<int>& row_ids,
                    const std::vector<int>& col_ids) {
    return rank_f2(restrict_matrix(m, row_ids, col_ids));
}

std::vector<F2Vec> kernel_restricted(const SparseMatrixF2& m, const std::vector<int>& row_ids,
                                     const std::vector<int>& col_ids) {
    SparseMatrixF2 sub = restrict_matrix(m, row_ids, col_ids);
    std::vector<F2Vec> local = kernel_basis(sub);
    std::vector<F2Vec> out;
    out.reserve(local.size());
    for (const auto& v : local) {
        F2Vec full(m.cols);
        for (std::size_t i = 0; i < col_ids.size(); ++i)
            if (v.get(static_cast<int>(i))) full.set(col_ids[i]);
        out.push_back(std::move(full));
    }
    return out;
}

F2Vec apply(const SparseMatrixF2& m, const F2Vec& x) {
    if (x.size() != m.cols) throw std::invalid_argument("apply: dimension mismatch");
    std::vector<int> parity(static_cast<std::size_t>(m.rows), 0);
    for (const auto& [r, c] : m.entries)
        if (x.get(c)) parity[static_cast<std::size_t>(r)] ^= 1;
    F2Vec out(m.rows);
    for (int r = 0; r < m.rows; ++r)
        if (parity[static_cast<std::size_t>(r)]) out.set(r);
    return out;
}

bool product_is_zero(const SparseMatrixF2& b, const SparseMatrixF2& a) {
    if (b.cols != a.rows) throw std::invalid_argument("product_is_zero: dimension mismatch");
    for (int c = 0; c < a.cols; ++c) {
        F2Vec x(a.cols);
        x.set(c);
        F2Vec mid = apply(a, x);
        if (!apply(b, mid).is_zero()) return false;
    }
    return true;
}

}  // namespace annkh
