#include "annkh/homology.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace annkh {

namespace {

// column indices of generators in layer t whose key matches
template <typename Pred>
std::vector<int> select(const std::vector<Generator>& layer, Pred pred) {
    std::vector<int> ids;
    for (std::size_t i = 0; i < layer.size(); ++i)
        if (pred(layer[i])) ids.push_back(static_cast<int>(i));
    return ids;
}

}  // namespace

DimsIJ homology_dims_ij(const GradedComplexF2& c) {
    std::set<int> jvals;
    for (const auto& layer : c.gens)
        for (const auto& g : layer) jvals.insert(g.j);

    DimsIJ dims;
    for (int j : jvals) {
        for (std::size_t t = 0; t < c.gens.size(); ++t) {
            auto block = select(c.gens[t], [j](const Generator& g) { return g.j == j; });
            if (block.empty()) continue;
            int out_rank = 0;
            if (t < c.diffs.size()) {
                auto rows = select(c.gens[t + 1], [j](const Generator& g) { return g.j == j; });
                out_rank = rank_restricted(c.diffs[t], rows, block);
            }
            int in_rank = 0;
            if (t > 0) {
                auto cols = select(c.gens[t - 1], [j](const Generator& g) { return g.j == j; });
                in_rank = rank_restricted(c.diffs[t - 1], block, cols);
            }
            int dim = static_cast<int>(block.size()) - out_rank - in_rank;
            if (dim != 0) dims[{c.i_min + static_cast<int>(t), j}] = dim;
        }
    }
    return dims;
}

DimsIJK homology_dims_ijk(const GradedComplexF2& c) {
    // reject non-k-preserving differentials up front
    for (std::size_t t = 0; t < c.diffs.size(); ++t)
        for (const auto& [r, col] : c.diffs[t].entries)
            if (c.gens[t + 1][static_cast<std::size_t>(r)].k !=
                c.gens[t][static_cast<std::size_t>(col)].k)
                throw std::invalid_argument(
                    "homology_dims_ijk: differential does not preserve k (take annular_part first)");

    std::set<std::pair<int, int>> jk;
    for (const auto& layer : c.gens)
        for (const auto& g : layer) jk.insert({g.j, g.k});

    DimsIJK dims;
    for (const auto& jk_pair : jk) {
        int j = jk_pair.first;
        int k = jk_pair.second;
        auto match = [j, k](const Generator& g) { return g.j == j && g.k == k; };
        for (std::size_t t = 0; t < c.gens.size(); ++t) {
            auto block = select(c.gens[t], match);
            if (block.empty()) continue;
            int out_rank = 0;
            if (t < c.diffs.size())
                out_rank = rank_restricted(c.diffs[t], select(c.gens[t + 1], match), block);
            int in_rank = 0;
            if (t > 0)
                in_rank = rank_restricted(c.diffs[t - 1], block, select(c.gens[t - 1], match));
            int dim = static_cast<int>(block.size()) - out_rank - in_rank;
            if (dim != 0) dims[{c.i_min + static_cast<int>(t), j, k}] = dim;
        }
    }
    return dims;
}

long long total_dim(const DimsIJ& d) {
    long long s = 0;
    for (const auto& [key, v] : d) s += v;
    return s;
}

long long total_dim(const DimsIJK& d) {
    long long s = 0;
    for (const auto& [key, v] : d) s += v;
    return s;
}

long long PageTable::total() const {
    long long s = 0;
    for (const auto& [key, v] : dims) s += v;
    return s;
}

namespace {

// dim of E_r at (layer t, quantum degree j, filtration level p), following
// the closed formula for the spectral sequence of the k-filtration
// F_p = span{ k <= p }:
//   A = { x in F_p C^t      : dx in F_{p-2r} }
//   B = { x in F_{p-2} C^t  : dx in F_{p-2r} }
//   C = d{ y in F_{p+2r-2} C^{t-1} : dy in F_p }
//   dim E_r = dim A - dim(B + C)
int page_dim(const GradedComplexF2& c, int t, int j, int p, int r) {
    auto& layer = c.gens[static_cast<std::size_t>(t)];
    auto cols_le = [&](const std::vector<Generator>& l, int bound) {
        return select(l, [j, bound](const Generator& g) { return g.j == j && g.k <= bound; });
    };
    auto rows_gt = [&](const std::vector<Generator>& l, int bound) {
        return select(l, [j, bound](const Generator& g) { return g.j == j && g.k > bound; });
    };

    std::vector<int> fp_cols = cols_le(layer, p);
    if (fp_cols.empty()) return 0;

    std::vector<F2Vec> a_basis, b_basis, c_vecs;
    if (static_cast<std::size_t>(t) < c.diffs.size()) {
        const auto& next = c.gens[static_cast<std::size_t>(t) + 1];
        a_basis = kernel_restricted(c.diffs[static_cast<std::size_t>(t)], rows_gt(next, p - 2 * r),
                                    fp_cols);
        b_basis = kernel_restricted(c.diffs[static_cast<std::size_t>(t)], rows_gt(next, p - 2 * r),
                                    cols_le(layer, p - 2));
    } else {
        for (int id : fp_cols) {
            F2Vec v(static_cast<int>(layer.size()));
            v.set(id);
            a_basis.push_back(std::move(v));
        }
        for (int id : cols_le(layer, p - 2)) {
            F2Vec v(static_cast<int>(layer.size()));
            v.set(id);
            b_basis.push_back(std::move(v));
        }
    }
    if (t > 0) {
        const auto& prev = c.gens[static_cast<std::size_t>(t) - 1];
        const SparseMatrixF2& dprev = c.diffs[static_cast<std::size_t>(t) - 1];
        auto y_basis = kernel_restricted(dprev, rows_gt(layer, p), cols_le(prev, p + 2 * r - 2));
        for (const auto& y : y_basis) c_vecs.push_back(apply(dprev, y));
    }

    int dim_a = rank_of(a_basis);
    std::vector<F2Vec> bc = b_basis;
    bc.insert(bc.end(), c_vecs.begin(), c_vecs.end());
    int dim_bc = rank_of(bc);
    return dim_a - dim_bc;
}

}  // namespace

std::vector<PageTable> spectral_pages(const GradedComplexF2& c, int max_page) {
    // validate the filtration up front
    StructureReport rep = verify_structure(c);
    if (!rep.gradings_ok) throw std::invalid_argument("spectral_pages: " + rep.detail);

    if (c.total_generators() == 0) {
        PageTable empty;
        empty.is_infinity = true;
        return {empty};
    }

    int span = c.k_max() - c.k_min();
    int r_stable = span / 2 + 1;  // differentials on later pages drop k by more than span
    bool no_diff = true;
    for (const auto& d : c.diffs)
        if (!d.entries.empty()) no_diff = false;
    if (no_diff) r_stable = 1;

    std::set<std::pair<int, int>> jk;
    for (const auto& layer : c.gens)
        for (const auto& g : layer) jk.insert({g.j, g.k});

    std::vector<PageTable> pages;
    for (int r = 1; r <= r_stable; ++r) {
        PageTable page;
        page.r = r;
        for (auto [j, p] : jk) {
            for (std::size_t t = 0; t < c.gens.size(); ++t) {
                int dim = page_dim(c, static_cast<int>(t), j, p, r);
                if (dim != 0) page.dims[{p, c.i_min + static_cast<int>(t), j}] = dim;
            }
        }
        pages.push_back(std::move(page));
    }

    // trim trailing pages equal to the stable one
    std::size_t last = pages.size() - 1;
    while (last > 0 && pages[last - 1].dims == pages[last].dims) --last;
    pages.resize(last + 1);
    pages.back().is_infinity = true;

    if (max_page > 0 && static_cast<int>(pages.size()) > max_page) {
        pages.resize(static_cast<std::size_t>(max_page));
        pages.back().is_infinity = false;
    }
    return pages;
}

}  // namespace annkh
