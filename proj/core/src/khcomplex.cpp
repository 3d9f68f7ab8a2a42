#include "annkh/khcomplex.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "annkh/parallel.hpp"

namespace annkh {

std::optional<Eps> apply_merge(Eps a, Eps b) {
    if (a == Eps::Plus && b == Eps::Plus) return Eps::Plus;
    if (a == Eps::Minus && b == Eps::Minus) return std::nullopt;  // X^2 = 0
    return Eps::Minus;
}

std::vector<std::pair<Eps, Eps>> apply_split(Eps a) {
    if (a == Eps::Plus) return {{Eps::Plus, Eps::Minus}, {Eps::Minus, Eps::Plus}};
    return {{Eps::Minus, Eps::Minus}};
}

long long GradedComplexF2::total_generators() const {
    long long n = 0;
    for (const auto& g : gens) n += static_cast<long long>(g.size());
    return n;
}

int GradedComplexF2::k_min() const {
    int k = 0;
    bool first = true;
    for (const auto& layer : gens)
        for (const auto& g : layer) {
            if (first || g.k < k) k = g.k;
            first = false;
        }
    return k;
}

int GradedComplexF2::k_max() const {
    int k = 0;
    bool first = true;
    for (const auto& layer : gens)
        for (const auto& g : layer) {
            if (first || g.k > k) k = g.k;
            first = false;
        }
    return k;
}

namespace {

// index of a state within the (possibly reduced) enumeration of a resolution
struct StateIndexer {
    int circle_count = 0;
    int marked_circle = -1;  // -1: unreduced
    std::vector<int> by_mask;

    void init(const FlatDiagram& f, int marked) {
        circle_count = static_cast<int>(f.circles.size());
        marked_circle = marked;
        by_mask.assign(static_cast<std::size_t>(1) << circle_count, -1);
        int next = 0;
        for (const auto& s : enumerate_enhanced(f)) {
            if (marked >= 0 && !s.minus(marked)) continue;
            by_mask[s.eps_mask] = next++;
        }
    }
    int count() const {
        return circle_count == 0 ? (marked_circle >= 0 ? 0 : 1)
                                 : static_cast<int>(1) << (circle_count - (marked_circle >= 0 ? 1 : 0));
    }
    int of(std::uint64_t mask) const {
        int v = by_mask[mask];
        if (v < 0) throw std::logic_error("state outside the reduced subcomplex");
        return v;
    }
};

}  // namespace

GradedComplexF2 build_complex(const TangleDiagram& d, bool reduced, const BuildOptions& opts) {
    if (!is_closed(d))
        throw ValidationError("chain complex requires a closed diagram (annular closure or no endpoints)");
    if (reduced && !d.marked_arc)
        throw ValidationError("reduced complex requested but no marked arc is set");

    DiagramGraph g = build_graph(d);
    int n = g.n_crossings();
    if (n > 30) throw ValidationError("too many crossings");
    CrossingCount cc = count_crossings(d);

    std::size_t n_res = static_cast<std::size_t>(1) << n;
    std::vector<FlatDiagram> flats(n_res);
    parallel_for(n_res, opts.threads, [&](std::size_t idx) {
        flats[idx] = resolve(g, {static_cast<std::uint32_t>(idx), n});
    });

    // marked circle per resolution (contains one endpoint node of the marked arc)
    std::vector<int> marked(n_res, -1);
    if (reduced) {
        Node probe = g.arc(*d.marked_arc).from;
        for (std::size_t idx = 0; idx < n_res; ++idx) marked[idx] = flats[idx].circle_of(probe);
    }

    GradedComplexF2 c;
    c.reduced = reduced;
    c.crossings = cc;
    c.i_min = -cc.n_minus;
    c.gens.resize(static_cast<std::size_t>(n) + 1);
    c.diffs.assign(static_cast<std::size_t>(n), SparseMatrixF2{});

    std::vector<StateIndexer> indexers(n_res);
    std::vector<int> base(n_res, 0);  // offset of each resolution's states in its layer
    std::vector<int> layer_size(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t idx = 0; idx < n_res; ++idx) {
        indexers[idx].init(flats[idx], marked[idx]);
        int w = flats[idx].index.weight();
        base[idx] = layer_size[static_cast<std::size_t>(w)];
        layer_size[static_cast<std::size_t>(w)] += indexers[idx].count();
    }

    int jshift = reduced ? 1 : 0;
    for (std::size_t idx = 0; idx < n_res; ++idx) {
        const FlatDiagram& f = flats[idx];
        int w = f.index.weight();
        for (const auto& s : enumerate_enhanced(f)) {
            if (reduced && !s.minus(marked[idx])) continue;
            Generator gen;
            gen.res = f.index;
            gen.eps_mask = s.eps_mask;
            gen.i = w - cc.n_minus;
            gen.j = j_degree(f, s.eps_mask) + w + cc.n_plus - 2 * cc.n_minus + jshift;
            gen.k = k_degree(f, s.eps_mask);
            c.gens[static_cast<std::size_t>(w)].push_back(gen);
        }
    }

    for (int t = 0; t < n; ++t)
        c.diffs[static_cast<std::size_t>(t)] =
            SparseMatrixF2(layer_size[static_cast<std::size_t>(t) + 1],
                           layer_size[static_cast<std::size_t>(t)]);

    for (std::size_t idx = 0; idx < n_res; ++idx) {
        const FlatDiagram& f0 = flats[idx];
        int w = f0.index.weight();
        for (int b = 0; b < n; ++b) {
            if (f0.index.bit(b)) continue;
            std::size_t idx1 = idx | (static_cast<std::size_t>(1) << b);
            const FlatDiagram& f1 = flats[idx1];
            MergeSplit ms = edge_cobordism(g, f0, f1, b);
            SparseMatrixF2& dmat = c.diffs[static_cast<std::size_t>(w)];

            for (const auto& s : enumerate_enhanced(f0)) {
                if (reduced && !s.minus(marked[idx])) continue;
                int col = base[idx] + indexers[idx].of(s.eps_mask);

                std::uint64_t carried = 0;
                for (const auto& circ : f0.circles) {
                    int to = ms.forward[static_cast<std::size_t>(circ.id)];
                    if (to < 0 || circ.id == ms.src_a || circ.id == ms.src_b) continue;
                    if (s.minus(circ.id)) carried |= (1ull << to);
                }

                auto emit = [&](std::uint64_t mask1) {
                    if (reduced && !((mask1 >> marked[idx1]) & 1))
                        throw std::logic_error("differential left the reduced subcomplex");
                    int row = base[idx1] + indexers[idx1].of(mask1);
                    dmat.toggle(row, col);
                };

                if (ms.kind == MergeSplit::Kind::Merge) {
                    Eps ea = s.minus(ms.src_a) ? Eps::Minus : Eps::Plus;
                    Eps eb = s.minus(ms.src_b) ? Eps::Minus : Eps::Plus;
                    auto m = apply_merge(ea, eb);
                    if (!m) continue;
                    std::uint64_t mask1 = carried;
                    if (*m == Eps::Minus) mask1 |= (1ull << ms.dst_a);
                    emit(mask1);
                } else {
                    Eps ec = s.minus(ms.src_a) ? Eps::Minus : Eps::Plus;
                    for (const auto& [e1, e2] : apply_split(ec)) {
                        std::uint64_t mask1 = carried;
                        if (e1 == Eps::Minus) mask1 |= (1ull << ms.dst_a);
                        if (e2 == Eps::Minus) mask1 |= (1ull << ms.dst_b);
                        emit(mask1);
                    }
                }
            }
        }
    }

    return c;
}

GradedComplexF2 annular_part(const GradedComplexF2& c) {
    GradedComplexF2 a = c;
    for (std::size_t t = 0; t < a.diffs.size(); ++t) {
        const auto& src = a.gens[t];
        const auto& dst = a.gens[t + 1];
        SparseMatrixF2 filtered(a.diffs[t].rows, a.diffs[t].cols);
        for (const auto& [r, col] : a.diffs[t].entries) {
            int dk = dst[static_cast<std::size_t>(r)].k - src[static_cast<std::size_t>(col)].k;
            if (dk == 0)
                filtered.entries.insert({r, col});
            else if (dk != -2)
                throw std::logic_error("filtration violation: differential entry with delta k = " +
                                       std::to_string(dk));
        }
        a.diffs[t] = std::move(filtered);
    }
    return a;
}

StructureReport verify_structure(const GradedComplexF2& c) {
    StructureReport rep;
    for (std::size_t t = 0; t < c.diffs.size(); ++t) {
        const auto& src = c.gens[t];
        const auto& dst = c.gens[t + 1];
        for (const auto& [r, col] : c.diffs[t].entries) {
            const Generator& gs = src[static_cast<std::size_t>(col)];
            const Generator& gd = dst[static_cast<std::size_t>(r)];
            if (gd.i != gs.i + 1 || gd.j != gs.j || (gd.k != gs.k && gd.k != gs.k - 2)) {
                rep.gradings_ok = false;
                rep.detail = "entry (" + std::to_string(r) + "," + std::to_string(col) +
                             ") in layer " + std::to_string(t) + " violates grading rules";
            }
        }
        if (t + 1 < c.diffs.size() && !product_is_zero(c.diffs[t + 1], c.diffs[t])) {
            rep.d_squared_zero = false;
            rep.detail = "d^2 != 0 between layers " + std::to_string(t) + ".." + std::to_string(t + 2);
        }
    }
    return rep;
}

}  // namespace annkh
