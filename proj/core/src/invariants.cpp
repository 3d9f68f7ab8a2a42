#include "annkh/invariants.hpp"

#include "annkh/parallel.hpp"
#include "annkh/resolution.hpp"

namespace annkh {

LaurentQT euler_sj(const GradedComplexF2& c) {
    LaurentQT p;
    for (const auto& layer : c.gens)
        for (const auto& g : layer)
            p += LaurentQT::monomial((g.i % 2 == 0) ? 1 : -1, g.j, g.k);
    return p;
}

LaurentQT euler_sj(const DimsIJK& homology) {
    LaurentQT p;
    for (const auto& [key, dim] : homology) {
        auto [i, j, k] = key;
        p += LaurentQT::monomial(((i % 2 + 2) % 2 == 0) ? dim : -dim, j, k);
    }
    return p;
}

LaurentQT sj_statesum(const TangleDiagram& d, unsigned threads) {
    if (!is_closed(d)) throw ValidationError("sj_statesum requires a closed diagram");
    DiagramGraph g = build_graph(d);
    CrossingCount cc = count_crossings(d);
    int n = g.n_crossings();

    std::size_t n_res = static_cast<std::size_t>(1) << n;
    std::vector<LaurentQT> partial(n_res);
    parallel_for(n_res, threads, [&](std::size_t idx) {
        ResolutionIndex ri{static_cast<std::uint32_t>(idx), n};
        FlatDiagram f = resolve(g, ri);
        LaurentQT states;
        for (const auto& s : enumerate_enhanced(f))
            states += LaurentQT::monomial(1, j_degree(f, s.eps_mask), k_degree(f, s.eps_mask));
        int w = ri.weight();
        long long sign = ((w - cc.n_minus) % 2 == 0) ? 1 : -1;
        partial[idx] = states * LaurentQT::monomial(sign, w + cc.n_plus - 2 * cc.n_minus);
    });

    LaurentQT total;
    for (const auto& p : partial) total += p;
    return total;
}

LaurentQT jones(const TangleDiagram& d, unsigned threads) {
    return sj_statesum(d, threads).substitute_t_one();
}

}  // namespace annkh
