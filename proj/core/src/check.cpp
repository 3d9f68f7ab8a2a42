#include "annkh/check.hpp"

#include <string>

#include "annkh/floer.hpp"
#include "annkh/homology.hpp"
#include "annkh/invariants.hpp"
#include "annkh/khcomplex.hpp"
#include "annkh/realization.hpp"
#include "annkh/rt.hpp"

namespace annkh {

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

std::vector<CheckResult> run_full_check(const TangleDiagram& d, const CheckOptions& opts) {
    std::vector<CheckResult> out;
    auto push = [&](const std::string& name, bool pass, const std::string& detail = "") {
        out.push_back({name, pass, detail});
    };

    if (!is_closed(d)) {
        push("closed-input", false, "diagram is an open tangle");
        return out;
    }

    DiagramGraph g = build_graph(d);
    int n = g.n_crossings();
    unsigned threads = opts.threads;

    // k(x) = -2 A_S(x) on every enhanced state
    TheoremReport thm = check_theorem(d, threads);
    std::string thm_detail = std::to_string(thm.states_checked) + " states, " +
                             std::to_string(thm.violations.size()) + " violations";
    if (!thm.ok()) {
        const TheoremViolation& v = thm.violations.front();
        thm_detail += "; first counterexample I=" + v.res.str() +
                      " eps=" + std::to_string(v.eps_mask) + " k=" + std::to_string(v.k) +
                      " 2A_S=" + std::to_string(v.twice_as);
    }
    push("grading-correspondence", thm.ok(), thm_detail);

    GradedComplexF2 full = build_complex(d, false, {threads});
    StructureReport st = verify_structure(full);
    push("d-squared-full", st.d_squared_zero, st.detail);
    push("differential-gradings", st.gradings_ok, st.detail);

    GradedComplexF2 annular = annular_part(full);
    StructureReport sta = verify_structure(annular);
    bool ann_preserves_k = true;
    for (std::size_t t = 0; t < annular.diffs.size() && ann_preserves_k; ++t)
        for (const auto& [r, c] : annular.diffs[t].entries)
            if (annular.gens[t + 1][static_cast<std::size_t>(r)].k !=
                annular.gens[t][static_cast<std::size_t>(c)].k) {
                ann_preserves_k = false;
                break;
            }
    push("d-squared-annular", sta.d_squared_zero && ann_preserves_k, sta.detail);

    // generator count: sum over the cube of 2^{circles}
    {
        long long expected = 0;
        for (std::size_t idx = 0; idx < (static_cast<std::size_t>(1) << n); ++idx) {
            FlatDiagram f = resolve(g, {static_cast<std::uint32_t>(idx), n});
            expected += static_cast<long long>(1) << f.circles.size();
        }
        push("generator-count", full.total_generators() == expected,
             std::to_string(full.total_generators()) + " vs " + std::to_string(expected));
    }

    // fast rotation/winding rules against the polyline realization
    {
        bool ok = true;
        std::string detail;
        for (std::size_t idx = 0; idx < (static_cast<std::size_t>(1) << n) && ok; ++idx) {
            FlatDiagram f = resolve(g, {static_cast<std::uint32_t>(idx), n});
            for (const auto& c : f.circles) {
                Polyline p = realize_circle(g, f, c);
                if (oracle_rotation(p) != c.rotation || oracle_winding(p) != c.winding_trace) {
                    ok = false;
                    detail = "mismatch at I=" + f.index.str() + " circle " + std::to_string(c.id);
                    break;
                }
            }
        }
        push("rotation-oracle", ok, detail);
    }

    // three-way state-sum agreement
    LaurentQT sj_sum = sj_statesum(d, threads);
    LaurentQT sj_complex = euler_sj(full);
    DimsIJK ann_dims = homology_dims_ijk(annular);
    LaurentQT sj_homology = euler_sj(ann_dims);
    push("sj-three-way", sj_sum == sj_complex && sj_complex == sj_homology,
         sj_sum.str() + " | " + sj_complex.str() + " | " + sj_homology.str());

    // Jones specialization and mirror symmetry
    LaurentQT jn = jones(d, threads);
    push("jones-specialization", jn == sj_sum.substitute_t_one(), jn.str());
    LaurentQT jm = jones(mirror(d), threads);
    push("jones-mirror", jm == jn.invert_q(), jm.str());
    LaurentQT sj_mirror = sj_statesum(mirror(d), threads);
    push("sj-mirror", sj_mirror == sj_sum.invert_qt(), sj_mirror.str());

    // subring membership
    {
        bool ok = true;
        std::string detail;
        try {
            ZForm zf = to_zform(sj_sum);
            ok = zf.expand() == sj_sum;
            detail = zf.str();
        } catch (const NotInSubring& e) {
            ok = false;
            detail = e.what();
        }
        push("z-subring", ok, detail);
    }

    // spectral sequence: first page = annular homology, last page = total homology
    {
        std::vector<PageTable> pages = spectral_pages(full);
        bool e1_ok = true;
        DimsIJK e1;
        for (const auto& [key, dim] : pages.front().dims) {
            auto [k, i, j] = key;
            e1[{i, j, k}] = dim;
        }
        e1_ok = e1 == ann_dims;
        DimsIJ kh = homology_dims_ij(full);
        bool einf_ok = pages.back().is_infinity && pages.back().total() == total_dim(kh);
        push("ss-first-page", e1_ok, "E1 total " + std::to_string(pages.front().total()));
        push("ss-last-page", einf_ok,
             "Einf total " + std::to_string(pages.back().total()) + " vs Kh total " +
                 std::to_string(total_dim(kh)));
        bool monotone = true;
        for (std::size_t p = 1; p < pages.size(); ++p)
            if (pages[p].total() > pages[p - 1].total()) monotone = false;
        push("ss-monotone", monotone);
    }

    // tangle-side identities on the pre-closure tangle (a closed 0-endpoint
    // diagram is its own tangle)
    if (d.closure == Closure::Annular || d.m_bottom == 0) {
        TangleDiagram t = open_tangle(d);

        bool weights_ok = true;
        for (std::size_t idx = 0; idx < (static_cast<std::size_t>(1) << n) && weights_ok; ++idx) {
            FullMatrixQ fm = rt_matrix_resolution_full(t, {static_cast<std::uint32_t>(idx), n});
            if (!check_weight_preservation(fm)) weights_ok = false;
        }
        FullMatrixQ assembled = rt_matrix_full(t);
        if (opts.negative_control && !assembled.entries.empty()) {
            // corrupt one off-block entry; the check must report it
            std::uint32_t a = 0;
            std::uint32_t b = t.m_bottom > 0 ? 1u : 0u;
            assembled.entries[{a, b}] += LaurentQT::one();
        }
        if (!check_weight_preservation(assembled)) weights_ok = false;
        push("rt-weight-preservation", weights_ok);

        LaurentQT trq = quantum_trace(rt_matrix(t, threads));
        push("rt-quantum-trace", trq == jn, trq.str() + " vs " + jn.str());

        LaurentQT sjt = sj_via_trace(t, threads);
        push("rt-sj-via-trace", sjt == sj_sum, sjt.str() + " vs " + sj_sum.str());
        push("rt-trace-consistency", sjt.substitute_t_one() == trq);

        ClosureGradingReport cg = check_closure_grading(t);
        push("closure-grading", cg.violations == 0,
             std::to_string(cg.states_checked) + " states, " +
                 std::to_string(cg.violations) + " violations");
    }

    return out;
}

}  // namespace annkh
