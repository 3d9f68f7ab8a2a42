#include <doctest.h>

#include <algorithm>

#include "annkh/homology.hpp"
#include "annkh/invariants.hpp"
#include "annkh/khcomplex.hpp"
#include "corpus.hpp"
#include "random_diagrams.hpp"

using namespace annkh;

namespace {

bool has_generator(const GradedComplexF2& c, int i, int j, int k) {
    for (const auto& layer : c.gens)
        for (const auto& g : layer)
            if (g.i == i && g.j == j && g.k == k) return true;
    return false;
}

long long expected_generators(const TangleDiagram& d, int drop) {
    DiagramGraph g = build_graph(d);
    int n = g.n_crossings();
    long long total = 0;
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        FlatDiagram f = resolve(g, {bits, n});
        total += static_cast<long long>(1) << (static_cast<int>(f.circles.size()) - drop);
    }
    return total;
}

}  // namespace

TEST_CASE("frobenius tables") {
    CHECK(apply_merge(Eps::Plus, Eps::Plus) == Eps::Plus);
    CHECK(apply_merge(Eps::Plus, Eps::Minus) == Eps::Minus);
    CHECK(apply_merge(Eps::Minus, Eps::Plus) == Eps::Minus);
    CHECK_FALSE(apply_merge(Eps::Minus, Eps::Minus).has_value());

    auto sp = apply_split(Eps::Plus);
    REQUIRE(sp.size() == 2);
    CHECK(sp[0] == std::pair{Eps::Plus, Eps::Minus});
    CHECK(sp[1] == std::pair{Eps::Minus, Eps::Plus});
    auto sm = apply_split(Eps::Minus);
    REQUIRE(sm.size() == 1);
    CHECK(sm[0] == std::pair{Eps::Minus, Eps::Minus});

    // split then merge on '+' yields two equal terms, zero over F_2
    int parity = 0;
    for (const auto& [a, b] : apply_split(Eps::Plus))
        if (apply_merge(a, b) == Eps::Minus) parity ^= 1;
    CHECK(parity == 0);
}

TEST_CASE("essential unknot complex") {
    GradedComplexF2 c = build_complex(corpus::make(corpus::essential_unknot));
    CHECK(c.total_generators() == 2);
    CHECK(has_generator(c, 0, 1, 1));
    CHECK(has_generator(c, 0, -1, -1));
    CHECK(c.diffs.empty());
}

TEST_CASE("trivial circle complex") {
    GradedComplexF2 c = build_complex(corpus::make(corpus::trivial_circle));
    CHECK(c.total_generators() == 2);
    CHECK(has_generator(c, 0, 1, 0));
    CHECK(has_generator(c, 0, -1, 0));
}

TEST_CASE("sigma1 closure complex and annular part") {
    GradedComplexF2 c = build_complex(corpus::make(corpus::sigma1));
    REQUIRE(c.gens.size() == 2);
    CHECK(c.gens[0].size() == 4);
    CHECK(c.gens[1].size() == 2);
    CHECK(rank_f2(c.diffs[0]) == 2);

    GradedComplexF2 a = annular_part(c);
    CHECK(rank_f2(a.diffs[0]) == 1);
    // idempotent
    GradedComplexF2 aa = annular_part(a);
    CHECK(aa.diffs[0].entries == a.diffs[0].entries);

    // homology: full gives the unknot, annular has total dimension 4
    CHECK(total_dim(homology_dims_ij(c)) == 2);
    CHECK(total_dim(homology_dims_ijk(a)) == 4);
}

TEST_CASE("structure holds across the corpus") {
    for (const auto& entry : corpus::diagrams()) {
        TangleDiagram d = corpus::make(entry.text);
        if (build_graph(d).n_crossings() > 6) continue;
        GradedComplexF2 c = build_complex(d);
        StructureReport rep = verify_structure(c);
        CHECK(rep.d_squared_zero);
        CHECK(rep.gradings_ok);
        StructureReport repa = verify_structure(annular_part(c));
        CHECK(repa.d_squared_zero);
        CHECK(c.total_generators() == expected_generators(d, 0));
    }
}

TEST_CASE("structure holds on random diagrams") {
    corpus::Rng rng(41);
    for (int trial = 0; trial < 15; ++trial) {
        TangleDiagram d = corpus::random_diagram(rng, 3, 4);
        GradedComplexF2 c = build_complex(d);
        StructureReport rep = verify_structure(c);
        CHECK(rep.d_squared_zero);
        CHECK(rep.gradings_ok);
    }
}

TEST_CASE("reduced complex") {
    TangleDiagram circle = corpus::make(corpus::trivial_circle);
    circle.marked_arc = 1;
    GradedComplexF2 r = build_complex(circle, true);
    CHECK(r.total_generators() == 1);
    CHECK(has_generator(r, 0, 0, 0));

    TangleDiagram tref = corpus::make(corpus::trefoil);
    tref.marked_arc = 7;  // a closure arc
    GradedComplexF2 rt = build_complex(tref, true);
    CHECK(rt.total_generators() == expected_generators(tref, 1));
    StructureReport rep = verify_structure(rt);
    CHECK(rep.d_squared_zero);
    CHECK(rep.gradings_ok);

    CHECK_THROWS_AS(build_complex(corpus::make(corpus::trefoil), true), ValidationError);
}

TEST_CASE("open tangles are rejected") {
    TangleDiagram open = corpus::make(corpus::sigma1);
    open.closure = Closure::None;
    CHECK_THROWS_AS(build_complex(open), ValidationError);
}

TEST_CASE("mirror symmetry of the graded euler characteristic") {
    for (const auto& entry : corpus::diagrams()) {
        TangleDiagram d = corpus::make(entry.text);
        if (build_graph(d).n_crossings() > 4) continue;
        LaurentQT sj = euler_sj(build_complex(d));
        LaurentQT sjm = euler_sj(build_complex(mirror(d)));
        CHECK(sjm == sj.invert_qt());
    }
}

TEST_CASE("spectral pages of the sigma1 closure") {
    GradedComplexF2 c = build_complex(corpus::make(corpus::sigma1));
    auto pages = spectral_pages(c);
    REQUIRE(pages.size() == 2);
    CHECK(pages[0].r == 1);
    CHECK(pages[0].total() == 4);
    CHECK(pages[1].total() == 2);
    CHECK(pages[1].is_infinity);

    // stable at page 1 when there are no crossings
    auto flat = spectral_pages(build_complex(corpus::make(corpus::essential_unknot)));
    REQUIRE(flat.size() == 1);
    CHECK(flat[0].is_infinity);
    CHECK(flat[0].total() == 2);
}

TEST_CASE("a zigzag produces a differential on a later page") {
    // C0 = {x at k=2, y at k=0}, C1 = {p at k=0, q at k=-2},
    // dx = p, dy = p + q.  On the first page only [x] and [q] survive; the
    // composite through p connects them two filtration steps apart, so the
    // dimensions repeat on page 2 and collapse to zero on page 3.
    GradedComplexF2 c;
    c.i_min = 0;
    c.gens.resize(2);
    c.gens[0] = {Generator{{0, 0}, 0, 0, 0, 2}, Generator{{0, 0}, 0, 0, 0, 0}};
    c.gens[1] = {Generator{{0, 0}, 0, 1, 0, 0}, Generator{{0, 0}, 0, 1, 0, -2}};
    SparseMatrixF2 d(2, 2);
    d.toggle(0, 0);  // x -> p
    d.toggle(0, 1);  // y -> p
    d.toggle(1, 1);  // y -> q
    c.diffs = {d};

    auto pages = spectral_pages(c);
    REQUIRE(pages.size() == 3);
    CHECK(pages[0].total() == 2);
    CHECK(pages[1].total() == 2);  // equal dimensions, but not yet stable
    CHECK(pages[2].total() == 0);
    CHECK(pages[2].is_infinity);
    CHECK(pages[0].dims.at({2, 0, 0}) == 1);
    CHECK(pages[0].dims.at({-2, 1, 0}) == 1);
    CHECK(total_dim(homology_dims_ij(c)) == 0);
}

TEST_CASE("spectral pages converge to the total homology") {
    for (const auto& entry : corpus::diagrams()) {
        TangleDiagram d = corpus::make(entry.text);
        if (build_graph(d).n_crossings() > 4) continue;
        GradedComplexF2 c = build_complex(d);
        auto pages = spectral_pages(c);
        REQUIRE(!pages.empty());
        CHECK(pages.back().is_infinity);
        // first page = annular homology
        DimsIJK ann = homology_dims_ijk(annular_part(c));
        DimsIJK first;
        for (const auto& [key, dim] : pages.front().dims) {
            auto [k, i, j] = key;
            first[{i, j, k}] = dim;
        }
        CHECK(first == ann);
        // last page = full homology, blockwise in (i, j)
        DimsIJ einf;
        for (const auto& [key, dim] : pages.back().dims) {
            auto [k, i, j] = key;
            einf[{i, j}] += dim;
        }
        std::erase_if(einf, [](const auto& kv) { return kv.second == 0; });
        CHECK(einf == homology_dims_ij(c));
        for (std::size_t p = 1; p < pages.size(); ++p)
            CHECK(pages[p].total() <= pages[p - 1].total());
    }
}
