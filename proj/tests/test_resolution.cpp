#include <doctest.h>

#include "annkh/realization.hpp"
#include "annkh/resolution.hpp"
#include "corpus.hpp"
#include "random_diagrams.hpp"

using namespace annkh;

namespace {

FlatDiagram resolve_bits(const TangleDiagram& d, std::uint32_t bits) {
    DiagramGraph g = build_graph(d);
    return resolve(g, {bits, g.n_crossings()});
}

int essential_count(const FlatDiagram& f) {
    int n = 0;
    for (const auto& c : f.circles)
        if (c.essential()) ++n;
    return n;
}

}  // namespace

TEST_CASE("sigma1 smoothings") {
    TangleDiagram d = corpus::make(corpus::sigma1);
    FlatDiagram f0 = resolve_bits(d, 0);
    CHECK(f0.circles.size() == 2);
    CHECK(essential_count(f0) == 2);

    FlatDiagram f1 = resolve_bits(d, 1);
    CHECK(f1.circles.size() == 1);
    CHECK(essential_count(f1) == 0);
    // the trivial circle meets gamma_0 twice with cancelling signs
    CHECK(f1.circles[0].gamma0_signs.size() == 2);
    CHECK(f1.circles[0].winding_trace == 0);
}

TEST_CASE("identity closure is one essential circle") {
    FlatDiagram f = resolve_bits(corpus::make(corpus::essential_unknot), 0);
    REQUIRE(f.circles.size() == 1);
    CHECK(winding(f.circles[0]) == 1);  // ccw orientation winds positively
    CHECK(f.circles[0].essential());
}

TEST_CASE("trivial circle does not meet gamma_0") {
    FlatDiagram f = resolve_bits(corpus::make(corpus::trivial_circle), 0);
    REQUIRE(f.circles.size() == 1);
    CHECK(winding(f.circles[0]) == 0);
    CHECK(f.circles[0].gamma0_signs.empty());
    CHECK_FALSE(f.circles[0].essential());
}

TEST_CASE("enhanced state enumeration") {
    FlatDiagram one = resolve_bits(corpus::make(corpus::essential_unknot), 0);
    auto states1 = enumerate_enhanced(one);
    REQUIRE(states1.size() == 2);
    CHECK(states1[0].eps_mask == 0);  // '+' enumerated first
    CHECK(states1[1].eps_mask == 1);

    FlatDiagram two = resolve_bits(corpus::make(corpus::identity2), 0);
    auto states2 = enumerate_enhanced(two);
    REQUIRE(states2.size() == 4);
    // lexicographic in circle id, '+' before '-': (++), (+-), (-+), (--)
    CHECK(states2[0].eps_mask == 0b00);
    CHECK(states2[1].eps_mask == 0b10);
    CHECK(states2[2].eps_mask == 0b01);
    CHECK(states2[3].eps_mask == 0b11);

    FlatDiagram e1 = resolve_bits(corpus::make(corpus::e1_closure), 0);
    REQUIRE(e1.circles.size() == 1);
    CHECK(enumerate_enhanced(e1).size() == 2);
}

TEST_CASE("k and j degrees") {
    FlatDiagram core = resolve_bits(corpus::make(corpus::essential_unknot), 0);
    CHECK(k_degree(core, 0) == 1);   // '+' on the core circle
    CHECK(k_degree(core, 1) == -1);  // '-'
    CHECK(j_degree(core, 0) == 1);
    CHECK(j_degree(core, 1) == -1);

    FlatDiagram two = resolve_bits(corpus::make(corpus::identity2), 0);
    CHECK(k_degree(two, 0b01) == 0);  // v+ tensor v- on two essential circles
    CHECK(k_degree(two, 0b00) == 2);
    CHECK(k_degree(two, 0b11) == -2);
    CHECK(j_degree(two, 0b01) == 0);

    CHECK(j_degree(two, 0b11) == -2);

    TangleDiagram id4 = parse_diagram("m=4\nclosure=annular\n");
    FlatDiagram four = resolve_bits(id4, 0);
    REQUIRE(four.circles.size() == 4);
    CHECK(j_degree(four, 0b1111) == -4);  // all clockwise
    CHECK(k_degree(four, 0b1111) == -4);
}

TEST_CASE("edge cobordisms") {
    TangleDiagram s1 = corpus::make(corpus::sigma1);
    DiagramGraph g = build_graph(s1);
    FlatDiagram f0 = resolve(g, {0, 1});
    FlatDiagram f1 = resolve(g, {1, 1});
    MergeSplit ms = edge_cobordism(g, f0, f1, 0);
    CHECK(ms.kind == MergeSplit::Kind::Merge);

    // Reidemeister-1-like kink: the relevant edge splits
    TangleDiagram kink = corpus::make(corpus::kink);
    DiagramGraph gk = build_graph(kink);
    FlatDiagram k0 = resolve(gk, {0, 1});
    FlatDiagram k1 = resolve(gk, {1, 1});
    REQUIRE(k0.circles.size() == 1);
    REQUIRE(k1.circles.size() == 2);
    CHECK(edge_cobordism(gk, k0, k1, 0).kind == MergeSplit::Kind::Split);
    // the by-index form resolves both vertices itself
    CHECK(edge_cobordism(gk, ResolutionIndex{0, 1}, 0).kind == MergeSplit::Kind::Split);
    CHECK_THROWS_AS(edge_cobordism(gk, ResolutionIndex{1, 1}, 0), std::invalid_argument);

    // untouched circles map by identity
    TangleDiagram mixed = corpus::make(corpus::braid3_mixed);
    DiagramGraph gm = build_graph(mixed);
    FlatDiagram m0 = resolve(gm, {0, 2});
    FlatDiagram m1 = resolve(gm, {1, 2});
    MergeSplit msm = edge_cobordism(gm, m0, m1, 0);
    for (const auto& c : m0.circles) {
        if (c.id == msm.src_a || c.id == msm.src_b) continue;
        int to = msm.forward[static_cast<std::size_t>(c.id)];
        REQUIRE(to >= 0);
        Node probe = m0.edges[static_cast<std::size_t>(c.trail.front().first)].from;
        CHECK(m1.circle_of(probe) == to);
    }
}

TEST_CASE("every cube edge changes the circle count by one") {
    for (const auto& entry : corpus::diagrams()) {
        TangleDiagram d = corpus::make(entry.text);
        DiagramGraph g = build_graph(d);
        int n = g.n_crossings();
        if (n > 6) continue;
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            FlatDiagram f0 = resolve(g, {bits, n});
            for (int b = 0; b < n; ++b) {
                if (f0.index.bit(b)) continue;
                FlatDiagram f1 = resolve(g, {bits | (1u << b), n});
                int delta = static_cast<int>(f1.circles.size()) -
                            static_cast<int>(f0.circles.size());
                CHECK(std::abs(delta) == 1);
                CHECK_NOTHROW(edge_cobordism(g, f0, f1, b));
            }
        }
    }
}

TEST_CASE("parity and range invariants of k") {
    corpus::Rng rng(5);
    for (int trial = 0; trial < 25; ++trial) {
        TangleDiagram d = corpus::random_diagram(rng, 3, 4);
        DiagramGraph g = build_graph(d);
        int n = g.n_crossings();
        int m = d.m_bottom;
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            FlatDiagram f = resolve(g, {bits, n});
            CHECK((essential_count(f) - m) % 2 == 0);
            for (const auto& s : enumerate_enhanced(f)) {
                int k = k_degree(f, s.eps_mask);
                CHECK(std::abs(k) <= m);
                CHECK(((k - m) % 2 + 2) % 2 == 0);
            }
        }
    }
}

TEST_CASE("fast rotation and winding match the polyline realization") {
    auto check_diagram = [](const TangleDiagram& d) {
        DiagramGraph g = build_graph(d);
        int n = g.n_crossings();
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            FlatDiagram f = resolve(g, {bits, n});
            for (const auto& c : f.circles) {
                Polyline p = realize_circle(g, f, c);
                CHECK(oracle_rotation(p) == c.rotation);
                CHECK(oracle_winding(p) == c.winding_trace);
            }
        }
    };
    for (const auto& entry : corpus::diagrams()) {
        TangleDiagram d = corpus::make(entry.text);
        if (build_graph(d).n_crossings() <= 6) {
            check_diagram(d);
            check_diagram(mirror(d));
        }
    }
    corpus::Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) check_diagram(corpus::random_diagram(rng, 3, 4));
}

TEST_CASE("east-tangent contributions per piece") {
    TangleDiagram e1 = corpus::make(corpus::e1_closure);
    DiagramGraph g = build_graph(e1);
    FlatDiagram f = resolve(g, {0, 0});
    int cups = 0, caps = 0, closures = 0;
    for (const auto& e : f.edges) {
        ArcKind kind = g.arc(e.ref).kind;
        if (kind == ArcKind::CapArc) {
            CHECK(rotation_contribution(e, g, true) == -1);
            CHECK(rotation_contribution(e, g, false) == 0);
            ++caps;
        } else if (kind == ArcKind::CupArc) {
            CHECK(rotation_contribution(e, g, true) == 1);
            CHECK(rotation_contribution(e, g, false) == 0);
            ++cups;
        } else if (kind == ArcKind::ClosureArc) {
            // top-to-bottom (reverse of canonical) is the +1 full turn
            CHECK(rotation_contribution(e, g, false) == 1);
            CHECK(rotation_contribution(e, g, true) == -1);
            CHECK(gamma0_contribution(e, g, false) == 1);
            ++closures;
        }
    }
    CHECK(cups == 1);
    CHECK(caps == 1);
    CHECK(closures == 2);

    // vertical strands never point east
    TangleDiagram id2 = corpus::make(corpus::identity2);
    id2.slices = {{{ItemKind::Vertical, 1}, {ItemKind::Vertical, 2}}};
    DiagramGraph gid = build_graph(id2);
    FlatDiagram fid = resolve(gid, {0, 0});
    for (const auto& e : fid.edges)
        if (gid.arc(e.ref).kind == ArcKind::Strand) {
            CHECK(rotation_contribution(e, gid, true) == 0);
            CHECK(rotation_contribution(e, gid, false) == 0);
        }
}

TEST_CASE("open tangle components") {
    TangleDiagram e1 = corpus::make(corpus::e1_closure);
    e1.closure = Closure::None;
    DiagramGraph g = build_graph(e1);
    FlatDiagram f = resolve(g, {0, 0});
    REQUIRE(f.opens.size() == 2);
    CHECK(f.circles.empty());
    // cap component joins the two bottom endpoints, left to right
    CHECK(f.opens[0].start == Node{0, 1});
    CHECK(f.opens[0].end == Node{0, 2});
    CHECK(f.opens[0].j_forward == -1);
    CHECK(f.opens[0].j_backward == 0);
    // cup component joins the two top endpoints
    CHECK(f.opens[1].j_forward == 1);
    CHECK(f.opens[1].j_backward == 0);

    // zero-length strands of the empty word
    TangleDiagram id2 = corpus::make(corpus::identity2);
    id2.closure = Closure::None;
    FlatDiagram fid = resolve(build_graph(id2), {0, 0});
    REQUIRE(fid.opens.size() == 2);
    CHECK(fid.opens[0].start_is_bottom);
    CHECK_FALSE(fid.opens[0].end_is_bottom);
    CHECK(fid.opens[0].j_forward == 0);
}
