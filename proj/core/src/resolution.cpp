#include "annkh/resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace annkh {

std::string ResolutionIndex::str() const {
    std::string s;
    for (int i = 0; i < count; ++i) s += bit(i) ? '1' : '0';
    return s;
}

int rotation_contribution(const REdge& e, const DiagramGraph& g, bool forward) {
    switch (e.kind) {
        case REdge::Kind::XCup: return forward ? 1 : 0;
        case REdge::Kind::XCap: return forward ? -1 : 0;
        case REdge::Kind::XStrandL:
        case REdge::Kind::XStrandR: return 0;
        case REdge::Kind::Arc: break;
    }
    switch (g.arc(e.ref).kind) {
        case ArcKind::CupArc: return forward ? 1 : 0;
        case ArcKind::CapArc: return forward ? -1 : 0;
        // canonical direction of a closure arc is bottom -> top, i.e. a full
        // clockwise turn around the left of the diagram
        case ArcKind::ClosureArc: return forward ? -1 : 1;
        default: return 0;
    }
}

int gamma0_contribution(const REdge& e, const DiagramGraph& g, bool forward) {
    if (e.kind == REdge::Kind::Arc && g.arc(e.ref).kind == ArcKind::ClosureArc)
        return forward ? -1 : 1;
    return 0;
}

int FlatDiagram::circle_of(const Node& n) const {
    auto it = circle_of_node.find(n);
    if (it == circle_of_node.end()) throw std::logic_error("node not on any circle");
    return it->second;
}

FlatDiagram resolve(const DiagramGraph& g, ResolutionIndex idx) {
    if (idx.count != g.n_crossings())
        throw std::invalid_argument("resolution index length " + std::to_string(idx.count) +
                                    " does not match crossing count " +
                                    std::to_string(g.n_crossings()));

    FlatDiagram f;
    f.index = idx;

    for (const auto& a : g.arcs) {
        if (a.kind == ArcKind::CrossingA || a.kind == ArcKind::CrossingB) continue;
        f.edges.push_back({REdge::Kind::Arc, a.id, a.from, a.to});
    }
    for (int ci = 0; ci < g.n_crossings(); ++ci) {
        const CrossingSite& x = g.crossings[static_cast<std::size_t>(ci)];
        Node in_l{x.slice - 1, x.in_left};
        Node in_r{x.slice - 1, x.in_left + 1};
        Node out_l{x.slice, x.out_left};
        Node out_r{x.slice, x.out_left + 1};
        // the 0-smoothing of a positive crossing keeps the strands parallel;
        // for a negative crossing the roles are swapped
        bool identity = (x.kind == ItemKind::CrossPos) == !idx.bit(ci);
        if (identity) {
            f.edges.push_back({REdge::Kind::XStrandL, ci, in_l, out_l});
            f.edges.push_back({REdge::Kind::XStrandR, ci, in_r, out_r});
        } else {
            f.edges.push_back({REdge::Kind::XCap, ci, in_l, in_r});
            f.edges.push_back({REdge::Kind::XCup, ci, out_l, out_r});
        }
    }

    // incidence: node -> (edge index, at_from)
    std::map<Node, std::vector<std::pair<int, bool>>> inc;
    for (std::size_t e = 0; e < f.edges.size(); ++e) {
        inc[f.edges[e].from].emplace_back(static_cast<int>(e), true);
        inc[f.edges[e].to].emplace_back(static_cast<int>(e), false);
    }

    std::vector<bool> used(f.edges.size(), false);
    auto walk = [&](int e0, bool d0) {
        std::vector<std::pair<int, bool>> trail;
        int e = e0;
        bool d = d0;
        while (true) {
            used[static_cast<std::size_t>(e)] = true;
            trail.emplace_back(e, d);
            Node head = d ? f.edges[static_cast<std::size_t>(e)].to
                          : f.edges[static_cast<std::size_t>(e)].from;
            const auto& ends = inc.at(head);
            const std::pair<int, bool>* next = nullptr;
            bool skipped = false;
            for (const auto& end : ends) {
                if (!skipped && end.first == e && end.second == !d) {
                    skipped = true;
                    continue;
                }
                next = &end;
                break;
            }
            if (!next) break;
            e = next->first;
            d = next->second;
            if (e == e0 && d == d0) break;
        }
        return trail;
    };

    // zero-length strands: an open diagram with no slices still has m strands
    if (g.height() == 0 && g.closure == Closure::None) {
        for (int p = 1; p <= g.m_bottom; ++p) {
            OpenComponent oc;
            oc.id = static_cast<int>(f.opens.size());
            oc.start = {0, p};
            oc.end = {0, p};
            oc.start_is_bottom = true;
            oc.end_is_bottom = false;
            f.opens.push_back(std::move(oc));
        }
    }

    // open components from boundary nodes (in node order), then circles from
    // the least unvisited node
    for (const auto& [node, ends] : inc) {
        if (ends.size() != 1) continue;
        if (used[static_cast<std::size_t>(ends.front().first)]) continue;
        OpenComponent oc;
        oc.id = static_cast<int>(f.opens.size());
        oc.start = node;
        oc.trail = walk(ends.front().first, ends.front().second);
        const auto& [le, ld] = oc.trail.back();
        oc.end = ld ? f.edges[static_cast<std::size_t>(le)].to
                    : f.edges[static_cast<std::size_t>(le)].from;
        oc.start_is_bottom = oc.start.level == 0;
        oc.end_is_bottom = oc.end.level == 0;
        for (const auto& [e, d] : oc.trail) {
            oc.j_forward += rotation_contribution(f.edges[static_cast<std::size_t>(e)], g, d);
            oc.j_backward += rotation_contribution(f.edges[static_cast<std::size_t>(e)], g, !d);
        }
        f.opens.push_back(std::move(oc));
    }
    for (const auto& [node, ends] : inc) {
        if (ends.size() != 2) continue;
        if (used[static_cast<std::size_t>(ends.front().first)]) continue;
        Circle c;
        c.id = static_cast<int>(f.circles.size());
        c.trail = walk(ends.front().first, ends.front().second);
        for (const auto& [e, d] : c.trail) {
            const REdge& edge = f.edges[static_cast<std::size_t>(e)];
            c.rotation += rotation_contribution(edge, g, d);
            int s = gamma0_contribution(edge, g, d);
            if (edge.is_closure(g)) {
                c.gamma0_signs.push_back(s);
                c.winding_trace += s;
            }
        }
        if (c.rotation != 1 && c.rotation != -1)
            throw std::logic_error("circle rotation " + std::to_string(c.rotation) +
                                   " is not +-1 (tracing bug)");
        if (c.winding_trace < -1 || c.winding_trace > 1)
            throw std::logic_error("circle winding outside {-1,0,1}");
        for (const auto& [e, d] : c.trail) {
            (void)d;
            f.circle_of_node[f.edges[static_cast<std::size_t>(e)].from] = c.id;
            f.circle_of_node[f.edges[static_cast<std::size_t>(e)].to] = c.id;
        }
        f.circles.push_back(std::move(c));
    }

    return f;
}

FlatDiagram resolve(const TangleDiagram& d, ResolutionIndex idx) {
    return resolve(build_graph(d), idx);
}

int winding(const Circle& c) { return c.ccw_winding(); }

std::vector<EnhancedState> enumerate_enhanced(const FlatDiagram& f) {
    int c = static_cast<int>(f.circles.size());
    if (!f.opens.empty()) throw std::invalid_argument("enumerate_enhanced: open tangle state");
    if (c > 62) throw std::invalid_argument("too many circles to enumerate");
    std::vector<EnhancedState> out;
    out.reserve(static_cast<std::size_t>(1) << c);
    for (std::uint64_t v = 0; v < (static_cast<std::uint64_t>(1) << c); ++v) {
        // v runs in lexicographic order of the sign tuple; repack so that
        // bit i of eps_mask is circle i
        std::uint64_t mask = 0;
        for (int i = 0; i < c; ++i)
            if ((v >> (c - 1 - i)) & 1) mask |= (static_cast<std::uint64_t>(1) << i);
        out.push_back({f.index, mask});
    }
    return out;
}

int k_degree(const FlatDiagram& f, std::uint64_t eps_mask) {
    int k = 0;
    for (const auto& c : f.circles) {
        int sign = ((eps_mask >> c.id) & 1) ? -1 : 1;
        k += sign * c.ccw_winding();
    }
    return k;
}

int j_degree(const FlatDiagram& f, std::uint64_t eps_mask) {
    if (!f.opens.empty()) throw std::invalid_argument("j_degree: open tangle state");
    int j = 0;
    for (const auto& c : f.circles) j += ((eps_mask >> c.id) & 1) ? -1 : 1;
    return j;
}

MergeSplit edge_cobordism(const DiagramGraph& g, ResolutionIndex idx, int crossing) {
    if (idx.bit(crossing))
        throw std::invalid_argument("edge_cobordism: bit already set at the given crossing");
    return edge_cobordism(g, resolve(g, idx), resolve(g, idx.with_bit(crossing)), crossing);
}

MergeSplit edge_cobordism(const DiagramGraph& g, const FlatDiagram& f0, const FlatDiagram& f1,
                          int crossing) {
    if (f0.index.bit(crossing) || !f1.index.bit(crossing) ||
        (f0.index.bits ^ f1.index.bits) != (1u << crossing))
        throw std::invalid_argument("edge_cobordism: resolutions do not differ in the given bit");

    const CrossingSite& x = g.crossings[static_cast<std::size_t>(crossing)];
    Node site[4] = {{x.slice - 1, x.in_left},
                    {x.slice - 1, x.in_left + 1},
                    {x.slice, x.out_left},
                    {x.slice, x.out_left + 1}};

    // circles through the crossing site on both sides (1 or 2 of them)
    auto touched = [&site](const FlatDiagram& f) {
        std::vector<int> ids;
        for (const Node& n : site) {
            int c = f.circle_of(n);
            if (std::find(ids.begin(), ids.end(), c) == ids.end()) ids.push_back(c);
        }
        std::sort(ids.begin(), ids.end());
        return ids;
    };
    std::vector<int> t0 = touched(f0);
    std::vector<int> t1 = touched(f1);

    MergeSplit ms;
    ms.crossing = crossing;
    ms.forward.assign(f0.circles.size(), -1);
    for (const auto& c : f0.circles) {
        if (std::find(t0.begin(), t0.end(), c.id) != t0.end()) continue;
        // untouched circles have identical node sets on both sides
        Node probe = f0.edges[static_cast<std::size_t>(c.trail.front().first)].from;
        ms.forward[static_cast<std::size_t>(c.id)] = f1.circle_of(probe);
    }

    if (t0.size() == 2 && t1.size() == 1) {
        ms.kind = MergeSplit::Kind::Merge;
        ms.src_a = t0[0];
        ms.src_b = t0[1];
        ms.dst_a = t1[0];
        ms.forward[static_cast<std::size_t>(t0[0])] = t1[0];
        ms.forward[static_cast<std::size_t>(t0[1])] = t1[0];
    } else if (t0.size() == 1 && t1.size() == 2) {
        ms.kind = MergeSplit::Kind::Split;
        ms.src_a = t0[0];
        ms.dst_a = t1[0];
        ms.dst_b = t1[1];
    } else {
        throw std::logic_error("edge cobordism does not change the circle count by one");
    }
    return ms;
}

}  // namespace annkh
