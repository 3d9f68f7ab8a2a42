#include "annkh/realization.hpp"

#include <algorithm>
#include <stdexcept>

namespace annkh {

namespace {

long long sx(int pos) { return 2ll * pos; }
long long sy(int level) { return 3ll * level; }

std::vector<RealPoint> strand_route(int slice, int in_pos, int out_pos) {
    // constant x through the bottom and top thirds, shift in the middle
    return {{sx(in_pos), sy(slice - 1)},
            {sx(in_pos), sy(slice - 1) + 1},
            {sx(out_pos), sy(slice) - 1},
            {sx(out_pos), sy(slice)}};
}

std::vector<RealPoint> cap_route(int slice, int left_pos) {
    return {{sx(left_pos), sy(slice - 1)},
            {sx(left_pos) + 1, sy(slice - 1) + 1},
            {sx(left_pos) + 2, sy(slice - 1)}};
}

std::vector<RealPoint> cup_route(int slice, int left_pos) {
    return {{sx(left_pos), sy(slice)},
            {sx(left_pos) + 1, sy(slice) - 1},
            {sx(left_pos) + 2, sy(slice)}};
}

// drawn top endpoint -> around the left -> bottom endpoint; the canonical
// (from -> to) direction of the arc is bottom -> top, i.e. this reversed
std::vector<RealPoint> closure_route(const DiagramGraph& g, int j) {
    long long h = sy(g.height());
    long long off = 3ll * j;
    return {{sx(j), h},          {sx(j), h + off},      {-sx(j), h + off},
            {-sx(j), -off},      {sx(j), -off},         {sx(j), 0}};
}

std::vector<RealPoint> edge_route(const DiagramGraph& g, const REdge& e) {
    switch (e.kind) {
        case REdge::Kind::XStrandL:
        case REdge::Kind::XStrandR: {
            const CrossingSite& x = g.crossings[static_cast<std::size_t>(e.ref)];
            int dl = e.kind == REdge::Kind::XStrandL ? 0 : 1;
            return strand_route(x.slice, x.in_left + dl, x.out_left + dl);
        }
        case REdge::Kind::XCap: {
            const CrossingSite& x = g.crossings[static_cast<std::size_t>(e.ref)];
            return cap_route(x.slice, x.in_left);
        }
        case REdge::Kind::XCup: {
            const CrossingSite& x = g.crossings[static_cast<std::size_t>(e.ref)];
            return cup_route(x.slice, x.out_left);
        }
        case REdge::Kind::Arc: break;
    }
    const Arc& a = g.arc(e.ref);
    switch (a.kind) {
        case ArcKind::Strand: return strand_route(a.slice, a.from.pos, a.to.pos);
        case ArcKind::CapArc: return cap_route(a.slice, a.from.pos);
        case ArcKind::CupArc: return cup_route(a.slice, a.from.pos);
        case ArcKind::ClosureArc: {
            auto r = closure_route(g, a.from.pos);
            std::reverse(r.begin(), r.end());  // canonical direction is bottom -> top
            return r;
        }
        default: throw std::logic_error("edge_route: crossing arc in a resolved diagram");
    }
}

}  // namespace

Polyline realize_circle(const DiagramGraph& g, const FlatDiagram& f, const Circle& c) {
    Polyline p;
    for (const auto& [ei, fwd] : c.trail) {
        std::vector<RealPoint> frag = edge_route(g, f.edges[static_cast<std::size_t>(ei)]);
        if (!fwd) std::reverse(frag.begin(), frag.end());
        for (const auto& pt : frag) {
            if (!p.pts.empty() && p.pts.back() == pt) continue;
            p.pts.push_back(pt);
        }
    }
    if (p.pts.size() < 2 || !(p.pts.front() == p.pts.back()))
        throw std::logic_error("realized circle does not close up");
    p.pts.pop_back();
    return p;
}

int oracle_rotation(const Polyline& p) {
    long long twice_area = 0;
    std::size_t n = p.pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RealPoint& a = p.pts[i];
        const RealPoint& b = p.pts[(i + 1) % n];
        twice_area += a.x * b.y - b.x * a.y;
    }
    if (twice_area == 0) throw std::logic_error("degenerate realized circle");
    return twice_area > 0 ? 1 : -1;
}

int oracle_winding(const Polyline& p) {
    // crossings of the leftward ray from (0, 1), counted with the half-open
    // rule so vertices on the scan line are handled consistently
    const long long ry = 1;
    int w = 0;
    std::size_t n = p.pts.size();
    for (std::size_t i = 0; i < n; ++i) {
        const RealPoint& a = p.pts[i];
        const RealPoint& b = p.pts[(i + 1) % n];
        if ((a.y > ry) == (b.y > ry)) continue;
        // x-coordinate at y = ry: a.x + (b.x - a.x) * (ry - a.y) / (b.y - a.y) < 0
        long long num = a.x * (b.y - a.y) + (b.x - a.x) * (ry - a.y);
        long long den = b.y - a.y;
        bool left_of_axis = (den > 0) ? (num < 0) : (num > 0);
        if (!left_of_axis) continue;
        w += (b.y < a.y) ? 1 : -1;  // downward crossing counts +1
    }
    return w;
}

}  // namespace annkh
