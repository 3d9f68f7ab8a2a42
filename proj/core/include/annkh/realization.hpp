#ifndef ANNKH_REALIZATION_HPP
#define ANNKH_REALIZATION_HPP

#include <cstdint>
#include <vector>

#include "annkh/resolution.hpp"
#include "annkh/tangle.hpp"

namespace annkh {

// Explicit planar realization of resolved diagrams, used as the brute-force
// reference for the combinatorial rotation and winding rules.  Strand legs
// sit at x = 2*pos, slice boundaries at y = 3*level; cups and caps occupy the
// top and bottom thirds of their slice; closure arc j is routed around the
// left of the diagram at offset j.  The annulus axis sits at the origin side:
// the ray gamma_0 starts at (0, 1) and runs in the -x direction, so it meets
// exactly the closure arcs.  All coordinates are integers, so orientation
// (shoelace sign) and ray crossings are exact.

struct RealPoint {
    long long x = 0;
    long long y = 0;
    bool operator==(const RealPoint&) const = default;
};

struct Polyline {
    std::vector<RealPoint> pts;  // closed: pts.front() == pts.back() is implied
};

Polyline realize_circle(const DiagramGraph& g, const FlatDiagram& f, const Circle& c);

// +1 if the polyline is traversed counterclockwise, -1 if clockwise.
int oracle_rotation(const Polyline& p);

// Signed crossings of the ray gamma_0 (downward crossing = +1).
int oracle_winding(const Polyline& p);

}  // namespace annkh

#endif
