#ifndef ANNKH_RESOLUTION_HPP
#define ANNKH_RESOLUTION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "annkh/tangle.hpp"

namespace annkh {

// Vertex of the cube of resolutions: one bit per crossing, in crossing order.
struct ResolutionIndex {
    std::uint32_t bits = 0;
    int count = 0;

    bool bit(int i) const { return (bits >> i) & 1u; }
    int weight() const { return __builtin_popcount(bits); }
    ResolutionIndex with_bit(int i) const { return {bits | (1u << i), count}; }
    std::string str() const;
    bool operator==(const ResolutionIndex&) const = default;
};

// Edge of a resolved diagram.  Persistent arcs keep their arc id; each
// resolved crossing contributes two pieces depending on its smoothing.
struct REdge {
    enum class Kind { Arc, XStrandL, XStrandR, XCap, XCup };
    Kind kind = Kind::Arc;
    int ref = 0;  // arc id (Kind::Arc) or crossing index (X*)
    Node from;
    Node to;

    bool is_closure(const DiagramGraph& g) const {
        return kind == Kind::Arc && g.arc(ref).kind == ArcKind::ClosureArc;
    }
};

// Tangent-direction bookkeeping: net number of times the unit tangent sweeps
// through east, counted with rotation sense, while traversing the edge.
int rotation_contribution(const REdge& e, const DiagramGraph& g, bool forward);
// Signed crossing of the ray gamma_0 (nonzero only on closure arcs).
int gamma0_contribution(const REdge& e, const DiagramGraph& g, bool forward);

struct Circle {
    int id = 0;
    std::vector<std::pair<int, bool>> trail;  // (edge index, traversed forward?)
    int rotation = 0;                         // +-1 under the trace direction
    int winding_trace = 0;                    // signed gamma_0 count, trace direction
    std::vector<int> gamma0_signs;            // one entry per closure-arc traversal

    bool essential() const { return winding_trace != 0; }
    // Winding under the counterclockwise orientation of the circle.
    int ccw_winding() const { return rotation * winding_trace; }
};

// An arc component of a resolved open tangle, traced from `start` to `end`.
struct OpenComponent {
    int id = 0;
    std::vector<std::pair<int, bool>> trail;
    Node start;
    Node end;
    bool start_is_bottom = true;  // which boundary each endpoint lies on
    bool end_is_bottom = true;
    int j_forward = 0;   // east-tangent sum traversing start -> end
    int j_backward = 0;  // same, traversing end -> start
};

struct FlatDiagram {
    ResolutionIndex index;
    std::vector<REdge> edges;
    std::vector<OpenComponent> opens;  // empty for closed diagrams
    std::vector<Circle> circles;
    std::map<Node, int> circle_of_node;

    int circle_of(const Node& n) const;
    int component_count() const {
        return static_cast<int>(opens.size() + circles.size());
    }
};

FlatDiagram resolve(const DiagramGraph& g, ResolutionIndex idx);
FlatDiagram resolve(const TangleDiagram& d, ResolutionIndex idx);

int winding(const Circle& c);  // = ccw_winding, range {-1,0,+1}

// Orientation choice for every component of a flat diagram; for circles,
// bit 0 means counterclockwise ('+') and bit 1 clockwise ('-').  Bit i of
// eps_mask is circle i; open components (tangles) occupy separate bits below
// the circles via component_bit().
struct EnhancedState {
    ResolutionIndex resolution;
    std::uint64_t eps_mask = 0;

    bool minus(int circle) const { return (eps_mask >> circle) & 1; }
};

// All 2^c states of a closed flat diagram in lexicographic order of the sign
// tuple (circle 0 first, '+' before '-').
std::vector<EnhancedState> enumerate_enhanced(const FlatDiagram& f);

int k_degree(const FlatDiagram& f, std::uint64_t eps_mask);
int j_degree(const FlatDiagram& f, std::uint64_t eps_mask);  // closed diagrams only

struct MergeSplit {
    enum class Kind { Merge, Split };
    Kind kind = Kind::Merge;
    int crossing = 0;
    // Merge: circles src_a, src_b of the 0-side become dst_a of the 1-side.
    // Split: circle src_a becomes dst_a and dst_b.
    int src_a = -1, src_b = -1;
    int dst_a = -1, dst_b = -1;
    std::vector<int> forward;  // 0-side circle id -> 1-side circle id (-1 for src of a split)
};

MergeSplit edge_cobordism(const DiagramGraph& g, const FlatDiagram& f0, const FlatDiagram& f1,
                          int crossing);
// same, resolving both cube vertices itself; requires bit `crossing` of idx clear
MergeSplit edge_cobordism(const DiagramGraph& g, ResolutionIndex idx, int crossing);

}  // namespace annkh

#endif
