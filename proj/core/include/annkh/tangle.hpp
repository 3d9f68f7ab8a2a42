#ifndef ANNKH_TANGLE_HPP
#define ANNKH_TANGLE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace annkh {

// Raised for malformed input text; carries a 1-based source location.
struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int column_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(column_) +
                             ": " + msg),
          line(line_),
          column(column_) {}
};

// Raised when a syntactically valid diagram violates a structural invariant
// (width mismatch, closure/width conflict, dangling marked arc, ...).
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class ItemKind { Vertical, Cup, Cap, CrossPos, CrossNeg };

// One elementary piece of a slice.  For Vertical/Cap/CrossPos/CrossNeg the
// position is the 1-based index of the leftmost input strand the item
// consumes; for Cup it is the index its left leg occupies among the slice's
// output strands.
struct SliceItem {
    ItemKind kind = ItemKind::Vertical;
    int pos = 1;

    bool operator==(const SliceItem&) const = default;
};

using Slice = std::vector<SliceItem>;

enum class Closure { None, Annular };
enum class Direction { Forward, Backward };

// Slice-word presentation of a tangle, bottom to top, with optional annular
// closure (the m closure strands are exactly the arcs crossing the ray
// gamma_0 in standard position).
struct TangleDiagram {
    int m_bottom = 0;
    std::vector<Slice> slices;
    Closure closure = Closure::None;
    std::optional<int> marked_arc;                       // 1-based arc id
    std::map<int, Direction> orientation_overrides;      // component id -> direction

    int m_top() const;  // derived from the slice word

    bool operator==(const TangleDiagram&) const = default;
};

struct CrossingCount {
    int n_plus = 0;
    int n_minus = 0;
    int writhe() const { return n_plus - n_minus; }
};

// A link component: a cyclic sequence of (arc id, traversed along the arc's
// canonical direction?).  Components are numbered 1..N in increasing order
// of their least arc id.
struct Component {
    int id = 0;
    std::vector<std::pair<int, bool>> arcs;
    int least_arc() const { return arcs.empty() ? 0 : arcs.front().first; }
};

TangleDiagram parse_diagram(const std::string& text);
std::string serialize(const TangleDiagram& d);

void validate(const TangleDiagram& d);  // throws ValidationError
bool is_closed(const TangleDiagram& d);

TangleDiagram mirror(const TangleDiagram& d);
std::vector<Component> trace_link_components(const TangleDiagram& d);
CrossingCount count_crossings(const TangleDiagram& d);

// -------------------------------------------------------------------------
// Combinatorial model of a validated diagram, shared by the resolution and
// state-sum machinery.

// A point where a strand meets a slice boundary: level 0 is the bottom of the
// diagram, level s the top of slice s.  pos is the 1-based strand index.
struct Node {
    int level = 0;
    int pos = 0;
    auto operator<=>(const Node&) const = default;
};

enum class ArcKind {
    Strand,      // vertical / diagonal pass-through inside a slice
    CupArc,      // local minimum, joins two adjacent outputs of a slice
    CapArc,      // local maximum, joins two adjacent inputs of a slice
    CrossingA,   // crossing leg incident to the left input
    CrossingB,   // crossing leg incident to the right input
    ClosureArc,  // left-routed arc joining top endpoint j to bottom endpoint j
};

struct Arc {
    int id = 0;         // 1-based; slice arcs first in slice order, closure arcs last
    ArcKind kind = ArcKind::Strand;
    int slice = 0;      // 1-based slice index; 0 for closure arcs
    int crossing = -1;  // 0-based crossing index for CrossingA/B
    Node from;          // see canonical directions below
    Node to;
};

// One crossing site: slice, input positions (in_left, in_left+1), output
// positions (out_left, out_left+1), the crossing kind and its two arc ids.
struct CrossingSite {
    int slice = 0;
    int in_left = 0;
    int out_left = 0;
    ItemKind kind = ItemKind::CrossPos;
    int arc_a = 0;  // incident to input in_left
    int arc_b = 0;  // incident to input in_left + 1
};

// Per-slice layout: where each item's legs sit on the input and output
// boundaries after cup insertion.
struct ItemLayout {
    SliceItem item;
    int in_pos = 0;   // leftmost input strand (Vertical/Cap/Cross)
    int out_pos = 0;  // leftmost output strand (Vertical/Cup/Cross)
};

struct SliceLayout {
    int width_in = 0;
    int width_out = 0;
    std::vector<ItemLayout> items;
};

struct DiagramGraph {
    Closure closure = Closure::None;
    int m_bottom = 0;
    std::vector<int> widths;        // strand count at each level 0..H
    std::vector<SliceLayout> layouts;
    std::vector<Arc> arcs;          // index = id - 1
    std::vector<CrossingSite> crossings;
    int closure_arc_base = 0;       // id of first closure arc (0 if none)

    int height() const { return static_cast<int>(layouts.size()); }
    int n_crossings() const { return static_cast<int>(crossings.size()); }
    const Arc& arc(int id) const { return arcs[static_cast<std::size_t>(id - 1)]; }
};

// Builds the arc/node model; validates the diagram first.
DiagramGraph build_graph(const TangleDiagram& d);

const char* kind_token(ItemKind k);
std::optional<ItemKind> kind_from_token(const std::string& s);

}  // namespace annkh

#endif
