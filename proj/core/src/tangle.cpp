#include "annkh/tangle.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace annkh {

namespace {

int width_delta(ItemKind k) {
    switch (k) {
        case ItemKind::Cup: return 2;
        case ItemKind::Cap: return -2;
        default: return 0;
    }
}

int inputs_consumed(ItemKind k) {
    switch (k) {
        case ItemKind::Vertical: return 1;
        case ItemKind::Cup: return 0;
        case ItemKind::Cap: return 2;
        case ItemKind::CrossPos:
        case ItemKind::CrossNeg: return 2;
    }
    return 0;
}

int outputs_produced(ItemKind k) {
    switch (k) {
        case ItemKind::Vertical: return 1;
        case ItemKind::Cup: return 2;
        case ItemKind::Cap: return 0;
        case ItemKind::CrossPos:
        case ItemKind::CrossNeg: return 2;
    }
    return 0;
}

bool item_order(const SliceItem& a, const SliceItem& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    // at equal numeric position, the input-consuming item precedes the cup
    return (a.kind == ItemKind::Cup) < (b.kind == ItemKind::Cup);
}

// Computes a slice's layout: non-cup items must tile the input strands in
// order; cups are then spliced into the output sequence at their stated
// position.  Throws ValidationError on any inconsistency.
SliceLayout layout_slice(const Slice& slice, int width_in, int slice_no) {
    auto fail = [slice_no](const std::string& msg) {
        throw ValidationError("slice " + std::to_string(slice_no) + ": " + msg);
    };

    std::vector<SliceItem> items = slice;
    std::sort(items.begin(), items.end(), item_order);

    SliceLayout lay;
    lay.width_in = width_in;
    lay.items.reserve(items.size());

    // Output sequence entries: (index into lay.items, leg 0/1), -1 for
    // single-output items' second slot unused.
    struct Leg {
        int item = -1;
        int leg = 0;
    };
    std::vector<Leg> outs;

    int expect = 1;
    int last_cup_pos = -1;
    for (const auto& it : items) {
        if (it.pos < 1) fail("item position must be >= 1");
        if (it.kind == ItemKind::Cup) continue;
        if (it.pos != expect)
            fail("items do not tile the input strands: expected position " +
                 std::to_string(expect) + ", got " + std::to_string(it.pos));
        ItemLayout il;
        il.item = it;
        il.in_pos = it.pos;
        int idx = static_cast<int>(lay.items.size());
        lay.items.push_back(il);
        for (int leg = 0; leg < outputs_produced(it.kind); ++leg) outs.push_back({idx, leg});
        expect += inputs_consumed(it.kind);
    }
    if (expect != width_in + 1)
        fail("items cover strands 1.." + std::to_string(expect - 1) + " but slice width is " +
             std::to_string(width_in));

    for (const auto& it : items) {
        if (it.kind != ItemKind::Cup) continue;
        if (it.pos == last_cup_pos) fail("duplicate cup position " + std::to_string(it.pos));
        last_cup_pos = it.pos;
        int at = it.pos - 1;
        if (at < 0 || at > static_cast<int>(outs.size()))
            fail("cup position " + std::to_string(it.pos) + " outside output range 1.." +
                 std::to_string(outs.size() + 1));
        if (at > 0 && at < static_cast<int>(outs.size()) && outs[at - 1].item == outs[at].item)
            fail("cup at position " + std::to_string(it.pos) + " splits an output pair");
        ItemLayout il;
        il.item = it;
        int idx = static_cast<int>(lay.items.size());
        lay.items.push_back(il);
        outs.insert(outs.begin() + at, {Leg{idx, 0}, Leg{idx, 1}});
    }

    for (std::size_t o = 0; o < outs.size(); ++o)
        if (outs[o].leg == 0) lay.items[static_cast<std::size_t>(outs[o].item)].out_pos = static_cast<int>(o) + 1;
    lay.width_out = static_cast<int>(outs.size());
    return lay;
}

}  // namespace

int TangleDiagram::m_top() const {
    int w = m_bottom;
    for (const auto& s : slices)
        for (const auto& it : s) w += width_delta(it.kind);
    return w;
}

bool is_closed(const TangleDiagram& d) {
    return d.closure == Closure::Annular || (d.m_bottom == 0 && d.m_top() == 0);
}

const char* kind_token(ItemKind k) {
    switch (k) {
        case ItemKind::Vertical: return "id";
        case ItemKind::Cup: return "cup";
        case ItemKind::Cap: return "cap";
        case ItemKind::CrossPos: return "x+";
        case ItemKind::CrossNeg: return "x-";
    }
    return "?";
}

std::optional<ItemKind> kind_from_token(const std::string& s) {
    if (s == "id") return ItemKind::Vertical;
    if (s == "cup") return ItemKind::Cup;
    if (s == "cap") return ItemKind::Cap;
    if (s == "x+") return ItemKind::CrossPos;
    if (s == "x-") return ItemKind::CrossNeg;
    return std::nullopt;
}

DiagramGraph build_graph(const TangleDiagram& d) {
    if (d.m_bottom < 0) throw ValidationError("negative bottom strand count");

    DiagramGraph g;
    g.closure = d.closure;
    g.m_bottom = d.m_bottom;
    g.widths.push_back(d.m_bottom);

    int width = d.m_bottom;
    for (std::size_t s = 0; s < d.slices.size(); ++s) {
        SliceLayout lay = layout_slice(d.slices[s], width, static_cast<int>(s) + 1);
        width = lay.width_out;
        g.layouts.push_back(std::move(lay));
        g.widths.push_back(width);
    }

    if (d.closure == Closure::Annular && d.m_bottom != width)
        throw ValidationError("annular closure requires equal top and bottom widths (" +
                              std::to_string(width) + " vs " + std::to_string(d.m_bottom) + ")");

    int next_id = 1;
    for (int s = 1; s <= g.height(); ++s) {
        for (auto& il : g.layouts[static_cast<std::size_t>(s - 1)].items) {
            Node in{s - 1, il.in_pos};
            Node out{s, il.out_pos};
            switch (il.item.kind) {
                case ItemKind::Vertical:
                    g.arcs.push_back({next_id++, ArcKind::Strand, s, -1, in, out});
                    break;
                case ItemKind::Cup:
                    g.arcs.push_back({next_id++, ArcKind::CupArc, s, -1, out, {s, il.out_pos + 1}});
                    break;
                case ItemKind::Cap:
                    g.arcs.push_back({next_id++, ArcKind::CapArc, s, -1, in, {s - 1, il.in_pos + 1}});
                    break;
                case ItemKind::CrossPos:
                case ItemKind::CrossNeg: {
                    int ci = static_cast<int>(g.crossings.size());
                    int a = next_id++;
                    int b = next_id++;
                    // connectivity: left input <-> right output, right input <-> left output
                    g.arcs.push_back({a, ArcKind::CrossingA, s, ci, in, {s, il.out_pos + 1}});
                    g.arcs.push_back({b, ArcKind::CrossingB, s, ci, {s - 1, il.in_pos + 1}, out});
                    g.crossings.push_back({s, il.in_pos, il.out_pos, il.item.kind, a, b});
                    break;
                }
            }
        }
    }

    if (d.closure == Closure::Annular) {
        g.closure_arc_base = next_id;
        int h = g.height();
        for (int j = 1; j <= d.m_bottom; ++j)
            g.arcs.push_back({next_id++, ArcKind::ClosureArc, 0, -1, {0, j}, {h, j}});
    }

    if (d.marked_arc) {
        int id = *d.marked_arc;
        if (id < 1 || id > static_cast<int>(g.arcs.size()))
            throw ValidationError("marked arc " + std::to_string(id) + " does not exist");
        ArcKind k = g.arc(id).kind;
        if (k == ArcKind::CrossingA || k == ArcKind::CrossingB)
            throw ValidationError("marked arc " + std::to_string(id) +
                                  " is a crossing leg; mark a cup, cap, strand, or closure arc");
    }

    return g;
}

void validate(const TangleDiagram& d) {
    (void)build_graph(d);
    if (!d.orientation_overrides.empty()) {
        std::vector<Component> comps = trace_link_components(d);
        for (const auto& [comp_id, dir] : d.orientation_overrides) {
            (void)dir;
            if (comp_id < 1 || comp_id > static_cast<int>(comps.size()))
                throw ValidationError("orientation override names unknown component " +
                                      std::to_string(comp_id));
        }
    }
}

TangleDiagram mirror(const TangleDiagram& d) {
    TangleDiagram m = d;
    for (auto& s : m.slices)
        for (auto& it : s) {
            if (it.kind == ItemKind::CrossPos)
                it.kind = ItemKind::CrossNeg;
            else if (it.kind == ItemKind::CrossNeg)
                it.kind = ItemKind::CrossPos;
        }
    return m;
}

namespace {

struct End {
    int arc = 0;     // arc id
    bool at_from = true;
};

// node -> the (at most two) arc ends meeting there
std::map<Node, std::vector<End>> incidence(const DiagramGraph& g) {
    std::map<Node, std::vector<End>> inc;
    for (const auto& a : g.arcs) {
        inc[a.from].push_back({a.id, true});
        inc[a.to].push_back({a.id, false});
    }
    return inc;
}

}  // namespace

std::vector<Component> trace_link_components(const TangleDiagram& d) {
    DiagramGraph g = build_graph(d);
    auto inc = incidence(g);

    for (const auto& [node, ends] : inc)
        if (ends.size() > 2)
            throw ValidationError("node is incident to more than two arcs (internal error)");

    std::vector<bool> used(g.arcs.size() + 1, false);
    std::vector<Component> comps;

    // Walks from (arc, direction) until hitting a degree-1 node or returning
    // to the starting end.  dir true = traverse from->to.
    auto walk = [&](int arc0, bool dir0) {
        std::vector<std::pair<int, bool>> path;
        int arc = arc0;
        bool dir = dir0;
        while (true) {
            used[static_cast<std::size_t>(arc)] = true;
            path.emplace_back(arc, dir);
            const Arc& a = g.arc(arc);
            Node head = dir ? a.to : a.from;
            const auto& ends = inc.at(head);
            const End* next = nullptr;
            bool skipped_arrival = false;
            for (const auto& e : ends) {
                if (!skipped_arrival && e.arc == arc && e.at_from == !dir) {
                    skipped_arrival = true;  // the end we arrived on
                    continue;
                }
                next = &e;
                break;
            }
            if (!next) break;  // boundary endpoint
            arc = next->arc;
            dir = next->at_from;  // entering at 'from' means we traverse forward
            if (arc == arc0 && dir == dir0) break;  // cycle closed
        }
        return path;
    };

    // Open components first: start from boundary (degree-1) nodes in order.
    for (const auto& [node, ends] : inc) {
        if (ends.size() != 1) continue;
        const End& e = ends.front();
        if (used[static_cast<std::size_t>(e.arc)]) continue;
        comps.push_back({0, walk(e.arc, e.at_from)});
    }
    // Remaining arcs lie on cycles.
    for (const auto& a : g.arcs) {
        if (used[static_cast<std::size_t>(a.id)]) continue;
        comps.push_back({0, walk(a.id, true)});
    }

    // Normalize: the least arc is traversed forward; cycles are rotated so it
    // comes first.  Components are then ordered by least arc id and numbered
    // from 1.
    for (auto& c : comps) {
        auto by_id = [](const std::pair<int, bool>& x, const std::pair<int, bool>& y) {
            return x.first < y.first;
        };
        auto least = std::min_element(c.arcs.begin(), c.arcs.end(), by_id);
        if (!least->second) {
            std::reverse(c.arcs.begin(), c.arcs.end());
            for (auto& [arc, fwd] : c.arcs) fwd = !fwd;
            least = std::min_element(c.arcs.begin(), c.arcs.end(), by_id);
        }
        const Arc& first = g.arc(c.arcs.front().first);
        Node tail = c.arcs.front().second ? first.from : first.to;
        bool is_cycle = inc.at(tail).size() == 2;
        if (is_cycle) std::rotate(c.arcs.begin(), least, c.arcs.end());
    }
    std::sort(comps.begin(), comps.end(),
              [](const Component& a, const Component& b) { return a.least_arc() < b.least_arc(); });
    for (std::size_t i = 0; i < comps.size(); ++i) comps[i].id = static_cast<int>(i) + 1;
    return comps;
}

CrossingCount count_crossings(const TangleDiagram& d) {
    DiagramGraph g = build_graph(d);
    std::vector<Component> comps = trace_link_components(d);

    std::vector<int> arc_dir(g.arcs.size() + 1, 0);  // +1 forward, -1 backward
    for (const auto& c : comps) {
        int flip = 1;
        auto ov = d.orientation_overrides.find(c.id);
        if (ov != d.orientation_overrides.end() && ov->second == Direction::Backward) flip = -1;
        for (const auto& [arc, fwd] : c.arcs) arc_dir[static_cast<std::size_t>(arc)] = (fwd ? 1 : -1) * flip;
    }

    CrossingCount cc;
    for (const auto& x : g.crossings) {
        bool parallel = arc_dir[static_cast<std::size_t>(x.arc_a)] ==
                        arc_dir[static_cast<std::size_t>(x.arc_b)];
        bool positive = (x.kind == ItemKind::CrossPos) ? parallel : !parallel;
        if (positive)
            ++cc.n_plus;
        else
            ++cc.n_minus;
    }
    return cc;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& s, int line, int col) {
    std::string t = trim(s);
    if (t.empty()) throw ParseError("expected an integer", line, col);
    std::size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(t, &pos);
    } catch (const std::exception&) {
        throw ParseError("invalid integer '" + t + "'", line, col);
    }
    if (pos != t.size()) throw ParseError("trailing characters after integer '" + t + "'", line, col);
    return v;
}

}  // namespace

TangleDiagram parse_diagram(const std::string& text) {
    TangleDiagram d;
    bool saw_m = false;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = raw;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.rfind("m=", 0) == 0) {
            if (saw_m) throw ParseError("duplicate m= line", line_no, 1);
            d.m_bottom = parse_int(line.substr(2), line_no, 3);
            if (d.m_bottom < 0) throw ParseError("m must be >= 0", line_no, 3);
            saw_m = true;
        } else if (line.rfind("closure=", 0) == 0) {
            std::string v = trim(line.substr(8));
            if (v == "annular")
                d.closure = Closure::Annular;
            else if (v == "none")
                d.closure = Closure::None;
            else
                throw ParseError("closure must be 'annular' or 'none', got '" + v + "'", line_no, 9);
        } else if (line.rfind("marked=", 0) == 0) {
            d.marked_arc = parse_int(line.substr(7), line_no, 8);
        } else if (line.rfind("orient ", 0) == 0) {
            std::istringstream ls(line.substr(7));
            int comp = 0;
            std::string dir;
            if (!(ls >> comp >> dir))
                throw ParseError("expected 'orient <component> forward|backward'", line_no, 8);
            if (dir == "forward")
                d.orientation_overrides[comp] = Direction::Forward;
            else if (dir == "backward")
                d.orientation_overrides[comp] = Direction::Backward;
            else
                throw ParseError("orientation must be 'forward' or 'backward'", line_no, 8);
        } else if (line.rfind("slice:", 0) == 0) {
            if (!saw_m) throw ParseError("m= must precede slice lines", line_no, 1);
            Slice slice;
            std::string rest = trim(line.substr(6));
            if (!rest.empty()) {
                std::istringstream ls(rest);
                std::string tok;
                while (std::getline(ls, tok, ',')) {
                    tok = trim(tok);
                    std::size_t at = tok.find('@');
                    if (at == std::string::npos)
                        throw ParseError("item '" + tok + "' missing '@<pos>'", line_no, 7);
                    auto kind = kind_from_token(tok.substr(0, at));
                    if (!kind)
                        throw ParseError("unknown item kind '" + tok.substr(0, at) + "'", line_no, 7);
                    int pos = parse_int(tok.substr(at + 1), line_no, 7);
                    slice.push_back({*kind, pos});
                }
            }
            std::sort(slice.begin(), slice.end(), item_order);
            d.slices.push_back(std::move(slice));
        } else {
            throw ParseError("unrecognized line '" + line + "'", line_no, 1);
        }
    }
    if (!saw_m) throw ParseError("missing m= header", line_no, 1);

    try {
        (void)build_graph(d);
        if (!d.orientation_overrides.empty()) validate(d);
    } catch (const ValidationError& e) {
        throw ParseError(e.what(), line_no, 1);
    }
    return d;
}

std::string serialize(const TangleDiagram& d) {
    std::ostringstream os;
    os << "m=" << d.m_bottom << "\n";
    os << "closure=" << (d.closure == Closure::Annular ? "annular" : "none") << "\n";
    if (d.marked_arc) os << "marked=" << *d.marked_arc << "\n";
    for (const auto& [comp, dir] : d.orientation_overrides)
        os << "orient " << comp << ' ' << (dir == Direction::Forward ? "forward" : "backward")
           << "\n";
    for (const auto& s : d.slices) {
        os << "slice:";
        for (std::size_t i = 0; i < s.size(); ++i)
            os << (i ? ", " : " ") << kind_token(s[i].kind) << '@' << s[i].pos;
        os << "\n";
    }
    return os.str();
}

}  // namespace annkh
