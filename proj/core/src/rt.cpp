#include "annkh/rt.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "annkh/parallel.hpp"

namespace annkh {

int ArrowSeq::weight() const {
    int up = __builtin_popcount(up_mask);
    return 2 * up - m;
}

std::string ArrowSeq::str() const {
    std::string s;
    for (int p = 1; p <= m; ++p) s += up(p) ? 'u' : 'd';
    return s;
}

int weight(const ArrowSeq& a) { return a.weight(); }

std::vector<ArrowSeq> weight_basis(int m, int lambda) {
    std::vector<ArrowSeq> basis;
    if ((m + lambda) % 2 != 0 || lambda < -m || lambda > m) return basis;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        ArrowSeq a{m, mask};
        if (a.weight() == lambda) basis.push_back(a);
    }
    std::sort(basis.begin(), basis.end(), [](const ArrowSeq& x, const ArrowSeq& y) {
        for (int p = 1; p <= x.m; ++p) {
            if (x.up(p) != y.up(p)) return x.up(p);  // 'u' before 'd'
        }
        return false;
    });
    return basis;
}

namespace {

int basis_index(const ArrowSeq& a) {
    auto basis = weight_basis(a.m, a.weight());
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == a) return static_cast<int>(i);
    throw std::logic_error("arrow sequence not in its weight basis");
}

}  // namespace

BlockMatrixQ::BlockMatrixQ(int m_) : m(m_) {
    for (int lambda = -m; lambda <= m; lambda += 2) {
        std::size_t n = weight_basis(m, lambda).size();
        blocks[lambda].assign(n, std::vector<LaurentQT>(n));
    }
}

LaurentQT& BlockMatrixQ::entry(int lambda, int row, int col) {
    return blocks.at(lambda)[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

const LaurentQT& BlockMatrixQ::entry(int lambda, int row, int col) const {
    return blocks.at(lambda)[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
}

BlockMatrixQ& BlockMatrixQ::operator+=(const BlockMatrixQ& o) {
    if (m != o.m) throw std::invalid_argument("BlockMatrixQ size mismatch");
    for (auto& [lambda, block] : blocks) {
        const auto& ob = o.blocks.at(lambda);
        for (std::size_t r = 0; r < block.size(); ++r)
            for (std::size_t c = 0; c < block.size(); ++c) block[r][c] += ob[r][c];
    }
    return *this;
}

BlockMatrixQ BlockMatrixQ::scaled(const LaurentQT& c) const {
    BlockMatrixQ out = *this;
    for (auto& [lambda, block] : out.blocks)
        for (auto& row : block)
            for (auto& e : row) e = e * c;
    return out;
}

bool BlockMatrixQ::operator==(const BlockMatrixQ& o) const {
    return m == o.m && blocks == o.blocks;
}

namespace {

void require_open_square(const TangleDiagram& t) {
    if (t.closure != Closure::None)
        throw ValidationError("tangle operations require closure=none");
    if (t.m_bottom != t.m_top())
        throw ValidationError("tangle operations require equal top and bottom widths");
    if (t.m_bottom > 20) throw ValidationError("too many tangle endpoints");
}

struct TangleStates {
    const DiagramGraph& g;
    FlatDiagram flat;
    int m;

    explicit TangleStates(const DiagramGraph& graph, ResolutionIndex idx)
        : g(graph), flat(resolve(graph, idx)), m(graph.m_bottom) {}

    int component_count() const { return flat.component_count(); }

    // orientation word: bit i (low bits) = open component i reversed;
    // following bits = circle eps
    struct Oriented {
        std::uint32_t top_up = 0;
        std::uint32_t bottom_up = 0;
        int j = 0;
    };

    Oriented orient(std::uint32_t word) const {
        Oriented o;
        int nopen = static_cast<int>(flat.opens.size());
        for (const auto& oc : flat.opens) {
            bool reversed = (word >> oc.id) & 1;
            o.j += reversed ? oc.j_backward : oc.j_forward;
            auto record = [&](const Node& n, bool is_bottom, bool is_traversal_start) {
                // a strand points up at a bottom endpoint it leaves and at a
                // top endpoint it enters
                bool points_up = is_bottom == is_traversal_start;
                if (points_up) {
                    if (is_bottom)
                        o.bottom_up |= (1u << (n.pos - 1));
                    else
                        o.top_up |= (1u << (n.pos - 1));
                }
            };
            record(oc.start, oc.start_is_bottom, !reversed);
            record(oc.end, oc.end_is_bottom, reversed);
        }
        for (const auto& c : flat.circles) {
            bool minus = (word >> (nopen + c.id)) & 1;
            o.j += minus ? -1 : 1;  // a counterclockwise circle adds one east pass
        }
        return o;
    }
};

using EntrySink = std::function<void(std::uint32_t a, std::uint32_t b, int j)>;

void for_each_tangle_state(const DiagramGraph& g, ResolutionIndex idx, const EntrySink& sink) {
    TangleStates ts(g, idx);
    int nc = ts.component_count();
    if (nc > 30) throw ValidationError("too many components in a tangle resolution");
    for (std::uint32_t word = 0; word < (1u << nc); ++word) {
        auto o = ts.orient(word);
        sink(o.top_up, o.bottom_up, o.j);
    }
}

}  // namespace

BlockMatrixQ rt_matrix_resolution(const TangleDiagram& t, ResolutionIndex idx) {
    require_open_square(t);
    DiagramGraph g = build_graph(t);
    int m = t.m_bottom;
    BlockMatrixQ out(m);
    for_each_tangle_state(g, idx, [&](std::uint32_t a, std::uint32_t b, int j) {
        ArrowSeq sa{m, a};
        ArrowSeq sb{m, b};
        if (sa.weight() != sb.weight())
            throw std::logic_error("tangle state with unequal endpoint weights");
        out.entry(sa.weight(), basis_index(sa), basis_index(sb)) += LaurentQT::monomial(1, j);
    });
    return out;
}

FullMatrixQ rt_matrix_resolution_full(const TangleDiagram& t, ResolutionIndex idx) {
    require_open_square(t);
    DiagramGraph g = build_graph(t);
    FullMatrixQ out{t.m_bottom, {}};
    for_each_tangle_state(g, idx, [&](std::uint32_t a, std::uint32_t b, int j) {
        out.entries[{a, b}] += LaurentQT::monomial(1, j);
    });
    return out;
}

TangleDiagram annular_closure(const TangleDiagram& t) {
    TangleDiagram d = t;
    d.closure = Closure::Annular;
    return d;
}

TangleDiagram open_tangle(const TangleDiagram& d) {
    TangleDiagram t = d;
    t.closure = Closure::None;
    t.marked_arc.reset();
    t.orientation_overrides.clear();
    return t;
}

namespace {

LaurentQT cube_coefficient(const CrossingCount& cc, int weight) {
    long long sign = ((weight - cc.n_minus) % 2 == 0) ? 1 : -1;
    return LaurentQT::monomial(sign, weight + cc.n_plus - 2 * cc.n_minus);
}

}  // namespace

BlockMatrixQ rt_matrix(const TangleDiagram& t, unsigned threads) {
    require_open_square(t);
    CrossingCount cc = count_crossings(annular_closure(t));
    DiagramGraph g = build_graph(t);
    int n = g.n_crossings();
    std::size_t n_res = static_cast<std::size_t>(1) << n;

    std::vector<BlockMatrixQ> partial(n_res);
    parallel_for(n_res, threads, [&](std::size_t idx) {
        ResolutionIndex ri{static_cast<std::uint32_t>(idx), n};
        partial[idx] = rt_matrix_resolution(t, ri).scaled(cube_coefficient(cc, ri.weight()));
    });

    BlockMatrixQ out(t.m_bottom);
    for (const auto& p : partial) out += p;
    return out;
}

FullMatrixQ rt_matrix_full(const TangleDiagram& t, unsigned threads) {
    (void)threads;
    require_open_square(t);
    CrossingCount cc = count_crossings(annular_closure(t));
    DiagramGraph g = build_graph(t);
    int n = g.n_crossings();

    FullMatrixQ out{t.m_bottom, {}};
    for (std::size_t idx = 0; idx < (static_cast<std::size_t>(1) << n); ++idx) {
        ResolutionIndex ri{static_cast<std::uint32_t>(idx), n};
        LaurentQT coeff = cube_coefficient(cc, ri.weight());
        FullMatrixQ part = rt_matrix_resolution_full(t, ri);
        for (const auto& [key, poly] : part.entries) out.entries[key] += poly * coeff;
    }
    return out;
}

LaurentQT quantum_trace(const BlockMatrixQ& m) {
    LaurentQT tr;
    for (const auto& [lambda, block] : m.blocks) {
        LaurentQT diag;
        for (std::size_t i = 0; i < block.size(); ++i) diag += block[i][i];
        tr += diag * LaurentQT::monomial(1, lambda);
    }
    return tr;
}

LaurentQT sj_via_trace(const TangleDiagram& t, unsigned threads) {
    BlockMatrixQ m = rt_matrix(t, threads);
    LaurentQT out;
    for (const auto& [lambda, block] : m.blocks) {
        LaurentQT diag;
        for (std::size_t i = 0; i < block.size(); ++i) diag += block[i][i];
        out += diag * LaurentQT::monomial(1, lambda, lambda);  // (qt)^lambda
    }
    return out;
}

bool check_weight_preservation(const FullMatrixQ& m) {
    for (const auto& [key, poly] : m.entries) {
        if (poly.is_zero()) continue;
        ArrowSeq a{m.m, key.first};
        ArrowSeq b{m.m, key.second};
        if (a.weight() != b.weight()) return false;
    }
    return true;
}

ClosureGradingReport check_closure_grading(const TangleDiagram& t) {
    require_open_square(t);
    TangleDiagram closed = annular_closure(t);
    DiagramGraph gt = build_graph(t);
    DiagramGraph gl = build_graph(closed);
    int n = gt.n_crossings();

    ClosureGradingReport rep;
    for (std::size_t idx = 0; idx < (static_cast<std::size_t>(1) << n); ++idx) {
        ResolutionIndex ri{static_cast<std::uint32_t>(idx), n};
        TangleStates ts(gt, ri);
        FlatDiagram fl = resolve(gl, ri);

        // direction each tangle edge is traversed under a given orientation
        // word, keyed by (edge kind, ref)
        auto tangle_edge_dirs = [&](std::uint32_t word) {
            std::map<std::pair<int, int>, bool> dirs;
            int nopen = static_cast<int>(ts.flat.opens.size());
            for (const auto& oc : ts.flat.opens) {
                bool reversed = (word >> oc.id) & 1;
                for (const auto& [e, d] : oc.trail) {
                    const REdge& edge = ts.flat.edges[static_cast<std::size_t>(e)];
                    dirs[{static_cast<int>(edge.kind), edge.ref}] = reversed ? !d : d;
                }
            }
            for (const auto& c : ts.flat.circles) {
                bool minus = (word >> (nopen + c.id)) & 1;
                bool along = minus ? (c.rotation == -1) : (c.rotation == 1);
                for (const auto& [e, d] : c.trail) {
                    const REdge& edge = ts.flat.edges[static_cast<std::size_t>(e)];
                    dirs[{static_cast<int>(edge.kind), edge.ref}] = along ? d : !d;
                }
            }
            return dirs;
        };

        int nc = ts.component_count();
        for (std::uint32_t word = 0; word < (1u << nc); ++word) {
            auto o = ts.orient(word);
            if (o.top_up != o.bottom_up) continue;  // only t(S) = b(S) states close up
            int k = ArrowSeq{t.m_bottom, o.top_up}.weight();
            auto dirs = tangle_edge_dirs(word);

            // induced j of the closed state: each closed circle contributes
            // its rotation with the sign of the induced orientation
            int j_closed = 0;
            for (const auto& c : fl.circles) {
                bool along = true;
                bool found = false;
                for (const auto& [e, d] : c.trail) {
                    const REdge& edge = fl.edges[static_cast<std::size_t>(e)];
                    if (edge.is_closure(gl)) continue;
                    auto it = dirs.find({static_cast<int>(edge.kind), edge.ref});
                    if (it == dirs.end()) throw std::logic_error("closure circle edge not in tangle");
                    along = (it->second == d);
                    found = true;
                    break;
                }
                if (!found) {
                    // circle made of a single closure arc: strand p points up
                    // iff the arc is traversed top to bottom
                    const auto& [e, d] = c.trail.front();
                    int p = gl.arc(fl.edges[static_cast<std::size_t>(e)].ref).from.pos;
                    bool strand_up = (o.bottom_up >> (p - 1)) & 1;
                    // d true = canonical = bottom->top
                    along = (strand_up == !d);
                }
                j_closed += along ? c.rotation : -c.rotation;
            }

            ++rep.states_checked;
            if (j_closed != o.j + k) ++rep.violations;
        }
    }
    return rep;
}

}  // namespace annkh
