#include "annkh/floer.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "annkh/parallel.hpp"

namespace annkh {

int surface_euler(int m) {
    if (m < 0) throw std::invalid_argument("surface_euler: negative strand count");
    return 2 - m;
}

ASGrading as_grading(int m, int occupied) {
    if (occupied < 0 || occupied > m)
        throw std::invalid_argument("as_grading: occupied count out of range");
    int direct = -m + 2 * occupied;                          // 2 * (-m/2 + occupied)
    int via_euler = surface_euler(m) - 2 + 2 * occupied;     // 2 * A_S by the Euler formula
    if (direct != via_euler) throw std::logic_error("A_S formulas disagree");
    return {direct};
}

ASGrading as_grading(const GeneratorModel& g, int m) { return as_grading(m, g.occupied); }

GeneratorModel model_generator(const DiagramGraph& g, const FlatDiagram& f,
                               std::uint64_t eps_mask) {
    return {{f.index, eps_mask}, occupied_count(g, f, eps_mask)};
}

int occupied_count(const DiagramGraph& g, const FlatDiagram& f, std::uint64_t eps_mask) {
    (void)g;
    int occ = 0;
    for (const auto& c : f.circles) {
        bool minus = (eps_mask >> c.id) & 1;
        // counterclockwise orientation runs along the trace iff rotation = +1
        bool along = minus ? (c.rotation == -1) : (c.rotation == 1);
        for (int s : c.gamma0_signs) {
            int actual = along ? s : -s;
            if (actual == -1) ++occ;  // strand pointing down = occupied
        }
    }
    return occ;
}

TheoremReport check_theorem(const TangleDiagram& d, unsigned threads) {
    if (!is_closed(d)) throw ValidationError("check_theorem requires a closed annular diagram");
    DiagramGraph g = build_graph(d);
    int n = g.n_crossings();
    int m = d.closure == Closure::Annular ? d.m_bottom : 0;

    TheoremReport rep;
    rep.m = m;
    rep.resolutions = static_cast<long long>(1) << n;

    std::mutex mu;
    std::vector<long long> counts(static_cast<std::size_t>(rep.resolutions), 0);
    parallel_for(static_cast<std::size_t>(rep.resolutions), threads, [&](std::size_t idx) {
        FlatDiagram f = resolve(g, {static_cast<std::uint32_t>(idx), n});
        long long local = 0;
        std::vector<TheoremViolation> bad;
        for (const auto& s : enumerate_enhanced(f)) {
            int k = k_degree(f, s.eps_mask);
            int occ = occupied_count(g, f, s.eps_mask);
            ASGrading as = as_grading(m, occ);
            ++local;
            if (k != -as.twice) bad.push_back({s.resolution, s.eps_mask, k, as.twice});
        }
        counts[idx] = local;
        if (!bad.empty()) {
            std::lock_guard<std::mutex> lock(mu);
            rep.violations.insert(rep.violations.end(), bad.begin(), bad.end());
        }
    });
    for (long long c : counts) rep.states_checked += c;
    return rep;
}

std::string format_report(const TheoremReport& rep, bool verbose) {
    std::ostringstream os;
    os << "resolutions " << rep.resolutions << ", states " << rep.states_checked
       << ", violations " << rep.violations.size() << (rep.ok() ? " [OK]" : " [FAIL]") << "\n";
    if (verbose || !rep.ok()) {
        std::size_t shown = 0;
        for (const auto& v : rep.violations) {
            os << "  I=" << v.res.str() << " eps=" << v.eps_mask << " k=" << v.k
               << " 2A_S=" << v.twice_as << " FAIL\n";
            if (++shown >= 16) break;
        }
    }
    return os.str();
}

}  // namespace annkh
