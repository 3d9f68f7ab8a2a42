#include "annkh/json_io.hpp"

namespace annkh {

json diagram_to_json(const TangleDiagram& d) {
    json j;
    j["m"] = d.m_bottom;
    j["closure"] = d.closure == Closure::Annular ? "annular" : "none";
    json slices = json::array();
    for (const auto& s : d.slices) {
        json slice = json::array();
        for (const auto& it : s) slice.push_back({{"kind", kind_token(it.kind)}, {"at", it.pos}});
        slices.push_back(slice);
    }
    j["slices"] = slices;
    if (d.marked_arc) j["marked"] = *d.marked_arc;
    if (!d.orientation_overrides.empty()) {
        json orient = json::object();
        for (const auto& [comp, dir] : d.orientation_overrides)
            orient[std::to_string(comp)] = dir == Direction::Forward ? "forward" : "backward";
        j["orient"] = orient;
    }
    return j;
}

TangleDiagram diagram_from_json(const json& j) {
    TangleDiagram d;
    if (!j.contains("m") || !j["m"].is_number_integer())
        throw ValidationError("json diagram: missing integer field 'm'");
    d.m_bottom = j["m"].get<int>();
    if (j.contains("closure")) {
        std::string c = j["closure"].get<std::string>();
        if (c == "annular")
            d.closure = Closure::Annular;
        else if (c == "none")
            d.closure = Closure::None;
        else
            throw ValidationError("json diagram: closure must be 'annular' or 'none'");
    }
    for (const auto& slice : j.value("slices", json::array())) {
        Slice s;
        for (const auto& item : slice) {
            auto kind = kind_from_token(item.at("kind").get<std::string>());
            if (!kind)
                throw ValidationError("json diagram: unknown item kind '" +
                                      item.at("kind").get<std::string>() + "'");
            s.push_back({*kind, item.at("at").get<int>()});
        }
        d.slices.push_back(std::move(s));
    }
    if (j.contains("marked")) d.marked_arc = j["marked"].get<int>();
    if (j.contains("orient"))
        for (const auto& [comp, dir] : j["orient"].items()) {
            std::string v = dir.get<std::string>();
            if (v != "forward" && v != "backward")
                throw ValidationError("json diagram: orientation must be forward|backward");
            d.orientation_overrides[std::stoi(comp)] =
                v == "forward" ? Direction::Forward : Direction::Backward;
        }
    validate(d);
    return d;
}

TangleDiagram load_diagram(const std::string& content) {
    for (char ch : content) {
        if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') continue;
        if (ch == '{') return diagram_from_json(json::parse(content));
        break;
    }
    return parse_diagram(content);
}

json poly_to_json(const LaurentQT& p) {
    json arr = json::array();
    for (const auto& [key, c] : p.terms())
        arr.push_back({{"q", key.first}, {"t", key.second}, {"c", c}});
    return arr;
}

json zform_to_json(const ZForm& z) {
    json arr = json::array();
    for (std::size_t n = 0; n < z.coeffs.size(); ++n) {
        if (z.coeffs[n].is_zero()) continue;
        arr.push_back({{"z", n}, {"coeff", poly_to_json(z.coeffs[n])}});
    }
    return arr;
}

json skein_to_json(const SkeinForm& s) {
    json arr = json::array();
    for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
        if (s.coeffs[n].is_zero()) continue;
        json coeff = json::array();
        for (const auto& [key, c] : s.coeffs[n].terms())
            coeff.push_back({{"a", key.first}, {"c", c}});
        arr.push_back({{"z", n}, {"coeff", coeff}});
    }
    return arr;
}

json dims_to_json(const DimsIJ& dims) {
    json arr = json::array();
    for (const auto& [key, dim] : dims)
        arr.push_back({{"i", key.first}, {"j", key.second}, {"dim", dim}});
    return arr;
}

json dims_to_json(const DimsIJK& dims) {
    json arr = json::array();
    for (const auto& [key, dim] : dims) {
        auto [i, j, k] = key;
        arr.push_back({{"i", i}, {"j", j}, {"k", k}, {"dim", dim}});
    }
    return arr;
}

json pages_to_json(const std::vector<PageTable>& pages) {
    json arr = json::array();
    for (const auto& p : pages) {
        json dims = json::array();
        for (const auto& [key, dim] : p.dims) {
            auto [k, i, j] = key;
            dims.push_back({{"k", k}, {"i", i}, {"j", j}, {"dim", dim}});
        }
        arr.push_back({{"page", p.r},
                       {"stable", p.is_infinity},
                       {"total", p.total()},
                       {"dims", dims}});
    }
    return arr;
}

json blocks_to_json(const BlockMatrixQ& m) {
    json arr = json::array();
    for (const auto& [lambda, block] : m.blocks) {
        json basis = json::array();
        for (const auto& a : weight_basis(m.m, lambda)) basis.push_back(a.str());
        json rows = json::array();
        for (const auto& row : block) {
            json r = json::array();
            for (const auto& e : row) r.push_back(poly_to_json(e));
            rows.push_back(r);
        }
        arr.push_back({{"weight", lambda}, {"basis", basis}, {"entries", rows}});
    }
    return arr;
}

json checks_to_json(const std::vector<CheckResult>& results) {
    json arr = json::array();
    for (const auto& r : results)
        arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    return arr;
}

json theorem_to_json(const TheoremReport& rep) {
    json viol = json::array();
    for (const auto& v : rep.violations)
        viol.push_back({{"resolution", v.res.str()},
                        {"eps", v.eps_mask},
                        {"k", v.k},
                        {"twice_as", v.twice_as}});
    return {{"m", rep.m},
            {"resolutions", rep.resolutions},
            {"states", rep.states_checked},
            {"violations", viol},
            {"ok", rep.ok()}};
}

}  // namespace annkh
