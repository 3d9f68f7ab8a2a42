#ifndef ANNKH_JSON_IO_HPP
#define ANNKH_JSON_IO_HPP

#include <json.hpp>

#include "annkh/check.hpp"
#include "annkh/floer.hpp"
#include "annkh/homology.hpp"
#include "annkh/laurent.hpp"
#include "annkh/rt.hpp"
#include "annkh/tangle.hpp"

namespace annkh {

using json = nlohmann::json;

json diagram_to_json(const TangleDiagram& d);
TangleDiagram diagram_from_json(const json& j);

// Reads either DSL text or the JSON mirror, sniffing the leading character.
TangleDiagram load_diagram(const std::string& content);

json poly_to_json(const LaurentQT& p);      // [{"q":..,"t":..,"c":..}, ...] in print order
json zform_to_json(const ZForm& z);
json skein_to_json(const SkeinForm& s);
json dims_to_json(const DimsIJ& dims);
json dims_to_json(const DimsIJK& dims);
json pages_to_json(const std::vector<PageTable>& pages);
json blocks_to_json(const BlockMatrixQ& m);
json checks_to_json(const std::vector<CheckResult>& results);
json theorem_to_json(const TheoremReport& rep);

}  // namespace annkh

#endif
