#pragma once

// JSON renderings used by the command-line reports. Integers are emitted as
// JSON numbers when they fit in 64 bits and as decimal strings otherwise.

#include <map>

#include <nlohmann/json.hpp>

#include "csamot/gl_motive.hpp"
#include "csamot/hyperplane_section.hpp"
#include "csamot/matrix.hpp"
#include "csamot/schubert.hpp"
#include "csamot/slice_ss.hpp"

namespace csamot {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& v);
Json to_json(const LabelMap& terms);       // {"(3,1)": 1, ...}
Json to_json(const GrChowClass& c);        // {"codim": 4, "terms": {...}}
Json to_json(const XClass& c);
Json to_json(const PXClass& c);            // {"codim": 5, "h^0": {...}, "h^1": ..., "h^2": ...}
Json to_json(const IntMatrix& m);          // [[...], ...]
Json to_json(const TatePattern& p);        // {"(q,p)": m, ...}
Json to_json(const D2Matrix& d);           // rows, cols, entries
Json to_json(const GroupExpr& g);          // rendered string
Json to_json(const std::map<int, GroupExpr>& table);  // {"1": "Z", ...}

XClass xclass_from_json(const Json& j);

}  // namespace csamot
