// JSON readers and writers for every value the command line speaks:
// dyadic coordinates, group elements, series (bit-exact term lists), cuts,
// modules in both representations, and the char-2 shapes.  Writers emit
// only what the readers accept, so output always round-trips.

#pragma once

#include <json.hpp>

#include "qqm/char2.hpp"
#include "qqm/module.hpp"

namespace qqm {

using Json = nlohmann::json;

Json dyadic_json(const Dyadic& d);
Dyadic dyadic_from(const Json& j);

Json group_json(const GroupElem& g);
GroupElem group_from(const Json& j, std::size_t n);

// {"terms": [{"exponent": [...], "coeff": "p/q"}, ...], "prec": [...] | null}
// Readers also accept a bare term list or a grammar string.
Json series_json(const Series& s);
Series series_from(const Json& j, std::size_t n, bool char2 = false);

// {"shape": "empty"} | {"shape": "closed_ray", "g0": [...]} |
// {"shape": "open_cut", "k": 1, "prefix": [...], "inclusive": false}
Json cut_json(const Cut& c);
Cut cut_from(const Json& j, std::size_t dim);

// {"n": 1, "H": 1, "repr": {"generators": [...]}} or
// {"n": 1, "H": 1, "repr": {"patches": [{"class": [1], "module": "pos",
//  "heads": <cut>}, ...], "frontier": <cut>}}
Json module_json(const QQModule& m);
QQModule module_from(const Json& j);

// {"n": 1, "H": 1, "cut": <cut>, "layer": "all"} (layer absent for Gamma1)
Json c2_module_json(const Char2Module& m);
Char2Module c2_module_from(const Json& j);

}  // namespace qqm
