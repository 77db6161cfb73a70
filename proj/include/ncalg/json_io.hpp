#pragma once

#include "json.hpp"
#include "ncalg/freealg.hpp"
#include "ncalg/scalar.hpp"

namespace ncalg {

using Json = nlohmann::ordered_json;

// Rationals are strings "p/q"; exponents are integers or "p/q" strings.
Json rational_to_json(const mpq_class& c);
mpq_class rational_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

// {"num": [[coef, {"q": "3/2", "a1": 1}], ...], "den": [...]}
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

// {"gens": ["X1","X2","X3"], "terms": [[scalar, [1,2]], ...]}, 1-based letters.
Json ncpoly_to_json(const NcPoly& f);
NcPoly ncpoly_from_json(const Json& j);

}  // namespace ncalg
