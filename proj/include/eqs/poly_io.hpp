#pragma once

#include "eqs/poly.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace eqs {

// "c*x1^e1*x2^e2" terms in descending graded-lex order, unit coefficients and
// zero exponents omitted, negative terms written with " - ". Zero prints "0".
std::string format_poly(const Poly& f, char glyph = 'x');

// Inverse of format_poly. Any single-letter glyph is accepted; rank is taken
// from the argument, or inferred from the largest variable index when 0.
Poly parse_poly(std::string_view text, int rank = 0);

// {"rank": r, "terms": [{"exp": [...], "coef": "..."}]}, graded-lex order.
nlohmann::json poly_to_json(const Poly& f);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace eqs
