#pragma once

// JSON encodings of polynomials, solution tables and check reports.
// Coefficients are decimal strings so no precision is lost.

#include "json.hpp"

#include "kzres/kzsolve.hpp"
#include "kzres/verify.hpp"

namespace kzres {

/// {"vars": N, "terms": [{"exp": [...], "num": "...", "den": "..."}]},
/// terms in descending monomial order.
nlohmann::ordered_json to_json(const SparsePolynomial& p);
SparsePolynomial polynomial_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json to_json(const Tabloid& u);
nlohmann::ordered_json to_json(const PolyFraction& f);

/// {"lambda", "m", "degree", "cycles", "forms", "components"}; components
/// are indexed [cycle][form].
nlohmann::ordered_json to_json(const SolutionTable& table);
/// The tabloid table as above plus "tableaux" and the v-basis "matrix".
nlohmann::ordered_json to_json(const FundamentalMatrix& f);
nlohmann::ordered_json to_json(const DiagramStats& stats, const Partition& shape, int m);
/// {"check", "lambda", "m", "verdict", "witness"}; witness is null on pass.
nlohmann::ordered_json to_json(const CheckReport& r);

}  // namespace kzres
