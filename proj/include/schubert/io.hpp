#pragma once

// JSON forms of labelings, functor images, complexes, generator lists and
// rational matrices.

#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "schubert/complex.hpp"
#include "schubert/functor.hpp"
#include "schubert/ideal.hpp"
#include "schubert/linalg.hpp"
#include "schubert/superlabel.hpp"

namespace schubert {

using json = nlohmann::json;

/// {"w": "321", "entries": [[i, j, "1'"], ...]}
json to_json(const Labeling& t);
/// Throws std::invalid_argument on malformed input or a domain other than D(w).
Labeling labeling_from_json(const json& j);

/// {"w", "bsl": [...], "columns": [...], "matrix": [[row, col, value], ...]}
json to_json(const FunctorImage& f);

/// {"w", "ranks", "differentials": [{"degree": i, "shape": [r, c], "entries": [[r, c, "scalar"], ...]}]}.
/// Generic maps render linear forms; specialized maps render the evaluated value.
json to_json(const ChainComplex& c, bool with_differentials = true);

/// [{"rows": [...], "cols": [...]}, ...]
json to_json(const std::vector<MinorDescriptor>& gens);

/// {"n": int, "entries": [["p/q", ...], ...]}; throws std::invalid_argument.
Matrix<mpq_class> matrix_from_json(const json& j);
json to_json(const Matrix<mpq_class>& m);

}  // namespace schubert
