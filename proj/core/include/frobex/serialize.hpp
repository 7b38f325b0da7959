#pragma once

// Machine-readable export: JSON (default), plain text, and CSV renderings
// of posets, complexes, Betti vectors, predictions, and series.

#include <string>

#include "frobex/complex.hpp"
#include "frobex/homology.hpp"
#include "frobex/interval.hpp"
#include "frobex/monoid.hpp"
#include "frobex/poincare.hpp"
#include "frobex/transition.hpp"

namespace frobex {

enum class OutputFormat { json, text, csv };
OutputFormat parse_format(const std::string& text);

// {"elements": [[m,n,k], ...], "lt": [[i,j], ...]}
std::string poset_to_json(const IntervalPoset& poset);
std::string poset_to_text(const IntervalPoset& poset);
std::string poset_to_csv(const IntervalPoset& poset);

// JSON mirror of the per-dimension face lists.
std::string complex_to_json(const SimplicialComplex& complex);
// One facet per line, vertex indices space-separated.
std::string complex_to_text(const SimplicialComplex& complex);
std::string complex_to_csv(const SimplicialComplex& complex);

// {"4": 2} — degrees as keys, zero entries omitted.
std::string betti_to_json(const BettiVector& betti);
std::string betti_to_text(const BettiVector& betti);
std::string betti_to_csv(const BettiVector& betti);

std::string prediction_to_json(const Prediction& prediction);
std::string prediction_to_text(const Prediction& prediction);

std::string recognized_to_json(const RecognizedMonoid& recognized);
std::string recognized_to_text(const RecognizedMonoid& recognized);

// {"spec": "...", "i_max": N, "terms": [{"i":, "lambda":, "coeff":}, ...]}
// with terms sorted by (i, lexicographic lambda).
std::string series_to_json(const MultigradedSeries& series);
std::string series_to_csv(const MultigradedSeries& series);

std::string diff_to_json(const std::vector<SeriesDiffEntry>& diff);

}  // namespace frobex
