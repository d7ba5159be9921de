#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>

#include "dualref/rational.hpp"
#include "dualref/real.hpp"
#include "dualref/series.hpp"

namespace dualref {

// Insertion-ordered JSON so emitted records are byte-stable.
using Json = nlohmann::ordered_json;

// Scientific decimal rendering used for every emitted numeric value.
std::string format_real(const Real& x, unsigned digits);

// {"value": ..., "error_bound": ...} with decimal-string fields.
Json bounded_json(const BoundedReal& v, unsigned digits);

// {degree_bound, entries: [{word, value}]}; rational values as "p/q".
Json series_to_json(const NCSeries<Rational>& s);
Json series_to_json(const NCSeries<BoundedReal>& s, unsigned digits);

NCSeries<Rational> rational_series_from_json(const Json& j);

// CSV table with columns word, multi_index, value, error_bound; the
// multi_index column is filled only for words that name one (empty word and
// Y-ending words).
void write_series_csv(std::ostream& os, const NCSeries<BoundedReal>& s, unsigned digits);

}  // namespace dualref
