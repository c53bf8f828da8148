#pragma once

#include <json.hpp>

#include "schurlab/derived.hpp"
#include "schurlab/lr_tableau.hpp"
#include "schurlab/partition.hpp"
#include "schurlab/positivity.hpp"
#include "schurlab/proof_maps.hpp"
#include "schurlab/schur_vector.hpp"

namespace schurlab {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

/// {"outer", "inner", "rows"}; rows lists only the non-empty rows.
Json to_json(const LRTableau& t);

/// Coefficients are decimal strings; terms follow canonical order.
Json to_json(const SchurVector& v);
SchurVector schur_vector_from_json(const Json& j);

Json to_json(const DerivedExpansion& e);
Json to_json(const DifferenceReport& r);
Json to_json(const StarDecomposition& d);
/// Timing and cache counters vary between runs; leave them out for
/// byte-comparable output.
Json to_json(const SweepReport& r, bool include_timing = true);
Json to_json(const MapReport& r);

}  // namespace schurlab
