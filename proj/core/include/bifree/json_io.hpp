#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "bifree/cumulants.hpp"
#include "bifree/fock.hpp"
#include "bifree/levy_hincin.hpp"
#include "bifree/measures.hpp"
#include "bifree/partitions.hpp"
#include "bifree/series.hpp"

namespace bifree::json {

using Json = nlohmann::ordered_json;

/// Rationals as "p/q" strings, doubles as numbers (negative zero written as 0).
Json scalar(const Rational& x);
Json scalar(double x);

/// Reads a number or a string ("p/q", "p", decimal). Throws ParseError.
template <Scalar S>
S to_scalar(const Json& value);

/// Parses text into a document. Throws ParseError with the parser diagnostic.
Json parse(const std::string& text);

Json from_partition(const Partition& p);
Partition to_partition(const Json& value);

/// The "kind" field of a table, series or model document; `fallback` when absent.
ScalarKind kind_of(const Json& value, ScalarKind fallback);
/// True for a table document whose entries include (0, 0).
bool is_moment_table(const Json& value);

template <Scalar S>
Json from_table(const MomentTable<S>& table);
template <Scalar S>
Json from_table(const CumulantTable<S>& table);
template <Scalar S>
Json from_series(const BivariateSeries<S>& series);
template <Scalar S>
MomentTable<S> to_moment_table(const Json& value);
template <Scalar S>
CumulantTable<S> to_cumulant_table(const Json& value);
template <Scalar S>
BivariateSeries<S> to_series(const Json& value);

template <Scalar S>
Json from_measure(const DiscretePlanarMeasure<S>& mu);
template <Scalar S>
Json from_measure(const DiscreteMeasure<S>& nu);
template <Scalar S>
DiscretePlanarMeasure<S> to_planar_measure(const Json& value);
template <Scalar S>
DiscreteMeasure<S> to_measure(const Json& value);

template <Scalar S>
Json from_model(const FockModel<S>& model);
template <Scalar S>
FockModel<S> to_model(const Json& value);

template <Scalar S>
Json from_lh_data(const LevyHincinData<S>& data);
template <Scalar S>
LevyHincinData<S> to_lh_data(const Json& value);

}  // namespace bifree::json
