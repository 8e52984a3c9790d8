// Copyright 2026 The mvq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON encodings of values and reports. Every to_json has a matching
// from_json so that printed reports parse back to equal values.
//
// Exact numbers are strings ("p/q"); pi-scaled values are objects
// {"coeff": "p/q", "pi_power": k}.

#ifndef MVQ_IO_HPP_
#define MVQ_IO_HPP_

#include <json.hpp>
#include <map>
#include <string>
#include <vector>

#include "mvq/asymptotics.hpp"
#include "mvq/exact.hpp"
#include "mvq/lattice_oracle.hpp"
#include "mvq/multicurve_stats.hpp"
#include "mvq/siegel_veech.hpp"
#include "mvq/stable_graph.hpp"
#include "mvq/volume.hpp"

namespace mvq {

using Json = nlohmann::ordered_json;

// Thrown for structurally invalid input documents.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

void to_json(Json& j, const PiRational& x);
void from_json(const Json& j, PiRational& x);
void to_json(Json& j, const PiQuotient& x);
void from_json(const Json& j, PiQuotient& x);

// {"vertices":[{"genus":g}], "edges":[[u,v]], "legs":[{"vertex":v,"label":l}]}
// Legs are stored by label; labels must be exactly 1..n. Edge order is kept.
void to_json(Json& j, const StableGraph& G);
void from_json(const Json& j, StableGraph& G);
// Graph document plus "weights": [H_1, ...].
void to_json(Json& j, const Multicurve& m);
void from_json(const Json& j, Multicurve& m);

void to_json(Json& j, const GraphVolume& v);
void from_json(const Json& j, GraphVolume& v);
void to_json(Json& j, const VolumeReport& r);
void from_json(const Json& j, VolumeReport& r);
void to_json(Json& j, const CatalogEntry& e);
void from_json(const Json& j, CatalogEntry& e);
void to_json(Json& j, const GraphCatalog& c);
void from_json(const Json& j, GraphCatalog& c);
void to_json(Json& j, const SiegelVeechReport& r);
void from_json(const Json& j, SiegelVeechReport& r);
void to_json(Json& j, const AgkSequence& a);
void from_json(const Json& j, AgkSequence& a);
void to_json(Json& j, const PoissonModel& p);
void from_json(const Json& j, PoissonModel& p);
void to_json(Json& j, const SeriesCoefficients& s);
void from_json(const Json& j, SeriesCoefficients& s);
void to_json(Json& j, const ConvergenceRow& r);
void from_json(const Json& j, ConvergenceRow& r);
void to_json(Json& j, const ConvergenceReport& r);
void from_json(const Json& j, ConvergenceReport& r);

// Map k -> p/q, keys written as decimal strings.
Json distribution_json(const std::map<int, Rational>& d);
std::map<int, Rational> distribution_from_json(const Json& j);

// Reads a file and parses it; InputError on failure.
Json read_json_file(const std::string& path);
// Parity constraints: either [[i, j], ...] or {"constraints": [[...]]}.
ParityConstraints parity_from_json(const Json& j);

}  // namespace mvq

#endif  // MVQ_IO_HPP_
