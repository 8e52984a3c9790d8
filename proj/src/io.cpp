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

#include "mvq/io.hpp"

#include <fstream>
#include <sstream>

namespace mvq {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw InputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw InputError(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

template <class T>
std::vector<T> list_of(const Json& j) {
  if (!j.is_array()) throw InputError("expected an array");
  std::vector<T> out;
  for (const auto& x : j) out.push_back(x.get<T>());
  return out;
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError("expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception&) {
    throw InputError("malformed rational \"" + j.get<std::string>() + "\"");
  }
}

void to_json(Json& j, const PiRational& x) {
  j = Json{{"coeff", rational_json(x.coeff)}, {"pi_power", x.pi_power}};
}
void from_json(const Json& j, PiRational& x) {
  x = PiRational(rational_from_json(field(j, "coeff")), int_field(j, "pi_power"));
}
void to_json(Json& j, const PiQuotient& x) {
  j = Json{{"coeff", rational_json(x.coeff)}, {"pi_power", x.pi_power}};
}
void from_json(const Json& j, PiQuotient& x) {
  x.coeff = rational_from_json(field(j, "coeff"));
  x.pi_power = int_field(j, "pi_power");
}

void to_json(Json& j, const StableGraph& G) {
  Json vertices = Json::array(), edges = Json::array(), legs = Json::array();
  for (int g : G.genus) vertices.push_back(Json{{"genus", g}});
  for (auto [a, b] : G.edges) edges.push_back(Json::array({a, b}));
  for (int i = 0; i < G.num_legs(); ++i) legs.push_back(Json{{"vertex", G.legs[i]}, {"label", i + 1}});
  j = Json{{"vertices", vertices}, {"edges", edges}, {"legs", legs}};
}

void from_json(const Json& j, StableGraph& G) {
  G = StableGraph{};
  const Json& vs = field(j, "vertices");
  if (!vs.is_array() || vs.empty()) throw InputError("\"vertices\" must be a nonempty array");
  for (const auto& v : vs) G.genus.push_back(int_field(v, "genus"));
  const int V = G.num_vertices();
  auto vertex = [&](const Json& x) {
    if (!x.is_number_integer()) throw InputError("vertex index must be an integer");
    int v = x.get<int>();
    if (v < 0 || v >= V) throw InputError("vertex index " + std::to_string(v) + " out of range");
    return v;
  };
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair [u, v]");
      int a = vertex(e[0]), b = vertex(e[1]);
      G.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
  }
  if (j.contains("legs")) {
    const Json& ls = j.at("legs");
    if (!ls.is_array()) throw InputError("\"legs\" must be an array");
    G.legs.assign(ls.size(), -1);
    for (const auto& l : ls) {
      int label = int_field(l, "label");
      if (label < 1 || label > static_cast<int>(ls.size()) || G.legs[label - 1] != -1)
        throw InputError("leg labels must be 1..n without repeats");
      G.legs[label - 1] = vertex(field(l, "vertex"));
    }
  }
  try {
    G.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

void to_json(Json& j, const Multicurve& m) {
  to_json(j, m.graph);
  j["weights"] = m.weights;
}
void from_json(const Json& j, Multicurve& m) {
  from_json(j, m.graph);
  if (j.contains("weights")) {
    m.weights = list_of<long>(j.at("weights"));
  } else {
    m.weights.assign(m.graph.num_edges(), 1);
  }
  if (static_cast<int>(m.weights.size()) != m.graph.num_edges())
    throw InputError("need one weight per edge");
  for (long w : m.weights)
    if (w < 1) throw InputError("weights must be positive");
}

void to_json(Json& j, const GraphVolume& v) {
  j = Json{{"key", v.key}, {"graph", v.graph}, {"aut_order", v.aut_order}, {"volume", v.volume}};
}
void from_json(const Json& j, GraphVolume& v) {
  v.key = field(j, "key").get<std::string>();
  v.graph = field(j, "graph").get<StableGraph>();
  v.aut_order = field(j, "aut_order").get<long long>();
  v.volume = field(j, "volume").get<PiRational>();
}

void to_json(Json& j, const VolumeReport& r) {
  Json cyl = Json::object();
  for (const auto& [k, v] : r.per_cylinder_count) cyl[std::to_string(k)] = v;
  j = Json{{"g", r.g}, {"n", r.n}, {"total", r.total}, {"per_graph", r.per_graph},
           {"per_cylinder_count", cyl}};
}
void from_json(const Json& j, VolumeReport& r) {
  r = VolumeReport{};
  r.g = int_field(j, "g");
  r.n = int_field(j, "n");
  r.total = field(j, "total").get<PiRational>();
  if (j.contains("per_graph"))
    for (const auto& x : j.at("per_graph")) r.per_graph.push_back(x.get<GraphVolume>());
  for (const auto& [k, v] : field(j, "per_cylinder_count").items())
    r.per_cylinder_count[std::stoi(k)] = v.get<PiRational>();
}

void to_json(Json& j, const CatalogEntry& e) {
  j = Json{{"key", e.key}, {"graph", e.graph}, {"aut_order", e.aut_order}};
}
void from_json(const Json& j, CatalogEntry& e) {
  e.key = field(j, "key").get<std::string>();
  e.graph = field(j, "graph").get<StableGraph>();
  e.aut_order = field(j, "aut_order").get<long long>();
}
void to_json(Json& j, const GraphCatalog& c) {
  j = Json{{"g", c.g}, {"n", c.n}, {"graphs", c.entries}};
}
void from_json(const Json& j, GraphCatalog& c) {
  c = GraphCatalog{};
  c.g = int_field(j, "g");
  c.n = int_field(j, "n");
  for (const auto& x : field(j, "graphs")) c.entries.push_back(x.get<CatalogEntry>());
}

void to_json(Json& j, const SiegelVeechReport& r) {
  j = Json{{"g", r.g}, {"n", r.n}, {"product", r.product},
           {"c_area_times_pi2_over_3", rational_json(r.c_area_times_pi2_over_3)}};
  if (r.boundary_value) j["boundary"] = rational_json(*r.boundary_value);
  j["lambda_plus"] = rational_json(r.lambda_plus);
}
void from_json(const Json& j, SiegelVeechReport& r) {
  r = SiegelVeechReport{};
  r.g = int_field(j, "g");
  r.n = int_field(j, "n");
  r.product = field(j, "product").get<PiRational>();
  r.c_area_times_pi2_over_3 = rational_from_json(field(j, "c_area_times_pi2_over_3"));
  if (j.contains("boundary")) r.boundary_value = rational_from_json(j.at("boundary"));
  r.lambda_plus = rational_from_json(field(j, "lambda_plus"));
}

void to_json(Json& j, const AgkSequence& a) {
  Json vals = Json::array();
  for (const auto& v : a.values) vals.push_back(rational_json(v));
  j = Json{{"g", a.g}, {"a", vals}};
}
void from_json(const Json& j, AgkSequence& a) {
  a = AgkSequence{};
  a.g = int_field(j, "g");
  for (const auto& v : field(j, "a")) a.values.push_back(rational_from_json(v));
}

void to_json(Json& j, const PoissonModel& p) {
  Json pmf = Json::object();
  for (const auto& [k, v] : p.pmf) pmf[std::to_string(k)] = v;
  j = Json{{"lambda", p.lambda}, {"pmf", pmf}};
  if (p.tv_distance >= 0) j["tv_distance"] = p.tv_distance;
}
void from_json(const Json& j, PoissonModel& p) {
  p = PoissonModel{};
  p.lambda = field(j, "lambda").get<double>();
  for (const auto& [k, v] : field(j, "pmf").items()) p.pmf[std::stoi(k)] = v.get<double>();
  if (j.contains("tv_distance")) p.tv_distance = j.at("tv_distance").get<double>();
}

void to_json(Json& j, const SeriesCoefficients& s) {
  j = Json{{"c", s.c}, {"A", s.A}, {"B", s.B}};
}
void from_json(const Json& j, SeriesCoefficients& s) {
  s.c = list_of<double>(field(j, "c"));
  s.A = list_of<double>(field(j, "A"));
  s.B = list_of<double>(field(j, "B"));
}

void to_json(Json& j, const ConvergenceRow& r) {
  j = Json{{"key", r.key}, {"graph", r.graph}, {"normalized_count", r.normalized_count},
           {"exact", r.exact}};
}
void from_json(const Json& j, ConvergenceRow& r) {
  r.key = field(j, "key").get<std::string>();
  r.graph = field(j, "graph").get<StableGraph>();
  r.normalized_count = field(j, "normalized_count").get<double>();
  r.exact = field(j, "exact").get<double>();
}
void to_json(Json& j, const ConvergenceReport& r) {
  j = Json{{"g", r.g},         {"n", r.n},
           {"N", r.N},         {"rows", r.rows},
           {"total_count", r.total_count}, {"total_exact", r.total_exact}};
}
void from_json(const Json& j, ConvergenceReport& r) {
  r = ConvergenceReport{};
  r.g = int_field(j, "g");
  r.n = int_field(j, "n");
  r.N = field(j, "N").get<long>();
  for (const auto& x : field(j, "rows")) r.rows.push_back(x.get<ConvergenceRow>());
  r.total_count = field(j, "total_count").get<double>();
  r.total_exact = field(j, "total_exact").get<double>();
}

Json distribution_json(const std::map<int, Rational>& d) {
  Json j = Json::object();
  for (const auto& [k, v] : d) j[std::to_string(k)] = rational_json(v);
  return j;
}
std::map<int, Rational> distribution_from_json(const Json& j) {
  std::map<int, Rational> d;
  for (const auto& [k, v] : j.items()) d[std::stoi(k)] = rational_from_json(v);
  return d;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

ParityConstraints parity_from_json(const Json& j) {
  const Json& rows = j.is_object() ? field(j, "constraints") : j;
  if (!rows.is_array()) throw InputError("parity constraints must be an array of index lists");
  ParityConstraints c;
  for (const auto& row : rows) c.push_back(list_of<int>(row));
  return c;
}

}  // namespace mvq
