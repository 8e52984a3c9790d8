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

// Thin extension module. Exact values cross the boundary as "p/q" strings
// or as the JSON documents of mvq/io.hpp; the Python package turns them
// into Fractions and dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mvq/asymptotics.hpp"
#include "mvq/correlators.hpp"
#include "mvq/io.hpp"
#include "mvq/lattice_oracle.hpp"
#include "mvq/multicurve_stats.hpp"
#include "mvq/siegel_veech.hpp"
#include "mvq/volume.hpp"

namespace py = pybind11;
using namespace mvq;

namespace {

std::string dump(const Json& j) { return j.dump(); }
Json load(const std::string& s) { return Json::parse(s); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Masur-Veech volumes and related counts (native core)";

  py::register_exception<OutOfHypothesis>(m, "OutOfHypothesisError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const nlohmann::json::exception& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def("correlator", [](int g, const std::vector<int>& d) { return to_string(correlator(g, d)); },
        py::arg("g"), py::arg("d"));
  m.def("graphs_json", [](int g, int n) { return dump(Json(enumerate(g, n))); });
  m.def(
      "volume_json",
      [](int g, int n, int threads) {
        py::gil_scoped_release release;
        return dump(Json(masur_veech_volume(g, n, threads)));
      },
      py::arg("g"), py::arg("n"), py::arg("threads") = 0);
  m.def("graph_volume_json",
        [](const std::string& graph) { return dump(Json(vol_graph(load(graph).get<StableGraph>()))); });
  m.def(
      "siegel_veech_json",
      [](int g, int n, bool graph, bool boundary) {
        return dump(Json(siegel_veech_report(g, n, graph, boundary)));
      },
      py::arg("g"), py::arg("n"), py::arg("graph") = true, py::arg("boundary") = false);
  m.def("cylinder_distribution_json",
        [](int g, int n) { return dump(distribution_json(cylinder_distribution(g, n))); });
  m.def("frequency", [](const std::string& mc) { return to_string(frequency(load(mc).get<Multicurve>())); });
  m.def("b_gn_json", [](int g, int n) { return dump(Json(b_gn(g, n))); });
  m.def(
      "expectation_json",
      [](const std::string& graph, const std::vector<int>& num, const std::vector<int>& den,
         std::optional<std::vector<long>> heights) {
        auto e = expectation_ratio(load(graph).get<StableGraph>(), num, den, heights);
        Json j{{"infinite", e.infinite}, {"value", e.infinite ? 0.0 : e.value}};
        if (e.exact) j["exact"] = rational_json(*e.exact);
        if (!e.symbolic.empty()) j["symbolic"] = e.symbolic;
        return dump(j);
      },
      py::arg("graph"), py::arg("num"), py::arg("den"), py::arg("heights") = py::none());
  m.def("prob_heights_json", [](const std::string& graph, const std::vector<long>& bound) {
    auto p = prob_heights(load(graph).get<StableGraph>(), bound);
    return dump(Json{{"exact", p.exact}, {"value", p.value}});
  });
  m.def("agk", [](int g) {
    std::vector<std::string> out;
    for (const auto& v : agk_by_recursion(g).values) out.push_back(to_string(v));
    return out;
  });
  m.def("sep_nonsep_ratio", [](int g) { return to_string(sep_nonsep_ratio(g)); });
  m.def("harmonic_H", [](int k, int mm) { return to_string(harmonic_H(k, mm)); });
  m.def("harmonic_H_float", &harmonic_H_float);
  m.def("harmonic_Z_float", &harmonic_Z_float);
  m.def("series_coeffs_json", [](int j) { return dump(Json(series_coeffs(j))); });
  m.def("poisson_lambda", &poisson_lambda);
  m.def(
      "lattice_sum",
      [](const std::vector<int>& e, long N, const ParityConstraints& c) {
        py::gil_scoped_release release;
        return lattice_sum(e, N, c).get_str();
      },
      py::arg("m"), py::arg("N"), py::arg("parity") = ParityConstraints{});
  m.def("square_tiled_count", [](const std::string& graph, long N) {
    return to_string(square_tiled_count(load(graph).get<StableGraph>(), N));
  });
  m.def("convergence_report_json", [](int g, int n, long N) {
    py::gil_scoped_release release;
    return dump(Json(volume_convergence_report(g, n, N)));
  });
}
