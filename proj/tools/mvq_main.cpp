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

// mvq: command-line front end.
//
// Exit status: 0 on success, 1 for invalid input or a failed check, 2 when a
// formula is requested outside the range where it holds.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mvq/asymptotics.hpp"
#include "mvq/correlators.hpp"
#include "mvq/exact.hpp"
#include "mvq/io.hpp"
#include "mvq/lattice_oracle.hpp"
#include "mvq/multicurve_stats.hpp"
#include "mvq/reference.hpp"
#include "mvq/siegel_veech.hpp"
#include "mvq/stable_graph.hpp"
#include "mvq/volume.hpp"

using namespace mvq;

namespace {

struct Options {
  bool json = false;
  bool csv = false;
  bool check = false;
  int digits = 6;
  std::string config;
  int threads = 0;
};

Options opt;
std::ostringstream out;

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", opt.digits, x);
  return buf;
}

void emit(const Json& j) { out << j.dump(2) << "\n"; }

std::vector<int> int_list(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      v.push_back(std::stoi(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("malformed integer list \"" + s + "\"");
    }
  }
  if (v.empty()) throw InputError("empty integer list");
  return v;
}

std::vector<long> long_list(const std::string& s) {
  std::vector<long> v;
  for (int x : int_list(s)) v.push_back(x);
  return v;
}

void load_config() {
  if (opt.config.empty()) return;
  Json j = read_json_file(opt.config);
  if (!j.is_object()) throw InputError("config must be a JSON object");
  if (j.contains("threads")) opt.threads = j.at("threads").get<int>();
  if (j.contains("digits")) opt.digits = j.at("digits").get<int>();
}

// Runs the self-consistency suite; returns false if anything failed.
bool run_checks(int g, int n) {
  auto lines = check_stratum(g, n);
  bool ok = true;
  if (opt.json) {
    Json arr = Json::array();
    for (const auto& l : lines) arr.push_back(Json{{"check", l.name}, {"ok", l.ok}, {"detail", l.detail}});
    emit(Json{{"g", g}, {"n", n}, {"checks", arr}});
  }
  for (const auto& l : lines) {
    ok = ok && l.ok;
    if (!opt.json)
      out << (l.ok ? "PASS " : "FAIL ") << "(" << g << "," << n << ") " << l.name << ": " << l.detail
          << "\n";
  }
  return ok;
}

// ---- subcommands ----

int cmd_graphs(int g, int n) {
  const auto& cat = enumerate(g, n);
  if (opt.json) {
    emit(Json(cat));
    return 0;
  }
  if (opt.csv) {
    out << "index,edges,graph,aut\n";
    for (size_t i = 0; i < cat.entries.size(); ++i) {
      const auto& e = cat.entries[i];
      out << i << "," << e.graph.num_edges() << "," << e.graph.to_string() << "," << e.aut_order << "\n";
    }
    return 0;
  }
  out << "stable graphs of type (" << g << "," << n << "): " << cat.entries.size() << "\n";
  for (size_t i = 0; i < cat.entries.size(); ++i) {
    const auto& e = cat.entries[i];
    out << "  " << i << "  " << e.graph.to_string() << "  aut=" << e.aut_order << "\n";
  }
  return 0;
}

int cmd_volume(int g, int n, bool per_graph) {
  const auto& r = masur_veech_volume(g, n, opt.threads);
  if (opt.json) {
    if (per_graph) {
      emit(Json(r));
    } else {
      Json j(r);
      j.erase("per_graph");
      emit(j);
    }
    return 0;
  }
  if (opt.csv) {
    out << "g,n,graph,aut,coeff,pi_power,value\n";
    for (const auto& gv : r.per_graph)
      out << g << "," << n << "," << gv.graph.to_string() << "," << gv.aut_order << ","
          << to_string(gv.volume.coeff) << "," << gv.volume.pi_power << "," << num(gv.volume.to_double())
          << "\n";
    out << g << "," << n << ",total,," << to_string(r.total.coeff) << "," << r.total.pi_power << ","
        << num(r.total.to_double()) << "\n";
    return 0;
  }
  if (per_graph) {
    for (const auto& gv : r.per_graph)
      out << gv.graph.to_string() << "  aut=" << gv.aut_order << "  " << gv.volume.to_string() << "  ≈ "
          << num(gv.volume.to_double()) << "\n";
  }
  out << "Vol Q(" << g << "," << n << ") = " << r.total.to_string() << "  ≈ " << num(r.total.to_double())
      << "\n";
  return 0;
}

int cmd_sv(int g, int n, const std::string& method) {
  bool graph = method == "graph" || method == "both";
  bool boundary = method == "boundary" || method == "both";
  if (!graph && !boundary) throw InputError("--method must be graph, boundary or both");
  auto r = siegel_veech_report(g, n, graph, boundary);
  if (opt.json) {
    Json j(r);
    if (method == "both") j["match"] = r.methods_agree();
    emit(j);
    return method == "both" && !r.methods_agree() ? 1 : 0;
  }
  if (graph)
    out << "graph sum: (π²/3)·c_area = " << to_string(r.c_area_times_pi2_over_3) << "  ≈ "
        << num(to_double(r.c_area_times_pi2_over_3)) << "\n";
  if (boundary)
    out << "boundary:  (π²/3)·c_area = " << to_string(*r.boundary_value) << "  ≈ "
        << num(to_double(*r.boundary_value)) << "\n";
  if (method == "both") {
    out << (r.methods_agree() ? "MATCH" : "MISMATCH") << "\n";
    return r.methods_agree() ? 0 : 1;
  }
  return 0;
}

int cmd_lyapunov(int g, int n) {
  auto r = siegel_veech_report(g, n, true, false);
  if (opt.json) {
    emit(Json(r));
    return 0;
  }
  out << "Λ+ = " << to_string(r.lambda_plus) << "  ≈ " << num(to_double(r.lambda_plus)) << "\n";
  return 0;
}

int cmd_freq(const std::string& file) {
  Multicurve m = read_json_file(file).get<Multicurve>();
  m.graph.validate();
  Rational c = frequency(m);
  int g = m.graph.total_genus(), n = m.graph.num_legs();
  auto b = b_gn(g, n);
  if (opt.json) {
    emit(Json{{"multicurve", m}, {"frequency", rational_json(c)}, {"b_gn", b}});
    return 0;
  }
  out << "c(γ) = " << to_string(c) << "  ≈ " << num(to_double(c)) << "\n";
  out << "b_{" << g << "," << n << "} = " << b.to_string() << "  ≈ " << num(b.to_double()) << "\n";
  return 0;
}

int cmd_pk(int g, int n) {
  const auto& r = masur_veech_volume(g, n, opt.threads);
  auto d = cylinder_distribution(g, n);
  if (opt.json) {
    Json contrib = Json::object();
    for (const auto& [k, v] : r.per_cylinder_count) contrib[std::to_string(k)] = v;
    emit(Json{{"g", g}, {"n", n}, {"p", distribution_json(d)}, {"contribution", contrib}});
    return 0;
  }
  if (opt.csv) out << "k,contribution,p_k,value\n";
  for (const auto& [k, p] : d) {
    const auto& v = r.per_cylinder_count.at(k);
    if (opt.csv)
      out << k << "," << v.to_string() << "," << to_string(p) << "," << num(to_double(p)) << "\n";
    else
      out << "k=" << k << "  " << v.to_string() << "  p_" << k << " = " << to_string(p) << "  ≈ "
          << num(to_double(p)) << "\n";
  }
  return 0;
}

int cmd_expect(const std::string& file, const std::string& num_s, const std::string& den_s,
               const std::string& heights, bool symbolic) {
  StableGraph G = read_json_file(file).get<StableGraph>();
  auto nu = int_list(num_s), de = int_list(den_s);
  if (symbolic) {
    std::string s = expectation_ratio_in_heights(G, nu, de);
    if (opt.json)
      emit(Json{{"symbolic", s}});
    else
      out << "E = " << s << "\n";
    return 0;
  }
  std::optional<std::vector<long>> H;
  if (!heights.empty()) H = long_list(heights);
  auto e = expectation_ratio(G, nu, de, H);
  if (opt.json) {
    Json j{{"infinite", e.infinite}};
    if (!e.infinite) j["value"] = e.value;
    if (e.exact) j["exact"] = rational_json(*e.exact);
    if (!e.symbolic.empty()) j["symbolic"] = e.symbolic;
    emit(j);
    return 0;
  }
  if (e.infinite) {
    out << "E = +inf\n";
  } else if (e.exact) {
    out << "E = " << to_string(*e.exact) << "  ≈ " << num(e.value) << "\n";
  } else {
    out << "E = " << e.symbolic << "  ≈ " << num(e.value) << "\n";
  }
  return 0;
}

int cmd_agk(int g, const std::string& source) {
  AgkSequence a;
  if (source == "recursion")
    a = agk_by_recursion(g);
  else if (source == "correlators")
    a = agk_from_correlators(g);
  else
    throw InputError("--source must be recursion or correlators");
  if (opt.json) {
    emit(Json(a));
    return 0;
  }
  if (opt.csv) out << "k,a,value\n";
  for (size_t k = 0; k < a.values.size(); ++k) {
    if (opt.csv)
      out << k << "," << to_string(a.values[k]) << "," << num(to_double(a.values[k])) << "\n";
    else
      out << "a_{" << g << "," << k << "} = " << to_string(a.values[k]) << "  ≈ "
          << num(to_double(a.values[k])) << "\n";
  }
  return 0;
}

int cmd_harmonic(const std::string& which, int k, int m, bool floating) {
  if (which != "H" && which != "Z") throw InputError("first argument must be H or Z");
  if (k < 1 || m < k) throw InputError("need 1 <= k <= m");
  Json j{{"sum", which}, {"k", k}, {"m", m}};
  std::string exact;
  double value;
  if (which == "H") {
    value = harmonic_H_float(k, m);
    if (!floating) {
      Rational h = harmonic_H(k, m);
      exact = to_string(h);
      j["exact"] = rational_json(h);
    }
  } else {
    value = harmonic_Z_float(k, m);
    if (!floating) {
      PiRational z = harmonic_Z(k, m);
      exact = z.to_string();
      j["exact"] = z;
    }
  }
  auto res = expansion_residual(k, m);
  j["value"] = value;
  j["residual"] = which == "H" ? res.eps_H : res.eps_Z;
  if (opt.json) {
    emit(j);
    return 0;
  }
  out << which << "_" << k << "(" << m << ")";
  if (!exact.empty()) out << " = " << exact;
  out << "  ≈ " << num(value) << "\n";
  out << "expansion residual: " << num(which == "H" ? res.eps_H : res.eps_Z) << "\n";
  return 0;
}

int cmd_coeffs(int max_j) {
  if (max_j < 0) throw InputError("max_j must be nonnegative");
  auto s = series_coeffs(max_j);
  auto chk = series_checks(std::max(60, max_j));
  if (opt.json) {
    Json j(s);
    j["checks"] = Json{{"sum_A_half", chk.sum_A_half}, {"target_A_half", chk.target_A_half},
                       {"sum_B_half", chk.sum_B_half}, {"target_B_half", chk.target_B_half},
                       {"sum_jA_half", chk.sum_jA_half}, {"target_jA_half", chk.target_jA_half},
                       {"sum_jB_half", chk.sum_jB_half}, {"target_jB_half", chk.target_jB_half}};
    emit(j);
    return 0;
  }
  out << (opt.csv ? "j,c,A,B\n" : "");
  for (int j = 0; j <= max_j; ++j) {
    if (opt.csv)
      out << j << "," << num(s.c[j]) << "," << num(s.A[j]) << "," << num(s.B[j]) << "\n";
    else
      out << "j=" << j << "  c=" << num(s.c[j]) << "  A=" << num(s.A[j]) << "  B=" << num(s.B[j]) << "\n";
  }
  if (!opt.csv) {
    out << "sum A_j/2^j = " << num(chk.sum_A_half) << "  (2/sqrt(pi) = " << num(chk.target_A_half) << ")\n";
    out << "sum B_j/2^j = " << num(chk.sum_B_half) << "  (2 sqrt(2/pi) = " << num(chk.target_B_half)
        << ")\n";
  }
  return 0;
}

int cmd_poisson(int g) {
  std::map<int, Rational> exact;
  // exact cylinder statistics are cheap up to genus 4
  if (g >= 2 && g <= 4) exact = cylinder_distribution(g, 0);
  auto p = poisson_model(g, exact);
  if (opt.json) {
    Json j(p);
    if (!exact.empty()) j["exact"] = distribution_json(exact);
    emit(j);
    return 0;
  }
  if (opt.csv) {
    out << "k,poisson,exact\n";
    for (const auto& [k, v] : p.pmf) {
      out << k << "," << num(v) << ",";
      if (exact.count(k)) out << num(to_double(exact.at(k)));
      out << "\n";
    }
    return 0;
  }
  out << "lambda(" << g << ") = " << num(p.lambda) << "\n";
  for (const auto& [k, v] : p.pmf) {
    if (v < 1e-6 && !exact.count(k)) continue;
    out << "k=" << k << "  p(k-1) = " << num(v);
    if (exact.count(k)) out << "  exact p_k = " << num(to_double(exact.at(k)));
    out << "\n";
  }
  if (p.tv_distance >= 0) out << "total variation = " << num(p.tv_distance) << "\n";
  return 0;
}

int cmd_sep_ratio(int g) {
  Rational r = sep_nonsep_ratio(g);
  double asym = sep_nonsep_asymptotic(g);
  if (opt.json) {
    emit(Json{{"g", g}, {"ratio", rational_json(r)}, {"value", to_double(r)}, {"asymptotic", asym}});
    return 0;
  }
  out << "sep/non-sep (g=" << g << ") = " << to_string(r) << "  ≈ " << num(to_double(r)) << "\n";
  out << "asymptotic sqrt(2/(3 pi g))/4^g ≈ " << num(asym) << "\n";
  return 0;
}

int cmd_oracle_lattice(const std::string& m_s, const std::string& N_s, const std::string& parity) {
  auto m = int_list(m_s);
  ParityConstraints c;
  if (!parity.empty()) c = parity_from_json(read_json_file(parity));
  Json rows = Json::array();
  if (opt.csv) out << "N,normalized,limit,relative_error\n";
  for (long N : long_list(N_s)) {
    auto r = lattice_check(m, N, c);
    rows.push_back(Json{{"N", N}, {"normalized", r.normalized}, {"limit", r.limit},
                        {"relative_error", r.relative_error()}});
    if (opt.csv)
      out << N << "," << num(r.normalized) << "," << num(r.limit) << "," << num(r.relative_error()) << "\n";
    else if (!opt.json)
      out << "N=" << N << "  sum/N^d = " << num(r.normalized) << "  limit = " << num(r.limit)
          << "  rel.err = " << num(r.relative_error()) << "\n";
  }
  if (opt.json)
    emit(Json{{"m", m}, {"index", sublattice_index(static_cast<int>(m.size()), c)}, {"rows", rows}});
  return 0;
}

int cmd_oracle_count(int g, int n, const std::string& N_s, const std::string& key) {
  auto Ns = long_list(N_s);
  if (!key.empty()) {
    const auto& vol = masur_veech_volume(g, n, opt.threads);
    const GraphVolume* found = nullptr;
    for (const auto& gv : vol.per_graph)
      if (gv.key == key || gv.graph.to_string() == key) found = &gv;
    if (!found) throw InputError("no graph with key " + key);
    Json rows = Json::array();
    if (opt.csv) out << "N,normalized_count,exact,relative_error\n";
    for (long N : Ns) {
      double c = to_double(square_tiled_count(found->graph, N)), e = found->volume.to_double();
      rows.push_back(Json{{"N", N}, {"normalized_count", c}, {"exact", e}});
      if (opt.csv)
        out << N << "," << num(c) << "," << num(e) << "," << num(c / e - 1) << "\n";
      else if (!opt.json)
        out << "N=" << N << "  " << found->graph.to_string() << "  count = " << num(c) << "  exact = " << num(e)
            << "  rel.err = " << num(c / e - 1) << "\n";
    }
    if (opt.json) emit(Json{{"graph", found->graph}, {"key", found->key}, {"rows", rows}});
    return 0;
  }
  Json reps = Json::array();
  if (opt.csv) out << "N,graph,normalized_count,exact,relative_error\n";
  for (long N : Ns) {
    auto rep = volume_convergence_report(g, n, N);
    if (opt.json) {
      reps.push_back(rep);
      continue;
    }
    for (const auto& row : rep.rows) {
      if (opt.csv)
        out << N << "," << row.graph.to_string() << "," << num(row.normalized_count) << "," << num(row.exact)
            << "," << num(row.relative_error()) << "\n";
      else
        out << "N=" << N << "  " << row.graph.to_string() << "  count = " << num(row.normalized_count)
            << "  exact = " << num(row.exact) << "\n";
    }
    if (opt.csv)
      out << N << ",total," << num(rep.total_count) << "," << num(rep.total_exact) << ","
          << num(rep.relative_error()) << "\n";
    else
      out << "N=" << N << "  total count = " << num(rep.total_count) << "  Vol = " << num(rep.total_exact)
          << "  rel.err = " << num(rep.relative_error()) << "\n";
  }
  if (opt.json) emit(reps.size() == 1 ? reps[0] : reps);
  return 0;
}

int cmd_correlators(int g, int n) {
  if (2 * g - 2 + n <= 0 || n < 1) throw InputError("need 2g-2+n > 0 and n >= 1");
  const int total = 3 * g - 3 + n;
  // nondecreasing d with the right sum
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int lo) {
    if (static_cast<int>(cur.size()) == n) {
      if (left == 0) parts.push_back(cur);
      return;
    }
    for (int x = lo; x <= left; ++x) {
      cur.push_back(x);
      rec(left - x, x);
      cur.pop_back();
    }
  };
  rec(total, 0);
  Json arr = Json::array();
  if (!opt.json) out << "g,d,value\n";
  for (const auto& d : parts) {
    Rational v = correlator(g, d);
    std::string ds;
    for (size_t i = 0; i < d.size(); ++i) ds += (i ? " " : "") + std::to_string(d[i]);
    if (opt.json)
      arr.push_back(Json{{"g", g}, {"d", d}, {"value", rational_json(v)}});
    else
      out << g << "," << ds << "," << to_string(v) << "\n";
  }
  if (opt.json) emit(arr);
  return 0;
}

int cmd_check_all() {
  bool ok = true;
  for (const auto& row : reference_table()) ok = run_checks(row.g, row.n) && ok;
  if (!opt.json) out << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Masur-Veech volumes, Siegel-Veech constants and multicurve statistics"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", opt.json, "emit JSON");
  app.add_flag("--csv", opt.csv, "emit CSV tables where available");
  app.add_flag("--check", opt.check, "also run the reference suite for the requested (g,n)");
  app.add_option("--digits", opt.digits, "significant digits for floats")->check(CLI::Range(1, 30));
  app.add_option("--config", opt.config, "JSON config file (threads, digits)");

  int g = 0, n = 0, k = 0, m = 0;
  bool per_graph = false, floating = false, symbolic = false;
  std::string method = "graph", file, num_s, den_s, heights, source = "recursion", which, m_s,
              N_s = "2000", parity, key;

  auto* graphs = app.add_subcommand("graphs", "catalog of stable graphs with automorphism orders");
  graphs->add_option("g", g)->required();
  graphs->add_option("n", n)->required();

  auto* volume = app.add_subcommand("volume", "Masur-Veech volume");
  volume->add_option("g", g)->required();
  volume->add_option("n", n)->required();
  volume->add_flag("--per-graph", per_graph, "list the contribution of each stable graph");

  auto* sv = app.add_subcommand("sv", "area Siegel-Veech constant");
  sv->add_option("g", g)->required();
  sv->add_option("n", n)->required();
  sv->add_option("--method", method, "graph, boundary or both");

  auto* lyap = app.add_subcommand("lyapunov", "sum of positive Lyapunov exponents");
  lyap->add_option("g", g)->required();
  lyap->add_option("n", n)->required();

  auto* freq = app.add_subcommand("freq", "frequency of a weighted multicurve");
  freq->add_option("--multicurve", file, "graph JSON with weights")->required();

  auto* pk = app.add_subcommand("pk", "distribution of the number of cylinders");
  pk->add_option("g", g)->required();
  pk->add_option("n", n)->required();

  auto* expect = app.add_subcommand("expect", "expectation of a ratio of widths");
  expect->add_option("--graph", file, "graph JSON")->required();
  expect->add_option("--num", num_s, "numerator exponents, e.g. 1,0")->required();
  expect->add_option("--den", den_s, "denominator exponents, e.g. 0,1")->required();
  expect->add_option("--heights", heights, "fixed heights, e.g. 1,1");
  expect->add_flag("--symbolic", symbolic, "print the expectation as a function of the heights");

  auto* agk = app.add_subcommand("agk", "normalized two-point correlators");
  agk->add_option("g", g)->required();
  agk->add_option("--source", source, "recursion or correlators");

  auto* harm = app.add_subcommand("harmonic", "multiple harmonic sums");
  harm->add_option("which", which, "H or Z")->required();
  harm->add_option("k", k)->required();
  harm->add_option("m", m)->required();
  harm->add_flag("--float", floating, "skip the exact value");

  auto* coeffs = app.add_subcommand("coeffs", "series coefficients c_j, A_j, B_j");
  coeffs->add_option("max_j", k)->required();

  auto* poisson = app.add_subcommand("poisson", "Poisson model for the number of cylinders");
  poisson->add_option("g", g)->required();

  auto* sep = app.add_subcommand("sep-ratio", "separating over non-separating one-curve contributions");
  sep->add_option("g", g)->required();

  auto* oracle = app.add_subcommand("oracle", "finite-size lattice checks");
  oracle->require_subcommand(1);
  auto* lattice = oracle->add_subcommand("lattice", "lattice sum against its limit");
  lattice->add_option("--m", m_s, "exponents, e.g. 1,3")->required();
  lattice->add_option("--N", N_s, "bound or comma list of bounds");
  lattice->add_option("--parity", parity, "JSON parity constraints");
  auto* count = oracle->add_subcommand("count", "square-tiled counts against volumes");
  count->add_option("g", g)->required();
  count->add_option("n", n)->required();
  count->add_option("--N", N_s, "bound or comma list of bounds");
  count->add_option("--graph", key, "restrict to one graph (catalog key or printed form)");

  auto* corr = app.add_subcommand("correlators", "table of psi-class intersection numbers");
  corr->add_option("g", g)->required();
  corr->add_option("n", n)->required();

  auto* check_all = app.add_subcommand("check-all", "reference suite for every tabulated stratum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  int status = 0;
  bool has_gn = false;
  try {
    load_config();
    if (*graphs) {
      status = cmd_graphs(g, n);
      has_gn = true;
    } else if (*volume) {
      status = cmd_volume(g, n, per_graph);
      has_gn = true;
    } else if (*sv) {
      status = cmd_sv(g, n, method);
      has_gn = true;
    } else if (*lyap) {
      status = cmd_lyapunov(g, n);
      has_gn = true;
    } else if (*freq) {
      status = cmd_freq(file);
    } else if (*pk) {
      status = cmd_pk(g, n);
      has_gn = true;
    } else if (*expect) {
      status = cmd_expect(file, num_s, den_s, heights, symbolic);
    } else if (*agk) {
      status = cmd_agk(g, source);
    } else if (*harm) {
      status = cmd_harmonic(which, k, m, floating);
    } else if (*coeffs) {
      status = cmd_coeffs(k);
    } else if (*poisson) {
      status = cmd_poisson(g);
    } else if (*sep) {
      status = cmd_sep_ratio(g);
    } else if (*lattice) {
      status = cmd_oracle_lattice(m_s, N_s, parity);
    } else if (*count) {
      status = cmd_oracle_count(g, n, N_s, key);
      has_gn = true;
    } else if (*corr) {
      status = cmd_correlators(g, n);
    } else if (*check_all) {
      status = cmd_check_all();
    }
    if (opt.check && has_gn && !run_checks(g, n)) status = 1;
  } catch (const OutOfHypothesis& e) {
    std::cout << out.str();
    std::cerr << "mvq: outside the range of the formula: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cout << out.str();
    std::cerr << "mvq: invalid input: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cout << out.str();
    std::cerr << "mvq: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cout << out.str();
    std::cerr << "mvq: invalid input: " << e.what() << "\n";
    return 1;
  } catch (const std::out_of_range& e) {
    std::cout << out.str();
    std::cerr << "mvq: invalid input: " << e.what() << "\n";
    return 1;
  }
  std::cout << out.str();
  return status;
}
