// Copyright 2026 The lattice-interp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Sampled curves of the sharp constants and the d <-> lambda relations.

#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lattice_interp/constants.hpp"
#include "lattice_interp/errors.hpp"
#include "lattice_interp/green1d.hpp"
#include "lattice_interp/green2d.hpp"
#include "lattice_interp/greennd.hpp"
#include "lattice_interp/higher_order.hpp"
#include "lattice_interp/parallel.hpp"

namespace lattice_interp::curves {

struct Column {
  std::string label;
  std::string unit;
};

struct CurveSample {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<double>> rows;
  std::map<std::string, std::string> provenance;
};

struct CurveDef {
  std::string name;
  std::string paper_ref;
  std::vector<Column> columns;
  std::function<bool(double)> in_domain;
  std::string domain_text;
  std::function<std::vector<double>(double)> evaluate;  // row after abscissa
  std::function<std::vector<double>()> default_grid;
};

inline std::vector<double> uniform(double lo, double hi, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1);
  g.back() = hi;
  return g;
}

inline std::vector<double> concat(std::vector<double> a, const std::vector<double>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline constexpr double kNudge = 1e-6;

inline const std::vector<CurveDef>& registry() {
  static const std::vector<CurveDef> defs = [] {
    std::vector<CurveDef> d;
    d.push_back({"k1_theta", "K1(theta) first-order 1D closed form",
                 {{"theta", "1"}, {"K", "1"}},
                 [](double t) { return t >= 0.5 && t <= 1.0; }, "[0.5, 1]",
                 [](double t) { return std::vector{green1d::K1_theta(t).constant}; },
                 [] { return uniform(0.5, 1.0, 201); }});
    d.push_back({"c11_per", "C11per(theta) mean-zero periodic constant",
                 {{"theta", "1"}, {"C", "1"}},
                 [](double t) { return t >= 0.0 && t <= 0.5; }, "[0, 0.5]",
                 [](double t) { return std::vector{higher_order::periodic_C11(t)}; },
                 [] { return uniform(0.0, 0.5, 201); }});
    d.push_back({"k2_theta", "K2(theta) 2D elliptic maximization",
                 {{"theta", "1"}, {"K", "1"}},
                 [](double t) { return t > 0.0 && t <= 1.0; }, "(0, 1]",
                 [](double t) {
                   return std::vector{green2d::K2_theta(t).constant};
                 },
                 [] { return uniform(kNudge, 1.0, 201); }});
    d.push_back({"d_lambda_2d", "d(lambda) 2D from elliptic K and E",
                 {{"lambda", "1"}, {"d", "1"}},
                 [](double l) { return l > 0.0 || l < -8.0; },
                 "(-inf, -8) U (0, inf)",
                 [](double l) { return std::vector{green2d::d2_of_lambda(l)}; },
                 [] {
                   return concat(uniform(-40.0, -8.0 - kNudge, 100),
                                 uniform(kNudge, 40.0, 101));
                 }});
    d.push_back({"lambda_d_2d", "lambda(d) 2D inverse of d(lambda)",
                 {{"d", "1"}, {"lambda", "1"}},
                 [](double x) { return x > 0.0 && x < 8.0 && x != 4.0; },
                 "(0, 4) U (4, 8)",
                 [](double x) { return std::vector{green2d::lambda2_of_d(x)}; },
                 [] {
                   return concat(uniform(kNudge, 4.0 - kNudge, 100),
                                 uniform(4.0 + kNudge, 8.0 - kNudge, 100));
                 }});
    d.push_back({"v_d_1d", "V(d) = sqrt(d(4-d))/2 first-order 1D",
                 {{"d", "1"}, {"V", "1"}},
                 [](double x) { return x >= 0.0 && x <= 4.0; }, "[0, 4]",
                 [](double x) { return std::vector{green1d::V1(x)}; },
                 [] { return uniform(0.0, 4.0, 201); }});
    d.push_back({"v0_vs_v_2d", "V(d) 2D against its logarithmic majorant V0(d)",
                 {{"d", "1"}, {"V0", "1"}, {"V", "1"}, {"margin", "1"}},
                 [](double x) { return x > 0.0 && x < 8.0; }, "(0, 8)",
                 [](double x) {
                   const double v0 = green2d::V0_majorant(x);
                   const double v = green2d::V2(x);
                   return std::vector{v0, v, v0 - v};
                 },
                 [] { return uniform(kNudge, 8.0 - kNudge, 201); }});
    d.push_back({"k3_theta", "K3(theta) 3D reduced elliptic integral",
                 {{"theta", "1"}, {"K", "1"}},
                 [](double t) { return t >= 0.0 && t <= 1.0; }, "[0, 1]",
                 [](double t) { return std::vector{sharp_constant(3, 1, t).constant}; },
                 [] { return uniform(0.0, 1.0, 201); }});
    d.push_back({"k12_theta", "K12(theta) second-order 1D closed form",
                 {{"theta", "1"}, {"K", "1"}},
                 [](double t) { return t >= 0.75 && t <= 1.0; }, "[0.75, 1]",
                 [](double t) {
                   return std::vector{higher_order::K12_theta(t).constant};
                 },
                 [] { return uniform(0.75, 1.0, 201); }});
    d.push_back({"g_16_3", "G_lambda(n) second-order Green function at lambda = 16/3",
                 {{"n", "1"}, {"G", "1"}},
                 [](double n) { return n == std::round(n) && std::abs(n) <= 1e6; },
                 "integers",
                 [](double n) {
                   return std::vector{higher_order::green12_n(16.0 / 3.0, static_cast<int>(n))};
                 },
                 [] { return uniform(0.0, 12.0, 13); }});
    d.push_back({"v_d_order2", "V(d) second-order 1D via lambda(d)",
                 {{"d", "1"}, {"V", "1"}},
                 [](double x) { return x > 0.0 && x < 16.0; }, "(0, 16)",
                 [](double x) { return std::vector{higher_order::V12(x)}; },
                 [] { return uniform(kNudge, 16.0 - kNudge, 201); }});
    return d;
  }();
  return defs;
}

inline const CurveDef& find(const std::string& name) {
  for (const auto& c : registry()) {
    if (c.name == name) return c;
  }
  std::string known;
  for (const auto& c : registry()) known += (known.empty() ? "" : ", ") + c.name;
  throw DomainError("unknown curve '" + name + "' (known: " + known + ")");
}

inline std::vector<double> default_grid(const std::string& name) {
  return find(name).default_grid();
}

inline CurveSample sample_curve(const std::string& name, const std::vector<double>& grid) {
  const CurveDef& def = find(name);
  for (double x : grid) {
    if (!std::isfinite(x) || !def.in_domain(x)) {
      throw DomainError("curve " + name + ": grid point " + std::to_string(x) +
                        " outside " + def.domain_text);
    }
  }
  CurveSample s{def.name, def.columns, {}, {{"paper_ref", def.paper_ref}}};
  auto rows = parallel_map(grid.size(), [&](std::size_t i) {
    std::vector<double> row{grid[i]};
    for (double v : def.evaluate(grid[i])) row.push_back(v);
    return row;
  });
  s.rows = std::move(rows);
  return s;
}

inline CurveSample sample_curve(const std::string& name) {
  return sample_curve(name, default_grid(name));
}

}  // namespace lattice_interp::curves
