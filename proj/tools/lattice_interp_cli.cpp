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

// lattice-interp: sharp constants, curve CSVs, verification suites and
// Lieb-Thirring spectral reports.
//
// Exit codes: 0 success, 1 verification or solver failure, 2 usage or
// domain error.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lattice_interp/lattice_interp.hpp"

namespace li = lattice_interp;
using nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

// Value of an option: command line first, then the --config file, then the
// built-in default.
class Resolver {
 public:
  Resolver(const CLI::App& app, const ordered_json& config)
      : app_(app), config_(config) {}

  template <class T>
  T get(const std::string& name, const T& flag_value, const T& fallback) const {
    const auto* opt = app_.get_option_no_throw("--" + name);
    if (opt != nullptr && opt->count() > 0) return flag_value;
    if (config_.contains(name)) {
      try {
        return config_.at(name).get<T>();
      } catch (const std::exception& e) {
        throw UsageError("config key '" + name + "': " + e.what());
      }
    }
    return fallback;
  }

  bool has(const std::string& name) const {
    const auto* opt = app_.get_option_no_throw("--" + name);
    return (opt != nullptr && opt->count() > 0) || config_.contains(name);
  }

 private:
  const CLI::App& app_;
  const ordered_json& config_;
};

ordered_json load_config(const std::string& path) {
  if (path.empty()) return ordered_json::object();
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  try {
    ordered_json j = ordered_json::parse(in);
    if (!j.is_object()) throw UsageError("config file must hold a JSON object");
    return j;
  } catch (const ordered_json::parse_error& e) {
    throw UsageError("config file " + path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + output);
  out << text;
}

std::string json_text(const ordered_json& j) { return j.dump(2) + "\n"; }

// ------------------------------------------------------------- constants
int cmd_constants(int dim, int order, double theta, bool oracle, int radius,
                  const std::string& format, const std::string& output) {
  const auto r = li::sharp_constant(dim, order, theta);
  ordered_json j;
  j["dim"] = dim;
  j["order"] = order;
  j["theta"] = theta;
  j["K"] = r.constant;
  j["lambda_star"] = r.lambda_star ? ordered_json(*r.lambda_star) : ordered_json(nullptr);
  j["extremal"] = li::to_string(r.extremal);
  if (!r.note.empty()) j["note"] = r.note;
  if (oracle) {
    if (dim > 3) throw UsageError("--oracle supports dim 1..3");
    if (theta == 0.0) throw UsageError("--oracle needs theta > 0 (the theta = 0 extremal is not in l2)");
    const int n = radius > 0 ? radius : li::oracle::default_radius(dim);
    const auto o = li::oracle::max_interpolation_ratio(dim, order, theta, n);
    j["oracle"] = {{"radius", n},
                   {"ratio", o.ratio},
                   {"lambda", o.lambda},
                   {"discrepancy", std::abs(o.ratio - r.constant)}};
  }
  if (format == "csv") {
    std::ostringstream s;
    s << "dim,order,theta,K,lambda_star,extremal\n"
      << dim << ',' << order << ',' << shortest(theta) << ',' << shortest(r.constant) << ','
      << (r.lambda_star ? shortest(*r.lambda_star) : "") << ',' << li::to_string(r.extremal) << '\n';
    emit(s.str(), output);
  } else {
    emit(json_text(j), output);
  }
  return kOk;
}

// ------------------------------------------------------------------ curve
std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    double v = 0.0;
    const auto r = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || r.ec != std::errc() || r.ptr != item.data() + item.size() || !std::isfinite(v)) {
      throw UsageError("malformed grid '" + spec + "': expected start:stop:step");
    }
    parts.push_back(v);
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
    throw UsageError("malformed grid '" + spec + "': expected start:stop:step with step > 0 and stop >= start");
  }
  const double count = std::floor((parts[1] - parts[0]) / parts[2] + 1e-9);
  if (count > 1e6) throw UsageError("grid '" + spec + "' has too many points");
  std::vector<double> grid;
  for (long i = 0; i <= static_cast<long>(count); ++i) grid.push_back(parts[0] + i * parts[2]);
  return grid;
}

int cmd_curve(const std::string& name, const std::string& grid_spec,
              const std::string& format, const std::string& output) {
  const auto grid = grid_spec.empty() ? li::curves::default_grid(name) : parse_grid(grid_spec);
  const auto c = li::curves::sample_curve(name, grid);
  if (format == "json") {
    ordered_json j;
    j["curve"] = c.name;
    j["paper_ref"] = c.provenance.at("paper_ref");
    for (const auto& col : c.columns) j["columns"].push_back(col.label);
    j["rows"] = c.rows;
    emit(json_text(j), output);
    return kOk;
  }
  std::ostringstream s;
  s << "# curve=" << c.name << " paper_ref=" << c.provenance.at("paper_ref") << '\n';
  for (std::size_t i = 0; i < c.columns.size(); ++i) s << (i ? "," : "") << c.columns[i].label;
  s << '\n';
  for (const auto& row : c.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) s << (i ? "," : "") << shortest(row[i]);
    s << '\n';
  }
  emit(s.str(), output);
  return kOk;
}

// ----------------------------------------------------------------- verify
int cmd_verify(const std::string& suite, std::uint64_t seed, bool fault,
               bool timing, const std::string& format, const std::string& output) {
  const auto r = li::verify::run_suite(suite, {seed, fault});
  int failed = 0;
  for (const auto& c : r.checks) failed += c.pass ? 0 : 1;
  if (format == "csv") {
    std::ostringstream s;
    s << "suite,check,paper_ref,discrepancy,tolerance,pass\n";
    for (const auto& c : r.checks) {
      s << c.suite << ',' << c.name << ",\"" << c.ref << "\"," << shortest(c.discrepancy) << ','
        << shortest(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
    }
    emit(s.str(), output);
  } else {
    ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["fault_injected"] = fault;
    j["passed"] = r.checks.size() - failed;
    j["failed"] = failed;
    if (timing) j["seconds"] = r.seconds;
    j["checks"] = ordered_json::array();
    for (const auto& c : r.checks) {
      ordered_json e;
      e["suite"] = c.suite;
      e["check"] = c.name;
      e["paper_ref"] = c.ref;
      e["discrepancy"] = std::isfinite(c.discrepancy) ? ordered_json(c.discrepancy) : ordered_json(shortest(c.discrepancy));
      e["tolerance"] = c.tolerance;
      e["pass"] = c.pass;
      if (!c.note.empty()) e["note"] = c.note;
      j["checks"].push_back(e);
    }
    emit(json_text(j), output);
  }
  return failed == 0 ? kOk : kFailure;
}

// --------------------------------------------------------------- spectrum
li::LatticeSeq read_potential(const std::string& path, int dim) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read potential file " + path);
  std::vector<double> v;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::size_t used = 0;
    double x = 0.0;
    try {
      x = std::stod(line, &used);
    } catch (const std::exception&) {
      throw UsageError("potential file: cannot parse '" + line + "'");
    }
    if (line.find_first_not_of(" \t\r", used) != std::string::npos) {
      throw UsageError("potential file: cannot parse '" + line + "'");
    }
    v.push_back(x);
  }
  const int side = static_cast<int>(std::llround(std::pow(static_cast<double>(v.size()), 1.0 / dim)));
  std::size_t expect = 1;
  for (int a = 0; a < dim; ++a) expect *= static_cast<std::size_t>(side);
  if (v.empty() || side % 2 == 0 || expect != v.size()) {
    throw UsageError("potential file: need (2N+1)^dim values centred at 0, got " + std::to_string(v.size()));
  }
  li::LatticeSeq p(dim, side / 2);
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i];
  return p;
}

int cmd_spectrum(int dim, int order, double theta, const std::string& well,
                 const std::string& file, int radius, const std::string& format,
                 const std::string& output) {
  if (well.empty() == file.empty()) {
    throw UsageError("spectrum: give exactly one of --well depth,halfwidth or --potential-file");
  }
  li::check_admissible(dim, order, theta);
  li::LatticeSeq v(dim, 0);
  if (!well.empty()) {
    const auto comma = well.find(',');
    double depth = 0.0;
    int half = -1;
    try {
      if (comma == std::string::npos) throw std::invalid_argument("missing comma");
      std::size_t used = 0;
      depth = std::stod(well.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("depth");
      const std::string h = well.substr(comma + 1);
      half = std::stoi(h, &used);
      if (used != h.size()) throw std::invalid_argument("halfwidth");
    } catch (const std::exception&) {
      throw UsageError("malformed --well '" + well + "': expected depth,halfwidth");
    }
    if (half < 0) throw UsageError("--well halfwidth must be >= 0");
    if (!(depth >= 0.0)) throw li::DomainError("potential must satisfy V(k) >= 0");
    v = li::spectral::box_well(dim, depth, half);
  } else {
    v = read_potential(file, dim);
  }
  const int defaults[4] = {0, 60, 12, 12};
  const int n = radius > 0 ? radius : std::max(defaults[dim], v.radius() + 8);
  li::spectral::SchrodingerSpec s{dim, order, v, n};
  const auto r = li::spectral::lieb_thirring_check(s, theta);
  if (format == "csv") {
    std::ostringstream o;
    o << "# trace=" << shortest(r.trace) << " bound=" << shortest(r.bound)
      << " bound_constant=" << shortest(r.bound_constant) << " potential_sum=" << shortest(r.potential_sum)
      << " ratio=" << shortest(r.ratio) << '\n';
    o << "j,eigenvalue\n";
    for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) o << i << ',' << shortest(r.eigenvalues[i]) << '\n';
    emit(o.str(), output);
  } else {
    ordered_json j;
    j["dim"] = dim;
    j["order"] = order;
    j["theta"] = theta;
    j["radius"] = n;
    j["eigenvalues"] = r.eigenvalues;
    j["count"] = r.eigenvalues.size();
    j["trace"] = r.trace;
    j["bound_constant"] = r.bound_constant;
    j["potential_sum"] = r.potential_sum;
    j["bound"] = r.bound;
    j["ratio"] = r.ratio;
    j["rayleigh_residual"] = r.rayleigh_residual;
    emit(json_text(j), output);
  }
  return r.trace <= r.bound ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sharp constants of discrete interpolation inequalities on Z^d"};
  app.require_subcommand(1);
  std::string config_path, output, format;
  app.add_option("--config", config_path, "JSON file with option values (flags override it)");

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON file with option values (flags override it)");
    sub->add_option("-o,--output", output, "output path (default stdout)");
    sub->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  };

  int dim = 1, order = 1, radius = 0;
  double theta = 0.0;
  bool oracle = false;
  auto* constants = app.add_subcommand("constants", "sharp constant K(theta), lambda_* and the extremal");
  common(constants);
  constants->add_option("--dim", dim, "lattice dimension");
  constants->add_option("--order", order, "order n of the difference operator");
  constants->add_option("--theta", theta, "interpolation exponent");
  constants->add_flag("--oracle", oracle, "cross-check on a truncated lattice");
  constants->add_option("--radius", radius, "box radius of the oracle");

  std::string name, grid;
  auto* curve = app.add_subcommand("curve", "sample a registered curve as CSV");
  common(curve);
  curve->add_option("--name", name, "curve name");
  curve->add_option("--grid", grid, "start:stop:step (default: the curve's own grid)");

  std::string suite;
  std::uint64_t seed = li::verify::kDefaultSeed;
  bool fault = false, timing = false;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--suite", suite, "suite name or all");
  verify->add_option("--seed", seed, "random seed");
  verify->add_flag("--inject-fault", fault, "corrupt the reference constants (failure path)");
  verify->add_flag("--timing", timing, "include wall time in the report");

  std::string well, potential_file;
  auto* spectrum = app.add_subcommand("spectrum", "negative spectrum and Lieb-Thirring bound");
  common(spectrum);
  spectrum->add_option("--dim", dim, "lattice dimension");
  spectrum->add_option("--order", order, "order n");
  spectrum->add_option("--theta", theta, "exponent of the bound");
  spectrum->add_option("--well", well, "box well depth,halfwidth");
  spectrum->add_option("--potential-file", potential_file, "one value per line, centred box");
  spectrum->add_option("--radius", radius, "box radius of the truncated operator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const ordered_json config = load_config(config_path);
    CLI::App* sub = app.get_subcommands().front();
    Resolver cfg(*sub, config);
    const std::string out = cfg.get<std::string>("output", output, "");
    auto need = [&](const std::string& key) {
      if (!cfg.has(key)) throw UsageError(sub->get_name() + ": --" + key + " is required");
    };
    if (sub == constants) {
      need("theta");
      return cmd_constants(cfg.get("dim", dim, 1), cfg.get("order", order, 1),
                           cfg.get("theta", theta, 0.0), cfg.get("oracle", oracle, false),
                           cfg.get("radius", radius, 0), cfg.get<std::string>("format", format, "json"), out);
    }
    if (sub == curve) {
      need("name");
      return cmd_curve(cfg.get("name", name, std::string()), cfg.get("grid", grid, std::string()),
                       cfg.get<std::string>("format", format, "csv"), out);
    }
    if (sub == verify) {
      return cmd_verify(cfg.get<std::string>("suite", suite, "all"),
                        cfg.get<std::uint64_t>("seed", seed, li::verify::kDefaultSeed),
                        cfg.get("inject-fault", fault, false), cfg.get("timing", timing, false),
                        cfg.get<std::string>("format", format, "json"), out);
    }
    need("theta");
    return cmd_spectrum(cfg.get("dim", dim, 1), cfg.get("order", order, 1), cfg.get("theta", theta, 0.0),
                        cfg.get("well", well, std::string()),
                        cfg.get("potential-file", potential_file, std::string()), cfg.get("radius", radius, 0),
                        cfg.get<std::string>("format", format, "json"), out);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const li::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
}
