#include "minksurf/jobs.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include <json.hpp>

#include "minksurf/errors.hpp"
#include "minksurf/profiles.hpp"
#include "minksurf/spectral.hpp"
#include "minksurf/surface.hpp"
#include "minksurf/version.hpp"

namespace minksurf::jobs {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const char* kJobKinds[] = {"classify", "curvature", "potential", "spectrum", "propagate", "box"};

bool known_job(const std::string& j) {
  for (const char* k : kJobKinds)
    if (j == k) return true;
  return false;
}

std::string render(double v) {
  if (v == 0.0) return "0";  // normalize -0
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string render(std::int64_t v) {
  char buf[24];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string quote_rfc4180(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += '"';
  return out;
}

std::string render(const Cell& c) {
  if (std::holds_alternative<double>(c)) return render(std::get<double>(c));
  if (std::holds_alternative<std::int64_t>(c)) return render(std::get<std::int64_t>(c));
  return quote_rfc4180(std::get<std::string>(c));
}

void atomic_write(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for write: " + tmp);
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed: " + tmp);
  }
  fs::rename(tmp, path);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigParseError("cannot read " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {  // malformed JSON or unreadable stream
    throw ConfigParseError(std::string(e.what()));
  }
  return j;
}

// A summary file embeds the original config under "config"; unwrap it so a
// summary can be re-run verbatim.
json unwrap_config(json j) {
  if (j.is_object() && j.contains("tool") && j.contains("config") && j["config"].is_object())
    return j["config"];
  return j;
}

double param_of(const json& j, const std::string& family) {
  std::string pname = "R";
  for (const auto& bp : builtin_profiles())
    if (bp.name == family) pname = bp.param_name;
  if (j.contains("params") && j["params"].is_object() && j["params"].contains(pname))
    return j["params"][pname].get<double>();
  return 1.0;
}

struct ParsedConfig {
  JobConfig cfg;
  std::vector<std::string> diagnostics;
};

ParsedConfig parse_and_validate(const json& raw) {
  ParsedConfig out;
  JobConfig& cfg = out.cfg;
  auto& diag = out.diagnostics;
  const json j = unwrap_config(raw);

  if (!j.is_object()) {
    diag.push_back("ConfigParse: top-level document must be an object");
    return out;
  }
  if (!j.contains("schema") || !j["schema"].is_string() || j["schema"] != "1")
    diag.push_back("ConfigParse: missing or unsupported schema (expected \"1\")");
  else
    cfg.schema = "1";

  if (!j.contains("job") || !j["job"].is_string() || !known_job(j["job"])) {
    diag.push_back("ConfigParse: job must be one of classify|curvature|potential|spectrum|propagate|box");
    return out;
  }
  cfg.job = j["job"];
  cfg.out_prefix = j.value("out_prefix", cfg.job);

  // targets
  if (j.contains("targets") && j["targets"].is_string() && j["targets"] == "all_samples") {
    for (const auto& bp : builtin_profiles())
      if (!bp.euclidean_reference) cfg.targets.emplace_back(bp.name, 1.0);
  } else if (j.contains("targets") && j["targets"].is_array()) {
    for (const auto& t : j["targets"]) {
      if (!t.is_object() || !t.contains("family") || !t["family"].is_string()) {
        diag.push_back("ConfigParse: each target needs a \"family\" string");
        continue;
      }
      cfg.targets.emplace_back(t["family"].get<std::string>(), param_of(t, t["family"]));
    }
  } else if (j.contains("family") && j["family"].is_string()) {
    cfg.targets.emplace_back(j["family"].get<std::string>(), param_of(j, j["family"]));
  }
  if (cfg.job != "box" && cfg.targets.empty())
    diag.push_back("ConfigParse: missing \"family\" (or \"targets\")");
  if (cfg.job != "box" && cfg.job != "classify" && cfg.targets.size() > 1)
    diag.push_back("range: job " + cfg.job + " takes a single family");

  for (const auto& [name, param] : cfg.targets) {
    if (!is_builtin_profile(name)) {
      diag.push_back("UnknownProfile: " + name);
      continue;
    }
    if (!(param > 0.0)) diag.push_back("range: scale parameter of " + name + " must be > 0");
    if (is_euclidean_reference(name) && cfg.job != "spectrum")
      diag.push_back("range: sphere_euclidean is a reference profile, valid only for spectrum jobs");
  }

  if (j.contains("ell")) {
    cfg.ell.clear();
    if (j["ell"].is_array())
      for (const auto& e : j["ell"]) cfg.ell.push_back(e.get<double>());
    else
      cfg.ell.push_back(j["ell"].get<double>());
    if (cfg.ell.empty()) diag.push_back("ConfigParse: ell list is empty");
  }
  // quantized angular momentum for time-like axes (and integer ell on the sphere)
  for (const auto& [name, param] : cfg.targets) {
    (void)param;
    const bool periodic = name == "one_sheeted_hyperboloid" ||
                          name == "two_sheeted_hyperboloid" || name == "sphere_euclidean";
    if (!periodic) continue;
    for (double e : cfg.ell)
      if (std::abs(e - std::round(e)) > 1e-12)
        diag.push_back("NonIntegerEll: ell=" + render(e) + " invalid for " + name +
                       " (angular momentum in the axis direction is quantized)");
  }

  if (j.contains("grid")) {
    if (!j["grid"].is_object()) {
      diag.push_back("ConfigParse: grid must be an object {L, N}");
    } else {
      cfg.has_grid = true;
      cfg.grid_L = j["grid"].value("L", 0.0);
      cfg.grid_n = j["grid"].value("N", 0);
      if (!(cfg.grid_L > 0.0)) diag.push_back("range: grid.L must be > 0");
      if (cfg.grid_n < 64) diag.push_back("GridTooCoarse: grid.N=" +
                                          std::to_string(cfg.grid_n) + " < 64");
    }
  }

  if (j.contains("solver") && j["solver"].is_object()) {
    cfg.max_states = j["solver"].value("max_states", 8);
    if (cfg.max_states < 1) diag.push_back("range: solver.max_states must be >= 1");
    if (j["solver"].contains("window")) {
      const auto& w = j["solver"]["window"];
      if (w.is_array() && w.size() == 2) {
        cfg.has_window = true;
        cfg.window_lo = w[0].get<double>();
        cfg.window_hi = w[1].get<double>();
        if (!(cfg.window_hi > cfg.window_lo))
          diag.push_back("range: solver.window must satisfy lo < hi");
      } else {
        diag.push_back("ConfigParse: solver.window must be [lo, hi]");
      }
    }
  }

  cfg.points = j.value("points", 50);
  if (cfg.points < 1) diag.push_back("range: points must be >= 1");

  if (j.contains("propagate") && j["propagate"].is_object()) {
    const auto& p = j["propagate"];
    cfg.dt = p.value("dt", 1e-4);
    cfg.steps = p.value("steps", 1000);
    if (!(cfg.dt > 0.0)) diag.push_back("range: propagate.dt must be > 0");
    if (cfg.steps < 1) diag.push_back("range: propagate.steps must be >= 1");
    if (p.contains("packet") && p["packet"].is_object()) {
      cfg.packet.center = p["packet"].value("center", 0.0);
      cfg.packet.width = p["packet"].value("width", 1.0);
      cfg.packet.momentum = p["packet"].value("momentum", 0.0);
      if (!(cfg.packet.width > 0.0)) diag.push_back("range: packet.width must be > 0");
    }
  }

  if (cfg.job == "box") {
    if (!j.contains("box") || !j["box"].is_object()) {
      diag.push_back("ConfigParse: box job needs a \"box\" object {a,b,c,n_max}");
    } else {
      const auto& b = j["box"];
      cfg.box_a = b.value("a", 1.0);
      cfg.box_b = b.value("b", 1.0);
      cfg.box_c = b.value("c", 1.0);
      cfg.box_n_max = b.value("n_max", 3);
      if (!(cfg.box_a > 0.0 && cfg.box_b > 0.0 && cfg.box_c > 0.0))
        diag.push_back("range: box sides must be > 0");
      if (cfg.box_n_max < 1) diag.push_back("range: box.n_max must be >= 1");
    }
  }
  return out;
}

std::map<std::string, std::string> make_metadata(const std::string& hash) {
  return {{"tool", kToolName}, {"version", kVersion}, {"units", kUnitsNote}, {"config", hash}};
}

// Modest q2 interval for geometry sampling, clear of domain singularities.
GridSpec report_range(const std::string& name, double param, int n) {
  GridSpec g;
  g.n = n;
  if (name == "one_sheeted_hyperboloid" || name == "pseudo_cylinder") {
    g.a = -2.0 * param;
    g.b = 2.0 * param;
  } else if (name == "two_sheeted_hyperboloid") {
    g.a = 0.05 * param;
    g.b = 3.0 * param;
  } else if (name == "rindler_wedge") {
    g.a = -0.9 * param;
    g.b = 5.0 * param;
  } else {  // de_sitter_band
    g.a = -0.45 * std::numbers::pi * param;
    g.b = 0.45 * std::numbers::pi * param;
  }
  return g;
}

GridSpec spectral_grid(const JobConfig& cfg, const std::string& name, double param) {
  const int n = cfg.has_grid ? cfg.grid_n : 12001;
  if (!cfg.has_grid) return default_grid(name, param, n);
  GridSpec g = default_grid(name, param, n);
  // config L overrides the span, clipped to the family domain
  if (name == "two_sheeted_hyperboloid") {
    g.b = cfg.grid_L;
  } else if (name == "rindler_wedge") {
    g.b = g.a + cfg.grid_L;
  } else if (name == "de_sitter_band") {
    const double lim = 0.49 * std::numbers::pi * param;
    g.a = -std::min(cfg.grid_L, lim);
    g.b = std::min(cfg.grid_L, lim);
  } else {
    g.a = -cfg.grid_L;
    g.b = cfg.grid_L;
  }
  return g;
}

std::string fmt_ell(double ell) {
  std::string s = render(ell);
  for (char& c : s) {
    if (c == '.') c = 'p';
    if (c == '-') c = 'm';
  }
  return s;
}

struct JobOutput {
  std::vector<std::pair<std::string, ResultTable>> tables;  // filename -> table
  json results = json::object();
};

JobOutput run_classify(const JobConfig& cfg, const std::string& hash) {
  JobOutput out;
  ResultTable table;
  table.columns = {"family", "q1", "q2", "g11", "g12", "g22", "surface_class"};
  table.metadata = make_metadata(hash);
  std::mt19937_64 rng(20240317u);
  for (const auto& [name, param] : cfg.targets) {
    const RevolutionFamily fam = make_builtin_family(name, param);
    const SurfaceChart chart = fam.chart();
    const GridSpec range = report_range(name, param, cfg.points);
    std::uniform_real_distribution<double> uq1(-2.0, 2.0);
    std::uniform_real_distribution<double> uq2(range.a, range.b);
    std::string cls;
    for (int i = 0; i < cfg.points; ++i) {
      const double q1 = fam.periodic_angle ? (uq1(rng) + 2.0) * (std::numbers::pi / 2.0)
                                           : uq1(rng);
      const double q2 = uq2(rng);
      const SymMat2 g = first_fundamental_form(chart, q1, q2);
      const Signature2 sig = classify_signature({g.m11, g.m12, g.m12, g.m22});
      cls = to_string(sig.label);
      table.rows.push_back({Cell{name}, Cell{q1}, Cell{q2}, Cell{g.m11}, Cell{g.m12},
                            Cell{g.m22}, Cell{cls}});
    }
    out.results[name] = cls;
  }
  out.tables.emplace_back(cfg.out_prefix + ".csv", std::move(table));
  return out;
}

JobOutput run_curvature(const JobConfig& cfg, const std::string& hash) {
  JobOutput out;
  const auto& [name, param] = cfg.targets.front();
  const RevolutionFamily fam = make_builtin_family(name, param);
  ResultTable table;
  table.columns = {"q2", "k1", "k2", "H", "K", "V_S"};
  table.metadata = make_metadata(hash);
  GridSpec range = report_range(name, param, cfg.points);
  if (cfg.has_grid) {
    range.a = std::max(range.a, -cfg.grid_L);
    range.b = std::min(range.b, cfg.grid_L);
  }
  const double step = (range.b - range.a) / (cfg.points + 1);
  for (int i = 0; i < cfg.points; ++i) {
    const double q2 = range.a + (i + 1) * step;
    const PrincipalCurvatures k = closed_form_curvatures(fam, q2);
    const double H = 0.5 * fam.eps * (k.k1 + k.k2);
    const double K = fam.eps * k.k1 * k.k2;
    const double VS = -(fam.eps * H * H - K);
    table.rows.push_back({Cell{q2}, Cell{k.k1}, Cell{k.k2}, Cell{H}, Cell{K}, Cell{VS}});
  }
  out.results["points"] = cfg.points;
  out.tables.emplace_back(cfg.out_prefix + ".csv", std::move(table));
  return out;
}

JobOutput run_potential(const JobConfig& cfg, const std::string& hash) {
  JobOutput out;
  const auto& [name, param] = cfg.targets.front();
  const RevolutionFamily fam = make_builtin_family(name, param);
  for (double ell : cfg.ell) {
    const GridSpec grid = cfg.has_grid ? spectral_grid(cfg, name, param)
                                       : report_range(name, param, 201);
    ResultTable table = emit_potential_profile(fam, ell, grid);
    table.metadata = make_metadata(hash);
    out.tables.emplace_back(cfg.out_prefix + "_ell" + fmt_ell(ell) + ".csv", std::move(table));
  }
  out.results["ell_count"] = cfg.ell.size();
  return out;
}

JobOutput run_spectrum(const JobConfig& cfg, const std::string& hash) {
  JobOutput out;
  const auto& [name, param] = cfg.targets.front();
  ResultTable table;
  table.columns = {"ell", "kind", "n", "E"};
  table.metadata = make_metadata(hash);
  json counts = json::object();
  for (double ell : cfg.ell) {
    Spectrum bound;
    if (name == "sphere_euclidean") {
      const int n_grid = cfg.has_grid ? cfg.grid_n : 20000;
      bound = sphere_effective_solve(param, static_cast<int>(std::llround(ell)),
                                     cfg.max_states, n_grid);
    } else {
      const RevolutionFamily fam = make_builtin_family(name, param);
      const EffectiveProblem1D prob = effective_problem(fam, ell, spectral_grid(cfg, name, param));
      bound = solve_bound_states(prob, cfg.max_states);
      if (cfg.has_window) {
        const Spectrum win = solve_window(prob, cfg.window_lo, cfg.window_hi, cfg.max_states);
        for (size_t i = 0; i < win.eigenvalues.size(); ++i)
          table.rows.push_back({Cell{ell}, Cell{std::string("window")},
                                Cell{static_cast<std::int64_t>(i)}, Cell{win.eigenvalues[i]}});
      }
    }
    for (size_t i = 0; i < bound.eigenvalues.size(); ++i)
      table.rows.push_back({Cell{ell}, Cell{std::string("bound")},
                            Cell{static_cast<std::int64_t>(i)}, Cell{bound.eigenvalues[i]}});
    counts["ell=" + render(ell)] = bound.found;
  }
  out.results["bound_counts"] = counts;
  out.tables.emplace_back(cfg.out_prefix + ".csv", std::move(table));
  return out;
}

JobOutput run_propagate(const JobConfig& cfg, const std::string& hash) {
  JobOutput out;
  const auto& [name, param] = cfg.targets.front();
  const RevolutionFamily fam = make_builtin_family(name, param);
  const double ell = cfg.ell.front();
  const EffectiveProblem1D prob = effective_problem(fam, ell, spectral_grid(cfg, name, param));
  Wavefunction1D psi = gaussian_packet(prob, cfg.packet.center, cfg.packet.width,
                                       cfg.packet.momentum);
  const double norm0 = psi.norm();

  ResultTable series;
  series.columns = {"step", "t", "norm", "norm_drift"};
  series.metadata = make_metadata(hash);
  series.rows.push_back({Cell{std::int64_t{0}}, Cell{0.0}, Cell{norm0}, Cell{0.0}});
  double max_drift = 0.0;
  double residual = 0.0;
  for (int s = 1; s <= cfg.steps; ++s) {
    const Wavefunction1D prev = psi;
    psi = propagate(prob, psi, cfg.dt, 1);
    if (s == cfg.steps) residual = continuity_residual(prev, psi, cfg.dt, prob.eta);
    const double nn = psi.norm();
    max_drift = std::max(max_drift, std::abs(nn - norm0));
    series.rows.push_back({Cell{std::int64_t{s}}, Cell{psi.time}, Cell{nn},
                           Cell{nn - norm0}});
  }

  ResultTable final_psi;
  final_psi.columns = {"q", "re", "im", "abs2"};
  final_psi.metadata = make_metadata(hash);
  for (size_t i = 0; i < psi.q.size(); ++i)
    final_psi.rows.push_back({Cell{psi.q[i]}, Cell{psi.amp[i].real()}, Cell{psi.amp[i].imag()},
                              Cell{std::norm(psi.amp[i])}});

  out.results["max_norm_drift"] = max_drift;
  out.results["final_continuity_residual"] = residual;
  out.tables.emplace_back(cfg.out_prefix + "_norm.csv", std::move(series));
  out.tables.emplace_back(cfg.out_prefix + "_psi.csv", std::move(final_psi));
  return out;
}

JobOutput run_box(const JobConfig& cfg, const std::string& hash) {
  JobOutput out;
  ResultTable table;
  table.columns = {"n1", "n2", "n3", "E"};
  table.metadata = make_metadata(hash);
  int zeros = 0;
  for (int n1 = 1; n1 <= cfg.box_n_max; ++n1)
    for (int n2 = 1; n2 <= cfg.box_n_max; ++n2)
      for (int n3 = 1; n3 <= cfg.box_n_max; ++n3) {
        const double E = box_spectrum({cfg.box_a, cfg.box_b, cfg.box_c, n1, n2, n3});
        if (E == 0.0) ++zeros;
        table.rows.push_back({Cell{std::int64_t{n1}}, Cell{std::int64_t{n2}},
                              Cell{std::int64_t{n3}}, Cell{E}});
      }
  out.results["zero_energy_modes"] = zeros;
  out.tables.emplace_back(cfg.out_prefix + ".csv", std::move(table));
  return out;
}

}  // namespace

std::string config_hash(const std::string& canonical_json) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : canonical_json) {
    h ^= static_cast<std::uint64_t>(c);
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 0; i < 16; ++i) out[i] = hex[(h >> (60 - 4 * i)) & 0xF];
  return out;
}

std::string csv_to_string(const ResultTable& table) {
  std::ostringstream os;
  auto get = [&](const char* key) {
    auto it = table.metadata.find(key);
    return it == table.metadata.end() ? std::string("?") : it->second;
  };
  os << "# " << get("tool") << " " << get("version") << ", units: " << get("units")
     << ", config: " << get("config") << "\n";
  for (size_t i = 0; i < table.columns.size(); ++i)
    os << (i ? "," : "") << quote_rfc4180(table.columns[i]);
  os << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << render(row[i]);
    os << "\n";
  }
  return os.str();
}

void write_csv(const ResultTable& table, const std::string& path) {
  atomic_write(path, csv_to_string(table));
}

std::vector<std::string> validate_config(const std::string& config_path) {
  return parse_and_validate(read_json_file(config_path)).diagnostics;
}

ResultTable emit_potential_profile(const RevolutionFamily& fam, double ell,
                                   const GridSpec& grid) {
  const EffectiveProblem1D prob = effective_problem(fam, ell, grid);
  ResultTable table;
  table.columns = {"q2", "V_eff", "V_S", "centripetal", "curve"};
  table.metadata = make_metadata("unset");
  for (size_t i = 0; i < prob.q.size(); ++i) {
    const double q2 = prob.q[i];
    const PrincipalCurvatures k = closed_form_curvatures(fam, q2);
    const double H = 0.5 * fam.eps * (k.k1 + k.k2);
    const double K = fam.eps * k.k1 * k.k2;
    const double VS = -(fam.eps * H * H - K);
    table.rows.push_back({Cell{q2}, Cell{prob.V[i]}, Cell{VS},
                          Cell{centripetal_term(fam, ell, q2)}, Cell{curve_term(fam, q2)}});
  }
  return table;
}

int run_job(const std::string& config_path, const std::string& out_dir, bool quiet) {
  json raw;
  try {
    raw = read_json_file(config_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  ParsedConfig parsed = parse_and_validate(raw);
  if (!parsed.diagnostics.empty()) {
    for (const auto& d : parsed.diagnostics) std::cerr << "error: " << d << "\n";
    return 2;
  }
  const JobConfig& cfg = parsed.cfg;
  const json canonical = unwrap_config(raw);
  const std::string hash = config_hash(canonical.dump());

  JobOutput out;
  try {
    if (cfg.job == "classify") out = run_classify(cfg, hash);
    else if (cfg.job == "curvature") out = run_curvature(cfg, hash);
    else if (cfg.job == "potential") out = run_potential(cfg, hash);
    else if (cfg.job == "spectrum") out = run_spectrum(cfg, hash);
    else if (cfg.job == "propagate") out = run_propagate(cfg, hash);
    else out = run_box(cfg, hash);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    fs::create_directories(out_dir);
    json summary;
    summary["tool"] = kToolName;
    summary["version"] = kVersion;
    summary["units"] = kUnitsNote;
    summary["config_hash"] = hash;
    summary["job"] = cfg.job;
    json names = json::array();
    for (auto& [fname, table] : out.tables) {
      table.metadata["config"] = hash;
      write_csv(table, (fs::path(out_dir) / fname).string());
      names.push_back(fname);
      if (!quiet) std::cerr << "wrote " << (fs::path(out_dir) / fname).string() << "\n";
    }
    summary["outputs"] = names;
    summary["results"] = out.results;
    summary["config"] = canonical;
    const std::string spath = (fs::path(out_dir) / (cfg.out_prefix + "_summary.json")).string();
    atomic_write(spath, summary.dump(2) + "\n");
    if (!quiet) std::cerr << "wrote " << spath << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace minksurf::jobs
