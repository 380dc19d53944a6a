#include "cli.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "cauchybv/analysis.hpp"
#include "cauchybv/cauchy_eval.hpp"
#include "cauchybv/circle_spectral.hpp"
#include "cauchybv/common.hpp"
#include "cauchybv/density.hpp"
#include "cauchybv/geometry.hpp"
#include "cauchybv/io.hpp"
#include "cauchybv/kernels.hpp"
#include "cauchybv/singular.hpp"

namespace cauchybv::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct RunConfig {
  CurveParam curve;
  int n = 256;
  std::optional<DensitySpec> density;
  std::string samples_path;  // metadata when the density came from a file
  LimitSchedule sched;
  std::vector<int> grids = {64, 128, 256};
  double threshold = 1e-6;
  bool threshold_given = false;
  double exclude = 0.1;
  double exclusion_mult = 3.0;
  std::vector<Complex> zs;
  std::string quantity = "offcurve";
  double node_frac = 0.25;
  std::optional<Complex> reference;
  bool export_operator = false;
  std::string out_dir = ".";
  int seed = 0;
  int threads = 1;
  bool strict = false;
  std::string kernel = "auto";
};

Complex parse_complex(const std::string& text) {
  std::size_t used = 0;
  double re = std::stod(text, &used);
  double im = 0.0;
  if (used < text.size()) {
    if (text[used] != ',')
      throw ConfigError("expected re[,im], got: " + text);
    im = std::stod(text.substr(used + 1));
  }
  return {re, im};
}

std::vector<Complex> load_samples_csv(const std::string& path) {
  auto rows = read_numeric_csv(path);
  std::vector<Complex> v;
  v.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() == 2)
      v.emplace_back(row[0], row[1]);
    else if (row.size() == 3)
      v.emplace_back(row[1], row[2]);  // tau,re,im
    else
      throw ConfigError("sample rows must be re,im or tau,re,im: " + path);
  }
  if (v.empty()) throw ConfigError("no samples in " + path);
  return v;
}

DensitySpec parse_density_string(const std::string& text, std::string* samples_path) {
  std::size_t colon = text.find(':');
  std::string kind = text.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "constant")
    return DensitySpec::make_constant(arg.empty() ? Complex{1.0, 0.0}
                                                  : parse_complex(arg));
  if (kind == "power") {
    if (arg.empty()) throw ConfigError("power density needs an exponent");
    return DensitySpec::make_power(std::stoi(arg));
  }
  if (kind == "pole") {
    if (arg.empty()) throw ConfigError("pole density needs a location re[,im]");
    return DensitySpec::make_pole(parse_complex(arg));
  }
  if (kind == "sawtooth") return DensitySpec::make_sawtooth();
  if (kind == "sqrt_singular") {
    if (arg.empty()) throw ConfigError("sqrt_singular density needs an angle");
    return DensitySpec::make_sqrt_singular(std::stod(arg));
  }
  if (kind == "trig_poly") {
    // mode=re[,im] entries separated by ';', e.g. "1=1;-2=0,1"
    std::map<int, Complex> coeffs;
    std::size_t pos = 0;
    while (pos < arg.size()) {
      std::size_t semi = arg.find(';', pos);
      std::string entry = arg.substr(
          pos, semi == std::string::npos ? std::string::npos : semi - pos);
      std::size_t eq = entry.find('=');
      if (eq == std::string::npos)
        throw ConfigError("trig_poly entries look like mode=re[,im]: " + entry);
      coeffs[std::stoi(entry.substr(0, eq))] = parse_complex(entry.substr(eq + 1));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    if (coeffs.empty()) throw ConfigError("trig_poly density needs coefficients");
    return DensitySpec::make_trig_poly(std::move(coeffs));
  }
  if (kind == "samples") {
    if (arg.empty()) throw ConfigError("samples density needs a csv path");
    if (samples_path) *samples_path = arg;
    return DensitySpec::make_samples(load_samples_csv(arg));
  }
  throw ConfigError("unknown density kind: " + kind);
}

Complex json_complex(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2)
    return {j[0].get<double>(), j[1].get<double>()};
  throw ConfigError("expected a number or [re, im] pair in config");
}

void apply_curve_json(const json& j, RunConfig& cfg) {
  if (j.contains("kind")) cfg.curve.kind = parse_curve_kind(j["kind"].get<std::string>());
  if (j.contains("a")) cfg.curve.a = j["a"].get<double>();
  if (j.contains("b")) cfg.curve.b = j["b"].get<double>();
  if (j.contains("arms")) cfg.curve.arms = j["arms"].get<int>();
  if (j.contains("amplitude")) cfg.curve.amplitude = j["amplitude"].get<double>();
  if (j.contains("N")) cfg.n = j["N"].get<int>();
}

DensitySpec density_from_json(const json& j, std::string* samples_path) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant")
    return DensitySpec::make_constant(j.contains("c") ? json_complex(j["c"])
                                                      : Complex{1.0, 0.0});
  if (kind == "power") return DensitySpec::make_power(j.at("n").get<int>());
  if (kind == "pole") return DensitySpec::make_pole(json_complex(j.at("z0")));
  if (kind == "sawtooth") return DensitySpec::make_sawtooth();
  if (kind == "sqrt_singular")
    return DensitySpec::make_sqrt_singular(j.at("phi0").get<double>());
  if (kind == "trig_poly") {
    std::map<int, Complex> coeffs;
    for (const auto& entry : j.at("coeffs")) {
      if (!entry.is_array() || entry.size() != 3)
        throw ConfigError("trig_poly coeffs are [mode, re, im] triples");
      coeffs[entry[0].get<int>()] = {entry[1].get<double>(),
                                     entry[2].get<double>()};
    }
    return DensitySpec::make_trig_poly(std::move(coeffs));
  }
  if (kind == "samples") {
    std::string path = j.at("path").get<std::string>();
    if (samples_path) *samples_path = path;
    return DensitySpec::make_samples(load_samples_csv(path));
  }
  throw ConfigError("unknown density kind in config: " + kind);
}

void apply_schedule_json(const json& j, LimitSchedule& s) {
  if (j.contains("eps0")) s.eps0 = j["eps0"].get<double>();
  if (j.contains("ratio")) s.ratio = j["ratio"].get<double>();
  if (j.contains("count")) s.count = j["count"].get<int>();
  if (j.contains("min_eps_over_h")) s.min_eps_over_h = j["min_eps_over_h"].get<double>();
  if (j.contains("extrapolation_degree"))
    s.extrapolation_degree = j["extrapolation_degree"].get<int>();
}

// Values from a --config file override the command line.
void apply_config_file(const std::string& path, RunConfig& cfg) {
  json j = json::parse(read_file(path));
  if (j.contains("curve")) apply_curve_json(j["curve"], cfg);
  if (j.contains("density"))
    cfg.density = density_from_json(j["density"], &cfg.samples_path);
  if (j.contains("schedule")) apply_schedule_json(j["schedule"], cfg.sched);
  if (j.contains("grids")) cfg.grids = j["grids"].get<std::vector<int>>();
  if (j.contains("threshold")) {
    cfg.threshold = j["threshold"].get<double>();
    cfg.threshold_given = true;
  }
  if (j.contains("exclude")) cfg.exclude = j["exclude"].get<double>();
  if (j.contains("exclusion_mult"))
    cfg.exclusion_mult = j["exclusion_mult"].get<double>();
  if (j.contains("z")) {
    cfg.zs.clear();
    for (const auto& p : j["z"]) cfg.zs.push_back(json_complex(p));
  }
  if (j.contains("quantity")) cfg.quantity = j["quantity"].get<std::string>();
  if (j.contains("node_frac")) cfg.node_frac = j["node_frac"].get<double>();
  if (j.contains("reference")) cfg.reference = json_complex(j["reference"]);
  if (j.contains("export_operator"))
    cfg.export_operator = j["export_operator"].get<bool>();
  if (j.contains("out")) cfg.out_dir = j["out"].get<std::string>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<int>();
  if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
  if (j.contains("strict")) cfg.strict = j["strict"].get<bool>();
  if (j.contains("kernel")) cfg.kernel = j["kernel"].get<std::string>();
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

json density_json(const DensitySpec& spec, const std::string& samples_path) {
  json j;
  j["kind"] = density_kind_name(spec.kind);
  switch (spec.kind) {
    case DensityKind::constant: j["c"] = complex_json(spec.c); break;
    case DensityKind::power: j["n"] = spec.n; break;
    case DensityKind::pole: j["z0"] = complex_json(spec.z0); break;
    case DensityKind::sawtooth: break;
    case DensityKind::sqrt_singular: j["phi0"] = spec.phi0; break;
    case DensityKind::trig_poly: {
      json arr = json::array();
      for (const auto& [mode, c] : spec.coeffs)
        arr.push_back(json::array({mode, c.real(), c.imag()}));
      j["coeffs"] = arr;
      break;
    }
    case DensityKind::samples:
      j["path"] = samples_path;
      j["count"] = spec.samples.size();
      break;
  }
  return j;
}

// The embedded configuration covers everything that determines the numbers:
// execution details (threads, output directory, strict) are left out so that
// equivalent runs produce byte-identical artifacts.
json resolved_config(const std::string& command, const RunConfig& cfg) {
  json j;
  j["command"] = command;
  json curve;
  curve["kind"] = curve_kind_name(cfg.curve.kind);
  if (cfg.curve.kind == CurveKind::ellipse) {
    curve["a"] = cfg.curve.a;
    curve["b"] = cfg.curve.b;
  }
  if (cfg.curve.kind == CurveKind::star) {
    curve["arms"] = cfg.curve.arms;
    curve["amplitude"] = cfg.curve.amplitude;
  }
  curve["N"] = cfg.n;
  j["curve"] = curve;
  if (cfg.density) j["density"] = density_json(*cfg.density, cfg.samples_path);
  json sched;
  sched["eps0"] = cfg.sched.eps0;
  sched["ratio"] = cfg.sched.ratio;
  sched["count"] = cfg.sched.count;
  sched["min_eps_over_h"] = cfg.sched.min_eps_over_h;
  sched["extrapolation_degree"] = cfg.sched.extrapolation_degree;
  j["schedule"] = sched;
  if (command == "classify") {
    j["grids"] = cfg.grids;
    j["threshold"] = cfg.threshold;
  }
  if (command == "converge") {
    j["grids"] = cfg.grids;
    j["quantity"] = cfg.quantity;
    if (cfg.quantity != "offcurve") j["node_frac"] = cfg.node_frac;
    if (cfg.reference) j["reference"] = complex_json(*cfg.reference);
  }
  if (command == "jump") j["exclusion_mult"] = cfg.exclusion_mult;
  if (command == "circle-demo") j["exclude"] = cfg.exclude;
  if (command == "eval" || (command == "converge" && cfg.quantity == "offcurve")) {
    json zs = json::array();
    for (Complex z : cfg.zs) zs.push_back(complex_json(z));
    j["z"] = zs;
  }
  j["seed"] = cfg.seed;
  j["kernel_backend"] = kernels::backend_name(kernels::active_backend());
  return j;
}

void add_meta(Csv& csv, const json& config) {
  csv.comment(version_string);
  csv.comment(std::string("config ") + config.dump());
}

json json_report_base(const json& config) {
  json j;
  j["version"] = version_string;
  j["config"] = config;
  return j;
}

fs::path out_path(const RunConfig& cfg, const std::string& name) {
  fs::path dir(cfg.out_dir);
  if (!dir.empty()) fs::create_directories(dir);
  return dir / name;
}

void write_json_file(const fs::path& path, const json& j) {
  write_file(path, j.dump(2) + "\n");
}

std::string sci(double v) { return fmt_double(v); }

Density require_density(const RunConfig& cfg, const CurveGrid& grid) {
  if (!cfg.density) throw ConfigError("this command needs --density");
  return sample_density(*cfg.density, grid);
}

// ---------------------------------------------------------------- commands

int run_eval(const RunConfig& cfg) {
  if (cfg.zs.empty())
    throw ConfigError("eval needs at least one point (--z or --z-file)");
  CurveGrid grid = make_curve(cfg.curve, cfg.n);
  Density f = require_density(cfg, grid);
  auto values = eval_offcurve_many(grid, f, cfg.zs, cfg.threads);

  json config = resolved_config("eval", cfg);
  Csv csv;
  add_meta(csv, config);
  csv.header({"re_z", "im_z", "re_phi", "im_phi", "warn_flag"});
  int warned = 0;
  for (std::size_t i = 0; i < cfg.zs.size(); ++i) {
    warned += values[i].near_boundary ? 1 : 0;
    csv.row({sci(cfg.zs[i].real()), sci(cfg.zs[i].imag()),
             sci(values[i].phi.real()), sci(values[i].phi.imag()),
             values[i].near_boundary ? "1" : "0"});
  }
  fs::path path = out_path(cfg, "eval.csv");
  write_file(path, csv.text());
  if (cfg.zs.size() == 1) {
    std::cout << "eval: phi = " << sci(values[0].phi.real()) << " + "
              << sci(values[0].phi.imag()) << "i"
              << (values[0].near_boundary ? " (near boundary)" : "") << " -> "
              << path.string() << "\n";
  } else {
    std::cout << "eval: points=" << cfg.zs.size() << " near_boundary="
              << warned << " -> " << path.string() << "\n";
  }
  return (cfg.strict && warned > 0) ? 4 : 0;
}

int run_trace(const RunConfig& cfg) {
  CurveGrid grid = make_curve(cfg.curve, cfg.n);
  Density f = require_density(cfg, grid);
  PVTrace trace = phi_on_curve(grid, f, cfg.threads);

  json config = resolved_config("trace", cfg);
  Csv csv;
  add_meta(csv, config);
  // The principal-value part is recoverable as (Bf - f)/2.
  csv.header({"tau", "re_f", "im_f", "re_phi_t", "im_phi_t", "re_Bf",
              "im_Bf"});
  for (int j = 0; j < grid.size(); ++j) {
    Complex bf = f.values[j] + 2.0 * trace.psi_t[j];
    csv.row({sci(grid.tau(j)), sci(f.values[j].real()),
             sci(f.values[j].imag()), sci(trace.phi_t[j].real()),
             sci(trace.phi_t[j].imag()), sci(bf.real()), sci(bf.imag())});
  }
  fs::path path = out_path(cfg, "trace.csv");
  write_file(path, csv.text());

  if (cfg.export_operator) {
    auto mat = b_operator_matrix(grid, cfg.threads);
    Csv op;
    add_meta(op, config);
    std::vector<std::string> cols;
    for (int c = 0; c < grid.size(); ++c) {
      cols.push_back("re_" + std::to_string(c));
      cols.push_back("im_" + std::to_string(c));
    }
    op.header(cols);
    for (int r = 0; r < grid.size(); ++r) {
      std::vector<std::string> cells;
      for (int c = 0; c < grid.size(); ++c) {
        Complex v = mat[static_cast<std::size_t>(r) * grid.size() + c];
        cells.push_back(sci(v.real()));
        cells.push_back(sci(v.imag()));
      }
      op.row(cells);
    }
    write_file(out_path(cfg, "operator.csv"), op.text());
  }

  std::cout << "trace: N=" << grid.size()
            << " unset_nodes=" << trace.unset_nodes.size() << " -> "
            << path.string() << "\n";
  return (cfg.strict && !trace.unset_nodes.empty()) ? 4 : 0;
}

int run_jump(const RunConfig& cfg) {
  CurveGrid grid = make_curve(cfg.curve, cfg.n);
  Density f = require_density(cfg, grid);
  JumpReport rep = jump_report(grid, f, cfg.sched, cfg.exclusion_mult, cfg.threads);

  json config = resolved_config("jump", cfg);
  Csv csv;
  add_meta(csv, config);
  csv.header({"j", "tau", "re_f", "im_f", "re_phi_plus", "im_phi_plus",
              "re_phi_minus", "im_phi_minus", "re_phi_t", "im_phi_t", "r_jump",
              "r_plus", "r_minus", "r_avg", "skipped"});
  for (const JumpNode& node : rep.nodes) {
    csv.row({std::to_string(node.j), sci(node.tau), sci(node.f.real()),
             sci(node.f.imag()), sci(node.phi_plus.real()),
             sci(node.phi_plus.imag()), sci(node.phi_minus.real()),
             sci(node.phi_minus.imag()), sci(node.phi_t.real()),
             sci(node.phi_t.imag()), sci(node.r_jump), sci(node.r_plus),
             sci(node.r_minus), sci(node.r_avg), node.skipped ? "1" : "0"});
  }
  fs::path path = out_path(cfg, "jump.csv");
  write_file(path, csv.text());

  json summary = json_report_base(config);
  summary["grid_n"] = rep.grid_n;
  summary["retained"] = rep.agg.retained;
  summary["skipped"] = rep.agg.skipped;
  summary["max_r_jump"] = rep.agg.max_r_jump;
  summary["mean_r_jump"] = rep.agg.mean_r_jump;
  summary["max_r_plus"] = rep.agg.max_r_plus;
  summary["mean_r_plus"] = rep.agg.mean_r_plus;
  summary["max_r_minus"] = rep.agg.max_r_minus;
  summary["mean_r_minus"] = rep.agg.mean_r_minus;
  summary["max_r_avg"] = rep.agg.max_r_avg;
  summary["mean_r_avg"] = rep.agg.mean_r_avg;
  write_json_file(out_path(cfg, "jump_summary.json"), summary);

  std::cout << "jump: N=" << rep.grid_n << " retained=" << rep.agg.retained
            << " skipped=" << rep.agg.skipped
            << " max_r_jump=" << sci(rep.agg.max_r_jump) << " -> "
            << path.string() << "\n";
  return (cfg.strict && rep.agg.skipped > 0) ? 4 : 0;
}

int run_classify(const RunConfig& cfg) {
  if (!cfg.density) throw ConfigError("classify needs --density");
  if (cfg.density->kind == DensityKind::samples && !cfg.threshold_given)
    throw ConfigError(
        "classifying a samples density needs an explicit --threshold");
  MembershipVerdict verdict = classify_boundary(cfg.curve, *cfg.density,
                                                cfg.grids, cfg.threshold,
                                                cfg.threads);
  json config = resolved_config("classify", cfg);
  json out = json_report_base(config);
  out["decision"] = membership_name(verdict.decision);
  out["grids"] = verdict.grids;
  out["residual_interior"] = verdict.residual_interior;
  out["residual_exterior"] = verdict.residual_exterior;
  out["threshold"] = verdict.threshold;
  fs::path path = out_path(cfg, "classify_verdict.json");
  write_json_file(path, out);

  std::cout << "classify: decision=" << membership_name(verdict.decision)
            << " residual_interior=" << sci(verdict.residual_interior.back())
            << " residual_exterior=" << sci(verdict.residual_exterior.back())
            << " -> " << path.string() << "\n";
  return verdict.decision == Membership::inconclusive ? 3 : 0;
}

int run_demo(const RunConfig& cfg) {
  SawtoothReport rep = sawtooth_demo(cfg.n, cfg.exclude, cfg.threads);

  json config = resolved_config("circle-demo", cfg);
  Csv csv;
  add_meta(csv, config);
  // Both involution routes are real for this density up to round-off, so the
  // report keeps the real parts only.
  csv.header({"phi", "re_f", "im_f", "re_B0f_spectral", "re_B0f_subtraction",
              "closed_form", "abs_err_spectral", "abs_err_subtraction"});
  for (const SawtoothRow& r : rep.rows) {
    csv.row({sci(r.tau), sci(r.f.real()), sci(r.f.imag()),
             sci(r.b0_spectral.real()), sci(r.b0_subtraction.real()),
             sci(r.closed_form), sci(r.err_spectral),
             sci(r.err_subtraction)});
  }
  fs::path path = out_path(cfg, "circle_demo.csv");
  write_file(path, csv.text());

  json summary = json_report_base(config);
  summary["n"] = rep.n;
  summary["exclusion_radius"] = rep.exclusion_radius;
  summary["max_err_spectral"] = rep.max_err_spectral;
  summary["mean_err_spectral"] = rep.mean_err_spectral;
  summary["max_err_subtraction"] = rep.max_err_subtraction;
  summary["mean_err_subtraction"] = rep.mean_err_subtraction;
  summary["err_at_pi_spectral"] = rep.err_at_pi_spectral;
  summary["err_at_pi_subtraction"] = rep.err_at_pi_subtraction;
  summary["max_abs_spectral"] = rep.max_abs_spectral;
  summary["max_abs_subtraction"] = rep.max_abs_subtraction;
  summary["sup_f"] = rep.sup_f;
  summary["scan_radii"] = rep.scan_radii;
  summary["scan_max_spectral"] = rep.scan_max_spectral;
  summary["scan_max_subtraction"] = rep.scan_max_subtraction;
  write_json_file(out_path(cfg, "circle_demo_summary.json"), summary);

  std::cout << "circle-demo: N=" << rep.n
            << " max_err_spectral=" << sci(rep.max_err_spectral)
            << " max_err_subtraction=" << sci(rep.max_err_subtraction)
            << " -> " << path.string() << "\n";
  return 0;
}

int run_converge(const RunConfig& cfg) {
  if (cfg.grids.size() < 3)
    throw ConfigError("converge needs at least three grid sizes");
  for (std::size_t k = 1; k < cfg.grids.size(); ++k)
    if (cfg.grids[k] <= cfg.grids[k - 1])
      throw ConfigError("grid sizes must be strictly increasing");
  if (!cfg.density) throw ConfigError("converge needs --density");
  bool is_offcurve = cfg.quantity == "offcurve";
  bool is_trace = cfg.quantity == "trace";
  bool is_jump = cfg.quantity == "jump";
  if (!is_offcurve && !is_trace && !is_jump)
    throw ConfigError("quantity must be offcurve, trace, or jump");
  if (is_offcurve && cfg.zs.size() != 1)
    throw ConfigError("converge offcurve needs exactly one --z point");
  if (cfg.density->kind == DensityKind::samples)
    throw ConfigError("converge has no reference for a samples density; "
                      "use closed-form densities");

  std::vector<Complex> values;
  for (int n : cfg.grids) {
    CurveGrid grid = make_curve(cfg.curve, n);
    Density f = sample_density(*cfg.density, grid);
    if (is_offcurve) {
      values.push_back(eval_offcurve(grid, f, cfg.zs[0]).phi);
    } else {
      if (!(cfg.node_frac >= 0.0) || !(cfg.node_frac < 1.0))
        throw ConfigError("--node-frac must lie in [0, 1)");
      int j = static_cast<int>(std::llround(cfg.node_frac * n)) % n;
      if (f.is_singular(j))
        throw ConfigError("--node-frac lands on a singular node");
      if (is_trace) {
        values.push_back(0.5 * f.values[j] + psi_at(grid, f, j));
      } else {
        Complex plus = nontangential_limit(grid, f, j, Side::interior, cfg.sched);
        Complex minus = nontangential_limit(grid, f, j, Side::exterior, cfg.sched);
        values.push_back({std::abs(plus - minus - f.values[j]), 0.0});
      }
    }
  }

  // Reference: jump residuals target zero; otherwise the explicit value if
  // given, else the finest grid.
  Complex ref = is_jump ? Complex{0.0, 0.0}
                        : cfg.reference.value_or(values.back());
  json config = resolved_config("converge", cfg);
  Csv csv;
  add_meta(csv, config);
  csv.header({"N", "re_value", "im_value", "error", "order"});
  double prev_err = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    double err = std::abs(values[k] - ref);
    double order = std::numeric_limits<double>::quiet_NaN();
    if (k > 0 && err > 0.0 && prev_err > 0.0)
      order = std::log(prev_err / err) /
              std::log(static_cast<double>(cfg.grids[k]) / cfg.grids[k - 1]);
    csv.row({std::to_string(cfg.grids[k]), sci(values[k].real()),
             sci(values[k].imag()), sci(err), sci(order)});
    prev_err = err;
  }
  fs::path path = out_path(cfg, "converge.csv");
  write_file(path, csv.text());
  double final_err = std::abs(values.back() - ref);
  std::cout << "converge: quantity=" << cfg.quantity
            << " grids=" << cfg.grids.size() << " final_error=" << sci(final_err)
            << " -> " << path.string() << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  RunConfig cfg;
  std::string config_path;
  std::string density_text;
  std::vector<std::string> z_texts;
  std::string z_file;
  std::string curve_name = "circle";
  std::string reference_text;

  CLI::App app{"Cauchy transforms of boundary densities on smooth closed "
               "curves: off-curve evaluation, principal-value traces, "
               "one-sided limits, and boundary-trace classification"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool wants_density) {
    sub->add_option("--config", config_path,
                    "JSON config file; overrides command-line flags");
    sub->add_option("--curve", curve_name, "circle | ellipse | kite | star");
    sub->add_option("--N", cfg.n, "grid size (even, >= 4)");
    sub->add_option("--a", cfg.curve.a, "ellipse semi-axis (real)");
    sub->add_option("--b", cfg.curve.b, "ellipse semi-axis (imaginary)");
    sub->add_option("--arms", cfg.curve.arms, "star arm count (>= 3)");
    sub->add_option("--amplitude", cfg.curve.amplitude, "star amplitude [0, 0.5)");
    if (wants_density)
      sub->add_option("--density", density_text,
                      "constant[:re[,im]] | power:n | pole:re[,im] | sawtooth |"
                      " sqrt_singular:phi0 | trig_poly:n=re[,im];... |"
                      " samples:file.csv");
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--seed", cfg.seed, "seed recorded in artifacts");
    sub->add_option("--threads", cfg.threads, "worker threads (results identical)");
    sub->add_flag("--strict", cfg.strict, "elevate numerical warnings to exit 4");
    sub->add_option("--kernel", cfg.kernel, "auto | scalar | avx2");
  };
  auto add_schedule = [&](CLI::App* sub) {
    sub->add_option("--eps0", cfg.sched.eps0, "largest offset (0 = derive)");
    sub->add_option("--ratio", cfg.sched.ratio, "offset decay ratio in (0,1)");
    sub->add_option("--count", cfg.sched.count, "number of offsets");
    sub->add_option("--floor", cfg.sched.min_eps_over_h,
                    "smallest offset in grid steps");
    sub->add_option("--degree", cfg.sched.extrapolation_degree,
                    "extrapolation polynomial degree");
  };

  CLI::App* eval = app.add_subcommand("eval", "Cauchy transform at off-curve points");
  add_common(eval, true);
  eval->add_option("--z", z_texts, "evaluation point re[,im]; repeatable");
  eval->add_option("--z-file", z_file, "csv of points (re_z, im_z)");

  CLI::App* trace = app.add_subcommand(
      "trace", "on-curve principal-value trace and involution");
  add_common(trace, true);
  trace->add_flag("--export-operator", cfg.export_operator,
                  "write the dense involution matrix (operator.csv)");

  CLI::App* jump = app.add_subcommand(
      "jump", "verify the one-sided limit relations at every node");
  add_common(jump, true);
  add_schedule(jump);
  jump->add_option("--exclusion-mult", cfg.exclusion_mult,
                   "skip nodes within this many grid steps of a singular node");

  CLI::App* classify = app.add_subcommand(
      "classify", "interior / exterior / neither boundary-trace verdict");
  add_common(classify, true);
  auto* thr_opt = classify->add_option("--threshold", cfg.threshold,
                                       "residual threshold");
  classify->add_option("--grids", cfg.grids, "grid sizes, e.g. 64,128,256")
      ->delimiter(',');

  CLI::App* demo = app.add_subcommand(
      "circle-demo", "sawtooth involution: spectral vs subtraction routes");
  add_common(demo, false);
  demo->add_option("--exclude", cfg.exclude,
                   "parameter radius excluded around the jump");

  CLI::App* converge = app.add_subcommand(
      "converge", "grid-refinement study of a chosen quantity");
  add_common(converge, true);
  add_schedule(converge);
  converge->add_option("--quantity", cfg.quantity, "offcurve | trace | jump");
  converge->add_option("--z", z_texts, "evaluation point for offcurve");
  converge->add_option("--grids", cfg.grids, "grid sizes, ascending")
      ->delimiter(',');
  converge->add_option("--node-frac", cfg.node_frac,
                       "node index as a fraction of N for trace/jump");
  converge->add_option("--reference", reference_text,
                       "exact value re[,im] to measure errors against");
  converge->add_option("--exclusion-mult", cfg.exclusion_mult,
                       "skip radius for the jump quantity");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.curve.kind = parse_curve_kind(curve_name);
    if (!density_text.empty())
      cfg.density = parse_density_string(density_text, &cfg.samples_path);
    if (!z_file.empty()) {
      for (const auto& row : read_numeric_csv(z_file)) {
        if (row.size() < 2)
          throw ConfigError("z file rows must be re_z, im_z");
        cfg.zs.emplace_back(row[0], row[1]);
      }
    }
    for (const auto& t : z_texts) cfg.zs.push_back(parse_complex(t));
    if (!reference_text.empty()) cfg.reference = parse_complex(reference_text);
    if (thr_opt->count() > 0) cfg.threshold_given = true;
    if (!config_path.empty()) apply_config_file(config_path, cfg);
    if (cfg.threads < 1) throw ConfigError("--threads must be >= 1");
    kernels::set_backend(kernels::parse_backend(cfg.kernel));

    if (eval->parsed()) return run_eval(cfg);
    if (trace->parsed()) return run_trace(cfg);
    if (jump->parsed()) return run_jump(cfg);
    if (classify->parsed()) return run_classify(cfg);
    if (demo->parsed()) return run_demo(cfg);
    if (converge->parsed()) return run_converge(cfg);
    throw ConfigError("no command given");
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cauchybv::cli
