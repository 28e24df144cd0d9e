#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "unruh/analysis.hpp"
#include "unruh/verify.hpp"

using nlohmann::json;

namespace {

std::string fmt(const char* spec, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, x);
  return buf;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out << text;
}

const char* kind_name(unruh::ExtremumKind k) {
  return k == unruh::ExtremumKind::local_min ? "local_min" : "local_max";
}

// Parameters shared by the state-based subcommands.
struct StateArgs {
  std::string family = "phi-plus";
  std::optional<double> alpha;
  std::optional<double> fidelity;
  double q_r = 1.0;
  double gamma = 0.0;
  int grid_n = unruh::kDefaultGridN;
  std::string format = "csv";
  std::string output;

  void add_common(CLI::App* cmd, bool with_grid = true) {
    cmd->add_option("--state", family,
                    "state family: phi-plus|phi-minus|phi-star|werner|werner-like")
        ->capture_default_str();
    cmd->add_option("--alpha", alpha, "entanglement angle, radians in [0, pi/2]");
    cmd->add_option("--fidelity", fidelity, "Werner mixing weight F in [0, 1]");
    cmd->add_option("--qr", q_r, "Unruh right-mode weight q_R in [0, 1]")
        ->capture_default_str();
    if (with_grid) {
      cmd->add_option("--grid", grid_n, "number of gamma grid points")
          ->capture_default_str();
    }
    cmd->add_option("--output", output, "write to file instead of stdout");
  }

  unruh::Family parsed_family() const { return unruh::family_from_string(family); }

  unruh::StateParams params() const {
    const unruh::Family fam = parsed_family();
    unruh::StateParams p;
    p.q_r = q_r;
    p.gamma = gamma;
    if (unruh::is_pure(fam)) {
      if (!alpha) throw std::invalid_argument("--alpha is required for " + family);
      p.alpha = *alpha;
    } else {
      if (!fidelity) throw std::invalid_argument("--fidelity is required for " + family);
      p.fidelity = *fidelity;
    }
    return p;
  }
};

std::string render_curve(const unruh::Curve& curve, const std::string& format) {
  if (format == "json") {
    json j;
    j["family"] = unruh::to_string(curve.family);
    if (unruh::is_pure(curve.family)) {
      j["alpha"] = curve.params.alpha;
    } else {
      j["fidelity"] = curve.params.fidelity;
    }
    j["q_r"] = curve.params.q_r;
    j["grid_n"] = curve.grid.size();
    j["gamma"] = curve.grid;
    j["negativity"] = curve.values;
    return j.dump(2) + "\n";
  }
  std::string out = "gamma,negativity\n";
  for (std::size_t i = 0; i < curve.grid.size(); ++i) {
    out += fmt("%.6f", curve.grid[i]) + "," + fmt("%.12f", curve.values[i]) + "\n";
  }
  return out;
}

json variation_json(const std::vector<unruh::VariationPoint>& pts) {
  json arr = json::array();
  for (const auto& pt : pts) {
    arr.push_back({{"gamma_star", pt.gamma_star},
                   {"kind", kind_name(pt.kind)},
                   {"value", pt.value}});
  }
  return arr;
}

int run_verify(const std::string& output) {
  const unruh::VerifyReport report = unruh::run_verification();
  json j;
  j["checks"] = report.checks;
  j["failures"] = report.failures;
  j["messages"] = report.messages;
  emit(j.dump(2) + "\n", output);
  return report.failures == 0 ? 0 : 1;
}

std::vector<double> parse_value_list(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    values.push_back(std::stod(item));
  }
  if (values.empty()) throw std::invalid_argument("--values list is empty");
  return values;
}

std::string render_sweep(unruh::Family fam, unruh::StateParams base,
                         const std::vector<double>& values, int grid_n) {
  std::vector<std::vector<unruh::VariationPoint>> rows;
  std::size_t max_count = 0;
  for (double v : values) {
    unruh::StateParams p = base;
    (unruh::is_pure(fam) ? p.alpha : p.fidelity) = v;
    rows.push_back(unruh::variation_points(unruh::negativity_curve(fam, p, grid_n)));
    max_count = std::max(max_count, rows.back().size());
  }
  std::string out = "param,count";
  for (std::size_t k = 1; k <= max_count; ++k) {
    const std::string idx = std::to_string(k);
    out += ",gamma_" + idx + ",kind_" + idx + ",value_" + idx;
  }
  out += "\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out += fmt("%.6f", values[r]) + "," + std::to_string(rows[r].size());
    for (std::size_t k = 0; k < max_count; ++k) {
      if (k < rows[r].size()) {
        out += "," + fmt("%.8f", rows[r][k].gamma_star) + "," +
               kind_name(rows[r][k].kind) + "," + fmt("%.12f", rows[r][k].value);
      } else {
        out += ",,,";
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Negativity of fermionic two-party states under uniform acceleration.\n"
      "Angles are radians (pi/4 ~ 0.7853981634); 1/sqrt(2) ~ 0.7071067812."};
  app.require_subcommand(1);

  StateArgs curve_args;
  auto* curve_cmd = app.add_subcommand(
      "curve", "negativity vs gamma on a uniform grid over [0, pi/4] (CSV)");
  curve_args.add_common(curve_cmd);
  curve_cmd->add_option("--format", curve_args.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  StateArgs matrix_args;
  std::string matrix_source = "oracle";
  auto* matrix_cmd = app.add_subcommand(
      "matrix", "8x8 reduced density matrix at one (gamma, q_R) point");
  matrix_args.add_common(matrix_cmd, /*with_grid=*/false);
  matrix_cmd->add_option("--gamma", matrix_args.gamma,
                         "acceleration parameter, radians in [0, pi/4]")
      ->capture_default_str();
  matrix_cmd->add_option("--source", matrix_source,
                         "oracle (partial trace) or closed-form")
      ->check(CLI::IsMember({"oracle", "closed-form"}))
      ->capture_default_str();

  StateArgs variation_args;
  double refine_tol = 1e-8;
  auto* variation_cmd = app.add_subcommand(
      "variation", "interior extrema of the negativity curve (JSON)");
  variation_args.add_common(variation_cmd);
  variation_cmd->add_option("--tol", refine_tol, "extremum bracket tolerance")
      ->capture_default_str();

  StateArgs threshold_args;
  double tol_alpha = 1e-4;
  auto* threshold_cmd = app.add_subcommand(
      "threshold", "bisect alpha for the onset of entanglement amplification (JSON)");
  threshold_args.add_common(threshold_cmd);
  threshold_cmd->add_option("--tol", tol_alpha, "alpha bisection tolerance")
      ->capture_default_str();

  std::string verify_output;
  auto* verify_cmd = app.add_subcommand(
      "verify", "run the full invariant suites; nonzero exit on any failure");
  verify_cmd->add_option("--output", verify_output, "write to file instead of stdout");

  StateArgs sweep_args;
  std::string sweep_values;
  double sweep_from = 0.0, sweep_to = 0.0;
  int sweep_steps = 0;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "variation points over a list of alpha/fidelity values (CSV)");
  sweep_args.add_common(sweep_cmd);
  auto* values_opt =
      sweep_cmd->add_option("--values", sweep_values, "comma-separated parameter list");
  auto* from_opt = sweep_cmd->add_option("--from", sweep_from, "range start");
  sweep_cmd->add_option("--to", sweep_to, "range end")->needs(from_opt);
  sweep_cmd->add_option("--steps", sweep_steps, "number of range points")
      ->needs(from_opt);
  from_opt->excludes(values_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*curve_cmd) {
      const unruh::Curve curve = unruh::negativity_curve(
          curve_args.parsed_family(), curve_args.params(), curve_args.grid_n);
      emit(render_curve(curve, curve_args.format), curve_args.output);
    } else if (*matrix_cmd) {
      const unruh::Family fam = matrix_args.parsed_family();
      const unruh::StateParams p = matrix_args.params();
      const unruh::ReducedState red =
          matrix_source == "oracle"
              ? unruh::trace_out_region_II(unruh::joint_state(fam, p))
              : unruh::closed_form_reduced(fam, p);
      emit(unruh::dump_reduced(red), matrix_args.output);
    } else if (*variation_cmd) {
      const unruh::Curve curve =
          unruh::negativity_curve(variation_args.parsed_family(),
                                  variation_args.params(), variation_args.grid_n);
      emit(variation_json(unruh::variation_points(curve, refine_tol)).dump(2) + "\n",
           variation_args.output);
    } else if (*threshold_cmd) {
      const unruh::ThresholdResult result = unruh::amplification_threshold(
          threshold_args.parsed_family(), threshold_args.q_r, tol_alpha,
          threshold_args.grid_n);
      json j;
      j["q_r"] = threshold_args.q_r;
      j["tol"] = result.tol;
      if (result.non_monotone_bracket) {
        j["non_monotone_bracket"] = {result.non_monotone_bracket->first,
                                     result.non_monotone_bracket->second};
      } else {
        j["alpha_star"] = result.alpha_star ? json(*result.alpha_star) : json(nullptr);
      }
      if (!result.note.empty()) j["note"] = result.note;
      emit(j.dump(2) + "\n", threshold_args.output);
    } else if (*verify_cmd) {
      return run_verify(verify_output);
    } else if (*sweep_cmd) {
      std::vector<double> values;
      if (!sweep_values.empty()) {
        values = parse_value_list(sweep_values);
      } else if (sweep_steps >= 2) {
        for (int i = 0; i < sweep_steps; ++i) {
          values.push_back(sweep_from +
                           i * (sweep_to - sweep_from) / (sweep_steps - 1));
        }
      } else {
        throw std::invalid_argument("sweep needs --values or --from/--to/--steps");
      }
      // presence of --alpha/--fidelity is not required here: the swept values
      // fill the family parameter
      unruh::StateParams base;
      base.q_r = sweep_args.q_r;
      const unruh::Family fam = sweep_args.parsed_family();
      emit(render_sweep(fam, base, values, sweep_args.grid_n), sweep_args.output);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
