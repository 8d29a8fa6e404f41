#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "deficit/io.hpp"
#include "deficit/measures.hpp"
#include "deficit/optimize.hpp"
#include "deficit/scenarios.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.2.0";

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string fmt6(double v) {
  std::ostringstream out;
  out << std::setprecision(6) << v;
  return out.str();
}

void print_report_table(const deficit::ScenarioReport& report) {
  std::cout << "scenario: " << report.name << "\n\n";
  std::size_t width = 8;
  for (const auto& [label, _] : report.quantities) width = std::max(width, label.size());
  for (const auto& [label, value] : report.quantities) {
    std::cout << "  " << std::left << std::setw(static_cast<int>(width + 2)) << label
              << fmt6(value) << "\n";
  }
  if (!report.checks.empty()) {
    std::cout << "\n";
    std::size_t cwidth = 5;
    for (const auto& c : report.checks) cwidth = std::max(cwidth, c.description.size());
    std::cout << "  " << std::left << std::setw(static_cast<int>(cwidth + 2)) << "check"
              << std::setw(12) << "expected" << std::setw(12) << "actual" << std::setw(12)
              << "tolerance" << "status\n";
    for (const auto& c : report.checks) {
      std::cout << "  " << std::left << std::setw(static_cast<int>(cwidth + 2)) << c.description
                << std::setw(12) << fmt6(c.expected) << std::setw(12) << fmt6(c.actual)
                << std::setw(12) << fmt6(c.tolerance) << (c.pass ? "PASS" : "FAIL") << "\n";
    }
  }
  std::cout << "\noverall: " << (report.overall() ? "PASS" : "FAIL") << "\n";
}

json report_json(const deficit::ScenarioReport& report) {
  json j;
  j["name"] = report.name;
  j["quantities"] = json::object();
  for (const auto& [label, value] : report.quantities) j["quantities"][label] = value;
  j["checks"] = json::array();
  for (const auto& c : report.checks) {
    j["checks"].push_back({{"description", c.description},
                           {"expected", c.expected},
                           {"actual", c.actual},
                           {"tolerance", c.tolerance},
                           {"pass", c.pass}});
  }
  j["overall"] = report.overall();
  return j;
}

int emit_report(const deficit::ScenarioReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << report_json(report).dump(2) << "\n";
  } else {
    print_report_table(report);
  }
  return report.overall() ? kExitOk : kExitCheckFailed;
}

void print_pairs_table(const std::vector<std::pair<std::string, double>>& rows) {
  std::size_t width = 8;
  for (const auto& [label, _] : rows) width = std::max(width, label.size());
  for (const auto& [label, value] : rows) {
    std::cout << "  " << std::left << std::setw(static_cast<int>(width + 2)) << label
              << fmt6(value) << "\n";
  }
}

deficit::ProjectiveMeasurement resolve_measurement(const deficit::io::LoadedMeasurement& loaded,
                                                   const deficit::DensityMatrix& rho) {
  if (std::holds_alternative<deficit::ProjectiveMeasurement>(loaded)) {
    return std::get<deficit::ProjectiveMeasurement>(loaded);
  }
  if (std::holds_alternative<std::vector<deficit::ComplexMatrix>>(loaded)) {
    return deficit::refine(std::get<std::vector<deficit::ComplexMatrix>>(loaded), rho);
  }
  throw deficit::io::ParseError(
      "povm measurements support only c_hv evaluation; use kind basis/projectors here");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"one-way information deficits and classical correlations of small "
               "bipartite states"};
  app.require_subcommand(1);

  std::string format = "table";

  auto* reproduce = app.add_subcommand("reproduce", "run a built-in scenario reproduction");
  std::string target;
  reproduce->add_option("target", target, "sw99|knr01|lemma1|lemma2|diagram|chi-scan")
      ->required();
  std::size_t rep_restarts = 24;
  std::uint64_t rep_seed = 20240901;
  reproduce->add_option("--restarts", rep_restarts, "optimizer restarts");
  reproduce->add_option("--seed", rep_seed, "optimizer seed");
  reproduce->add_option("--format", format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* measures = app.add_subcommand("measures", "evaluate entropic quantities of a state");
  std::string state_path, measurement_path;
  measures->add_option("--state", state_path, "state file (JSON)")->required();
  measures->add_option("--measurement", measurement_path, "measurement file (JSON)");
  measures->add_option("--format", format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* optimize = app.add_subcommand("optimize", "optimize a measure over Alice bases");
  std::string objective = "chv";
  std::string opt_state_path;
  std::size_t restarts = 24;
  std::size_t grid = 64;
  std::uint64_t seed = 20240901;
  bool support_restricted = false;
  optimize->add_option("--objective", objective, "chv|dcl|deficit")
      ->check(CLI::IsMember({"chv", "dcl", "deficit"}));
  optimize->add_option("--state", opt_state_path, "state file (JSON)")->required();
  optimize->add_option("--restarts", restarts, "multistart count");
  optimize->add_option("--grid", grid, "qubit seeding grid subdivisions of theta");
  optimize->add_option("--seed", seed, "RNG seed");
  optimize->add_flag("--support-restricted", support_restricted,
                     "restrict bases to the support of rho_A");
  optimize->add_option("--format", format, "table|json")
      ->check(CLI::IsMember({"table", "json"}));

  auto* version = app.add_subcommand("version", "print version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*version) {
      std::cout << "deficit-lab " << kVersion << "\n";
      return kExitOk;
    }

    if (*reproduce) {
      deficit::OptimizeOptions options;
      options.starts = rep_restarts;
      options.seed = rep_seed;
      if (target == "sw99") return emit_report(deficit::sw99_report(options), format);
      if (target == "knr01") return emit_report(deficit::knr01_report(options), format);
      if (target == "lemma1") return emit_report(deficit::lemma1_sw99_report(options), format);
      if (target == "lemma2") {
        return emit_report(
            deficit::lemma2_demo(deficit::build_sw99_state(),
                                 deficit::ProjectiveMeasurement::computational(2), options),
            format);
      }
      if (target == "diagram") {
        deficit::ScenarioReport sw =
            deficit::diagram_check(deficit::sw99_ensemble(), deficit::make_damping_channel());
        deficit::ScenarioReport knr = deficit::diagram_check(
            deficit::knr01_ensemble(), deficit::make_shifted_contraction_channel());
        deficit::ScenarioReport merged{"diagram", {}, {}};
        for (const auto& [label, value] : sw.quantities)
          merged.quantities.emplace_back("sw99." + label, value);
        for (const auto& [label, value] : knr.quantities)
          merged.quantities.emplace_back("knr01." + label, value);
        for (auto c : sw.checks) {
          c.description = "sw99: " + c.description;
          merged.checks.push_back(std::move(c));
        }
        for (auto c : knr.checks) {
          c.description = "knr01: " + c.description;
          merged.checks.push_back(std::move(c));
        }
        return emit_report(merged, format);
      }
      if (target == "chi-scan") return emit_report(deficit::chi_scan_report(), format);
      std::cerr << "unknown reproduce target: " << target
                << " (expected sw99|knr01|lemma1|lemma2|diagram|chi-scan)\n";
      return kExitUsage;
    }

    if (*measures) {
      const deficit::DensityMatrix rho = deficit::io::read_state_file(state_path);
      std::vector<std::pair<std::string, double>> rows = {
          {"S_AB", deficit::entropy(rho)},
          {"S_A", deficit::entropy(deficit::partial_trace(rho, deficit::Subsystem::A))},
          {"S_B", deficit::entropy(deficit::partial_trace(rho, deficit::Subsystem::B))},
          {"I_M", deficit::mutual_information(rho)},
          {"I_GO", deficit::i_go(rho)},
          {"I_LO", deficit::i_lo(rho)},
      };
      json extra;
      if (!measurement_path.empty()) {
        const auto loaded = deficit::io::read_measurement_file(measurement_path);
        if (std::holds_alternative<deficit::Povm>(loaded)) {
          rows.emplace_back("c_hv",
                            deficit::classical_correlation(rho, std::get<deficit::Povm>(loaded)));
        } else {
          const auto q =
              deficit::evaluate_measurement(rho, resolve_measurement(loaded, rho));
          rows.emplace_back("c_hv", q.classical_correlation);
          rows.emplace_back("delta_cl", q.classical_deficit);
          rows.emplace_back("deficit_q", q.quantum_deficit);
          rows.emplace_back("alice_entropy_cost", q.alice_entropy_cost);
          extra["outcome_weights"] = q.outcome_weights;
          extra["outcome_entropies"] = q.outcome_entropies;
        }
      }
      if (format == "json") {
        json j = extra;
        for (const auto& [label, value] : rows) j[label] = value;
        std::cout << j.dump(2) << "\n";
      } else {
        print_pairs_table(rows);
      }
      return kExitOk;
    }

    if (*optimize) {
      const deficit::DensityMatrix rho = deficit::io::read_state_file(opt_state_path);
      deficit::OptimizeOptions options;
      options.starts = restarts;
      options.seed = seed;
      options.grid_points = grid;
      options.support_restricted = support_restricted;
      deficit::OptimizeResult result =
          objective == "chv"
              ? deficit::maximize(rho, deficit::Objective::ClassicalCorrelation, options)
              : objective == "dcl"
                    ? deficit::maximize(rho, deficit::Objective::ClassicalDeficit, options)
                    : deficit::minimize_quantum_deficit(rho, options);
      if (format == "json") {
        json j;
        j["objective"] = objective;
        j["value"] = result.value;
        j["evaluations"] = result.evaluations;
        j["best_start"] = result.best_start;
        j["converged"] = result.converged;
        json basis = json::array();
        for (const auto& v : result.measurement.basis()) {
          json vec = json::array();
          for (const auto& z : v) vec.push_back(json::array({z.real(), z.imag()}));
          basis.push_back(std::move(vec));
        }
        j["basis"] = std::move(basis);
        j["quantities"] = {{"c_hv", result.quantities.classical_correlation},
                           {"delta_cl", result.quantities.classical_deficit},
                           {"deficit_q", result.quantities.quantum_deficit},
                           {"I_M", result.quantities.mutual_information}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "objective: " << objective << "\n";
        print_pairs_table({{"value", result.value},
                           {"c_hv", result.quantities.classical_correlation},
                           {"delta_cl", result.quantities.classical_deficit},
                           {"deficit_q", result.quantities.quantum_deficit}});
        std::cout << "  evaluations: " << result.evaluations << "\n"
                  << "  best_start:  " << result.best_start << "\n"
                  << "  converged:   " << (result.converged ? "yes" : "no") << "\n"
                  << "  basis:\n";
        for (const auto& v : result.measurement.basis()) {
          std::cout << "   ";
          for (const auto& z : v) {
            std::cout << " (" << fmt6(z.real()) << ", " << fmt6(z.imag()) << ")";
          }
          std::cout << "\n";
        }
      }
      return kExitOk;
    }
  } catch (const deficit::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
