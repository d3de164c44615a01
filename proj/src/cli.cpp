#include "gstest/cli.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gstest/errors.hpp"
#include "gstest/graph.hpp"
#include "gstest/noise.hpp"
#include "gstest/oracle.hpp"
#include "gstest/protocol.hpp"
#include "gstest/rng.hpp"
#include "gstest/sweep.hpp"

namespace gstest {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot read file: " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text;
  f.flush();
  if (!f) throw std::runtime_error("failed writing output file: " + path);
}

Boundary boundary_from(const std::string& name) {
  if (name == "open") return Boundary::open;
  if (name == "periodic") return Boundary::periodic;
  throw ParseError("boundary must be \"open\" or \"periodic\", got \"" +
                   name + "\"");
}

Graph graph_from_cells(const std::vector<int>& cells,
                       const std::string& boundary) {
  if (cells.size() != 3)
    throw ParseError("cells must be three positive integers");
  RhgSpec spec;
  spec.cells = {cells[0], cells[1], cells[2]};
  spec.boundary = boundary_from(boundary);
  return build_rhg(spec);
}

int cmd_params(double delta, double p_th, std::size_t degree, bool as_json,
               std::ostream& out) {
  const ProtocolParams params = compute_params(delta, p_th, degree);
  const VerifyReport rep = verify_params(params);
  if (as_json) {
    nlohmann::json j;
    j["delta"] = params.delta;
    j["p_th"] = params.p_threshold;
    j["degree"] = params.degree;
    j["n_test"] = params.n_test;
    j["p_goal"] = params.p_goal;
    j["measured_qubits"] = params.measured_qubits;
    j["verify"] = {{"confidence", rep.confidence},
                   {"reject_bound", rep.reject_prob_bound},
                   {"accept_bound", rep.accept_prob_bound},
                   {"reject_ok", rep.reject_ok},
                   {"accept_ok", rep.accept_ok},
                   {"reject_slack", rep.reject_slack},
                   {"accept_slack", rep.accept_slack}};
    out << j.dump() << "\n";
    return 0;
  }
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "delta            %.6g\n"
                "p_th             %.6g\n"
                "degree           %zu\n"
                "n_test           %zu\n"
                "p_goal           %.6g\n"
                "measured_qubits  %zu\n",
                params.delta, params.p_threshold, params.degree,
                params.n_test, params.p_goal, params.measured_qubits);
  out << buf;
  std::snprintf(buf, sizeof buf,
                "reject_bound     %.6f >= %.6f  %s  (slack %+.6f)\n"
                "accept_bound     %.6f >= %.6f  %s  (slack %+.6f)\n",
                rep.reject_prob_bound, rep.confidence,
                rep.reject_ok ? "pass" : "FAIL", rep.reject_slack,
                rep.accept_prob_bound, rep.confidence,
                rep.accept_ok ? "pass" : "FAIL", rep.accept_slack);
  out << buf;
  return 0;
}

int cmd_counts(std::size_t degree, std::ostream& out) {
  const FlipStats stats = flip_counts(degree);
  out << "weight,commuting,anticommuting\n";
  for (std::size_t w = 0; w < stats.commuting.size(); ++w)
    out << w << ',' << stats.commuting[w] << ',' << stats.anticommuting[w]
        << '\n';
  return 0;
}

int cmd_lattice(const std::vector<int>& cells, const std::string& boundary,
                const std::string& format, const std::string& out_path,
                std::ostream& out) {
  const Graph g = graph_from_cells(cells, boundary);
  if (format == "json") {
    emit(export_graph_json(g) + "\n", out_path, out);
  } else if (format == "dot") {
    emit(export_graph_dot(g), out_path, out);
  } else {
    throw ParseError("format must be \"json\" or \"dot\", got \"" + format +
                     "\"");
  }
  return 0;
}

struct SimulateOptions {
  std::vector<int> cells;  // empty means unset
  std::string boundary = "periodic";
  std::string graph_file;
  std::size_t degree = 4;
  double delta = 1.0 / 3.0;
  std::optional<double> p_th;
  std::optional<std::size_t> n_test;
  std::vector<double> p_values;
  std::size_t trials = 10000;
  std::uint64_t master_seed = 1;
};

void load_config(const std::string& text, SimulateOptions& o) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("config JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key == "D") {
      if (!value.is_number_unsigned())
        throw ParseError("config: \"D\" must be a positive integer");
      o.degree = value.get<std::size_t>();
    } else if (key == "delta") {
      if (!value.is_number())
        throw ParseError("config: \"delta\" must be a number");
      o.delta = value.get<double>();
    } else if (key == "p_th") {
      if (!value.is_number())
        throw ParseError("config: \"p_th\" must be a number");
      o.p_th = value.get<double>();
    } else if (key == "n_test") {
      if (!value.is_number_unsigned())
        throw ParseError("config: \"n_test\" must be a positive integer");
      o.n_test = value.get<std::size_t>();
    } else if (key == "p_values") {
      if (!value.is_array())
        throw ParseError("config: \"p_values\" must be an array of numbers");
      o.p_values.clear();
      for (const auto& pv : value) {
        if (!pv.is_number())
          throw ParseError("config: \"p_values\" must be an array of numbers");
        o.p_values.push_back(pv.get<double>());
      }
    } else if (key == "trials") {
      if (!value.is_number_unsigned())
        throw ParseError("config: \"trials\" must be a positive integer");
      o.trials = value.get<std::size_t>();
    } else if (key == "master_seed") {
      if (!value.is_number_unsigned())
        throw ParseError("config: \"master_seed\" must be a 64-bit integer");
      o.master_seed = value.get<std::uint64_t>();
    } else if (key == "graph") {
      if (!value.is_object())
        throw ParseError("config: \"graph\" must be an object");
      if (value.contains("file")) {
        if (!value["file"].is_string())
          throw ParseError("config: graph file must be a string path");
        o.graph_file = value["file"].get<std::string>();
        o.cells.clear();
      } else if (value.contains("cells")) {
        if (!value["cells"].is_array() || value["cells"].size() != 3)
          throw ParseError("config: graph cells must be [Lx, Ly, Lz]");
        o.cells.clear();
        for (const auto& c : value["cells"]) {
          if (!c.is_number_integer())
            throw ParseError("config: graph cells must be integers");
          o.cells.push_back(c.get<int>());
        }
        if (value.contains("boundary")) {
          if (!value["boundary"].is_string())
            throw ParseError("config: graph boundary must be a string");
          o.boundary = value["boundary"].get<std::string>();
        }
        o.graph_file.clear();
      } else {
        throw ParseError("config: \"graph\" needs \"cells\" or \"file\"");
      }
    } else {
      throw ParseError("config: unknown key \"" + key + "\"");
    }
  }
}

int cmd_simulate(const SimulateOptions& o, const std::string& out_path,
                 std::ostream& out) {
  if (o.trials == 0) throw DomainError("trials must be >= 1");
  for (const double p : o.p_values) {
    if (!(p >= 0.0 && p <= 1.0))
      throw DomainError("every p must lie in [0, 1]");
  }
  if (!o.p_th.has_value())
    throw DomainError("p_th is required (flag --p-th or config file)");
  if (o.n_test.has_value() && *o.n_test == 0)
    throw DomainError("n_test must be >= 1");

  const ProtocolParams params =
      compute_params(o.delta, *o.p_th, o.degree);
  const std::size_t n_test = o.n_test.value_or(params.n_test);

  Graph g;
  if (!o.graph_file.empty()) {
    g = load_graph_json(read_file(o.graph_file));
  } else if (!o.cells.empty()) {
    g = graph_from_cells(o.cells, o.boundary);
  } else {
    g = graph_from_cells({3, 3, 3}, o.boundary);
  }

  const TestPlan plan = select_test_vertices(g, o.degree, n_test);
  const std::vector<double> ps =
      o.p_values.empty() ? default_p_grid(params.p_goal, *o.p_th)
                         : o.p_values;
  const std::vector<SweepRow> rows =
      run_sweep(g, plan, ps, o.trials, o.master_seed);
  std::ostringstream csv;
  write_sweep_csv(rows, csv);
  emit(csv.str(), out_path, out);
  return 0;
}

int cmd_plan(const std::vector<int>& cells, const std::string& boundary,
             const std::string& graph_file, std::size_t degree,
             std::size_t n_test, std::ostream& out) {
  Graph g;
  if (!graph_file.empty()) {
    g = load_graph_json(read_file(graph_file));
  } else if (!cells.empty()) {
    g = graph_from_cells(cells, boundary);
  } else {
    throw ParseError("a graph source is required: --cells or --graph");
  }
  const TestPlan plan = select_test_vertices(g, degree, n_test);
  out << test_plan_json(plan) << "\n";
  return 0;
}

int cmd_oracle_check(std::size_t trials, std::uint64_t seed,
                     std::ostream& out, std::ostream& err) {
  if (trials == 0) throw DomainError("trials must be >= 1");
  struct Case {
    const char* name;
    Graph g;
  };
  const std::array<std::pair<std::uint32_t, std::uint32_t>, 4> star_edges = {
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}}};
  std::vector<Case> cases;
  cases.push_back({"star", Graph::from_edges(5, star_edges)});
  cases.push_back({"rhg-cell", build_rhg({{1, 1, 1}, Boundary::open})});

  bool clean = true;
  char buf[160];
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const TestPlan plan = select_test_vertices(cases[c].g, 4, 1);
    for (const double p : {0.05, 0.2}) {
      const CrossValidationReport rep = cross_validate(
          cases[c].g, plan, p, trials,
          rng::derive(seed, c, static_cast<std::uint64_t>(p * 100)));
      std::snprintf(buf, sizeof buf,
                    "graph=%-8s qubits=%-2zu p=%.2f trials=%zu mismatches=%zu "
                    "max_mean_deviation=%.4f\n",
                    cases[c].name, cases[c].g.vertex_count(), p, rep.trials,
                    rep.mismatches, rep.max_mean_deviation);
      out << buf;
      clean = clean && rep.mismatches == 0;
    }
  }
  if (!clean) {
    err << "error: parity mismatch between commutation signs and the "
           "statevector\n";
    return 1;
  }
  out << "ok\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "One-shot stabilizer-parity testing of graph states under IID "
      "depolarizing noise"};
  app.require_subcommand(1);

  // params
  double delta = 1.0 / 3.0;
  double p_th = 0.0;
  std::size_t degree = 4;
  bool as_json = false;
  auto* params_cmd = app.add_subcommand(
      "params", "Derive n_test and p_goal from (delta, p_th, degree)");
  params_cmd->add_option("--delta", delta, "verdict error budget in (0, 1)")
      ->required();
  params_cmd->add_option("--p-th", p_th, "rejection threshold in (0, 3/8)")
      ->required();
  params_cmd->add_option("--degree", degree,
                         "test-vertex degree (default 4)");
  params_cmd->add_flag("--json", as_json, "emit a JSON report");

  // counts
  std::size_t counts_degree = 4;
  auto* counts_cmd = app.add_subcommand(
      "counts",
      "Tabulate errors on one generator's support by weight and commutation");
  counts_cmd->add_option("--degree", counts_degree, "degree, at most 11")
      ->required();

  // lattice
  std::vector<int> cells;
  std::string boundary = "periodic";
  std::string format = "json";
  std::string out_path;
  auto* lattice_cmd =
      app.add_subcommand("lattice", "Generate a lattice graph and export it");
  lattice_cmd->add_option("--cells", cells, "cells per axis: Lx Ly Lz")
      ->expected(3)
      ->required();
  lattice_cmd->add_option("--boundary", boundary, "open|periodic")
      ->check(CLI::IsMember({"open", "periodic"}));
  lattice_cmd->add_option("--format", format, "json|dot")
      ->check(CLI::IsMember({"json", "dot"}));
  lattice_cmd->add_option("-o,--output", out_path,
                          "write to a file instead of stdout");

  // plan
  std::vector<int> plan_cells;
  std::string plan_boundary = "periodic";
  std::string plan_graph_file;
  std::size_t plan_degree = 4;
  std::size_t plan_n_test = 0;
  auto* plan_cmd = app.add_subcommand(
      "plan", "Choose test vertices and emit the measurement plan as JSON");
  auto* plan_cells_opt =
      plan_cmd->add_option("--cells", plan_cells, "cells per axis: Lx Ly Lz")
          ->expected(3);
  plan_cmd->add_option("--boundary", plan_boundary, "open|periodic")
      ->check(CLI::IsMember({"open", "periodic"}));
  plan_cmd->add_option("--graph", plan_graph_file, "graph JSON file")
      ->excludes(plan_cells_opt);
  plan_cmd->add_option("--degree", plan_degree, "test-vertex degree");
  plan_cmd->add_option("--n-test", plan_n_test, "number of test vertices")
      ->required();

  // simulate
  SimulateOptions sim;
  std::string config_path;
  std::vector<int> sim_cells;
  std::string sim_boundary;
  std::string sim_graph_file;
  std::size_t sim_degree = 0;
  double sim_delta = 0.0;
  double sim_p_th = 0.0;
  std::size_t sim_n_test = 0;
  std::vector<double> sim_p_values;
  std::size_t sim_trials = 0;
  std::uint64_t sim_seed = 0;
  std::string sim_out_path;
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Monte Carlo acceptance-rate sweep over error rates");
  sim_cmd->add_option("--config", config_path,
                      "JSON config; explicit flags override its values");
  auto* sim_cells_opt =
      sim_cmd->add_option("--cells", sim_cells, "cells per axis: Lx Ly Lz")
          ->expected(3);
  sim_cmd->add_option("--boundary", sim_boundary, "open|periodic")
      ->check(CLI::IsMember({"open", "periodic"}));
  sim_cmd->add_option("--graph", sim_graph_file, "graph JSON file")
      ->excludes(sim_cells_opt);
  sim_cmd->add_option("--degree", sim_degree, "test-vertex degree");
  sim_cmd->add_option("--delta", sim_delta, "verdict error budget in (0, 1)");
  sim_cmd->add_option("--p-th", sim_p_th, "rejection threshold in (0, 3/8)");
  sim_cmd->add_option("--n-test", sim_n_test,
                      "override the derived number of test vertices");
  sim_cmd->add_option("--p-values", sim_p_values,
                      "comma-separated error rates; default is a log grid")
      ->delimiter(',');
  sim_cmd->add_option("--trials", sim_trials, "trials per error rate");
  sim_cmd->add_option("--seed", sim_seed, "master seed");
  sim_cmd->add_option("-o,--output", sim_out_path,
                      "write the CSV to a file instead of stdout");

  // oracle-check (hidden; CI hook for the statevector cross-validation)
  std::size_t oracle_trials = 2000;
  std::uint64_t oracle_seed = 11;
  auto* oracle_cmd = app.add_subcommand(
      "oracle-check",
      "Cross-validate parity semantics against a dense statevector");
  oracle_cmd->group("");
  oracle_cmd->add_option("--trials", oracle_trials, "trials per case");
  oracle_cmd->add_option("--seed", oracle_seed, "master seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*params_cmd) return cmd_params(delta, p_th, degree, as_json, out);
    if (*counts_cmd) return cmd_counts(counts_degree, out);
    if (*lattice_cmd)
      return cmd_lattice(cells, boundary, format, out_path, out);
    if (*plan_cmd)
      return cmd_plan(plan_cells, plan_boundary, plan_graph_file, plan_degree,
                      plan_n_test, out);
    if (*sim_cmd) {
      if (!config_path.empty()) load_config(read_file(config_path), sim);
      if (sim_cmd->count("--cells")) {
        sim.cells = sim_cells;
        sim.graph_file.clear();
      }
      if (sim_cmd->count("--boundary")) sim.boundary = sim_boundary;
      if (sim_cmd->count("--graph")) {
        sim.graph_file = sim_graph_file;
        sim.cells.clear();
      }
      if (sim_cmd->count("--degree")) sim.degree = sim_degree;
      if (sim_cmd->count("--delta")) sim.delta = sim_delta;
      if (sim_cmd->count("--p-th")) sim.p_th = sim_p_th;
      if (sim_cmd->count("--n-test")) sim.n_test = sim_n_test;
      if (sim_cmd->count("--p-values")) sim.p_values = sim_p_values;
      if (sim_cmd->count("--trials")) sim.trials = sim_trials;
      if (sim_cmd->count("--seed")) sim.master_seed = sim_seed;
      return cmd_simulate(sim, sim_out_path, out);
    }
    if (*oracle_cmd) return cmd_oracle_check(oracle_trials, oracle_seed, out, err);
  } catch (const InsufficientVertices& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no subcommand selected\n";
  return 2;
}

}  // namespace gstest
