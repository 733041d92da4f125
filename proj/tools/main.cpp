#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "signet/balance.hpp"
#include "signet/behavior.hpp"
#include "signet/connectivity.hpp"
#include "signet/errors.hpp"
#include "signet/graph.hpp"
#include "signet/json_io.hpp"
#include "signet/random_graph.hpp"
#include "signet/sim.hpp"
#include "signet/spectral.hpp"

namespace {

using namespace signet;

enum class LogLevel { debug = 0, info = 1, warn = 2, error = 3 };

LogLevel log_threshold() {
  static const LogLevel level = [] {
    const char* env = std::getenv("SIGNED_CONSENSUS_LOG");
    const std::string s = env ? env : "warn";
    if (s == "debug") return LogLevel::debug;
    if (s == "info") return LogLevel::info;
    if (s == "error") return LogLevel::error;
    return LogLevel::warn;
  }();
  return level;
}

void log(LogLevel level, const std::string& msg) {
  static const char* names[] = {"debug", "info", "warn", "error"};
  if (level >= log_threshold())
    std::cerr << "[" << names[static_cast<int>(level)] << "] " << msg << "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SignedDigraph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  // A JSON graph starts with '{'; everything else is the edge-list format.
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return graph_from_json(json::parse(text, nullptr, true, true));
    break;
  }
  return from_edge_list(text);
}

void emit(const std::string& output_path, const std::string& text) {
  if (output_path.empty())
    std::cout << text;
  else
    write_text_atomic(output_path, text);
}

void emit_json(const std::string& output_path, const json& j) { emit(output_path, j.dump(2) + "\n"); }

std::vector<double> parse_x0(const std::string& spec, int n) {
  if (spec == "zeros") return std::vector<double>(n, 0.0);
  if (spec.rfind("random:", 0) == 0) {
    const std::string tail = spec.substr(7);
    std::uint64_t seed = 0;
    auto res = std::from_chars(tail.data(), tail.data() + tail.size(), seed);
    if (res.ec != std::errc() || res.ptr != tail.data() + tail.size())
      throw std::invalid_argument("malformed --x0 seed: " + spec);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> x0(n);
    for (double& v : x0) v = dist(rng);
    return x0;
  }
  std::string list = spec;
  for (char& c : list)
    if (c == ',') c = ' ';
  std::istringstream in(list);
  std::vector<double> x0;
  double v;
  while (in >> v) x0.push_back(v);
  if (!in.eof()) throw std::invalid_argument("malformed --x0 entry in: " + spec);
  if (static_cast<int>(x0.size()) != n)
    throw std::invalid_argument("--x0 has " + std::to_string(x0.size()) + " entries, graph has " +
                                std::to_string(n) + " nodes");
  return x0;
}

std::string double_repr(double d) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

int cmd_analyze(const std::string& input, const std::string& output) {
  const SignedDigraph g = load_graph(input);
  log(LogLevel::info, "analyze: " + std::to_string(g.n()) + " nodes, " +
                          std::to_string(g.edge_count()) + " edges");
  const ConnectivityReport conn = analyze_connectivity(g);
  const BalanceVerdict verdict = gauge_partition(g);
  std::vector<bool> node_balance(g.n());
  for (int i = 0; i < g.n(); ++i) node_balance[i] = is_balanced_node(g, i);
  json j;
  j["connectivity"] = connectivity_to_json(conn);
  j["balance"] = balance_to_json(verdict, node_balance);
  emit_json(output, j);
  return 0;
}

int cmd_eigvec(const std::string& input, const std::string& output, bool exact) {
  const SignedDigraph g = load_graph(input);
  json j;
  if (exact)
    j = certificate_to_json(null_certificate<Rational>(g));
  else
    j = certificate_to_json(null_certificate<double>(g));
  emit_json(output, j);
  return 0;
}

void print_table(const SignedDigraph& g, const BehaviorReport& rep,
                 const std::vector<std::string>& xi_repr) {
  std::cout << std::left << std::setw(6) << "node" << std::setw(12) << "balance" << std::setw(24)
            << "xi";
  if (rep.theta) std::cout << "theta";
  std::cout << "\n";
  for (int i = 0; i < g.n(); ++i) {
    std::cout << std::left << std::setw(6) << ("v" + std::to_string(i + 1)) << std::setw(12)
              << (rep.node_balance[i] ? "balanced" : "unbalanced") << std::setw(24) << xi_repr[i];
    if (rep.theta) std::cout << double_repr((*rep.theta)[i]);
    std::cout << "\n";
  }
}

int cmd_classify(const std::string& input, const std::string& output, const std::string& x0_spec,
                 bool exact, bool table) {
  const SignedDigraph g = load_graph(input);
  BehaviorReport rep =
      x0_spec.empty() ? classify(g) : predict(g, parse_x0(x0_spec, g.n()));
  log(LogLevel::info, std::string("classify: ") + to_string(rep.behavior));
  emit_json(output, behavior_to_json(rep));
  if (table) {
    std::vector<std::string> xi_repr(g.n(), "-");
    try {
      if (exact) {
        const auto cert = null_certificate<Rational>(g);
        for (int i = 0; i < g.n(); ++i) xi_repr[i] = rational_repr(cert.xi[i]);
      } else {
        const auto cert = null_certificate<double>(g);
        for (int i = 0; i < g.n(); ++i) xi_repr[i] = double_repr(cert.xi[i]);
      }
    } catch (const numerical_error& e) {
      log(LogLevel::info, std::string("classify: no null vector (") + e.what() + ")");
    }
    print_table(g, rep, xi_repr);
  }
  return 0;
}

int cmd_simulate(const std::string& input, const std::string& output,
                 const std::string& report_path, const std::string& traj_json_path,
                 const std::string& x0_spec, double dt, double t_end, double conv_tol,
                 double verify_tol) {
  const SignedDigraph g = load_graph(input);
  const std::vector<double> x0 = parse_x0(x0_spec, g.n());
  BehaviorReport rep = predict(g, x0);
  SimOptions opts;
  opts.dt = dt;
  opts.t_end = t_end;
  opts.conv_tol = conv_tol;
  log(LogLevel::info, "simulate: dt=" + double_repr(dt) + " t_end=" + double_repr(t_end));
  const Trajectory traj = simulate(g, x0, opts);
  if (!traj.converged)
    log(LogLevel::warn, "trajectory did not settle before t_end = " + double_repr(t_end));
  const VerificationResult verdict = verify_report(rep, traj.final_state, verify_tol);

  if (!output.empty()) emit(output, trajectory_csv(traj));
  if (!traj_json_path.empty())
    emit_json(traj_json_path, trajectory_to_json(traj, graph_hash(g), dt));
  json j;
  j["report"] = behavior_to_json(rep);
  j["verification"] = verification_to_json(verdict);
  j["converged"] = traj.converged;
  j["converged_time"] = traj.converged_time;
  j["final_time"] = traj.final_time;
  emit_json(report_path, j);
  if (!verdict.pass) {
    log(LogLevel::error, "verification failed");
    return 3;
  }
  return 0;
}

int cmd_random(const RandomGraphOptions& opts, const std::string& output) {
  if (opts.n < 2) throw std::invalid_argument("--n must be at least 2");
  if (opts.density <= 0.0 || opts.density > 1.0)
    throw std::invalid_argument("--density must lie in (0, 1]");
  const SignedDigraph g = random_graph(opts);
  log(LogLevel::info, "random: generated " + std::to_string(g.edge_count()) + " edges");
  emit(output, to_edge_list(g));
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Signed-network consensus analyzer"};
  app.require_subcommand(1);

  std::string input, output, report_path, traj_json_path, x0_spec;
  bool exact = false, table = false;
  double dt = 0.01, t_end = 50.0, conv_tol = 1e-9, verify_tol = 1e-6;
  RandomGraphOptions ropts;

  CLI::App* analyze = app.add_subcommand("analyze", "Connectivity and balance report");
  analyze->add_option("--input", input, "graph file (edge list or JSON)")->required();
  analyze->add_option("--output", output, "report path (default: stdout)");

  CLI::App* eigvec = app.add_subcommand("eigvec", "Null-space eigenvector certificate");
  eigvec->add_option("--input", input)->required();
  eigvec->add_option("--output", output);
  eigvec->add_flag("--exact", exact, "exact rational arithmetic");

  CLI::App* classify = app.add_subcommand("classify", "Collective-behavior classification");
  classify->add_option("--input", input)->required();
  classify->add_option("--output", output);
  classify->add_option("--x0", x0_spec, "initial state: list, \"zeros\" or \"random:<seed>\"");
  classify->add_flag("--exact", exact);
  classify->add_flag("--table", table, "per-node table on stdout");

  CLI::App* simulate = app.add_subcommand("simulate", "Integrate dx/dt = -Lx and verify");
  simulate->add_option("--input", input)->required();
  simulate->add_option("--x0", x0_spec)->required();
  simulate->add_option("--output", output, "trajectory CSV path");
  simulate->add_option("--report", report_path, "report path (default: stdout)");
  simulate->add_option("--trajectory-json", traj_json_path);
  simulate->add_option("--dt", dt)->check(CLI::PositiveNumber);
  simulate->add_option("--t-end", t_end)->check(CLI::PositiveNumber);
  simulate->add_option("--conv-tol", conv_tol)->check(CLI::PositiveNumber);
  simulate->add_option("--verify-tol", verify_tol)->check(CLI::PositiveNumber);

  CLI::App* random = app.add_subcommand("random", "Seeded random signed digraph");
  random->add_option("--n", ropts.n)->required();
  random->add_option("--seed", ropts.seed)->required();
  random->add_option("--density", ropts.density);
  random->add_option("--neg-fraction", ropts.neg_fraction);
  random->add_flag("--spanning-tree", ropts.spanning_tree, "force quasi-strong connectivity");
  random->add_flag("--balanced", ropts.balanced, "force structural balance");
  random->add_option("--output", output, "graph path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (analyze->parsed()) return cmd_analyze(input, output);
  if (eigvec->parsed()) return cmd_eigvec(input, output, exact);
  if (classify->parsed()) return cmd_classify(input, output, x0_spec, exact, table);
  if (simulate->parsed())
    return cmd_simulate(input, output, report_path, traj_json_path, x0_spec, dt, t_end, conv_tol,
                        verify_tol);
  return cmd_random(ropts, output);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const parse_error& e) {
    log(LogLevel::error, e.what());
    return 2;
  } catch (const numerical_error& e) {
    log(LogLevel::error, e.what());
    return 4;
  } catch (const std::invalid_argument& e) {
    log(LogLevel::error, e.what());
    return 1;
  } catch (const std::exception& e) {
    log(LogLevel::error, e.what());
    return 4;
  }
}
