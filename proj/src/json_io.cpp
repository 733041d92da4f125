#include "signet/json_io.hpp"

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "signet/errors.hpp"

namespace signet {

namespace {

std::string double_repr(double d) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), d);
  return std::string(buf, res.ptr);
}

json ids1(const std::vector<int>& nodes) {
  json arr = json::array();
  for (int v : nodes) arr.push_back(v + 1);
  return arr;
}

// Shared weight-token semantics with the text format: fractions take their
// double view from the rational, decimals from strtod.
Edge edge_from_token(int src, int dst, const std::string& token) {
  auto q = parse_exact_weight(token);
  if (!q) throw parse_error("graph json: malformed weight \"" + token + "\"");
  double w;
  if (token.find('/') != std::string::npos) {
    w = to_double(*q);
  } else {
    w = std::strtod(token.c_str(), nullptr);
  }
  return Edge{src, dst, w, *q};
}

}  // namespace

json graph_to_json(const SignedDigraph& g) {
  json j;
  j["n"] = g.n();
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    const std::string repr = weight_repr(e.weight, *e.exact);
    json entry = json::array({e.src + 1, e.dst + 1});
    if (repr == double_repr(e.weight))
      entry.push_back(e.weight);
    else
      entry.push_back(repr);
    edges.push_back(std::move(entry));
  }
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

SignedDigraph graph_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const json& entry : j.at("edges")) {
      if (!entry.is_array() || entry.size() != 3)
        throw parse_error("graph json: edge entries must be [src, dst, weight]");
      const int src = entry[0].get<int>();
      const int dst = entry[1].get<int>();
      std::string token;
      if (entry[2].is_string())
        token = entry[2].get<std::string>();
      else if (entry[2].is_number())
        token = double_repr(entry[2].get<double>());
      else
        throw parse_error("graph json: weight must be a number or string");
      edges.push_back(edge_from_token(src - 1, dst - 1, token));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    return SignedDigraph(n, edges, std::move(labels));
  } catch (const json::exception& e) {
    throw parse_error(std::string("graph json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("graph json: ") + e.what());
  }
}

json connectivity_to_json(const ConnectivityReport& rep) {
  json j;
  json sccs = json::array();
  for (const auto& scc : rep.sccs) sccs.push_back(ids1(scc));
  j["sccs"] = std::move(sccs);
  j["scc_of"] = rep.scc_of;  // 0-based scc index per node
  json cond = json::array();
  for (auto [a, b] : rep.condensation_edges) cond.push_back(json::array({a, b}));
  j["condensation_edges"] = std::move(cond);
  j["source_sccs"] = rep.source_sccs;
  json weak = json::array();
  for (const auto& comp : rep.weak_components) weak.push_back(ids1(comp));
  j["weak_components"] = std::move(weak);
  j["quasi_strongly_connected"] = rep.is_quasi_strongly_connected;
  j["roots"] = ids1(rep.roots);
  j["leaders"] = ids1(rep.leaders);
  j["followers"] = ids1(rep.followers);
  return j;
}

json balance_to_json(const BalanceVerdict& verdict, const std::vector<bool>& node_balance) {
  json j;
  j["balanced"] = verdict.balanced;
  j["sigma"] = verdict.gauge ? json(verdict.gauge->sigma) : json(nullptr);
  j["witness_cycle"] = verdict.balanced ? json(nullptr) : ids1(verdict.witness_cycle);
  j["node_balance"] = node_balance;
  return j;
}

namespace {

template <typename T>
json certificate_json_impl(const Certificate<T>& cert, json (*scalar)(const T&)) {
  json j;
  json xi = json::array(), eta = json::array();
  for (const T& v : cert.xi) xi.push_back(scalar(v));
  for (const T& v : cert.eta) eta.push_back(scalar(v));
  j["xi"] = std::move(xi);
  j["eta"] = std::move(eta);
  j["det_L"] = scalar(cert.det_L);
  j["inner"] = scalar(cert.inner);
  j["residuals"] = {{"right", scalar(cert.residual_right)}, {"left", scalar(cert.residual_left)}};
  j["condition"] = cert.condition ? json(to_string(*cert.condition)) : json(nullptr);
  j["orchestrated"] = cert.orchestrated;
  return j;
}

}  // namespace

json certificate_to_json(const Certificate<double>& cert) {
  return certificate_json_impl<double>(cert, [](const double& v) { return json(v); });
}

json certificate_to_json(const Certificate<Rational>& cert) {
  return certificate_json_impl<Rational>(cert,
                                         [](const Rational& v) { return json(rational_repr(v)); });
}

json behavior_to_json(const BehaviorReport& rep) {
  json j;
  j["behavior"] = to_string(rep.behavior);
  j["strict_interval"] = rep.strict_interval;
  j["node_balance"] = rep.node_balance;
  j["leaders"] = ids1(rep.leaders);
  j["gauge_conflict"] = rep.gauge_conflict;
  json comps = json::array();
  for (const ComponentReport& c : rep.components) {
    json jc;
    jc["nodes"] = ids1(c.nodes);
    jc["source_nodes"] = ids1(c.source_nodes);
    jc["quasi_strongly_connected"] = c.quasi_strongly_connected;
    jc["condition"] = c.condition ? json(to_string(*c.condition)) : json(nullptr);
    jc["behavior"] = to_string(c.behavior);
    jc["null_dim"] = c.null_dim;
    comps.push_back(std::move(jc));
  }
  j["components"] = std::move(comps);
  j["theta"] = rep.theta ? json(*rep.theta) : json(nullptr);
  json intervals = json::array();
  for (const auto& iv : rep.leader_intervals) intervals.push_back(json::array({iv[0], iv[1]}));
  j["leader_intervals"] = std::move(intervals);
  return j;
}

json verification_to_json(const VerificationResult& result) {
  json j;
  j["pass"] = result.pass;
  json checks = json::array();
  for (const VerificationCheck& c : result.checks)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j;
}

std::string trajectory_csv(const Trajectory& traj) {
  std::string out = "t";
  const std::size_t n = traj.final_state.size();
  for (std::size_t i = 1; i <= n; ++i) out += ",x" + std::to_string(i);
  out += "\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out += double_repr(traj.times[k]);
    for (double v : traj.states[k]) out += "," + double_repr(v);
    out += "\n";
  }
  return out;
}

json trajectory_to_json(const Trajectory& traj, const std::string& graph_hash, double dt,
                        std::optional<std::uint64_t> seed) {
  json j;
  j["metadata"] = {{"graph_hash", graph_hash},
                   {"dt", dt},
                   {"seed", seed ? json(*seed) : json(nullptr)},
                   {"converged", traj.converged},
                   {"converged_time", traj.converged_time},
                   {"final_time", traj.final_time}};
  j["t"] = traj.times;
  j["x"] = traj.states;
  j["final_state"] = traj.final_state;
  return j;
}

std::string graph_hash(const SignedDigraph& g) {
  const std::string text = to_edge_list(g);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  for (int i = 15; i >= 0; --i) {
    buf[i] = "0123456789abcdef"[h & 0xf];
    h >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << text;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + tmp);
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace signet
