#include "signet/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "signet/errors.hpp"

namespace signet {

SignedDigraph::SignedDigraph(int n) : n_(n) {
  if (n <= 0) throw std::invalid_argument("node count must be positive");
  wd_.assign(static_cast<std::size_t>(n) * n, 0.0);
  wq_.assign(static_cast<std::size_t>(n) * n, Rational(0));
}

SignedDigraph::SignedDigraph(int n, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : SignedDigraph(n) {
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("label count must match node count");
  labels_ = std::move(labels);
  for (const Edge& e : edges) {
    if (e.src < 0 || e.src >= n || e.dst < 0 || e.dst >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.src == e.dst) throw std::invalid_argument("self-loops are not allowed");
    if (!std::isfinite(e.weight)) throw std::invalid_argument("edge weight must be finite");
    if (e.weight == 0.0) throw std::invalid_argument("zero-weight edges are not allowed");
    const std::size_t idx = static_cast<std::size_t>(e.dst) * n + e.src;
    if (wd_[idx] != 0.0) throw std::invalid_argument("duplicate edge");
    Rational q = e.exact ? *e.exact : rational_of(e.weight);
    if (sgn(q) == 0 || (q < 0) != (e.weight < 0))
      throw std::invalid_argument("exact weight disagrees with double weight");
    wd_[idx] = e.weight;
    wq_[idx] = q;
    ++edge_count_;
  }
}

void SignedDigraph::check_node(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("node index out of range");
}

double SignedDigraph::weight(int i, int j) const {
  check_node(i);
  check_node(j);
  return wd_[static_cast<std::size_t>(i) * n_ + j];
}

const Rational& SignedDigraph::weight_exact(int i, int j) const {
  check_node(i);
  check_node(j);
  return wq_[static_cast<std::size_t>(i) * n_ + j];
}

std::vector<Edge> SignedDigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int src = 0; src < n_; ++src)
    for (int dst = 0; dst < n_; ++dst) {
      const std::size_t idx = static_cast<std::size_t>(dst) * n_ + src;
      if (wd_[idx] != 0.0) out.push_back({src, dst, wd_[idx], wq_[idx]});
    }
  return out;
}

std::vector<int> SignedDigraph::in_neighbors(int i) const {
  check_node(i);
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (j != i && wd_[static_cast<std::size_t>(i) * n_ + j] != 0.0) out.push_back(j);
  return out;
}

std::vector<int> SignedDigraph::out_neighbors(int j) const {
  check_node(j);
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (i != j && wd_[static_cast<std::size_t>(i) * n_ + j] != 0.0) out.push_back(i);
  return out;
}

namespace {

bool parse_int(const std::string& tok, int& out) {
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc() && res.ptr == tok.data() + tok.size();
}

}  // namespace

SignedDigraph from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  std::optional<int> header_n;
  struct RawEdge {
    int src, dst;
    double w;
    Rational q;
    int line;
  };
  std::vector<RawEdge> raw;
  bool saw_data = false;
  int max_index = 0;
  auto fail = [](int line, const std::string& msg) {
    throw parse_error("edge list line " + std::to_string(line) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string tok;
    while (ls >> tok) toks.push_back(tok);
    if (toks.empty()) continue;
    if (toks[0] == "n") {
      if (saw_data || header_n) fail(line_no, "unexpected header");
      int n = 0;
      if (toks.size() != 2 || !parse_int(toks[1], n) || n <= 0)
        fail(line_no, "malformed header, expected \"n <count>\"");
      header_n = n;
      continue;
    }
    if (toks.size() != 3) fail(line_no, "expected \"<src> <dst> <weight>\"");
    int src = 0, dst = 0;
    if (!parse_int(toks[0], src) || !parse_int(toks[1], dst))
      fail(line_no, "node indices must be integers");
    if (src < 1 || dst < 1) fail(line_no, "node indices are 1-based");
    if (src == dst) fail(line_no, "self-loops are not allowed");
    auto q = parse_exact_weight(toks[2]);
    if (!q) fail(line_no, "malformed weight \"" + toks[2] + "\"");
    char* end = nullptr;
    // Double view: strtod for decimals, num/den for fraction literals.
    double w;
    if (toks[2].find('/') != std::string::npos) {
      w = to_double(*q);
    } else {
      w = std::strtod(toks[2].c_str(), &end);
    }
    if (w == 0.0 || sgn(*q) == 0) fail(line_no, "zero-weight edges are not allowed");
    if (!std::isfinite(w)) fail(line_no, "weight is not finite");
    saw_data = true;
    max_index = std::max({max_index, src, dst});
    raw.push_back({src - 1, dst - 1, w, *q, line_no});
  }
  if (!saw_data && !header_n) throw parse_error("edge list: no header and no edges");
  const int n = header_n ? *header_n : max_index;
  if (header_n && max_index > *header_n)
    throw parse_error("edge list: node index " + std::to_string(max_index) +
                      " exceeds declared count " + std::to_string(*header_n));
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  std::set<std::pair<int, int>> seen;
  for (const RawEdge& r : raw) {
    if (!seen.insert({r.src, r.dst}).second)
      fail(r.line, "duplicate edge " + std::to_string(r.src + 1) + " -> " + std::to_string(r.dst + 1));
    edges.push_back({r.src, r.dst, r.w, r.q});
  }
  try {
    return SignedDigraph(n, edges);
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string("edge list: ") + e.what());
  }
}

std::string to_edge_list(const SignedDigraph& g) {
  std::ostringstream out;
  out << "n " << g.n() << "\n";
  for (const Edge& e : g.edges())
    out << (e.src + 1) << " " << (e.dst + 1) << " " << weight_repr(e.weight, *e.exact) << "\n";
  return out.str();
}

SignedDigraph induced_unsigned(const SignedDigraph& g) {
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    e.weight = std::abs(e.weight);
    e.exact = abs(*e.exact);
  }
  return SignedDigraph(g.n(), edges, g.labels());
}

SignedDigraph conjugated(const SignedDigraph& g, const std::vector<int>& sigma) {
  if (static_cast<int>(sigma.size()) != g.n())
    throw std::invalid_argument("gauge vector length must match node count");
  for (int s : sigma)
    if (s != 1 && s != -1) throw std::invalid_argument("gauge entries must be +1 or -1");
  std::vector<Edge> edges = g.edges();
  for (Edge& e : edges) {
    const int s = sigma[e.dst] * sigma[e.src];
    e.weight *= s;
    e.exact = *e.exact * s;
  }
  return SignedDigraph(g.n(), edges, g.labels());
}

Subgraph induced_subgraph(const SignedDigraph& g, const std::vector<int>& nodes) {
  std::vector<int> sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw std::invalid_argument("induced subgraph needs at least one node");
  if (sorted.front() < 0 || sorted.back() >= g.n())
    throw std::out_of_range("subgraph node out of range");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (i == j) continue;
      const double w = g.weight(sorted[i], sorted[j]);
      if (w != 0.0)
        edges.push_back({static_cast<int>(j), static_cast<int>(i), w,
                         g.weight_exact(sorted[i], sorted[j])});
    }
  std::vector<std::string> labels;
  if (!g.labels().empty())
    for (int v : sorted) labels.push_back(g.labels()[v]);
  return Subgraph{SignedDigraph(static_cast<int>(sorted.size()), edges, std::move(labels)), sorted};
}

namespace detail {

std::vector<int> checked_root_order(const SignedDigraph& g, const std::vector<int>& roots) {
  if (roots.empty()) throw std::invalid_argument("root set must be nonempty");
  std::vector<bool> is_root(g.n(), false);
  for (int r : roots) {
    if (r < 0 || r >= g.n()) throw std::out_of_range("root index out of range");
    if (is_root[r]) throw std::invalid_argument("duplicate root index");
    is_root[r] = true;
  }
  for (int i = 0; i < g.n(); ++i) {
    if (!is_root[i]) continue;
    for (int j = 0; j < g.n(); ++j)
      if (!is_root[j] && g.weight(i, j) != 0.0)
        throw std::invalid_argument("invalid root set: node " + std::to_string(j + 1) +
                                    " is not a root but influences root " + std::to_string(i + 1));
  }
  std::vector<int> order;
  order.reserve(g.n());
  for (int i = 0; i < g.n(); ++i)
    if (is_root[i]) order.push_back(i);
  for (int i = 0; i < g.n(); ++i)
    if (!is_root[i]) order.push_back(i);
  return order;
}

}  // namespace detail

LaplacianView laplacian(const SignedDigraph& g) {
  LaplacianView view;
  view.matrix = laplacian_matrix<double>(g);
  view.order.resize(g.n());
  for (int i = 0; i < g.n(); ++i) view.order[i] = i;
  return view;
}

LaplacianView root_ordered_blocks(const SignedDigraph& g, const std::vector<int>& roots) {
  LaplacianView view;
  RootBlocks blocks = block_split<double>(g, roots);
  view.order = blocks.order;
  view.matrix = blocks.permuted_laplacian();
  view.blocks = std::move(blocks);
  return view;
}

}  // namespace signet
