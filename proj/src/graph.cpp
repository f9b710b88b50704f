#include "conjgen/graph.hpp"

#include <algorithm>
#include <sstream>

#include "conjgen/error.hpp"

namespace conjgen {

Edge make_edge(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

SimpleGraph::SimpleGraph(std::size_t vertices) : adj_(vertices) {}

bool SimpleGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= adj_.size() || b >= adj_.size())
    throw RangeError("edge " + std::to_string(a) + "-" + std::to_string(b) + " outside " +
                     std::to_string(adj_.size()) + " vertices");
  if (a == b) throw InvariantViolation("self-loop at vertex " + std::to_string(a));
  auto& na = adj_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b) return false;
  na.insert(it, b);
  auto& nb = adj_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++edges_;
  return true;
}

bool SimpleGraph::has_edge(std::size_t a, std::size_t b) const {
  if (a >= adj_.size() || b >= adj_.size()) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (std::size_t v : adj_[u])
      if (u < v) out.push_back({u, v});
  return out;
}

bool is_connected(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

long long regular_degree(const SimpleGraph& g) {
  if (g.vertex_count() == 0) return -1;
  const std::size_t d = g.degree(0);
  for (std::size_t v = 1; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return -1;
  return static_cast<long long>(d);
}

std::string write_edge_list(const LabeledGraph& g) {
  std::string s = "vertices=" + std::to_string(g.graph.vertex_count()) + "\n";
  for (const Edge& e : g.graph.edges()) {
    s += std::to_string(e.u) + " " + std::to_string(e.v);
    if (auto it = g.labels.find(e); it != g.labels.end() && !it->second.empty()) {
      s += ' ';
      for (std::size_t i = 0; i < it->second.size(); ++i) {
        if (i) s += ',';
        s += it->second[i];
      }
    }
    s += '\n';
  }
  return s;
}

namespace {

std::size_t parse_index(const std::string& tok, int line) {
  if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError("bad vertex '" + tok + "'", line);
  try {
    return static_cast<std::size_t>(std::stoull(tok));
  } catch (const std::exception&) {
    throw ParseError("bad vertex '" + tok + "'", line);
  }
}

}  // namespace

LabeledGraph read_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool have_header = false;
  LabeledGraph g;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string tok, extra;
      ls >> tok;
      if (tok.rfind("vertices=", 0) != 0 || (ls >> extra))
        throw ParseError("expected header 'vertices=<count>'", lineno);
      g.graph = SimpleGraph(parse_index(tok.substr(9), lineno));
      have_header = true;
      continue;
    }
    std::string a, b, labels, extra;
    if (!(ls >> a >> b)) throw ParseError("expected 'u v [labels]'", lineno);
    ls >> labels;
    if (ls >> extra) throw ParseError("trailing text '" + extra + "'", lineno);
    const std::size_t u = parse_index(a, lineno), v = parse_index(b, lineno);
    if (u >= v) throw ParseError("edge must satisfy u < v", lineno);
    if (v >= g.graph.vertex_count()) throw ParseError("vertex " + b + " out of range", lineno);
    if (!g.graph.add_edge(u, v)) throw ParseError("duplicate edge " + a + " " + b, lineno);
    if (!labels.empty()) {
      std::vector<std::string> ls_out;
      std::stringstream ss(labels);
      std::string l;
      while (std::getline(ss, l, ','))
        if (!l.empty()) ls_out.push_back(l);
      g.labels[{u, v}] = std::move(ls_out);
    }
  }
  if (!have_header) throw ParseError("missing header 'vertices=<count>'", lineno);
  return g;
}

std::string write_dot(const LabeledGraph& g, std::string_view name) {
  static const char* palette[] = {"black", "red", "blue", "darkgreen", "orange", "purple", "brown", "cyan"};
  std::string s = "graph " + std::string(name) + " {\n";
  for (std::size_t v = 0; v < g.graph.vertex_count(); ++v) s += "  " + std::to_string(v) + ";\n";
  for (const Edge& e : g.graph.edges()) {
    s += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
    if (auto it = g.labels.find(e); it != g.labels.end() && !it->second.empty()) {
      const std::string& l = it->second.front();
      std::size_t cls = 0;
      if (l.size() > 1 && l[0] == 'g') cls = std::strtoul(l.c_str() + 1, nullptr, 10);
      std::string joined;
      for (std::size_t i = 0; i < it->second.size(); ++i) joined += (i ? "," : "") + it->second[i];
      s += " [label=\"" + joined + "\", color=" + palette[cls % 8] + "]";
    }
    s += ";\n";
  }
  s += "}\n";
  return s;
}

SimpleGraph cycle_graph(std::size_t n) {
  if (n < 3) throw RangeError("cycle graph needs n >= 3");
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph complete_graph(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph complete_bipartite(std::size_t a, std::size_t b) {
  SimpleGraph g(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

SimpleGraph petersen_graph() {
  SimpleGraph g(10);
  for (std::size_t i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
    g.add_edge(i, i + 5);                // spokes
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return g;
}

}  // namespace conjgen
