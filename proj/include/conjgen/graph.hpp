#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace conjgen {

/// Undirected edge on 0-based vertices, normalized so that u < v.
struct Edge {
  std::size_t u;
  std::size_t v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(std::size_t a, std::size_t b);

/// Undirected graph without loops or parallel edges.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t vertices = 0);

  /// Returns false when the edge was already present. Loops throw.
  bool add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const;

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  std::size_t degree(std::size_t v) const { return adj_[v].size(); }
  /// Sorted ascending.
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  /// Lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edges_ = 0;
};

bool is_connected(const SimpleGraph& g);
/// Degree of every vertex if regular, -1 otherwise (and for the empty graph).
long long regular_degree(const SimpleGraph& g);

/// Graph plus optional per-edge label sets, as used by the edge-list format.
struct LabeledGraph {
  SimpleGraph graph;
  std::map<Edge, std::vector<std::string>> labels;
};

/// `vertices=<count>` then one `u v [label1,label2,...]` line per edge, u < v,
/// edges in lexicographic order.
std::string write_edge_list(const LabeledGraph& g);
/// Inverse of write_edge_list. Lines starting with '#' and blank lines are
/// skipped; errors carry the 1-based line number.
LabeledGraph read_edge_list(std::string_view text);
/// Graphviz export; labels of the form g<i> or g<i>^-1 select colour class i.
std::string write_dot(const LabeledGraph& g, std::string_view name = "G");

SimpleGraph cycle_graph(std::size_t n);
SimpleGraph complete_graph(std::size_t n);
SimpleGraph complete_bipartite(std::size_t a, std::size_t b);
SimpleGraph petersen_graph();

}  // namespace conjgen
