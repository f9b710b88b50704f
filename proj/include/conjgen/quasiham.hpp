#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "conjgen/graph.hpp"
#include "conjgen/perm.hpp"

namespace conjgen {

/// Spanning subgraph in which every vertex has degree 2; edges sorted.
struct CycleFactor {
  std::vector<Edge> edges;
};

/// Checks the degree-2 invariant and that every edge belongs to g.
bool is_cycle_factor(const SimpleGraph& g, const CycleFactor& f);

/// Bipartite doubling of a graph on m vertices: s, t, x_1..x_m, y_1..y_m with
/// unit arcs x_i -> y_j per adjacency and capacity-2 arcs s -> x_i, y_j -> t.
/// Flow is only ever changed along an augmenting path together with its
/// mirror (x and y swapped, direction reversed), so flow(x_i y_j) always
/// equals flow(x_j y_i).
class FlowNetwork {
 public:
  explicit FlowNetwork(const SimpleGraph& g);

  /// Pushes one unit through x_i -> y_j and one through x_j -> y_i and locks
  /// both arcs. False if the source or sink arcs are already saturated.
  bool force_edge(std::size_t i, std::size_t j);
  /// Augments along regular paths until the flow reaches 2m or none remains;
  /// returns at once when even an unrestricted flow cannot reach 2m.
  std::size_t maximize();
  std::size_t value() const { return value_; }
  /// True iff flow(x_i y_j) = flow(x_j y_i) for all i, j.
  bool mirror_invariant() const;
  /// Edges ij with flow on x_i -> y_j.
  std::vector<Edge> saturated_edges() const;
  /// Number of augmentations performed, each followed by an invariant check.
  std::size_t augmentations() const { return augmentations_; }

 private:
  struct Arc {
    std::size_t from, to;
    int cap, flow;
    std::size_t mirror;
    bool locked;
  };
  // Residual step: arc index, forward or backward.
  struct Step {
    std::size_t arc;
    bool forward;
  };
  std::size_t x(std::size_t i) const { return 2 + i; }
  std::size_t y(std::size_t i) const { return 2 + m_ + i; }
  int residual(const Step& s) const;
  Step mirror(const Step& s) const { return {arcs_[s.arc].mirror, s.forward}; }
  void add_pair(std::size_t a_from, std::size_t a_to, std::size_t b_from, std::size_t b_to, int cap);
  bool find_regular_path(std::vector<Step>& path);
  void push(const std::vector<Step>& path);
  bool plain_max_flow_reaches(std::size_t target) const;

  std::size_t m_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_, in_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> middle_;  // (i, j) -> arc x_i -> y_j
  std::size_t value_ = 0;
  std::size_t augmentations_ = 0;
};

/// A cycle factor containing every edge of `forced`, via symmetric flow, or
/// nullopt. Throws InvariantViolation if forced is not a subset of E(g).
std::optional<CycleFactor> cycle_factor_forced(const SimpleGraph& g, std::span<const Edge> forced);

/// Exhaustive search over 2-regular spanning subgraphs; n <= 12.
std::optional<CycleFactor> brute_cycle_factor(const SimpleGraph& g, std::span<const Edge> forced);
/// Exhaustive Hamiltonian-cycle search; n <= 12.
bool brute_hamiltonian(const SimpleGraph& g);

/// Every vertex is touched by the edge set and the edges connect them all.
bool spans_connected(std::size_t vertices, std::span<const Edge> edges);

class QuasiHamiltonian {
 public:
  explicit QuasiHamiltonian(const SimpleGraph& g, std::size_t call_budget = 50'000'000);
  /// QH_k(G, R), sorted.
  std::vector<Edge> qh_set(std::span<const Edge> r, int k);
  bool is_k_quasi_hamiltonian(int k);
  std::size_t flow_calls() const { return flow_calls_; }

 private:
  SimpleGraph g_;
  std::size_t budget_;
  std::size_t flow_calls_ = 0;
  std::map<std::pair<int, std::vector<Edge>>, std::vector<Edge>> memo_;
};

std::vector<Edge> qh_set(const SimpleGraph& g, std::span<const Edge> r, int k);
bool is_k_quasi_hamiltonian(const SimpleGraph& g, int k);
/// (n-2)-quasi-hamiltonicity; requires n >= 3.
bool hamiltonian_via_qh(const SimpleGraph& g);

/// S with the left translates sT tiling the group exactly, or nullopt.
std::optional<std::vector<Permutation>> coset_partition(std::span<const Permutation> group,
                                                        std::span<const Permutation> subset);

}  // namespace conjgen
