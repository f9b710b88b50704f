#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "conjgen/ctree.hpp"
#include "conjgen/graph.hpp"
#include "conjgen/perm.hpp"

namespace conjgen {

enum class Direction { forward, inverse };

/// Edge label: the neighbour is t_i * x (forward) or t_i^-1 * x (inverse).
struct ArcLabel {
  std::size_t generator;
  Direction direction;
  friend bool operator==(const ArcLabel&, const ArcLabel&) = default;
};

/// Cay(<T>, T) with the left-quotient edge rule: x ~ y iff y = compose(t, x)
/// for some t in T or T^-1. Right multiplication x -> compose(x, g) is then a
/// graph automorphism.
class CayleyGraph {
 public:
  /// Closure of <T> from the identity in enumerate_elements order; vertex 0 is
  /// the identity. Throws CapExceeded above `cap` vertices.
  static CayleyGraph build(std::span<const Permutation> generators, std::size_t degree,
                           std::size_t cap);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const Permutation& vertex(std::size_t i) const { return vertices_[i]; }
  const std::vector<Permutation>& vertices() const { return vertices_; }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  const SimpleGraph& graph() const { return graph_; }
  /// Labels of the arc u -> v as seen from u; empty when not adjacent.
  std::vector<ArcLabel> labels(std::size_t u, std::size_t v) const;
  /// Index of t_i * x or t_i^-1 * x.
  std::size_t step(std::size_t x, std::size_t generator, Direction dir) const;

  /// Edge list with labels g<i> / g<i>^-1 (1-based i) seen from the smaller index.
  LabeledGraph labeled() const;

 private:
  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Permutation> vertices_;
  std::unordered_map<Permutation, std::size_t> index_;
  std::vector<std::vector<std::size_t>> fwd_, inv_;  // per generator, per vertex
  SimpleGraph graph_;
};

CayleyGraph build_cayley(const GeneratorSet& t, std::size_t cap);

/// Cyc(T): every cycle (x_1 ... x_k), written from a chosen start, adds the
/// path edges x_1x_2, ..., x_{k-1}x_k on points 1..n.
struct CycleGraph {
  struct PointEdge {
    Point a;
    Point b;
    std::size_t owner;
  };
  std::size_t points;
  std::vector<PointEdge> edges;
  std::vector<std::vector<Cycle>> writings;  // per generator, the cycles as written
};

/// rotations[i] rotates every cycle of generator i that many places from its
/// smallest point; missing entries mean 0.
CycleGraph cyc_graph(const GeneratorSet& t, std::span<const std::size_t> rotations = {});

struct NormalReport {
  bool normal;
  std::vector<std::string> reasons;  // why not, empty when normal
};

/// Number of other generators sharing a support point with generator i.
std::vector<std::size_t> generator_degrees(const GeneratorSet& t);
NormalReport is_normal(const GeneratorSet& t, std::span<const std::size_t> rotations = {});

/// Number of 4-cycles of the graph containing the edge uv.
std::size_t count_4cycles_through(const SimpleGraph& g, std::size_t u, std::size_t v);
/// True iff the 4-cycle counts through xy and yz agree.
bool same_element_criterion(const SimpleGraph& g, std::size_t x, std::size_t y, std::size_t z);

/// Vertices w != mid adjacent to both a and b: each closes a 4-cycle a-mid-b-w.
std::vector<std::size_t> four_cycles_through_path(const SimpleGraph& g, std::size_t a, std::size_t mid,
                                                  std::size_t b);
/// (e, t1, t1t2, t2) as vertex indices when t1 and t2 commute and that cycle
/// is the only 4-cycle through t2 -> e -> t1; nullopt otherwise.
std::optional<std::vector<std::size_t>> commuting_4cycle(const CayleyGraph& g, std::size_t i1,
                                                         std::size_t i2);

/// Vertices visited by walking a word from the identity, p_j = compose(l_j, p_{j-1}).
struct WordWalk {
  std::vector<Permutation> vertices;  // p_0 = e, ..., p_len
  bool closes;                        // p_len = e
  bool distinct;                      // p_0..p_{len-1} pairwise distinct
};
WordWalk walk_word(std::span<const Permutation> word);
/// Walks (t1 t2 t1^-1 t2^-1)^3, or (t1 t2)^3 for two transpositions.
/// Throws InvariantViolation when t1 and t2 commute.
WordWalk commutator_cycle(const Permutation& t1, const Permutation& t2);

}  // namespace conjgen
