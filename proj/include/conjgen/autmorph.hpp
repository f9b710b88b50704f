#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conjgen/bigint.hpp"
#include "conjgen/cayley.hpp"
#include "conjgen/ctree.hpp"
#include "conjgen/graph.hpp"

namespace conjgen {

/// Vertex permutation of a graph, 0-based images. Construction checks that
/// adjacency is preserved.
class GraphAutomorphism {
 public:
  /// Throws InvariantViolation if `images` is not an automorphism of g.
  GraphAutomorphism(const SimpleGraph& g, std::vector<std::size_t> images);
  std::size_t operator()(std::size_t v) const { return images_[v]; }
  const std::vector<std::size_t>& images() const { return images_; }
  std::size_t size() const { return images_.size(); }

 private:
  std::vector<std::size_t> images_;
};

bool preserves_edges(const SimpleGraph& g, const std::vector<std::size_t>& images);

struct AutGroup {
  BigInt order;
  std::vector<GraphAutomorphism> generators;
  std::vector<std::size_t> base;         // individualized vertices along the first path
  std::vector<std::size_t> orbit_sizes;  // one per base vertex
};

inline constexpr std::size_t default_aut_budget = 2000;

/// Exact |Aut(g)| by colour refinement and individualization with orbit
/// pruning. Throws BudgetExceeded above `budget` vertices.
AutGroup graph_aut_order(const SimpleGraph& g, std::size_t budget = default_aut_budget);

/// Conjugation relabelling sigma^-1 t sigma: the cycle (x y ...) becomes
/// (sigma(x) sigma(y) ...).
Permutation relabel(const Permutation& t, const Permutation& sigma);

struct AutSnT {
  std::vector<Permutation> elements;  // all sigma with relabel(T, sigma) = T
  bool outer_caveat;                  // n = 6: outer automorphisms not searched
};

/// Inner automorphisms of S_n fixing T setwise. Exhaustive for n <= 8,
/// backtracking over point images otherwise.
AutSnT aut_snt(const GeneratorSet& t);

/// x -> x * g for the vertex with index g.
GraphAutomorphism right_representation(const CayleyGraph& g, std::size_t by);
/// phi_y(x) = phi(x y) phi(y)^-1; fixes the identity vertex. Throws
/// InternalError if the result is not an automorphism.
GraphAutomorphism translate_automorphism(const CayleyGraph& g, const GraphAutomorphism& phi,
                                         std::size_t y);

struct AutReport {
  BigInt graph_aut_order;
  BigInt aut_snt_order;
  BigInt n_factorial;  // |<T>|, which is n! when T generates S_n
  bool theorem_holds;  // graph_aut_order == n_factorial * aut_snt_order
  BigInt cyc_aut_order;
  NormalReport normal;
  bool outer_caveat;
};

AutReport verify_theorem5(const GeneratorSet& t, std::size_t budget = default_aut_budget);

}  // namespace conjgen
