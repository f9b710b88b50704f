#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conjgen/bigint.hpp"
#include "conjgen/perm.hpp"

namespace conjgen {

/// Partition of {1..n} into orbits, blocks sorted by smallest point.
struct OrbitPartition {
  std::vector<std::vector<Point>> blocks;

  bool single_block() const { return blocks.size() == 1; }
  /// Index of the block containing p.
  std::size_t block_of(Point p) const;
};

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// Each level stores a Schreier vector style transversal: for every orbit
/// point a coset representative mapping the base point onto it.
class StabilizerChain {
 public:
  struct Level {
    Point base_point;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;            // discovery order, base point first
    std::vector<int> rep_index;          // by point-1; -1 outside the orbit
    std::vector<Permutation> reps;       // reps[rep_index[p-1]] maps base_point to p
    std::vector<Permutation> inv_reps;
  };

  /// Builds the chain of <gens>. An empty list yields the trivial group.
  static StabilizerChain build(std::span<const Permutation> gens, std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::vector<Point> base() const;
  const std::vector<Level>& levels() const { return levels_; }

  BigInt order() const;
  /// Exact membership by sifting.
  bool contains(const Permutation& sigma) const;

 private:
  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  struct SiftResult {
    Permutation residue;
    std::size_t level;
  };
  SiftResult sift(Permutation g, std::size_t from) const;
  void add_generator(std::size_t level, const Permutation& g);
  void new_level(const Permutation& h);
  std::vector<Point> extend_orbit(Level& lvl);

  std::size_t degree_;
  std::vector<Level> levels_;
};

StabilizerChain build_chain(std::span<const Permutation> gens, std::size_t degree);
BigInt group_order(const StabilizerChain& chain);
bool contains(const StabilizerChain& chain, const Permutation& sigma);

enum class GroupKind { symmetric, alternating, other };
const char* to_string(GroupKind k);

/// Classifies <gens> as S_n, A_n (transitive, index 2) or neither.
GroupKind generates(std::span<const Permutation> gens, std::size_t degree);

OrbitPartition orbits(std::span<const Permutation> gens, std::size_t degree);

/// Breadth-first closure from the identity. Each dequeued element x is
/// expanded as compose(g_i, x) for i in generator order, so elements appear by
/// word length and then lexicographically by generator index.
/// Throws CapExceeded once more than `cap` elements would be produced.
std::vector<Permutation> enumerate_elements(std::span<const Permutation> gens,
                                            std::size_t degree, std::size_t cap);

}  // namespace conjgen
