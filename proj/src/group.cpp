#include "conjgen/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "conjgen/error.hpp"

namespace conjgen {

std::size_t OrbitPartition::block_of(Point p) const {
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (std::find(blocks[i].begin(), blocks[i].end(), p) != blocks[i].end()) return i;
  throw InvariantViolation("point " + std::to_string(p) + " not in partition");
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& l : levels_) b.push_back(l.base_point);
  return b;
}

BigInt StabilizerChain::order() const {
  BigInt r = 1;
  for (const auto& l : levels_) r *= l.orbit.size();
  return r;
}

StabilizerChain::SiftResult StabilizerChain::sift(Permutation g, std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    const Level& l = levels_[j];
    const Point p = g(l.base_point);
    const int idx = l.rep_index[p - 1];
    if (idx < 0) return {std::move(g), j};
    g = g * l.inv_reps[idx];
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& sigma) const {
  if (sigma.degree() != degree_)
    throw DegreeMismatch("membership test: degree " + std::to_string(sigma.degree()) +
                         " against chain of degree " + std::to_string(degree_));
  return sift(sigma, 0).residue.is_identity();
}

void StabilizerChain::new_level(const Permutation& h) {
  Point b = 0;
  for (Point p = 1; p <= degree_; ++p)
    if (h(p) != p) {
      b = p;
      break;
    }
  Level l{b, {}, {b}, std::vector<int>(degree_, -1), {Permutation(degree_)}, {Permutation(degree_)}};
  l.rep_index[b - 1] = 0;
  levels_.push_back(std::move(l));
}

std::vector<Point> StabilizerChain::extend_orbit(Level& l) {
  std::vector<Point> added;
  for (std::size_t idx = 0; idx < l.orbit.size(); ++idx) {
    const Point p = l.orbit[idx];
    for (const auto& s : l.generators) {
      const Point q = s(p);
      if (l.rep_index[q - 1] >= 0) continue;
      Permutation rep = l.reps[l.rep_index[p - 1]] * s;
      l.rep_index[q - 1] = static_cast<int>(l.reps.size());
      l.inv_reps.push_back(rep.inverse());
      l.reps.push_back(std::move(rep));
      l.orbit.push_back(q);
      added.push_back(q);
    }
  }
  return added;
}

// Adds h (which fixes all earlier base points and does not sift through the
// chain from this level) and closes the chain below under the new Schreier
// generators. Existing coset representatives are never replaced, so a
// Schreier generator that sifted once keeps sifting as the chain grows.
void StabilizerChain::add_generator(std::size_t i, const Permutation& h) {
  if (i == levels_.size()) new_level(h);
  const std::size_t old_size = levels_[i].orbit.size();
  levels_[i].generators.push_back(h);
  extend_orbit(levels_[i]);

  const std::size_t orbit_size = levels_[i].orbit.size();
  for (std::size_t idx = 0; idx < orbit_size; ++idx) {
    const std::size_t gen_from = idx < old_size ? levels_[i].generators.size() - 1 : 0;
    const std::size_t gen_count = levels_[i].generators.size();
    for (std::size_t gi = gen_from; gi < gen_count; ++gi) {
      const Level& l = levels_[i];
      const Point p = l.orbit[idx];
      const Permutation& s = l.generators[gi];
      const Point q = s(p);
      Permutation sg = l.reps[l.rep_index[p - 1]] * s * l.inv_reps[l.rep_index[q - 1]];
      auto r = sift(std::move(sg), i + 1);
      if (!r.residue.is_identity()) add_generator(i + 1, r.residue);
    }
  }
}

StabilizerChain StabilizerChain::build(std::span<const Permutation> gens, std::size_t degree) {
  StabilizerChain chain(degree);
  for (const auto& g : gens) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator " + g.to_string() + " has degree " +
                           std::to_string(g.degree()) + ", expected " + std::to_string(degree));
    auto r = chain.sift(g, 0);
    if (!r.residue.is_identity()) chain.add_generator(0, r.residue);
  }
  return chain;
}

StabilizerChain build_chain(std::span<const Permutation> gens, std::size_t degree) {
  return StabilizerChain::build(gens, degree);
}

BigInt group_order(const StabilizerChain& chain) { return chain.order(); }

bool contains(const StabilizerChain& chain, const Permutation& sigma) { return chain.contains(sigma); }

const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::symmetric:
      return "symmetric";
    case GroupKind::alternating:
      return "alternating";
    case GroupKind::other:
      return "other";
  }
  return "other";
}

GroupKind generates(std::span<const Permutation> gens, std::size_t degree) {
  const BigInt order = StabilizerChain::build(gens, degree).order();
  const BigInt full = factorial(static_cast<unsigned>(degree));
  if (order == full) return GroupKind::symmetric;
  if (degree >= 2 && order * 2 == full && orbits(gens, degree).single_block())
    return GroupKind::alternating;
  return GroupKind::other;
}

OrbitPartition orbits(std::span<const Permutation> gens, std::size_t degree) {
  std::vector<int> block(degree, -1);
  OrbitPartition part;
  for (Point start = 1; start <= degree; ++start) {
    if (block[start - 1] >= 0) continue;
    const int id = static_cast<int>(part.blocks.size());
    std::vector<Point> members{start};
    block[start - 1] = id;
    for (std::size_t k = 0; k < members.size(); ++k) {
      for (const auto& g : gens) {
        if (g.degree() != degree) throw DegreeMismatch("orbit computation: generator degree mismatch");
        const Point q = g(members[k]);
        if (block[q - 1] < 0) {
          block[q - 1] = id;
          members.push_back(q);
        }
      }
    }
    std::sort(members.begin(), members.end());
    part.blocks.push_back(std::move(members));
  }
  return part;
}

std::vector<Permutation> enumerate_elements(std::span<const Permutation> gens,
                                            std::size_t degree, std::size_t cap) {
  if (cap < 1) throw CapExceeded("cap must be >= 1");
  for (const auto& g : gens)
    if (g.degree() != degree) throw DegreeMismatch("enumerate: generator degree mismatch");
  std::vector<Permutation> out{Permutation(degree)};
  std::unordered_set<Permutation> seen{out.front()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& g : gens) {
      Permutation y = g * out[k];
      if (seen.contains(y)) continue;
      if (out.size() == cap)
        throw CapExceeded("group has more than " + std::to_string(cap) + " elements");
      seen.insert(y);
      out.push_back(std::move(y));
    }
  }
  return out;
}

}  // namespace conjgen
