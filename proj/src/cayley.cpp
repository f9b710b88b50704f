#include "conjgen/cayley.hpp"

#include <algorithm>

#include "conjgen/error.hpp"
#include "conjgen/group.hpp"

namespace conjgen {

CayleyGraph CayleyGraph::build(std::span<const Permutation> generators, std::size_t degree,
                               std::size_t cap) {
  if (generators.empty()) throw InvariantViolation("Cayley graph needs a nonempty generating set");
  CayleyGraph g;
  g.degree_ = degree;
  g.generators_.assign(generators.begin(), generators.end());
  g.vertices_ = enumerate_elements(generators, degree, cap);
  const std::size_t n = g.vertices_.size();
  g.index_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.index_.emplace(g.vertices_[i], i);
  g.graph_ = SimpleGraph(n);
  for (const auto& t : g.generators_) {
    const Permutation ti = t.inverse();
    std::vector<std::size_t> f(n), b(n);
    for (std::size_t x = 0; x < n; ++x) {
      f[x] = g.index_.at(t * g.vertices_[x]);
      b[x] = g.index_.at(ti * g.vertices_[x]);
      if (f[x] == x) throw InvariantViolation("identity in generating set");
      g.graph_.add_edge(x, f[x]);
    }
    g.fwd_.push_back(std::move(f));
    g.inv_.push_back(std::move(b));
  }
  return g;
}

std::optional<std::size_t> CayleyGraph::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CayleyGraph::step(std::size_t x, std::size_t generator, Direction dir) const {
  return dir == Direction::forward ? fwd_[generator][x] : inv_[generator][x];
}

std::vector<ArcLabel> CayleyGraph::labels(std::size_t u, std::size_t v) const {
  std::vector<ArcLabel> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (fwd_[i][u] == v) out.push_back({i, Direction::forward});
    if (inv_[i][u] == v) out.push_back({i, Direction::inverse});
  }
  return out;
}

LabeledGraph CayleyGraph::labeled() const {
  LabeledGraph lg{graph_, {}};
  for (const Edge& e : graph_.edges()) {
    std::vector<std::string> ls;
    for (const auto& l : labels(e.u, e.v))
      ls.push_back("g" + std::to_string(l.generator + 1) + (l.direction == Direction::inverse ? "^-1" : ""));
    lg.labels.emplace(e, std::move(ls));
  }
  return lg;
}

CayleyGraph build_cayley(const GeneratorSet& t, std::size_t cap) {
  return CayleyGraph::build(t.elements(), t.degree(), cap);
}

CycleGraph cyc_graph(const GeneratorSet& t, std::span<const std::size_t> rotations) {
  CycleGraph cg{t.degree(), {}, {}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t rot = i < rotations.size() ? rotations[i] : 0;
    std::vector<Cycle> written;
    for (auto c : t.elements()[i].cycles()) {
      std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(rot % c.size()), c.end());
      for (std::size_t j = 0; j + 1 < c.size(); ++j) cg.edges.push_back({c[j], c[j + 1], i});
      written.push_back(std::move(c));
    }
    cg.writings.push_back(std::move(written));
  }
  return cg;
}

std::vector<std::size_t> generator_degrees(const GeneratorSet& t) {
  std::vector<std::vector<Point>> supports;
  for (const auto& e : t.elements()) supports.push_back(analyze(e).support);
  std::vector<std::size_t> deg(t.size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      std::vector<Point> common;
      std::set_intersection(supports[i].begin(), supports[i].end(), supports[j].begin(),
                            supports[j].end(), std::back_inserter(common));
      if (!common.empty()) {
        ++deg[i];
        ++deg[j];
      }
    }
  return deg;
}

NormalReport is_normal(const GeneratorSet& t, std::span<const std::size_t> rotations) {
  NormalReport r{true, {}};
  auto fail = [&](std::string why) {
    r.normal = false;
    r.reasons.push_back(std::move(why));
  };
  if (t.size() <= 2) fail("fewer than three elements");
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t.elements()[i].cycles().size() != 1) fail("element " + std::to_string(i + 1) + " is not a single cycle");
  if (!is_split(t)) {
    fail("not split");
    return r;
  }
  if (generates(t.elements(), t.degree()) != GroupKind::symmetric)
    fail("does not generate S_" + std::to_string(t.degree()));

  const CycleGraph cg = cyc_graph(t, rotations);
  SimpleGraph g(t.degree());
  bool parallel = false;
  for (const auto& e : cg.edges) parallel |= !g.add_edge(e.a - 1, e.b - 1);
  if (parallel || g.edge_count() + 1 != g.vertex_count() || !is_connected(g)) fail("Cyc(T) is not a tree");

  const auto deg = generator_degrees(t);
  std::vector<std::vector<Point>> supports;
  for (const auto& e : t.elements()) supports.push_back(analyze(e).support);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::size_t leaves = 0;
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (i == j || deg[j] != 1) continue;
      std::vector<Point> common;
      std::set_intersection(supports[i].begin(), supports[i].end(), supports[j].begin(),
                            supports[j].end(), std::back_inserter(common));
      leaves += !common.empty();
    }
    if (leaves > 1) fail("element " + std::to_string(i + 1) + " is adjacent to " + std::to_string(leaves) + " leaves");
  }
  return r;
}

std::size_t count_4cycles_through(const SimpleGraph& g, std::size_t u, std::size_t v) {
  if (!g.has_edge(u, v)) throw InvariantViolation("no edge " + std::to_string(u) + "-" + std::to_string(v));
  std::size_t count = 0;
  const auto& nu = g.neighbors(u);
  for (std::size_t w : g.neighbors(v)) {
    if (w == u) continue;
    const auto& nw = g.neighbors(w);
    // x in N(u) and N(w), x != v
    std::size_t i = 0, j = 0;
    while (i < nu.size() && j < nw.size()) {
      if (nu[i] < nw[j]) {
        ++i;
      } else if (nw[j] < nu[i]) {
        ++j;
      } else {
        count += nu[i] != v;
        ++i;
        ++j;
      }
    }
  }
  return count;
}

bool same_element_criterion(const SimpleGraph& g, std::size_t x, std::size_t y, std::size_t z) {
  return count_4cycles_through(g, x, y) == count_4cycles_through(g, y, z);
}

std::vector<std::size_t> four_cycles_through_path(const SimpleGraph& g, std::size_t a, std::size_t mid,
                                                  std::size_t b) {
  std::vector<std::size_t> out;
  if (a == b || !g.has_edge(a, mid) || !g.has_edge(mid, b)) return out;
  for (std::size_t w : g.neighbors(a))
    if (w != mid && w != b && g.has_edge(w, b)) out.push_back(w);
  return out;
}

std::optional<std::vector<std::size_t>> commuting_4cycle(const CayleyGraph& g, std::size_t i1,
                                                         std::size_t i2) {
  if (i1 == i2) return std::nullopt;
  const Permutation& t1 = g.generators()[i1];
  const Permutation& t2 = g.generators()[i2];
  if (t1 * t2 != t2 * t1) return std::nullopt;
  const std::size_t e = 0;
  const std::size_t a = g.step(e, i1, Direction::forward);
  const std::size_t b = g.step(e, i2, Direction::forward);
  const auto w = g.index_of(t1 * t2);
  const auto found = four_cycles_through_path(g.graph(), b, e, a);
  if (!w || found.size() != 1 || found.front() != *w) return std::nullopt;
  return std::vector<std::size_t>{e, a, *w, b};
}

WordWalk walk_word(std::span<const Permutation> word) {
  if (word.empty()) throw InvariantViolation("empty word");
  WordWalk w{{Permutation(word.front().degree())}, false, true};
  for (const auto& l : word) w.vertices.push_back(l * w.vertices.back());
  w.closes = w.vertices.back().is_identity();
  std::vector<Permutation> inner(w.vertices.begin(), w.vertices.end() - 1);
  std::sort(inner.begin(), inner.end());
  w.distinct = std::adjacent_find(inner.begin(), inner.end()) == inner.end();
  return w;
}

WordWalk commutator_cycle(const Permutation& t1, const Permutation& t2) {
  if (t1 * t2 == t2 * t1) throw InvariantViolation("generators commute; no commutator cycle");
  std::vector<Permutation> word;
  const bool transpositions = analyze(t1).support.size() == 2 && analyze(t2).support.size() == 2;
  for (int r = 0; r < 3; ++r) {
    word.push_back(t1);
    word.push_back(t2);
    if (!transpositions) {
      word.push_back(t1.inverse());
      word.push_back(t2.inverse());
    }
  }
  return walk_word(word);
}

}  // namespace conjgen
