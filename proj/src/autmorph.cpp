#include "conjgen/autmorph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "conjgen/error.hpp"
#include "conjgen/group.hpp"

namespace conjgen {

bool preserves_edges(const SimpleGraph& g, const std::vector<std::size_t>& images) {
  const std::size_t n = g.vertex_count();
  if (images.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t v : images) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (g.degree(images[u]) != g.degree(u)) return false;
    for (std::size_t v : g.neighbors(u))
      if (u < v && !g.has_edge(images[u], images[v])) return false;
  }
  return true;
}

GraphAutomorphism::GraphAutomorphism(const SimpleGraph& g, std::vector<std::size_t> images)
    : images_(std::move(images)) {
  if (!preserves_edges(g, images_)) throw InvariantViolation("vertex map is not a graph automorphism");
}

namespace {

using Coloring = std::vector<long long>;

class Refiner {
 public:
  explicit Refiner(const SimpleGraph& g) : g_(g), nbr_(g.vertex_count()) {
    for (std::size_t u = 0; u < g.vertex_count(); ++u)
      for (std::size_t v : g.neighbors(u))
        nbr_[u].push_back({v, static_cast<long long>(count_4cycles_through(g, u, v))});
  }

  Coloring initial() const {
    return refine(Coloring(g_.vertex_count(), 0));
  }

  // Iterated signature (colour, multiset of (edge 4-cycle count, neighbour
  // colour)); colours are re-ranked by signature so the result depends only
  // on the input colouring up to isomorphism.
  Coloring refine(Coloring c) const {
    const std::size_t n = c.size();
    std::size_t cells = count_cells(c);
    for (;;) {
      std::vector<std::pair<std::vector<long long>, std::size_t>> sig(n);
      for (std::size_t u = 0; u < n; ++u) {
        std::vector<std::pair<long long, long long>> ms;
        ms.reserve(nbr_[u].size());
        for (const auto& [v, w] : nbr_[u]) ms.push_back({w, c[v]});
        std::sort(ms.begin(), ms.end());
        auto& s = sig[u].first;
        s.reserve(2 * ms.size() + 1);
        s.push_back(c[u]);
        for (const auto& [w, col] : ms) {
          s.push_back(w);
          s.push_back(col);
        }
        sig[u].second = u;
      }
      std::sort(sig.begin(), sig.end());
      Coloring next(n);
      long long rank = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && sig[i].first != sig[i - 1].first) ++rank;
        next[sig[i].second] = rank;
      }
      const std::size_t now = static_cast<std::size_t>(rank + 1);
      c = std::move(next);
      if (now == cells) return c;
      cells = now;
    }
  }

  Coloring individualize(const Coloring& c, std::size_t v) const {
    Coloring d(c.size());
    for (std::size_t u = 0; u < c.size(); ++u) d[u] = 2 * c[u] + (c[u] == c[v] && u != v ? 1 : 0);
    return refine(std::move(d));
  }

  static std::size_t count_cells(const Coloring& c) {
    return c.empty() ? 0 : static_cast<std::size_t>(*std::max_element(c.begin(), c.end()) + 1);
  }

  static bool discrete(const Coloring& c) { return count_cells(c) == c.size(); }

  // First smallest non-singleton cell, as a sorted vertex list.
  static std::vector<std::size_t> target_cell(const Coloring& c) {
    std::vector<std::size_t> size(count_cells(c), 0);
    for (long long x : c) ++size[x];
    long long best = -1;
    for (std::size_t k = 0; k < size.size(); ++k)
      if (size[k] > 1 && (best < 0 || size[k] < size[best])) best = static_cast<long long>(k);
    std::vector<std::size_t> cell;
    for (std::size_t u = 0; u < c.size(); ++u)
      if (c[u] == best) cell.push_back(u);
    return cell;
  }

  static std::vector<std::size_t> shape(const Coloring& c) {
    std::vector<std::size_t> size(count_cells(c), 0);
    for (long long x : c) ++size[x];
    return size;
  }

 private:
  const SimpleGraph& g_;
  std::vector<std::vector<std::pair<std::size_t, long long>>> nbr_;
};

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

AutGroup graph_aut_order(const SimpleGraph& g, std::size_t budget) {
  const std::size_t n = g.vertex_count();
  if (n > budget)
    throw BudgetExceeded("graph has " + std::to_string(n) + " vertices, budget " + std::to_string(budget));
  AutGroup out{1, {}, {}, {}};
  if (n == 0) return out;

  const Refiner ref(g);
  std::vector<Coloring> path{ref.initial()};
  std::vector<std::vector<std::size_t>> shapes{Refiner::shape(path.back())};
  while (!Refiner::discrete(path.back())) {
    const auto cell = Refiner::target_cell(path.back());
    out.base.push_back(cell.front());
    path.push_back(ref.individualize(path.back(), cell.front()));
    shapes.push_back(Refiner::shape(path.back()));
  }
  const std::size_t depth = out.base.size();
  std::vector<std::size_t> first_leaf(n);
  for (std::size_t u = 0; u < n; ++u) first_leaf[path.back()[u]] = u;

  // Searches below coloring c at the given level for a leaf equivalent to the
  // first leaf; returns the automorphism if found.
  std::function<std::optional<std::vector<std::size_t>>(const Coloring&, std::size_t)> search =
      [&](const Coloring& c, std::size_t level) -> std::optional<std::vector<std::size_t>> {
    if (Refiner::shape(c) != shapes[level]) return std::nullopt;
    if (level == depth) {
      std::vector<std::size_t> img(n), leaf(n);
      for (std::size_t u = 0; u < n; ++u) leaf[c[u]] = u;
      for (std::size_t k = 0; k < n; ++k) img[first_leaf[k]] = leaf[k];
      if (preserves_edges(g, img)) return img;
      return std::nullopt;
    }
    for (std::size_t u : Refiner::target_cell(c))
      if (auto r = search(ref.individualize(c, u), level + 1)) return r;
    return std::nullopt;
  };

  std::vector<std::vector<std::size_t>> gens;
  out.orbit_sizes.assign(depth, 1);
  for (std::size_t level = depth; level-- > 0;) {
    const auto cell = Refiner::target_cell(path[level]);
    const std::size_t v = out.base[level];
    UnionFind uf(n);
    for (const auto& gen : gens)
      for (std::size_t u = 0; u < n; ++u) uf.unite(u, gen[u]);
    for (std::size_t w : cell) {
      if (w == v || uf.find(w) == uf.find(v)) continue;
      if (auto found = search(ref.individualize(path[level], w), level + 1)) {
        for (std::size_t u = 0; u < n; ++u) uf.unite(u, (*found)[u]);
        gens.push_back(std::move(*found));
      }
    }
    std::size_t orbit = 0;
    for (std::size_t w : cell) orbit += uf.find(w) == uf.find(v);
    out.orbit_sizes[level] = orbit;
    out.order *= orbit;
  }
  for (auto& gen : gens) out.generators.emplace_back(g, std::move(gen));
  return out;
}

Permutation relabel(const Permutation& t, const Permutation& sigma) { return sigma.inverse() * t * sigma; }

namespace {

bool stabilizes(const std::set<Permutation>& tset, const GeneratorSet& t, const Permutation& sigma) {
  for (const auto& x : t.elements())
    if (!tset.contains(relabel(x, sigma))) return false;
  return true;
}

}  // namespace

AutSnT aut_snt(const GeneratorSet& t) {
  const std::size_t n = t.degree();
  AutSnT out{{}, n == 6};
  const std::set<Permutation> tset(t.elements().begin(), t.elements().end());
  if (n <= 8) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), 1u);
    do {
      auto sigma = Permutation::from_images(img);
      if (stabilizes(tset, t, sigma)) out.elements.push_back(std::move(sigma));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

  // Point invariant: sorted list of (cycle length, generator count) pairs.
  std::vector<std::vector<int>> inv(n + 1);
  for (const auto& x : t.elements())
    for (const auto& c : x.cycles())
      for (Point p : c) inv[p].push_back(static_cast<int>(c.size()));
  for (auto& v : inv) std::sort(v.begin(), v.end());
  // pairs[a][b]: some generator maps a to b
  std::vector<std::vector<bool>> pair(n + 1, std::vector<bool>(n + 1, false));
  for (const auto& x : t.elements())
    for (Point p = 1; p <= n; ++p) pair[p][x(p)] = true;

  std::vector<Point> img(n + 1, 0);
  std::vector<bool> used(n + 1, false);
  std::function<void(Point)> dfs = [&](Point p) {
    if (p > n) {
      auto sigma = Permutation::from_images(std::span<const Point>(img.data() + 1, n));
      if (stabilizes(tset, t, sigma)) out.elements.push_back(std::move(sigma));
      return;
    }
    for (Point q = 1; q <= n; ++q) {
      if (used[q] || inv[q] != inv[p]) continue;
      bool ok = true;
      for (Point r = 1; r < p && ok; ++r)
        ok = pair[p][r] == pair[q][img[r]] && pair[r][p] == pair[img[r]][q];
      if (!ok) continue;
      used[q] = true;
      img[p] = q;
      dfs(p + 1);
      used[q] = false;
    }
  };
  dfs(1);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

GraphAutomorphism right_representation(const CayleyGraph& g, std::size_t by) {
  const Permutation& h = g.vertex(by);
  std::vector<std::size_t> img(g.vertex_count());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = *g.index_of(g.vertex(x) * h);
  if (!preserves_edges(g.graph(), img))
    throw InternalError("right multiplication is not an automorphism; edge convention broken");
  return GraphAutomorphism(g.graph(), std::move(img));
}

GraphAutomorphism translate_automorphism(const CayleyGraph& g, const GraphAutomorphism& phi,
                                         std::size_t y) {
  const Permutation& py = g.vertex(y);
  const Permutation phi_y_inv = g.vertex(phi(y)).inverse();
  std::vector<std::size_t> img(g.vertex_count());
  for (std::size_t x = 0; x < img.size(); ++x) {
    const std::size_t xy = *g.index_of(g.vertex(x) * py);
    img[x] = *g.index_of(g.vertex(phi(xy)) * phi_y_inv);
  }
  if (!preserves_edges(g.graph(), img) || img[0] != 0)
    throw InternalError("translated map is not an automorphism fixing the identity");
  return GraphAutomorphism(g.graph(), std::move(img));
}

AutReport verify_theorem5(const GeneratorSet& t, std::size_t budget) {
  const BigInt size = group_order(build_chain(t.elements(), t.degree()));
  if (size > budget)
    throw BudgetExceeded("Cayley graph has " + size.str() + " vertices, budget " + std::to_string(budget));
  const CayleyGraph cg = build_cayley(t, budget);
  AutReport r;
  r.graph_aut_order = graph_aut_order(cg.graph(), budget).order;
  const AutSnT snt = aut_snt(t);
  r.aut_snt_order = snt.elements.size();
  r.n_factorial = cg.vertex_count();
  r.theorem_holds = r.graph_aut_order == r.n_factorial * r.aut_snt_order;
  const CycleGraph cyc = cyc_graph(t);
  SimpleGraph cgraph(t.degree());
  for (const auto& e : cyc.edges) cgraph.add_edge(e.a - 1, e.b - 1);
  r.cyc_aut_order = graph_aut_order(cgraph, std::max<std::size_t>(budget, t.degree())).order;
  r.normal = is_normal(t);
  r.outer_caveat = snt.outer_caveat;
  return r;
}

}  // namespace conjgen
