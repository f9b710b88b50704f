#include "conjgen/quasiham.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "conjgen/error.hpp"

namespace conjgen {

bool is_cycle_factor(const SimpleGraph& g, const CycleFactor& f) {
  std::vector<int> deg(g.vertex_count(), 0);
  std::set<Edge> seen;
  for (const Edge& e : f.edges) {
    if (!g.has_edge(e.u, e.v) || !seen.insert(e).second) return false;
    ++deg[e.u];
    ++deg[e.v];
  }
  return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
}

FlowNetwork::FlowNetwork(const SimpleGraph& g) : m_(g.vertex_count()), out_(2 + 2 * m_), in_(2 + 2 * m_) {
  for (std::size_t i = 0; i < m_; ++i) add_pair(0, x(i), y(i), 1, 2);
  for (const Edge& e : g.edges()) {
    middle_[{e.u, e.v}] = arcs_.size();
    middle_[{e.v, e.u}] = arcs_.size() + 1;
    add_pair(x(e.u), y(e.v), x(e.v), y(e.u), 1);
  }
}

// Arcs a and b are mirrors: b runs from mirror(a.to) to mirror(a.from).
void FlowNetwork::add_pair(std::size_t a_from, std::size_t a_to, std::size_t b_from, std::size_t b_to,
                           int cap) {
  const std::size_t a = arcs_.size();
  arcs_.push_back({a_from, a_to, cap, 0, a + 1, false});
  arcs_.push_back({b_from, b_to, cap, 0, a, false});
  out_[a_from].push_back(a);
  in_[a_to].push_back(a);
  out_[b_from].push_back(a + 1);
  in_[b_to].push_back(a + 1);
}

int FlowNetwork::residual(const Step& s) const {
  const Arc& a = arcs_[s.arc];
  if (s.forward) return a.cap - a.flow;
  return a.locked ? 0 : a.flow;
}

bool FlowNetwork::force_edge(std::size_t i, std::size_t j) {
  const auto it = middle_.find({i, j});
  if (it == middle_.end()) return false;
  const std::size_t a = it->second, b = arcs_[a].mirror;
  if (arcs_[a].locked) return true;
  const std::vector<Step> path{{2 * i, true}, {a, true}, {2 * j + 1, true}};
  if (residual(path[0]) < 1 || residual(path[2]) < 1) return false;
  if (residual({2 * j, true}) < 1 || residual({2 * i + 1, true}) < 1) return false;
  push(path);
  arcs_[a].locked = arcs_[b].locked = true;
  return true;
}

// Simple residual s-t path P such that its mirror r(P) is still a residual
// path once P has been pushed.
bool FlowNetwork::find_regular_path(std::vector<Step>& path) {
  const std::size_t nodes = out_.size();
  std::vector<bool> on_path(nodes, false);
  std::vector<int> delta(arcs_.size(), 0);  // flow change of P per arc

  auto regular = [&] {
    for (const Step& s : path) {
      const Arc& ma = arcs_[arcs_[s.arc].mirror];
      const int d = delta[arcs_[s.arc].mirror];
      if (s.forward ? ma.cap - (ma.flow + d) < 1 : (ma.locked || ma.flow + d < 1)) return false;
    }
    return true;
  };

  auto reaches_sink = [&](std::size_t from) {
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      if (u == 1) return true;
      auto visit = [&](const Step& s, std::size_t w) {
        if (!seen[w] && !on_path[w] && residual(s) > 0) {
          seen[w] = true;
          stack.push_back(w);
        }
      };
      for (std::size_t a : out_[u]) visit({a, true}, arcs_[a].to);
      for (std::size_t a : in_[u]) visit({a, false}, arcs_[a].from);
    }
    return false;
  };

  std::function<bool(std::size_t)> dfs = [&](std::size_t u) -> bool {
    if (u == 1) return regular();
    if (!reaches_sink(u)) return false;
    auto try_step = [&](const Step& s, std::size_t w) -> bool {
      if (on_path[w] || residual(s) <= 0) return false;
      delta[s.arc] += s.forward ? 1 : -1;
      on_path[w] = true;
      path.push_back(s);
      if (dfs(w)) return true;
      path.pop_back();
      on_path[w] = false;
      delta[s.arc] -= s.forward ? 1 : -1;
      return false;
    };
    for (std::size_t a : out_[u])
      if (try_step({a, true}, arcs_[a].to)) return true;
    for (std::size_t a : in_[u])
      if (try_step({a, false}, arcs_[a].from)) return true;
    return false;
  };
  path.clear();
  on_path[0] = true;
  return dfs(0);
}

void FlowNetwork::push(const std::vector<Step>& path) {
  for (const Step& s : path) arcs_[s.arc].flow += s.forward ? 1 : -1;
  // r(P): mirrored steps in reverse order; same net effect per mirrored arc.
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const Step ms = mirror(*it);
    arcs_[ms.arc].flow += ms.forward ? 1 : -1;
  }
  for (const Arc& a : arcs_)
    if (a.flow < 0 || a.flow > a.cap) throw InternalError("capacity violated by symmetric augmentation");
  value_ += 2;
  ++augmentations_;
  if (!mirror_invariant()) throw InternalError("mirror invariant broken after augmentation");
}

bool FlowNetwork::plain_max_flow_reaches(std::size_t target) const {
  // Ordinary augmenting-path max flow on a copy; an upper bound for the
  // symmetric flow.
  std::vector<int> flow(arcs_.size());
  for (std::size_t a = 0; a < arcs_.size(); ++a) flow[a] = arcs_[a].flow;
  std::size_t value = value_;
  const std::size_t nodes = out_.size();
  while (value < target) {
    std::vector<long long> via(nodes, -1);  // encoded step into node
    std::vector<bool> seen(nodes, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t q = 0; q < queue.size() && !seen[1]; ++q) {
      const std::size_t u = queue[q];
      for (std::size_t a : out_[u])
        if (!seen[arcs_[a].to] && arcs_[a].cap - flow[a] > 0) {
          seen[arcs_[a].to] = true;
          via[arcs_[a].to] = static_cast<long long>(2 * a);
          queue.push_back(arcs_[a].to);
        }
      for (std::size_t a : in_[u])
        if (!seen[arcs_[a].from] && !arcs_[a].locked && flow[a] > 0) {
          seen[arcs_[a].from] = true;
          via[arcs_[a].from] = static_cast<long long>(2 * a + 1);
          queue.push_back(arcs_[a].from);
        }
    }
    if (!seen[1]) return false;
    for (std::size_t v = 1; v != 0;) {
      const std::size_t a = static_cast<std::size_t>(via[v]) / 2;
      if (via[v] % 2 == 0) {
        ++flow[a];
        v = arcs_[a].from;
      } else {
        --flow[a];
        v = arcs_[a].to;
      }
    }
    ++value;
  }
  return true;
}

std::size_t FlowNetwork::maximize() {
  const std::size_t target = 2 * m_;
  if (!plain_max_flow_reaches(target)) return value_;
  std::vector<Step> path;
  while (value_ < target && find_regular_path(path)) push(path);
  return value_;
}

bool FlowNetwork::mirror_invariant() const {
  for (std::size_t a = 0; a < arcs_.size(); ++a)
    if (arcs_[a].flow != arcs_[arcs_[a].mirror].flow) return false;
  return true;
}

std::vector<Edge> FlowNetwork::saturated_edges() const {
  std::vector<Edge> out;
  for (const auto& [ij, a] : middle_)
    if (ij.first < ij.second && arcs_[a].flow == 1) out.push_back({ij.first, ij.second});
  return out;
}

namespace {

void check_forced(const SimpleGraph& g, std::span<const Edge> forced) {
  for (const Edge& e : forced)
    if (!g.has_edge(e.u, e.v))
      throw InvariantViolation("forced edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                               " is not in the graph");
}

}  // namespace

std::optional<CycleFactor> cycle_factor_forced(const SimpleGraph& g, std::span<const Edge> forced) {
  check_forced(g, forced);
  const std::size_t m = g.vertex_count();
  if (m == 0) return CycleFactor{};
  std::vector<int> deg(m, 0);
  for (const Edge& e : std::set<Edge>(forced.begin(), forced.end()))
    if (++deg[e.u] > 2 || ++deg[e.v] > 2) return std::nullopt;
  FlowNetwork net(g);
  for (const Edge& e : forced)
    if (!net.force_edge(e.u, e.v)) return std::nullopt;
  if (net.maximize() != 2 * m) return std::nullopt;
  CycleFactor f{net.saturated_edges()};
  if (!is_cycle_factor(g, f)) throw InternalError("flow of 2m did not yield a cycle factor");
  return f;
}

std::optional<CycleFactor> brute_cycle_factor(const SimpleGraph& g, std::span<const Edge> forced) {
  const std::size_t n = g.vertex_count();
  if (n > 12) throw GuardExceeded("brute cycle factor limited to 12 vertices");
  check_forced(g, forced);
  const auto edges = g.edges();
  const std::set<Edge> must(forced.begin(), forced.end());
  std::vector<int> deg(n, 0), open(n, 0);
  for (const Edge& e : edges) {
    ++open[e.u];
    ++open[e.v];
  }
  std::vector<Edge> chosen;
  std::function<bool(std::size_t)> go = [&](std::size_t k) -> bool {
    if (k == edges.size()) return std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; });
    const Edge e = edges[k];
    --open[e.u];
    --open[e.v];
    bool found = false;
    if (deg[e.u] < 2 && deg[e.v] < 2) {
      ++deg[e.u];
      ++deg[e.v];
      chosen.push_back(e);
      if (deg[e.u] + open[e.u] >= 2 && deg[e.v] + open[e.v] >= 2) found = go(k + 1);
      if (!found) {
        chosen.pop_back();
        --deg[e.u];
        --deg[e.v];
      }
    }
    if (!found && !must.contains(e) && deg[e.u] + open[e.u] >= 2 && deg[e.v] + open[e.v] >= 2)
      found = go(k + 1);
    if (!found) {
      ++open[e.u];
      ++open[e.v];
    }
    return found;
  };
  if (!go(0)) return std::nullopt;
  return CycleFactor{chosen};
}

bool brute_hamiltonian(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 12) throw GuardExceeded("brute Hamiltonian search limited to 12 vertices");
  if (n < 3) return false;
  std::vector<bool> used(n, false);
  used[0] = true;
  std::function<bool(std::size_t, std::size_t)> go = [&](std::size_t u, std::size_t depth) -> bool {
    if (depth == n) return g.has_edge(u, 0);
    for (std::size_t w : g.neighbors(u)) {
      if (used[w]) continue;
      used[w] = true;
      if (go(w, depth + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return go(0, 1);
}

bool spans_connected(std::size_t vertices, std::span<const Edge> edges) {
  if (vertices == 0) return true;
  std::vector<std::size_t> parent(vertices);
  for (std::size_t i = 0; i < vertices; ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
    return parent[a] == a ? a : parent[a] = find(parent[a]);
  };
  std::vector<bool> touched(vertices, false);
  std::size_t components = vertices;
  for (const Edge& e : edges) {
    touched[e.u] = touched[e.v] = true;
    const std::size_t a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  if (vertices == 1) return true;
  return components == 1 && std::all_of(touched.begin(), touched.end(), [](bool b) { return b; });
}

QuasiHamiltonian::QuasiHamiltonian(const SimpleGraph& g, std::size_t call_budget)
    : g_(g), budget_(call_budget) {}

std::vector<Edge> QuasiHamiltonian::qh_set(std::span<const Edge> r_in, int k) {
  if (k < 1) throw RangeError("QH level must be >= 1");
  std::vector<Edge> r(r_in.begin(), r_in.end());
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  auto key = std::make_pair(k, r);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  std::vector<Edge> result;
  if (k == 1) {
    std::set<Edge> covered;
    auto f = cycle_factor_forced(g_, r);
    ++flow_calls_;
    if (f) {
      covered.insert(f->edges.begin(), f->edges.end());
      for (const Edge& e : g_.edges()) {
        if (covered.contains(e)) continue;
        if (++flow_calls_ > budget_) throw BudgetExceeded("quasi-hamiltonian flow budget exhausted");
        std::vector<Edge> re = r;
        re.push_back(e);
        if (auto fe = cycle_factor_forced(g_, re)) covered.insert(fe->edges.begin(), fe->edges.end());
      }
    }
    result.assign(covered.begin(), covered.end());
  } else {
    // Any edge admitted at level k lies in a factor with R, so QH_1 bounds the candidates.
    for (const Edge& e : qh_set(r, 1)) {
      std::vector<Edge> re = r;
      re.push_back(e);
      const auto sub = qh_set(re, k - 1);
      if (spans_connected(g_.vertex_count(), sub)) result.push_back(e);
    }
  }
  memo_.emplace(std::move(key), result);
  return result;
}

bool QuasiHamiltonian::is_k_quasi_hamiltonian(int k) {
  return spans_connected(g_.vertex_count(), qh_set({}, k));
}

std::vector<Edge> qh_set(const SimpleGraph& g, std::span<const Edge> r, int k) {
  return QuasiHamiltonian(g).qh_set(r, k);
}

bool is_k_quasi_hamiltonian(const SimpleGraph& g, int k) { return QuasiHamiltonian(g).is_k_quasi_hamiltonian(k); }

bool hamiltonian_via_qh(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 3) throw RangeError("Hamiltonicity via quasi-hamiltonicity needs n >= 3");
  return QuasiHamiltonian(g).is_k_quasi_hamiltonian(static_cast<int>(n) - 2);
}

std::optional<std::vector<Permutation>> coset_partition(std::span<const Permutation> group,
                                                        std::span<const Permutation> subset) {
  if (subset.empty() || group.size() % subset.size() != 0) return std::nullopt;
  std::unordered_map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < group.size(); ++i) index.emplace(group[i], i);
  std::vector<Permutation> tinv;
  for (const auto& t : subset) tinv.push_back(t.inverse());
  std::vector<bool> covered(group.size(), false);
  std::vector<Permutation> chosen;
  std::function<bool(std::size_t)> go = [&](std::size_t from) -> bool {
    while (from < group.size() && covered[from]) ++from;
    if (from == group.size()) return true;
    std::set<Permutation> tried;
    for (const auto& ti : tinv) {
      Permutation s = group[from] * ti;  // s t = group[from] for the matching t
      if (!tried.insert(s).second) continue;
      std::vector<std::size_t> cells;
      bool ok = true;
      for (const auto& t : subset) {
        auto it = index.find(s * t);
        if (it == index.end() || covered[it->second] ||
            std::find(cells.begin(), cells.end(), it->second) != cells.end()) {
          ok = false;
          break;
        }
        cells.push_back(it->second);
      }
      if (!ok) continue;
      for (auto c : cells) covered[c] = true;
      chosen.push_back(s);
      if (go(from + 1)) return true;
      chosen.pop_back();
      for (auto c : cells) covered[c] = false;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace conjgen
