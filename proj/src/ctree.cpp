#include "conjgen/ctree.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "conjgen/error.hpp"
#include "conjgen/group.hpp"
#include "conjgen/numth.hpp"

namespace conjgen {

GeneratorSet::GeneratorSet(std::size_t degree, std::vector<Permutation> elements, CycleType type)
    : degree_(degree), elements_(std::move(elements)), type_(std::move(type)) {
  std::unordered_set<Permutation> seen;
  for (const auto& e : elements_) {
    if (e.degree() != degree_)
      throw DegreeMismatch("element " + e.to_string() + " has degree " + std::to_string(e.degree()) +
                           ", set has degree " + std::to_string(degree_));
    if (!in_extended_class(e, type_))
      throw InvariantViolation("element " + e.to_string() + " is not of type " + type_.to_string());
    if (!seen.insert(e).second) throw InvariantViolation("duplicate element " + e.to_string());
  }
}

GeneratorSet GeneratorSet::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  std::optional<std::size_t> degree;
  std::optional<CycleType> type;
  std::vector<Permutation> elems;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (!degree) {
      std::istringstream hs(line);
      std::string tok;
      while (hs >> tok) {
        if (tok.rfind("n=", 0) == 0) {
          try {
            std::size_t pos = 0;
            const long long v = std::stoll(tok.substr(2), &pos);
            if (pos != tok.size() - 2 || v < 1) throw std::invalid_argument("n");
            degree = static_cast<std::size_t>(v);
          } catch (const std::exception&) {
            throw ParseError("bad degree '" + tok + "'", lineno);
          }
        } else if (tok.rfind("type=", 0) == 0) {
          try {
            type = CycleType::parse(tok.substr(5));
          } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
          }
        } else {
          throw ParseError("unexpected header token '" + tok + "'", lineno);
        }
      }
      if (!degree || !type) throw ParseError("header must be 'n=<degree> type=<a1,a2,...>'", lineno);
      continue;
    }
    try {
      elems.push_back(Permutation::parse(line, *degree));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  if (!degree) throw ParseError("missing header line");
  return GeneratorSet(*degree, std::move(elems), *type);
}

std::string GeneratorSet::to_text() const {
  std::string s = "n=" + std::to_string(degree_) + " type=" + type_.to_string() + "\n";
  for (const auto& e : elements_) s += e.to_string() + "\n";
  return s;
}

std::optional<long long> f_lower_bound(const CycleType& type, std::size_t n) {
  const long long c = type.c_value();
  if (c % 2 == 0) return std::nullopt;
  const long long n1 = static_cast<long long>(n) - 1;
  return (n1 + c - 1) / c;
}

bool is_semi_connected(const GeneratorSet& t) {
  return orbits(t.elements(), t.degree()).single_block();
}

bool is_split(const GeneratorSet& t) {
  std::vector<std::vector<Point>> supports;
  for (const auto& e : t.elements()) supports.push_back(analyze(e).support);
  for (std::size_t i = 0; i < supports.size(); ++i)
    for (std::size_t j = i + 1; j < supports.size(); ++j) {
      std::vector<Point> common;
      std::set_intersection(supports[i].begin(), supports[i].end(), supports[j].begin(),
                            supports[j].end(), std::back_inserter(common));
      if (common.size() > 1) return false;
    }
  return true;
}

namespace {

bool cycles_overlap(const Cycle& a, const Cycle& b) {
  for (Point x : a)
    if (std::find(b.begin(), b.end(), x) != b.end()) return true;
  return false;
}

// Assigns the cycles of one length to `classes` interchangeable classes so
// that every class is nonempty and every cycle overlaps a classmate.
std::optional<std::vector<int>> assign_length_classes(const std::vector<CycleRef>& cyc, int classes) {
  const int n = static_cast<int>(cyc.size());
  if (n < 2 * classes) return std::nullopt;
  std::vector<std::vector<int>> adj(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cycles_overlap(cyc[i].cycle, cyc[j].cycle)) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  for (int i = 0; i < n; ++i)
    if (adj[i].empty()) return std::nullopt;

  // Breadth-first order so neighbours get labels close together.
  std::vector<int> order;
  std::vector<bool> placed(n, false);
  for (int s = 0; s < n; ++s) {
    if (placed[s]) continue;
    placed[s] = true;
    order.push_back(s);
    for (std::size_t k = order.size() - 1; k < order.size(); ++k)
      for (int w : adj[order[k]])
        if (!placed[w]) {
          placed[w] = true;
          order.push_back(w);
        }
  }

  std::vector<int> label(n, -1);
  std::vector<int> class_size(classes, 0);
  auto alive = [&](int assigned_count) {
    int empty = 0;
    for (int c = 0; c < classes; ++c) empty += class_size[c] == 0;
    if (n - assigned_count < 2 * empty) return false;
    for (int v = 0; v < n; ++v) {
      if (label[v] < 0) continue;
      bool ok = false;
      for (int w : adj[v])
        if (label[w] < 0 || label[w] == label[v]) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  };
  std::function<bool(int, int)> dfs = [&](int pos, int used) -> bool {
    if (pos == n) {
      for (int c = 0; c < classes; ++c)
        if (class_size[c] == 0) return false;
      return true;
    }
    const int v = order[pos];
    for (int c = 0; c < std::min(used + 1, classes); ++c) {
      label[v] = c;
      ++class_size[c];
      if (alive(pos + 1) && dfs(pos + 1, std::max(used, c + 1))) return true;
      --class_size[c];
      label[v] = -1;
    }
    return false;
  };
  if (!dfs(0, 0)) return std::nullopt;
  return label;
}

}  // namespace

std::optional<BalanceCertificate> find_balance(const GeneratorSet& t) {
  std::map<int, std::vector<CycleRef>, std::greater<>> by_length;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (auto& c : t.elements()[i].cycles()) by_length[static_cast<int>(c.size())].push_back({i, c});
  std::map<int, int, std::greater<>> wanted;
  for (int a : t.type().parts()) ++wanted[a];
  for (const auto& [len, _] : by_length)
    if (!wanted.contains(len)) return std::nullopt;

  BalanceCertificate cert;
  for (const auto& [len, count] : wanted) {
    auto it = by_length.find(len);
    if (it == by_length.end()) return std::nullopt;
    auto labels = assign_length_classes(it->second, count);
    if (!labels) return std::nullopt;
    std::vector<BalanceCertificate::Class> cls(count, BalanceCertificate::Class{len, {}});
    for (std::size_t i = 0; i < it->second.size(); ++i) cls[(*labels)[i]].cycles.push_back(it->second[i]);
    for (auto& c : cls) cert.classes.push_back(std::move(c));
  }
  return cert;
}

bool check_balance(const GeneratorSet& t, const BalanceCertificate& cert) {
  std::vector<int> lengths;
  std::multiset<std::pair<std::size_t, Cycle>> given, expected;
  for (const auto& cls : cert.classes) {
    if (cls.cycles.empty()) return false;
    lengths.push_back(cls.length);
    for (const auto& ref : cls.cycles) {
      if (static_cast<int>(ref.cycle.size()) != cls.length) return false;
      given.insert({ref.element, ref.cycle});
      bool overlaps = false;
      for (const auto& other : cls.cycles)
        if (&other != &ref && cycles_overlap(ref.cycle, other.cycle)) overlaps = true;
      if (!overlaps) return false;
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i)
    for (auto& c : t.elements()[i].cycles()) expected.insert({i, c});
  if (given != expected) return false;
  try {
    return CycleType(lengths) == t.type();
  } catch (const InvariantViolation&) {
    return false;
  }
}

Predicates predicates(const GeneratorSet& t) {
  return {is_semi_connected(t), is_split(t), find_balance(t)};
}

GeneratorSet construct_cycle_pair(int k) {
  if (k < 2 || k % 2) throw ParityError("cycle pair needs an even k >= 2, got " + std::to_string(k));
  return construct_cycle_tree(k, static_cast<std::size_t>(2 * k - 1));
}

GeneratorSet construct_cycle_tree(int k, std::size_t n) {
  if (k < 2 || k % 2) throw ParityError("cycle tree needs an even k >= 2, got " + std::to_string(k));
  if (n < static_cast<std::size_t>(2 * k - 1))
    throw RangeError("cycle tree of " + std::to_string(k) + "-cycles needs n >= " +
                     std::to_string(2 * k - 1));
  const std::size_t step = static_cast<std::size_t>(k - 1);
  const std::size_t count = (n - 1 + step - 1) / step;
  std::vector<Permutation> elems;
  for (std::size_t j = 0; j < count; ++j) {
    // The last cycle is pushed back onto (n-k+1 ... n) when it would overrun.
    const std::size_t start = std::min(j * step + 1, n - static_cast<std::size_t>(k) + 1);
    Cycle c(k);
    for (int i = 0; i < k; ++i) c[i] = static_cast<Point>(start + i);
    elems.push_back(Permutation::from_cycles(n, {c}));
  }
  return GeneratorSet(n, std::move(elems), CycleType({k}));
}

std::vector<Point> eulerian_circuit_complete(int v) {
  if (v < 3 || v % 2 == 0)
    throw NoCircuit("K_" + std::to_string(v) + " has no Eulerian circuit");
  std::vector<std::vector<bool>> used(v + 1, std::vector<bool>(v + 1, false));
  std::vector<int> next(v + 1, 1);  // smallest candidate neighbour per vertex
  std::vector<Point> stack{1}, walk;
  while (!stack.empty()) {
    const Point u = stack.back();
    int& w = next[u];
    while (w <= v && (w == static_cast<int>(u) || used[u][w])) ++w;
    if (w > v) {
      walk.push_back(u);
      stack.pop_back();
    } else {
      used[u][w] = used[w][u] = true;
      stack.push_back(static_cast<Point>(w));
    }
  }
  std::reverse(walk.begin(), walk.end());
  return walk;
}

std::vector<Point> multiplier_circuit(int p) {
  if (p < 3 || p % 2 == 0) throw NoCircuit("multiplier circuit needs an odd p >= 3");
  std::vector<Point> walk;
  for (int s = 1; s <= (p - 1) / 2; ++s)
    for (int j = 1; j <= p; ++j) {
      const int x = (j * s) % p;
      walk.push_back(static_cast<Point>(x == 0 ? p : x));
    }
  walk.push_back(1);
  return walk;
}

GeneratorSet basic_tree_from_circuit(std::span<const Point> walk, int k) {
  if (walk.size() < 2 || walk.front() != walk.back())
    throw InvariantViolation("walk must be closed");
  const std::size_t steps = walk.size() - 1;
  const Point v = *std::max_element(walk.begin(), walk.end());
  const std::size_t n = steps + 1;
  std::vector<std::vector<Cycle>> cycles(v);
  for (std::size_t i = 1; i <= steps; ++i)
    cycles[walk[i - 1] - 1].push_back({static_cast<Point>(i), static_cast<Point>(i + 1)});
  std::vector<Permutation> elems;
  for (const auto& cs : cycles) {
    if (static_cast<int>(cs.size()) != k)
      throw InvariantViolation("every vertex must be visited " + std::to_string(k) + " times");
    elems.push_back(Permutation::from_cycles(n, cs));
  }
  return GeneratorSet(n, std::move(elems), CycleType(std::vector<int>(k, 2)));
}

GeneratorSet construct_basic_tree(int k) {
  if (k < 1 || k % 2 == 0) throw ParityError("basic tree needs an odd k, got " + std::to_string(k));
  const auto walk = eulerian_circuit_complete(2 * k + 1);
  return basic_tree_from_circuit(walk, k);
}

GeneratorSet split_divisor(const GeneratorSet& t, const CycleType& type, int copies) {
  if (copies < 1) throw RangeError("copies must be >= 1");
  const CycleType big = type.repeated(copies);
  if (!(t.type() == big))
    throw InvariantViolation("set type " + t.type().to_string() + " is not " + std::to_string(copies) +
                             " copies of " + type.to_string());
  std::map<int, int> per_fragment;
  for (int a : type.parts()) ++per_fragment[a];
  std::vector<Permutation> out;
  for (const auto& e : t.elements()) {
    std::map<int, std::vector<Cycle>> by_len;
    for (auto& c : e.cycles()) by_len[static_cast<int>(c.size())].push_back(std::move(c));
    for (int r = 0; r < copies; ++r) {
      std::vector<Cycle> frag;
      for (const auto& [len, cnt] : per_fragment) {
        const auto& cs = by_len[len];
        frag.insert(frag.end(), cs.begin() + r * cnt, cs.begin() + (r + 1) * cnt);
      }
      out.push_back(Permutation::from_cycles(t.degree(), frag));
    }
  }
  return GeneratorSet(t.degree(), std::move(out), type);
}

GeneralConstruction construct_general(const CycleType& type) {
  const int c = type.c_value();
  if (c % 2 == 0)
    throw ParityError("c(" + type.to_string() + ") = " + std::to_string(c) +
                      " is even; the class holds only even permutations");
  return construct_general_layout(type);
}

GeneralConstruction construct_general_layout(const CycleType& type) {
  const int c = type.c_value();
  const int k = static_cast<int>(type.size());
  const std::uint64_t p = smallest_prime_one_mod(2ull * k);
  const int m = static_cast<int>((p - 1) / (2ull * k));
  const auto walk = multiplier_circuit(static_cast<int>(p));
  const std::size_t steps = walk.size() - 1;

  // Column c of every generator gets part ascending[c mod k].
  std::vector<int> ascending(type.parts().rbegin(), type.parts().rend());
  std::vector<std::vector<Point>> visits(p);  // backbone positions per generator
  for (std::size_t i = 1; i <= steps; ++i) visits[walk[i - 1] - 1].push_back(static_cast<Point>(i));

  std::vector<std::vector<Cycle>> cycles(p);
  Point fresh = static_cast<Point>(steps + 2);
  for (int col = 0; col < k * m; ++col) {
    const int len = ascending[col % k];
    for (std::size_t g = 0; g < p; ++g) {
      const Point x = visits[g][col];
      Cycle cyc{x};
      for (int f = 0; f < len - 2; ++f) cyc.push_back(fresh++);
      cyc.push_back(x + 1);
      cycles[g].push_back(std::move(cyc));
    }
  }
  const std::size_t n = fresh - 1;
  std::vector<Permutation> elems;
  for (const auto& cs : cycles) elems.push_back(Permutation::from_cycles(n, cs));
  GeneratorSet before(n, std::move(elems), type.repeated(m));
  GeneratorSet after = split_divisor(before, type, m);
  BigInt bound = BigInt(c) * cyclotomic_eval(static_cast<unsigned>(2 * k), BigInt(2 * k)) + 1;
  return {std::move(after), std::move(before), p, m, n, std::move(bound)};
}

GeneratorSet extend_tree(const GeneratorSet& t, const CycleType& type, std::size_t n_target) {
  const std::size_t m = t.degree();
  const int c = type.c_value();
  if (c % 2 == 0) throw ParityError("extension needs c(A) odd, got " + std::to_string(c));
  if (n_target < m)
    throw RangeError("target degree " + std::to_string(n_target) + " below current degree " +
                     std::to_string(m));
  if (!(t.type() == type)) throw InvariantViolation("extension type differs from the set's type");
  if (generates(t.elements(), m) != GroupKind::symmetric)
    throw InvariantViolation("extension needs a set generating S_" + std::to_string(m));
  if (n_target == m) return t;

  const auto& parts = type.parts();
  const int r = static_cast<int>(parts.size());
  const std::size_t count = (n_target - m + c - 1) / c;

  // Which old elements move each point; used to keep anchors split.
  std::vector<std::vector<std::size_t>> owners(m + 1);
  for (std::size_t e = 0; e < t.size(); ++e)
    for (Point p : analyze(t.elements()[e]).support) owners[p].push_back(e);

  std::set<Point> used_anchor;
  std::vector<std::vector<Point>> fresh_of;  // fresh points of each new element
  std::vector<std::vector<bool>> handed;
  std::vector<std::vector<Cycle>> new_cycles;
  std::size_t cur = m;

  for (std::size_t j = 0; j < count; ++j) {
    std::vector<Cycle> cs;
    if (n_target - cur >= static_cast<std::size_t>(c)) {
      std::set<std::size_t> touched_old;
      std::vector<Point> mine;
      for (int i = 0; i < r; ++i) {
        Point anchor = 0;
        const long long src = static_cast<long long>(j) - 1 - i;
        if (src >= 0) {
          auto& pool = fresh_of[src];
          for (std::size_t q = pool.size(); q-- > 0;)
            if (!handed[src][q]) {
              handed[src][q] = true;
              anchor = pool[q];
              break;
            }
        } else {
          for (Point p = static_cast<Point>(m); p >= 1 && !anchor; --p) {
            if (used_anchor.contains(p)) continue;
            bool clash = false;
            for (auto e : owners[p]) clash |= touched_old.contains(e);
            if (clash) continue;
            anchor = p;
            for (auto e : owners[p]) touched_old.insert(e);
          }
        }
        if (!anchor) throw InternalError("no anchor point available for extension");
        used_anchor.insert(anchor);
        Cycle cyc{anchor};
        for (int f = 1; f < parts[i]; ++f) {
          cyc.push_back(static_cast<Point>(++cur));
          mine.push_back(static_cast<Point>(cur));
        }
        cs.push_back(std::move(cyc));
      }
      handed.emplace_back(mine.size(), false);
      fresh_of.push_back(std::move(mine));
    } else {
      // Final element: its points end at n_target and reach back into covered points.
      Point next = static_cast<Point>(n_target - c + 1);
      const Point block_start = next;
      for (int i = 0; i < r; ++i) {
        Cycle cyc{static_cast<Point>(block_start - 1 - i)};
        for (int f = 1; f < parts[i]; ++f) cyc.push_back(next++);
        cs.push_back(std::move(cyc));
      }
      cur = n_target;
      fresh_of.emplace_back();
      handed.emplace_back();
    }
    new_cycles.push_back(std::move(cs));
  }

  std::vector<Permutation> elems;
  for (const auto& e : t.elements()) elems.push_back(e.extend_degree(n_target));
  for (const auto& cs : new_cycles) elems.push_back(Permutation::from_cycles(n_target, cs));
  return GeneratorSet(n_target, std::move(elems), type);
}

BigInt class_size(const CycleType& type, std::size_t n) {
  const std::size_t s = static_cast<std::size_t>(type.support_size());
  if (s > n) return 0;
  BigInt r = factorial(static_cast<unsigned>(n)) / factorial(static_cast<unsigned>(n - s));
  std::map<int, int> mult;
  for (int a : type.parts()) {
    r /= a;
    ++mult[a];
  }
  for (const auto& [a, k] : mult) r /= factorial(static_cast<unsigned>(k));
  return r;
}

std::vector<Permutation> enumerate_class(const CycleType& type, std::size_t n) {
  std::vector<Permutation> out;
  const auto& parts = type.parts();
  std::vector<bool> used(n + 1, false);
  std::vector<Cycle> cycles;
  std::function<void(std::size_t, Point)> place = [&](std::size_t idx, Point min_start) {
    if (idx == parts.size()) {
      out.push_back(Permutation::from_cycles(n, cycles));
      return;
    }
    const int len = parts[idx];
    // Equal-length cycles are taken in increasing order of their minima.
    const Point lo = (idx > 0 && parts[idx - 1] == len) ? min_start : 1;
    for (Point first = lo; first <= n; ++first) {
      if (used[first]) continue;
      used[first] = true;
      Cycle cyc{first};
      std::function<void()> extend = [&] {
        if (static_cast<int>(cyc.size()) == len) {
          cycles.push_back(cyc);
          place(idx + 1, first + 1);
          cycles.pop_back();
          return;
        }
        for (Point x = first + 1; x <= n; ++x) {
          if (used[x]) continue;
          used[x] = true;
          cyc.push_back(x);
          extend();
          cyc.pop_back();
          used[x] = false;
        }
      };
      extend();
      used[first] = false;
    }
  };
  place(0, 1);
  return out;
}

std::optional<int> brute_force_f(const CycleType& type, std::size_t n, int size_cap) {
  if (size_cap < 1 || size_cap > 4) throw GuardExceeded("size_cap must be in 1..4");
  const BigInt size = class_size(type, n);
  if (size > 10000) throw GuardExceeded("class C(" + type.to_string() + ") in S_" + std::to_string(n) +
                                        " has " + size.str() + " elements (limit 10000)");
  if (size == 0) return std::nullopt;

  // Up to conjugation the first generator is the consecutive representative.
  std::vector<Cycle> rep_cycles;
  Point next = 1;
  for (int a : type.parts()) {
    Cycle c;
    for (int i = 0; i < a; ++i) c.push_back(next++);
    rep_cycles.push_back(std::move(c));
  }
  const Permutation first = Permutation::from_cycles(n, rep_cycles);
  std::vector<Permutation> rest;
  for (auto& e : enumerate_class(type, n))
    if (e != first) rest.push_back(std::move(e));

  std::vector<Permutation> chosen{first};
  std::function<bool(std::size_t, int)> search = [&](std::size_t from, int left) -> bool {
    if (left == 0) {
      return orbits(chosen, n).single_block() && generates(chosen, n) == GroupKind::symmetric;
    }
    for (std::size_t i = from; i < rest.size(); ++i) {
      chosen.push_back(rest[i]);
      const bool ok = search(i + 1, left - 1);
      chosen.pop_back();
      if (ok) return true;
    }
    return false;
  };
  for (int m = 1; m <= size_cap; ++m)
    if (search(0, m - 1)) return m;
  return std::nullopt;
}

}  // namespace conjgen
