#include <doctest.h>

#include "conjgen/cayley.hpp"
#include "conjgen/error.hpp"
#include "conjgen/group.hpp"
#include "support/oracles.hpp"

using namespace conjgen;

namespace {
Permutation P(const char* s, std::size_t n) { return Permutation::parse(s, n); }

GeneratorSet transpositions(std::size_t n, std::initializer_list<const char*> cs) {
  std::vector<Permutation> out;
  for (const char* c : cs) out.push_back(P(c, n));
  return GeneratorSet(n, std::move(out), CycleType({2}));
}

const GeneratorSet& path5() {
  static const GeneratorSet t = transpositions(5, {"(1 2)", "(2 3)", "(3 4)", "(4 5)"});
  return t;
}
}  // namespace

TEST_CASE("S_3 with two transpositions is a 6-cycle") {
  const auto g = build_cayley(transpositions(3, {"(1 2)", "(2 3)"}), 100);
  CHECK(g.vertex_count() == 6);
  CHECK(g.graph().edge_count() == 6);
  CHECK(regular_degree(g.graph()) == 2);
  CHECK(is_connected(g.graph()));
  CHECK(g.vertex(0).is_identity());
  const auto el = write_edge_list(g.labeled());
  CHECK(std::count(el.begin(), el.end(), '\n') == 7);
  for (const auto& e : g.graph().edges()) CHECK(count_4cycles_through(g.graph(), e.u, e.v) == 0);
}

TEST_CASE("edge rule and labels") {
  const auto g = build_cayley(path5(), 200);
  CHECK(g.vertex_count() == 120);
  CHECK(g.graph().edge_count() == 120 * 4 / 2);
  for (std::size_t x = 0; x < g.vertex_count(); ++x)
    for (std::size_t i = 0; i < 4; ++i) {
      const std::size_t y = g.step(x, i, Direction::forward);
      CHECK(g.vertex(y) == compose(g.generators()[i], g.vertex(x)));
      CHECK(g.graph().has_edge(x, y));
      const auto ls = g.labels(x, y);
      REQUIRE(ls.size() == 2);  // involutions: both directions coincide
      CHECK(ls[0].generator == i);
    }
  CHECK_THROWS_AS(build_cayley(path5(), 100), CapExceeded);
  CHECK(g.index_of(P("(1 5)", 5)).has_value());
  CHECK_FALSE(g.index_of(P("(1 5)", 6)).has_value());
}

TEST_CASE("vertex and edge counts for non-involutions") {
  const auto g = build_cayley(construct_cycle_pair(4), 6000);
  CHECK(g.vertex_count() == 5040);
  CHECK(g.graph().edge_count() == 5040 * 4 / 2);
  CHECK(regular_degree(g.graph()) == 4);
}

TEST_CASE("property: right multiplication preserves edges") {
  const auto g = build_cayley(construct_cycle_pair(4), 6000);
  oracle::Rng rng(808);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& h = g.vertex(rng.below(g.vertex_count()));
    std::vector<std::size_t> img(g.vertex_count());
    for (std::size_t x = 0; x < g.vertex_count(); ++x) img[x] = *g.index_of(compose(g.vertex(x), h));
    bool ok = true;
    for (const auto& e : g.graph().edges()) ok &= g.graph().has_edge(img[e.u], img[e.v]);
    CHECK(ok);
  }
}

TEST_CASE("cycle graph and normality") {
  const auto cg = cyc_graph(construct_cycle_pair(4));
  CHECK(cg.points == 7);
  CHECK(cg.edges.size() == 6);
  CHECK(is_normal(path5()).normal);
  const auto path4 = is_normal(transpositions(4, {"(1 2)", "(2 3)", "(3 4)"}));
  CHECK_FALSE(path4.normal);
  CHECK_FALSE(path4.reasons.empty());
  CHECK_FALSE(is_normal(transpositions(3, {"(1 2)", "(2 3)"})).normal);
  const auto star = transpositions(4, {"(1 2)", "(1 3)", "(1 4)"});
  CHECK(is_normal(star).normal);  // no element has degree 1
  CHECK(generator_degrees(path5()) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(generator_degrees(star) == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("property: normality does not depend on where cycles are written from") {
  const auto t = extend_tree(construct_cycle_pair(4), CycleType({4}), 13);
  const bool base = is_normal(t).normal;
  oracle::Rng rng(809);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::size_t> rot(t.size());
    for (auto& r : rot) r = rng.below(4);
    const auto r = is_normal(t, rot);
    CHECK(r.normal == base);
    CHECK(cyc_graph(t, rot).edges.size() == t.size() * 3);
  }
}

TEST_CASE("4-cycle probes") {
  const auto g = build_cayley(path5(), 200);
  const std::size_t a = g.step(0, 0, Direction::forward);  // (1 2)
  const std::size_t c = g.step(0, 2, Direction::forward);  // (3 4)
  const auto through = four_cycles_through_path(g.graph(), a, 0, c);
  REQUIRE(through.size() == 1);
  CHECK(g.vertex(through[0]) == P("(1 2)(3 4)", 5));
  CHECK(count_4cycles_through(g.graph(), 0, a) >= 1);
  const auto cyc = commuting_4cycle(g, 0, 2);
  REQUIRE(cyc);
  CHECK(*cyc == std::vector<std::size_t>{0, a, through[0], c});
  CHECK_FALSE(commuting_4cycle(g, 0, 1));
  CHECK_FALSE(commuting_4cycle(g, 1, 1));
  CHECK_THROWS_AS(count_4cycles_through(g.graph(), 0, 0), InvariantViolation);
}

TEST_CASE("property: a unique 4-cycle through t2 - e - t1 exists iff t1 and t2 commute") {
  const auto g = build_cayley(path5(), 200);
  for (std::size_t i1 = 0; i1 < 4; ++i1)
    for (std::size_t i2 = 0; i2 < 4; ++i2) {
      if (i1 == i2) continue;
      const auto& t1 = g.generators()[i1];
      const auto& t2 = g.generators()[i2];
      const bool commute = compose(t1, t2) == compose(t2, t1);
      // exhaustive search: every w adjacent to both t1 and t2, other than e
      const std::size_t a = g.step(0, i1, Direction::forward), b = g.step(0, i2, Direction::forward);
      std::vector<std::size_t> ws;
      for (std::size_t w = 1; w < g.vertex_count(); ++w)
        if (g.graph().has_edge(w, a) && g.graph().has_edge(w, b)) ws.push_back(w);
      CHECK((ws.size() == 1) == commute);
      const auto cyc = commuting_4cycle(g, i1, i2);
      CHECK(cyc.has_value() == commute);
      if (cyc) CHECK(g.vertex((*cyc)[2]) == compose(t1, t2));
    }
}

TEST_CASE("commutator cycles") {
  const auto w = commutator_cycle(P("(1 2 3 4)", 7), P("(4 5 6 7)", 7));
  CHECK(w.vertices.size() == 13);
  CHECK(w.closes);
  CHECK(w.distinct);
  const auto t = commutator_cycle(P("(1 2)", 3), P("(2 3)", 3));
  CHECK(t.vertices.size() == 7);
  CHECK(t.closes);
  CHECK(t.distinct);
  CHECK_THROWS_AS(commutator_cycle(P("(1 2)", 4), P("(3 4)", 4)), InvariantViolation);
}

TEST_CASE("a closed word with repeated vertices from four 4-cycles on one point") {
  const std::size_t n = 13;
  const auto a = P("(1 2 3 4)", n), b = P("(1 5 6 7)", n), c = P("(1 8 9 10)", n), d = P("(1 11 12 13)", n);
  const std::vector<Permutation> word{a, b, c, d, c, inverse(b), inverse(a), b, inverse(c), inverse(d), inverse(c), inverse(b)};
  CHECK(evaluate_word(word).is_identity());
  const auto w = walk_word(word);
  CHECK(w.closes);
}

TEST_CASE("property: k-cycles sharing one point give a 12-vertex commutator cycle") {
  oracle::Rng rng(810);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 3 + static_cast<int>(rng.below(5));
    const std::size_t n = static_cast<std::size_t>(2 * k - 1) + rng.below(3);
    std::vector<Point> pts(n);
    std::iota(pts.begin(), pts.end(), 1u);
    rng.shuffle(pts);
    Cycle x(pts.begin(), pts.begin() + k), y(pts.begin() + k - 1, pts.begin() + 2 * k - 1);
    rng.shuffle(y);
    const auto w = commutator_cycle(Permutation::from_cycles(n, {x}), Permutation::from_cycles(n, {y}));
    CHECK(w.vertices.size() == 13);
    CHECK(w.closes);
    CHECK(w.distinct);
  }
}

TEST_CASE("property: edges with the same label see the same number of 4-cycles") {
  const auto g = build_cayley(extend_tree(construct_cycle_pair(4), CycleType({4}), 7), 6000);
  oracle::Rng rng(811);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t x = rng.below(g.vertex_count());
    const std::size_t i = rng.below(g.generators().size());
    const std::size_t y = g.step(x, i, Direction::forward);
    const std::size_t z = g.step(y, i, Direction::forward);
    CHECK(same_element_criterion(g.graph(), x, y, z));
  }
}
