#include <doctest.h>

#include "conjgen/error.hpp"
#include "conjgen/group.hpp"
#include "conjgen/ctree.hpp"
#include "support/oracles.hpp"

using namespace conjgen;

namespace {
GeneratorSet set_of(std::size_t n, std::initializer_list<const char*> cs, const CycleType& type) {
  std::vector<Permutation> out;
  for (const char* c : cs) out.push_back(Permutation::parse(c, n));
  return GeneratorSet(n, std::move(out), type);
}

bool generates_sn(const GeneratorSet& t) { return generates(t.elements(), t.degree()) == GroupKind::symmetric; }

const CycleType B3({2, 2, 2});
}  // namespace

TEST_CASE("lower bound") {
  CHECK(f_lower_bound(CycleType({2}), 5) == 4);
  CHECK(f_lower_bound(CycleType({4}), 7) == 2);
  CHECK(f_lower_bound(CycleType({4}), 8) == 3);
  CHECK(f_lower_bound(B3, 22) == 7);
  CHECK_FALSE(f_lower_bound(CycleType({3}), 5).has_value());
  CHECK_FALSE(f_lower_bound(CycleType({2, 4, 5}), 57).has_value());
}

TEST_CASE("generator set validation and text format") {
  CHECK_THROWS_AS(set_of(4, {"(1 2)", "(1 2 3)"}, CycleType({2})), InvariantViolation);
  CHECK_THROWS_AS(set_of(4, {"(1 2)", "(2 1)"}, CycleType({2})), InvariantViolation);
  CHECK_THROWS_AS(GeneratorSet(4, {Permutation::parse("(1 2)", 5)}, CycleType({2})), DegreeMismatch);

  const auto t = GeneratorSet::parse("# sample\nn=5 type=2\n\n(1 2)\n# mid\n(2 3)\n");
  CHECK(t.degree() == 5);
  CHECK(t.size() == 2);
  CHECK(GeneratorSet::parse(t.to_text()).elements() == t.elements());
  CHECK(t.to_text() == "n=5 type=2\n(1 2)\n(2 3)\n");

  try {
    GeneratorSet::parse("n=5 type=2\n(1 2)\n(2 3 4)\n");
    FAIL("expected an error");
  } catch (const InvariantViolation&) {
  }
  try {
    GeneratorSet::parse("n=5 type=2\n(1 2)\n(2 9)\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    GeneratorSet::parse("n=x type=2\n");
    FAIL("expected an error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  CHECK_THROWS_AS(GeneratorSet::parse("(1 2)\n"), ParseError);
  CHECK_THROWS_AS(GeneratorSet::parse(""), ParseError);
}

TEST_CASE("predicates on small sets") {
  const auto path = set_of(4, {"(1 2)", "(2 3)", "(3 4)"}, CycleType({2}));
  CHECK(is_semi_connected(path));
  CHECK(is_split(path));
  const auto broken = set_of(4, {"(1 2)", "(3 4)"}, CycleType({2}));
  CHECK_FALSE(is_semi_connected(broken));
  const auto heavy = set_of(5, {"(1 2 3)", "(1 2 4)"}, CycleType({3}));
  CHECK_FALSE(is_split(heavy));
}

TEST_CASE("balance certificates") {
  const auto t = set_of(7, {"(1 2)(4 5)", "(2 3)(5 6)", "(3 7)(6 1)"}, CycleType({2, 2}));
  const auto cert = find_balance(t);
  REQUIRE(cert);
  CHECK(check_balance(t, *cert));
  // a lone cycle that touches no other cycle cannot be placed
  const auto u = set_of(8, {"(1 2)(7 8)", "(2 3)(5 6)", "(3 4)(6 1)"}, CycleType({2, 2}));
  CHECK_FALSE(find_balance(u));
  auto missing = *cert;
  missing.classes[0].cycles.pop_back();
  CHECK_FALSE(check_balance(t, missing));
}

TEST_CASE("cycle pair and cycle tree") {
  const auto p = construct_cycle_pair(4);
  CHECK(p.degree() == 7);
  CHECK(p.elements()[0] == Permutation::parse("(1 2 3 4)", 7));
  CHECK(p.elements()[1] == Permutation::parse("(4 5 6 7)", 7));
  CHECK(generates_sn(p));
  CHECK_THROWS_AS(construct_cycle_pair(3), ParityError);

  const auto t = construct_cycle_tree(4, 10);
  CHECK(t.size() == 3);
  CHECK(t.elements()[2] == Permutation::parse("(7 8 9 10)", 10));
  const auto u = construct_cycle_tree(4, 9);
  CHECK(u.size() == 3);
  CHECK(u.elements()[2] == Permutation::parse("(6 7 8 9)", 9));
  CHECK_FALSE(is_split(u));
  CHECK(generates_sn(u));
  CHECK_THROWS_AS(construct_cycle_tree(4, 6), RangeError);
}

TEST_CASE("Eulerian circuits of complete graphs") {
  const auto w = eulerian_circuit_complete(5);
  REQUIRE(w.size() == 11);
  CHECK(w.front() == 1);
  CHECK(w.back() == 1);
  std::set<std::pair<Point, Point>> used;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    CHECK(used.insert(std::minmax(w[i], w[i + 1])).second);
  CHECK(used.size() == 10);
  CHECK_THROWS_AS(eulerian_circuit_complete(4), NoCircuit);

  const std::vector<Point> m7{1, 2, 3, 4, 5, 6, 7, 2, 4, 6, 1, 3, 5, 7, 3, 6, 2, 5, 1, 4, 7, 1};
  CHECK(multiplier_circuit(7) == m7);
}

TEST_CASE("basic tree from the hand-built circuit") {
  const std::vector<Point> walk{1, 2, 4, 7, 1, 3, 6, 7, 2, 5, 6, 1, 4, 5, 7, 3, 4, 6, 2, 3, 5, 1};
  const auto t = basic_tree_from_circuit(walk, 3);
  const auto expect = set_of(22,
                             {"(1 2)(5 6)(12 13)", "(2 3)(9 10)(19 20)", "(6 7)(16 17)(20 21)",
                              "(3 4)(13 14)(17 18)", "(10 11)(14 15)(21 22)", "(7 8)(11 12)(18 19)",
                              "(4 5)(8 9)(15 16)"},
                             B3);
  CHECK(t.elements() == expect.elements());
  CHECK(is_split(t));
  CHECK(is_semi_connected(t));
  CHECK(generates_sn(t));
  CHECK(group_order(build_chain(t.elements(), 22)) == factorial(22));
}

TEST_CASE("basic tree from the multiplier circuit") {
  const auto t = basic_tree_from_circuit(multiplier_circuit(7), 3);
  const auto expect = set_of(22,
                             {"(1 2)(11 12)(19 20)", "(2 3)(8 9)(17 18)", "(3 4)(12 13)(15 16)",
                              "(4 5)(9 10)(20 21)", "(5 6)(13 14)(18 19)", "(6 7)(10 11)(16 17)",
                              "(7 8)(14 15)(21 22)"},
                             B3);
  CHECK(t.elements() == expect.elements());
  CHECK(generates_sn(t));
  const auto h = construct_basic_tree(3);
  CHECK(h.size() == 7);
  CHECK(h.degree() == 22);
  CHECK(is_split(h));
  CHECK(is_semi_connected(h));
  CHECK(generates_sn(h));
  CHECK(construct_basic_tree(5).degree() == 56);
  CHECK_THROWS_AS(construct_basic_tree(2), ParityError);
}

TEST_CASE("general layout for (2,4,5)") {
  const CycleType a({2, 4, 5});
  CHECK_THROWS_AS(construct_general(a), ParityError);
  const auto g = construct_general_layout(a);
  CHECK(g.prime == 7);
  CHECK(g.copies == 1);
  CHECK(g.degree == 57);
  CHECK(g.headline_bound == 249);
  const auto expect = set_of(
      57,
      {"(1 2)(11 23 24 12)(19 37 38 39 20)", "(2 3)(8 25 26 9)(17 40 41 42 18)",
       "(3 4)(12 27 28 13)(15 43 44 45 16)", "(4 5)(9 29 30 10)(20 46 47 48 21)",
       "(5 6)(13 31 32 14)(18 49 50 51 19)", "(6 7)(10 33 34 11)(16 52 53 54 17)",
       "(7 8)(14 35 36 15)(21 55 56 57 22)"},
      a);
  CHECK(g.set.elements() == expect.elements());
  const auto pr = predicates(g.set);
  CHECK(pr.semi_connected);
  CHECK(pr.split);
  REQUIRE(pr.balanced);
  CHECK(check_balance(g.set, *pr.balanced));
  // every element is even, so the best possible is the alternating group
  CHECK(generates(g.set.elements(), 57) == GroupKind::alternating);
}

TEST_CASE("divisor split") {
  const auto g = construct_general(CycleType({3, 2, 2, 2}));
  CHECK(g.prime == 17);
  CHECK(g.copies == 2);
  CHECK(g.set.size() == 34);
  CHECK(g.before_split.size() == 17);
  for (std::size_t i = 0; i < g.before_split.size(); ++i) {
    const auto& a = g.set.elements()[2 * i];
    const auto& b = g.set.elements()[2 * i + 1];
    CHECK(compose(a, b) == g.before_split.elements()[i]);
    CHECK(compose(a, b) == compose(b, a));
  }
  CHECK(generates_sn(g.set));
  CHECK(static_cast<long long>(g.set.size()) == f_lower_bound(g.set.type(), g.degree));
}

TEST_CASE("property: general construction meets the lower bound") {
  for (const auto& parts : std::vector<std::vector<int>>{{4}, {2, 3}, {2, 2, 2}, {6}, {2, 2, 4}, {3, 3, 2}}) {
    const CycleType a(parts);
    CAPTURE(a.to_string());
    const auto g = construct_general(a);
    CHECK(g.set.degree() == g.degree);
    CHECK(g.degree == g.prime * static_cast<std::uint64_t>(g.copies * a.c_value()) + 1);
    CHECK(g.prime % (2 * a.size()) == 1);
    CHECK(static_cast<long long>(g.set.size()) == f_lower_bound(a, g.degree));
    CHECK(is_semi_connected(g.before_split));
    CHECK(is_split(g.before_split));
    CHECK(generates_sn(g.set));
  }
}

TEST_CASE("extension") {
  const auto e = extend_tree(construct_cycle_pair(4), CycleType({4}), 10);
  REQUIRE(e.size() == 3);
  CHECK(e.elements()[2] == Permutation::parse("(7 8 9 10)", 10));
  CHECK_THROWS_AS(extend_tree(construct_cycle_pair(4), CycleType({4}), 5), RangeError);
  CHECK_THROWS_AS(extend_tree(set_of(4, {"(1 2)(3 4)"}, CycleType({2, 2})), CycleType({2, 2}), 6),
                  ParityError);
}

TEST_CASE("property: extended sets generate S_n with the bound's size") {
  oracle::Rng rng(606);
  const auto bt = construct_basic_tree(3);
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = 22 + rng.below(40);
    CAPTURE(n);
    const auto e = extend_tree(bt, B3, n);
    CHECK(e.degree() == n);
    CHECK(static_cast<long long>(e.size()) == f_lower_bound(B3, n));
    CHECK(generates_sn(e));
  }
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 2 * (1 + static_cast<int>(rng.below(3)));
    const std::size_t n = static_cast<std::size_t>(2 * k - 1) + rng.below(20);
    CAPTURE(k);
    CAPTURE(n);
    const auto e = extend_tree(construct_cycle_pair(k), CycleType({k}), n);
    CHECK(static_cast<long long>(e.size()) == f_lower_bound(CycleType({k}), n));
    CHECK(generates_sn(e));
    const auto t = construct_cycle_tree(k, n);
    CHECK(static_cast<long long>(t.size()) == f_lower_bound(CycleType({k}), n));
    CHECK(generates_sn(t));
  }
}

TEST_CASE("class enumeration") {
  CHECK(class_size(CycleType({2}), 5) == 10);
  CHECK(class_size(CycleType({2, 2}), 4) == 3);
  CHECK(class_size(CycleType({3}), 4) == 8);
  CHECK(class_size(CycleType({4}), 3) == 0);
  const auto els = enumerate_class(CycleType({2, 3}), 5);
  CHECK(els.size() == 20);
  std::set<Permutation> distinct(els.begin(), els.end());
  CHECK(distinct.size() == 20);
  for (const auto& e : els) CHECK(in_extended_class(e, CycleType({2, 3})));
}

TEST_CASE("property: exhaustive minimum agrees with the lower bound on tiny cases") {
  const std::vector<std::pair<std::vector<int>, std::size_t>> cases{
      {{2}, 3}, {{2}, 4}, {{2}, 5}, {{4}, 5}, {{4}, 6}, {{4}, 7}, {{2, 3}, 5}, {{2, 3}, 6}};
  for (const auto& [parts, n] : cases) {
    const CycleType a(parts);
    CAPTURE(a.to_string());
    CAPTURE(n);
    const auto r = brute_force_f(a, n, 4);
    REQUIRE(r);
    CHECK(*r >= *f_lower_bound(a, n));
  }
  CHECK(brute_force_f(CycleType({2}), 5, 4) == 4);
  CHECK(brute_force_f(CycleType({4}), 7, 4) == 2);
  CHECK_FALSE(brute_force_f(CycleType({3}), 5, 3).has_value());
  CHECK_THROWS_AS(brute_force_f(CycleType({2}), 5, 5), GuardExceeded);
  CHECK_THROWS_AS(brute_force_f(CycleType({2, 2, 2}), 12, 2), GuardExceeded);
}
