#include <doctest.h>

#include "conjgen/error.hpp"
#include "conjgen/group.hpp"
#include "support/oracles.hpp"

using namespace conjgen;

namespace {
std::vector<Permutation> gens(std::initializer_list<const char*> cs, std::size_t n) {
  std::vector<Permutation> out;
  for (const char* c : cs) out.push_back(Permutation::parse(c, n));
  return out;
}
}  // namespace

TEST_CASE("orders of small named groups") {
  CHECK(group_order(build_chain(gens({"(1 2)", "(1 2 3)"}, 3), 3)) == 6);
  CHECK(group_order(build_chain(gens({"(1 2 3 4 5)", "(1 2)"}, 5), 5)) == 120);
  CHECK(group_order(build_chain(gens({"(1 2 3)", "(3 4 5)"}, 5), 5)) == 60);
  CHECK(group_order(build_chain(gens({"(1 2 3 4)", "(1 3)"}, 4), 4)) == 8);
  CHECK(group_order(build_chain({}, 4)) == 1);
  CHECK(group_order(build_chain(gens({"(1 2)(3 4)"}, 4), 4)) == 2);
}

TEST_CASE("classification") {
  CHECK(generates(gens({"(1 2 3 4 5)", "(1 2)"}, 5), 5) == GroupKind::symmetric);
  CHECK(generates(gens({"(1 2 3)", "(3 4 5)"}, 5), 5) == GroupKind::alternating);
  CHECK(generates(gens({"(1 2 3 4)", "(1 3)"}, 4), 4) == GroupKind::other);
  CHECK(generates(gens({"(1 2)"}, 2), 2) == GroupKind::symmetric);
  // index 2 but intransitive
  CHECK(generates({}, 2) == GroupKind::other);
  CHECK(std::string(to_string(GroupKind::alternating)) == "alternating");
}

TEST_CASE("membership") {
  const auto ch = build_chain(gens({"(1 2 3)", "(3 4 5)"}, 5), 5);
  CHECK(contains(ch, Permutation::parse("(1 2)(3 4)", 5)));
  CHECK_FALSE(contains(ch, Permutation::parse("(1 2)", 5)));
  CHECK_THROWS_AS(contains(ch, Permutation::parse("(1 2)", 6)), DegreeMismatch);
}

TEST_CASE("orbits") {
  const auto o = orbits(gens({"(1 3)", "(4 5 6)"}, 6), 6);
  REQUIRE(o.blocks.size() == 3);
  CHECK(o.blocks[0] == std::vector<Point>{1, 3});
  CHECK(o.blocks[1] == std::vector<Point>{2});
  CHECK(o.blocks[2] == std::vector<Point>{4, 5, 6});
  CHECK(o.block_of(5) == 2);
  CHECK_FALSE(o.single_block());
}

TEST_CASE("element enumeration is breadth first and capped") {
  const auto g = gens({"(1 2)", "(1 2 3)"}, 3);
  const auto els = enumerate_elements(g, 3, 10);
  REQUIRE(els.size() == 6);
  CHECK(els[0].is_identity());
  CHECK(els[1] == g[0]);
  CHECK(els[2] == g[1]);
  CHECK_THROWS_AS(enumerate_elements(g, 3, 5), CapExceeded);
  CHECK_NOTHROW(enumerate_elements(g, 3, 6));
}

TEST_CASE("degree mismatch is rejected") {
  std::vector<Permutation> g{Permutation::parse("(1 2)", 3), Permutation::parse("(1 2)", 4)};
  CHECK_THROWS_AS(build_chain(g, 3), DegreeMismatch);
}

TEST_CASE("property: chain order equals closure size on random groups") {
  oracle::Rng rng(404);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.below(6);
    const std::size_t r = 1 + rng.below(3);
    std::vector<Permutation> g;
    for (std::size_t i = 0; i < r; ++i) g.push_back(oracle::random_perm(rng, n));
    const auto closed = oracle::closure(g, n);
    const auto ch = build_chain(g, n);
    CHECK(group_order(ch) == closed.size());
    // a random permutation is a member exactly when closure contains it
    const auto probe = oracle::random_perm(rng, n);
    CHECK(contains(ch, probe) == closed.contains(oracle::images_of(probe)));
    // order is invariant under reordering and inverting generators
    std::vector<Permutation> h;
    for (auto it = g.rbegin(); it != g.rend(); ++it) h.push_back(rng.coin() ? inverse(*it) : *it);
    CHECK(group_order(build_chain(h, n)) == closed.size());
  }
}

TEST_CASE("property: chain order on larger random groups matches BFS enumeration") {
  oracle::Rng rng(405);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 6 + rng.below(3);
    std::vector<Permutation> g{oracle::random_perm(rng, n), oracle::random_perm(rng, n)};
    const auto els = enumerate_elements(g, n, 50'000);
    CHECK(group_order(build_chain(g, n)) == els.size());
  }
}

TEST_CASE("property: a connected tree of at least two k-cycles gives S_n for even k and A_n for odd k") {
  oracle::Rng rng(406);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 2 + static_cast<int>(rng.below(4));
    const int cycles = (k == 2 ? 1 : 2) + static_cast<int>(rng.below(2));
    const std::size_t n = static_cast<std::size_t>(cycles * (k - 1) + 1);
    std::vector<Point> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    rng.shuffle(perm);
    std::vector<Permutation> g;
    std::size_t next = 1;
    for (int c = 0; c < cycles; ++c) {
      Cycle cyc{perm[rng.below(next)]};
      for (int i = 1; i < k; ++i) cyc.push_back(perm[next++]);
      g.push_back(Permutation::from_cycles(n, {cyc}));
    }
    const auto kind = generates(g, n);
    if (n <= 2 && k % 2 == 1) continue;
    CHECK(kind == (k % 2 == 0 ? GroupKind::symmetric : GroupKind::alternating));
    if (n <= 7) {
      const BigInt full = factorial(static_cast<unsigned>(n));
      CHECK(oracle::closure(g, n).size() == (k % 2 == 0 ? full : full / 2));
    }
  }
}
