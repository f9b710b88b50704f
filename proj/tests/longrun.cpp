// Long-running instance: Cayley graph of A_7 on six 3-cycles through point 1.
// The automorphism order is recorded against the published value, not asserted.
#include <chrono>
#include <iostream>

#include "conjgen/autmorph.hpp"
#include "conjgen/cayley.hpp"
#include "conjgen/ctree.hpp"
#include "conjgen/group.hpp"

using namespace conjgen;

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const GeneratorSet t = GeneratorSet::parse(
      "n=7 type=3\n(1 2 3)\n(1 3 2)\n(1 4 5)\n(1 5 4)\n(1 6 7)\n(1 7 6)\n");
  const CayleyGraph g = build_cayley(t, 3000);
  const AutGroup aut = graph_aut_order(g.graph(), 3000);
  const AutSnT snt = aut_snt(t);
  const BigInt product = BigInt(g.vertex_count()) * snt.elements.size();
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "vertices = " << g.vertex_count() << " (" << to_string(generates(t.elements(), 7)) << ")\n"
            << "|Aut(Cay)| = " << aut.order << " (published 120960"
            << (aut.order == 120960 ? ", agrees" : ", differs") << ")\n"
            << "|<T>| x |Aut(S_7,T)| = " << g.vertex_count() << " x " << snt.elements.size() << " = " << product
            << (product == aut.order ? " (equal)" : " (not equal)") << "\n"
            << "time = " << secs << " s\n";
  return 0;
}
