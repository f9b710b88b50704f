#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "conjgen/bigint.hpp"
#include "conjgen/perm.hpp"

namespace conjgen {

/// A list of distinct permutations of one degree, all in the extended
/// conjugacy class C(type).
class GeneratorSet {
 public:
  GeneratorSet(std::size_t degree, std::vector<Permutation> elements, CycleType type);

  /// Reads the text format: a header line `n=<degree> type=<a1,a2,...>`
  /// followed by one permutation per line in cycle notation. Blank lines and
  /// lines starting with '#' are ignored.
  static GeneratorSet parse(std::string_view text);
  std::string to_text() const;

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& elements() const { return elements_; }
  const CycleType& type() const { return type_; }
  std::size_t size() const { return elements_.size(); }

 private:
  std::size_t degree_;
  std::vector<Permutation> elements_;
  CycleType type_;
};

/// One cycle of one element of a generator set.
struct CycleRef {
  std::size_t element;
  Cycle cycle;
};

/// Partition of all cycles of all elements into |A| classes of equal cycle
/// length, each cycle overlapping another cycle of its class.
struct BalanceCertificate {
  struct Class {
    int length;
    std::vector<CycleRef> cycles;
  };
  std::vector<Class> classes;
};

struct Predicates {
  bool semi_connected;
  bool split;
  std::optional<BalanceCertificate> balanced;
};

/// ceil((n-1)/c(A)) when c(A) is odd; nullopt stands for infinity.
std::optional<long long> f_lower_bound(const CycleType& type, std::size_t n);

bool is_semi_connected(const GeneratorSet& t);
/// Any two elements share at most one support point.
bool is_split(const GeneratorSet& t);
/// Exact search; nullopt when no certificate exists.
std::optional<BalanceCertificate> find_balance(const GeneratorSet& t);
/// Re-checks a certificate against its generator set.
bool check_balance(const GeneratorSet& t, const BalanceCertificate& cert);
Predicates predicates(const GeneratorSet& t);

/// {(1 2 ... k), (k k+1 ... 2k-1)} on 2k-1 points; k even.
GeneratorSet construct_cycle_pair(int k);
/// ceil((n-1)/(k-1)) k-cycles chained through single points; when (k-1)
/// does not divide n-1 the last cycle is (n-k+1 ... n).
GeneratorSet construct_cycle_tree(int k, std::size_t n);

/// Closed Hierholzer walk of K_v (v odd) from vertex 1, always leaving along
/// the smallest unused edge. Returns v(v-1)/2 + 1 vertices, first == last.
std::vector<Point> eulerian_circuit_complete(int v);
/// The closed walk of K_p (p odd) through the blocks s, 2s, ..., ps (mod p,
/// written in 1..p) for s = 1..(p-1)/2, followed by the return to vertex 1.
std::vector<Point> multiplier_circuit(int p);

/// Puts the transposition (i i+1) into the generator of the i-th visited
/// vertex of a closed walk over vertices 1..v. Generator j belongs to vertex j.
/// Each vertex must be visited k times (excluding the closing vertex).
GeneratorSet basic_tree_from_circuit(std::span<const Point> walk, int k);
/// 2k+1 elements of C(B_k) on k(2k+1)+1 points; k odd.
GeneratorSet construct_basic_tree(int k);

struct GeneralConstruction {
  GeneratorSet set;           // in C(A), p*m elements
  GeneratorSet before_split;  // in C(m copies of A), p elements
  std::uint64_t prime;        // p = 1 (mod 2|A|)
  int copies;                 // m = (p-1)/(2|A|)
  std::size_t degree;         // p*m*c(A) + 1
  BigInt headline_bound;      // c(A) * Phi_{2|A|}(2|A|) + 1
};

/// Balanced Eulerian construction from K_p with column extension, then split
/// down to C(A). Requires c(A) odd.
GeneralConstruction construct_general(const CycleType& type);
/// The same layout without the parity precondition. For even c(A) the
/// elements are even permutations and generate at most A_n.
GeneralConstruction construct_general_layout(const CycleType& type);

/// Splits each element (of type m copies of A) into m elements of C(A).
/// Cycles of each length are taken in order of smallest point; fragment r
/// receives the r-th run of them.
GeneratorSet split_divisor(const GeneratorSet& t, const CycleType& type, int copies);

/// Appends ceil((n_target - m)/c(A)) elements of C(A) to a set generating S_m,
/// each anchored in the covered points by one point per cycle.
GeneratorSet extend_tree(const GeneratorSet& t, const CycleType& type, std::size_t n_target);

/// Smallest m <= size_cap such that some m elements of C(A) generate S_n, or
/// nullopt. Guarded to |C(A)| <= 10^4 and size_cap <= 4.
std::optional<int> brute_force_f(const CycleType& type, std::size_t n, int size_cap);

/// Every element of C(A) in S_n, in a fixed order.
std::vector<Permutation> enumerate_class(const CycleType& type, std::size_t n);
BigInt class_size(const CycleType& type, std::size_t n);

}  // namespace conjgen
