#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace conjgen {

using Point = std::uint32_t;  // 1-based point label
using Cycle = std::vector<Point>;

/// A bijection on {1..n}.
///
/// Products follow the left-to-right convention: `sigma * tau` (equivalently
/// `compose(sigma, tau)`) applies sigma first, so it maps i to tau(sigma(i)).
/// Every word in this library is written in that order.
class Permutation {
 public:
  /// Identity of the given degree (degree >= 1).
  explicit Permutation(std::size_t degree);

  /// From a one-based image sequence; position i holds the image of i.
  static Permutation from_images(std::span<const Point> images);
  /// From disjoint cycles; an empty list gives the identity.
  static Permutation from_cycles(std::size_t degree, const std::vector<Cycle>& cycles);
  /// Parses cycle notation such as "(1 2)(5 6)(12 13)". "()" and "" are the identity.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const { return img_.size(); }
  /// Image of the 1-based point i.
  Point operator()(Point i) const { return img_[i - 1] + 1; }
  /// Zero-based image table, for hot loops.
  const std::vector<std::uint32_t>& table() const { return img_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation pow(long long e) const;

  /// Disjoint cycles sorted by smallest point, each rotated to start at it;
  /// fixed points omitted.
  std::vector<Cycle> cycles() const;
  /// Canonical cycle notation; the identity is "()".
  std::string to_string() const;

  /// Re-encodes this permutation on a larger degree, fixing the new points.
  Permutation extend_degree(std::size_t degree) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.img_ <=> b.img_;
  }

 private:
  explicit Permutation(std::vector<std::uint32_t> img) : img_(std::move(img)) {}
  std::vector<std::uint32_t> img_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

/// Left-to-right product: the result maps i to tau(sigma(i)).
Permutation compose(const Permutation& sigma, const Permutation& tau);
Permutation inverse(const Permutation& sigma);

/// Multiset of cycle lengths (each >= 2), stored in descending order.
class CycleType {
 public:
  explicit CycleType(std::vector<int> parts);
  /// Parses "2,4,5" (any order).
  static CycleType parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  /// Sum of (part - 1): the number of transpositions in any element.
  int c_value() const;
  /// Number of points moved by an element of the class.
  int support_size() const;
  /// m copies of this multiset.
  CycleType repeated(int m) const;
  /// Comma-separated, descending.
  std::string to_string() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> parts_;
};

enum class Parity { even, odd };

struct PermAnalysis {
  std::vector<Point> support;
  Parity parity;
  std::optional<CycleType> cycle_type;  // empty for the identity
  std::uint64_t order;
};

PermAnalysis analyze(const Permutation& sigma);
Parity parity(const Permutation& sigma);

/// True iff the nontrivial cycle lengths of sigma are exactly the multiset A.
bool in_extended_class(const Permutation& sigma, const CycleType& type);

/// Product of a word, left to right. All letters must share a degree.
Permutation evaluate_word(std::span<const Permutation> word);

}  // namespace conjgen

template <>
struct std::hash<conjgen::Permutation> {
  std::size_t operator()(const conjgen::Permutation& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.table()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};
