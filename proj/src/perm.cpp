#include "conjgen/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>

#include "conjgen/error.hpp"

namespace conjgen {

Permutation::Permutation(std::size_t degree) : img_(degree) {
  if (degree == 0) throw InvariantViolation("permutation degree must be >= 1");
  std::iota(img_.begin(), img_.end(), 0u);
}

Permutation Permutation::from_images(std::span<const Point> images) {
  const std::size_t n = images.size();
  if (n == 0) throw InvariantViolation("permutation degree must be >= 1");
  std::vector<std::uint32_t> img(n);
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const Point v = images[i];
    if (v < 1 || v > n) throw InvariantViolation("image " + std::to_string(v) + " out of range");
    if (seen[v - 1]) throw InvariantViolation("image " + std::to_string(v) + " repeated");
    seen[v - 1] = true;
    img[i] = v - 1;
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::size_t degree, const std::vector<Cycle>& cycles) {
  Permutation p(degree);
  std::vector<bool> used(degree, false);
  for (const auto& c : cycles) {
    for (Point x : c) {
      if (x < 1 || x > degree)
        throw ParseError("point " + std::to_string(x) + " out of range 1.." + std::to_string(degree));
      if (used[x - 1]) throw ParseError("point " + std::to_string(x) + " repeated");
      used[x - 1] = true;
    }
    for (std::size_t i = 0; i < c.size(); ++i) p.img_[c[i] - 1] = c[(i + 1) % c.size()] - 1;
  }
  return p;
}

Permutation Permutation::parse(std::string_view text, std::size_t degree) {
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' at offset " + std::to_string(i));
    ++i;
    Cycle c;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i >= text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(std::string("unexpected character '") + text[i] + "'");
      unsigned long long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned>(text[i] - '0');
        if (v > 1'000'000'000ull) throw ParseError("point out of range");
        ++i;
      }
      c.push_back(static_cast<Point>(v));
    }
    if (!c.empty()) cycles.push_back(std::move(c));
    skip_ws();
  }
  return from_cycles(degree, cycles);
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(std::move(inv));
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result(degree());
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::vector<Cycle> Permutation::cycles() const {
  std::vector<Cycle> out;
  std::vector<bool> seen(img_.size(), false);
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    Cycle c;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      c.push_back(static_cast<Point>(j + 1));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

Permutation Permutation::extend_degree(std::size_t degree) const {
  if (degree < img_.size()) throw DegreeMismatch("cannot shrink permutation degree");
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::copy(img_.begin(), img_.end(), img.begin());
  return Permutation(std::move(img));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                         std::to_string(b.degree()));
  std::vector<std::uint32_t> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b.img_[a.img_[i]];
  return Permutation(std::move(img));
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) { return os << p.to_string(); }

Permutation compose(const Permutation& sigma, const Permutation& tau) { return sigma * tau; }
Permutation inverse(const Permutation& sigma) { return sigma.inverse(); }

CycleType::CycleType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvariantViolation("cycle type must have at least one part");
  for (int a : parts_)
    if (a < 2) throw InvariantViolation("cycle type parts must be >= 2");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

CycleType CycleType::parse(std::string_view text) {
  std::vector<int> parts;
  std::string tok;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad cycle type part '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos != tok.size()) throw ParseError("bad cycle type part '" + tok + "'");
    parts.push_back(v);
  }
  try {
    return CycleType(std::move(parts));
  } catch (const InvariantViolation& e) {
    throw ParseError(e.what());
  }
}

int CycleType::c_value() const {
  int c = 0;
  for (int a : parts_) c += a - 1;
  return c;
}

int CycleType::support_size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

CycleType CycleType::repeated(int m) const {
  std::vector<int> p;
  for (int i = 0; i < m; ++i) p.insert(p.end(), parts_.begin(), parts_.end());
  return CycleType(std::move(p));
}

std::string CycleType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

PermAnalysis analyze(const Permutation& sigma) {
  PermAnalysis r{{}, Parity::even, std::nullopt, 1};
  std::vector<int> lengths;
  int transpositions = 0;
  for (const auto& c : sigma.cycles()) {
    lengths.push_back(static_cast<int>(c.size()));
    transpositions += static_cast<int>(c.size()) - 1;
    r.order = std::lcm(r.order, static_cast<std::uint64_t>(c.size()));
    r.support.insert(r.support.end(), c.begin(), c.end());
  }
  std::sort(r.support.begin(), r.support.end());
  r.parity = transpositions % 2 ? Parity::odd : Parity::even;
  if (!lengths.empty()) r.cycle_type = CycleType(std::move(lengths));
  return r;
}

Parity parity(const Permutation& sigma) { return analyze(sigma).parity; }

bool in_extended_class(const Permutation& sigma, const CycleType& type) {
  auto t = analyze(sigma).cycle_type;
  return t && *t == type;
}

Permutation evaluate_word(std::span<const Permutation> word) {
  if (word.empty()) throw InvariantViolation("empty word has no degree");
  Permutation p = word.front();
  for (std::size_t i = 1; i < word.size(); ++i) p = p * word[i];
  return p;
}

}  // namespace conjgen
