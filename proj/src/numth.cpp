#include "conjgen/numth.hpp"

#include <limits>
#include <string>

#include "conjgen/error.hpp"

namespace conjgen {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Trial-division candidates examined by prime_one_mod before giving up.
constexpr std::uint64_t kTrialBudget = 200'000'000;

}  // namespace

int moebius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

BigInt cyclotomic_eval(unsigned m, const BigInt& x) {
  if (m == 0) throw RangeError("cyclotomic index must be >= 1");
  BigInt num = 1, den = 1;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d) continue;
    const int mu = moebius(m / d);
    if (mu == 0) continue;
    BigInt term = boost::multiprecision::pow(x, d) - 1;
    (mu > 0 ? num : den) *= term;
  }
  if (den == 0) throw RangeError("cyclotomic evaluation at a root of unity");
  return num / den;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  if (n < 37 * 37) return true;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!strong_probable_prime(n, a)) return false;
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 0) return false;
  if (n > std::numeric_limits<std::uint64_t>::max())
    throw RangeError("primality test limited to 64-bit integers");
  return is_prime(static_cast<std::uint64_t>(n));
}

std::uint64_t prime_one_mod(unsigned m) {
  if (m < 2) throw RangeError("prime_one_mod needs m >= 2");
  const BigInt phi = cyclotomic_eval(m, BigInt(m));
  std::uint64_t steps = 0;
  for (BigInt q = m + 1; q * q <= phi; q += m) {
    if (++steps > kTrialBudget)
      throw RangeError("Phi_" + std::to_string(m) + "(" + std::to_string(m) + ") too large to factor");
    if (phi % q == 0) return static_cast<std::uint64_t>(q);
  }
  // No factor up to the square root: Phi_m(m) itself is prime.
  if (phi > std::numeric_limits<std::uint64_t>::max())
    throw RangeError("prime factor exceeds 64 bits");
  return static_cast<std::uint64_t>(phi);
}

std::uint64_t smallest_prime_one_mod(std::uint64_t m) {
  if (m < 1) throw RangeError("modulus must be >= 1");
  for (std::uint64_t p = m + 1;; p += m)
    if (is_prime(p)) return p;
}

std::uint64_t prime_in_interval(std::uint64_t a) {
  if (a < 2) throw RangeError("no prime strictly between " + std::to_string(a) + " and " +
                              std::to_string(2 * a));
  for (std::uint64_t p = a + 1; p < 2 * a; ++p)
    if (is_prime(p)) return p;
  throw InternalError("no prime in (" + std::to_string(a) + ", " + std::to_string(2 * a) + ")");
}

}  // namespace conjgen
