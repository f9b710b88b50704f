#pragma once

#include <cstdint>

#include "conjgen/bigint.hpp"

namespace conjgen {

/// Moebius function of n >= 1.
int moebius(std::uint64_t n);

/// Phi_m(x), evaluated exactly as the Moebius product over divisors of m of
/// (x^d - 1)^mu(m/d).
BigInt cyclotomic_eval(unsigned m, const BigInt& x);

/// Deterministic for the full 64-bit range.
bool is_prime(std::uint64_t n);
/// Throws RangeError when n does not fit in 64 bits.
bool is_prime(const BigInt& n);

/// Smallest prime factor of Phi_m(m) that is 1 mod m (m >= 2).
/// Every prime factor of Phi_m(m) has this form, so the search only visits
/// candidates 1 + t*m. Throws RangeError past the trial-division budget.
std::uint64_t prime_one_mod(unsigned m);

/// Smallest prime p with p = 1 (mod m).
std::uint64_t smallest_prime_one_mod(std::uint64_t m);

/// Smallest prime strictly between a and 2a (a >= 2).
std::uint64_t prime_in_interval(std::uint64_t a);

}  // namespace conjgen
