#pragma once

// Multiplicative bookkeeping behind the torus correspondence: prime sieve,
// smallest-prime-factor factorization, divisor counts, and the exponent
// vectors identifying an integer with a monomial over the primes.

#include <cstdint>
#include <span>
#include <vector>

namespace hpd {

// All primes <= limit in increasing order; limit >= 2.
std::vector<std::uint32_t> sieve_primes(std::uint32_t limit);

// pi(n); 0 for n < 2.
std::size_t prime_count_upto(std::uint32_t n);

// The first J primes.
std::vector<std::uint32_t> first_primes(std::uint32_t count);

struct BohrIndex {
  // alpha_j over the first primes; trailing entries up to the largest prime
  // factor of n, all zero for n = 1.
  std::vector<std::uint32_t> exponents;
  std::uint64_t reconstruct(std::span<const std::uint32_t> primes) const;
};

class SpfTable {
public:
  explicit SpfTable(std::uint32_t n_max);  // factorization support for 1..n_max
  std::uint32_t n_max() const noexcept { return n_max_; }

  std::uint32_t smallest_factor(std::uint32_t n) const;  // 2 <= n <= n_max
  // 0-based index of the prime p among all primes; p must be prime <= n_max.
  std::uint32_t prime_index(std::uint32_t p) const;
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  BohrIndex bohr_lift(std::uint32_t n) const;        // n >= 1
  std::uint64_t divisor_count(std::uint32_t n) const;  // d(n)

private:
  std::uint32_t n_max_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
  std::vector<std::int32_t> prime_index_;  // by value, -1 for composites
};

}  // namespace hpd
