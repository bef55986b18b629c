#include "hpdirichlet/arith.hpp"

#include "hpdirichlet/coverage.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hpd {

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit) {
  coverage::mark(coverage::Op::arith_sieve_primes);
  if (limit < 2) throw std::invalid_argument("sieve_primes: limit must be >= 2");
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t p = 2; p <= limit; ++p) {
    if (composite[p]) continue;
    primes.push_back(p);
    for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= limit; q += p)
      composite[static_cast<std::size_t>(q)] = true;
  }
  return primes;
}

std::size_t prime_count_upto(std::uint32_t n) {
  if (n < 2) return 0;
  return sieve_primes(n).size();
}

std::vector<std::uint32_t> first_primes(std::uint32_t count) {
  if (count == 0) return {};
  // p_J < J (ln J + ln ln J) for J >= 6; small cases padded.
  double bound = 15.0;
  if (count >= 6) {
    const double j = static_cast<double>(count);
    bound = j * (std::log(j) + std::log(std::log(j))) + 8.0;
  }
  for (;;) {
    auto primes = sieve_primes(static_cast<std::uint32_t>(bound));
    if (primes.size() >= count) {
      primes.resize(count);
      return primes;
    }
    bound *= 2;
  }
}

std::uint64_t BohrIndex::reconstruct(std::span<const std::uint32_t> primes) const {
  if (exponents.size() > primes.size())
    throw std::invalid_argument("BohrIndex::reconstruct: prime list too short");
  std::uint64_t n = 1;
  for (std::size_t j = 0; j < exponents.size(); ++j)
    for (std::uint32_t e = 0; e < exponents[j]; ++e) n *= primes[j];
  return n;
}

SpfTable::SpfTable(std::uint32_t n_max) : n_max_(n_max) {
  if (n_max_ < 1) throw std::invalid_argument("SpfTable: n_max must be >= 1");
  spf_.assign(static_cast<std::size_t>(n_max_) + 1, 0);
  prime_index_.assign(static_cast<std::size_t>(n_max_) + 1, -1);
  for (std::uint32_t n = 2; n <= n_max_; ++n) {
    if (spf_[n] != 0) continue;
    prime_index_[n] = static_cast<std::int32_t>(primes_.size());
    primes_.push_back(n);
    for (std::uint64_t q = n; q <= n_max_; q += n)
      if (spf_[static_cast<std::size_t>(q)] == 0) spf_[static_cast<std::size_t>(q)] = n;
  }
}

std::uint32_t SpfTable::smallest_factor(std::uint32_t n) const {
  if (n < 2 || n > n_max_)
    throw std::out_of_range("SpfTable::smallest_factor: n = " + std::to_string(n) +
                            " outside 2.." + std::to_string(n_max_));
  return spf_[n];
}

std::uint32_t SpfTable::prime_index(std::uint32_t p) const {
  if (p > n_max_ || prime_index_[p] < 0)
    throw std::invalid_argument("SpfTable::prime_index: " + std::to_string(p) +
                                " is not a prime in the table");
  return static_cast<std::uint32_t>(prime_index_[p]);
}

BohrIndex SpfTable::bohr_lift(std::uint32_t n) const {
  coverage::mark(coverage::Op::arith_bohr_lift);
  if (n == 0) throw std::invalid_argument("bohr_lift: n must be >= 1");
  if (n > n_max_)
    throw std::out_of_range("bohr_lift: n = " + std::to_string(n) + " exceeds table size " +
                            std::to_string(n_max_));
  BohrIndex index;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    const auto j = static_cast<std::size_t>(prime_index_[p]);
    if (index.exponents.size() <= j) index.exponents.resize(j + 1, 0);
    ++index.exponents[j];
    n /= p;
  }
  return index;
}

std::uint64_t SpfTable::divisor_count(std::uint32_t n) const {
  coverage::mark(coverage::Op::arith_divisor_count);
  if (n == 0) throw std::invalid_argument("divisor_count: n must be >= 1");
  if (n > n_max_)
    throw std::out_of_range("divisor_count: n exceeds table size");
  std::uint64_t d = 1;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    std::uint64_t alpha = 0;
    while (n % p == 0) {
      n /= p;
      ++alpha;
    }
    d *= alpha + 1;
  }
  return d;
}

}  // namespace hpd
