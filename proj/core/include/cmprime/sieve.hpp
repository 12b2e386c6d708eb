#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace cmprime {

/// All primes <= bound, ascending (segmented sieve of Eratosthenes).
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

struct Elimination {
  unsigned long k;
  std::uint64_t p;  ///< smallest prime <= B dividing F_k with F_k > p
  friend bool operator==(const Elimination&, const Elimination&) = default;
};

struct SieveReport {
  unsigned long k_max = 0;
  std::uint64_t bound = 0;
  std::vector<unsigned long> survivors;  ///< ascending
  std::vector<Elimination> eliminations;  ///< ascending in k
  friend bool operator==(const SieveReport&, const SieveReport&) = default;
};

/// First k >= 1 with F_k > bound. F_k increases from k = 1 on, so every later
/// k also exceeds the bound.
unsigned long crossover_index(std::uint64_t bound);

/// Removes k in S, k <= k_max, for which some prime p <= bound divides F_k
/// and F_k > p. Primes are split across `jobs` threads; the result does not
/// depend on `jobs`.
SieveReport sieve_candidates(unsigned long k_max, std::uint64_t bound, unsigned jobs = 1);

/// "k=<n>" per survivor, then "elim k=<n> p=<n>" per elimination if `log`.
void write_sieve_report(std::ostream& os, const SieveReport& report, bool log);

}  // namespace cmprime
