#include "cmprime/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "cmprime/sequence.hpp"

namespace cmprime {

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(bound))) + 1;

  // Base primes up to sqrt(bound) with a plain sieve.
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }

  constexpr std::uint64_t kSegment = 1 << 18;
  std::vector<char> seg(kSegment);
  for (std::uint64_t lo = 2; lo <= bound; lo += kSegment) {
    const std::uint64_t hi = std::min(bound, lo + kSegment - 1);
    std::fill(seg.begin(), seg.end(), 1);
    for (std::uint64_t p : base) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t j = start; j <= hi; j += p) seg[j - lo] = 0;
    }
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (seg[n - lo]) out.push_back(n);
    }
  }
  return out;
}

unsigned long crossover_index(std::uint64_t bound) {
  FkGenerator gen;
  gen.next();  // k = 0
  const BigInt b(std::to_string(bound));
  for (;;) {
    const FkValue v = gen.next();
    if (v.F > b) return v.k;
  }
}

SieveReport sieve_candidates(unsigned long k_max, std::uint64_t bound, unsigned jobs) {
  if (k_max < 1 || bound < 2) throw std::invalid_argument("sieve: need k_max >= 1, bound >= 2");
  jobs = std::max(1U, jobs);
  const auto primes = primes_up_to(bound);
  const unsigned long k0 = crossover_index(bound);

  // Exact F_k below the crossover, for the F_k > p guard.
  std::vector<BigInt> small_f;
  {
    FkGenerator gen;
    for (unsigned long k = 0; k < k0; ++k) small_f.push_back(gen.next().F);
  }

  const ResidueClassSet& s = residue_set(IndexSet::S);
  std::vector<unsigned long> candidates;
  for (unsigned long k = 1; k <= k_max; ++k) {
    if (s.contains(k)) candidates.push_back(k);
  }

  // Per worker: smallest eliminating prime per candidate, 0 when none.
  std::vector<std::vector<std::uint64_t>> found(jobs, std::vector<std::uint64_t>(k_max + 1, 0));
  auto work = [&](unsigned j) {
    auto& mine = found[j];
    for (std::size_t i = j; i < primes.size(); i += jobs) {
      const std::uint64_t p = primes[i];
      FkModStream stream(p);
      for (unsigned long k = 0; k <= k_max; ++k) {
        if (stream.next() != 0 || k == 0 || mine[k] != 0 || !s.contains(k)) continue;
        if (k < k0 && !(small_f[k] > p)) continue;
        mine[k] = p;  // primes ascend within a worker
      }
    }
  };
  std::vector<std::thread> workers;
  for (unsigned j = 1; j < jobs; ++j) workers.emplace_back(work, j);
  work(0);
  for (auto& w : workers) w.join();

  SieveReport report{k_max, bound, {}, {}};
  for (unsigned long k : candidates) {
    std::uint64_t best = 0;
    for (const auto& f : found) {
      if (f[k] != 0 && (best == 0 || f[k] < best)) best = f[k];
    }
    if (best == 0) {
      report.survivors.push_back(k);
    } else {
      report.eliminations.push_back({k, best});
    }
  }
  return report;
}

void write_sieve_report(std::ostream& os, const SieveReport& report, bool log) {
  for (unsigned long k : report.survivors) os << "k=" << k << "\n";
  if (!log) return;
  for (const auto& e : report.eliminations) os << "elim k=" << e.k << " p=" << e.p << "\n";
}

}  // namespace cmprime
