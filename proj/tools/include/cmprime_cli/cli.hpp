#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cmprime/modarith.hpp"
#include "cmprime/verdict.hpp"

namespace cmprime::cli {

enum ExitCode : int { kOk = 0, kComposite = 1, kUsage = 2, kInternal = 3 };

/// Entry point of the cmprime tool. Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload: run({"cmprime", args...}).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SearchEntry {
  unsigned long k;
  Verdict verdict;
};

/// Sieve S up to k_max with primes <= bound, then test every survivor.
/// Eliminated indices are reported as Composite with their sieve prime as
/// the factor. Sorted by k; independent of `jobs`.
std::vector<SearchEntry> search(unsigned long k_max, std::uint64_t bound, unsigned jobs,
                                MulKernel kernel = MulKernel::Gmp);

}  // namespace cmprime::cli
