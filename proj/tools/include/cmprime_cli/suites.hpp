#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cmprime::cli {

struct SuiteReport {
  unsigned samples = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Projective doubling against the affine reference on random
/// (prime < 2^20, curve, point) triples, plus on-curve closure and
/// invariance under rescaling of the coordinates. `composite_samples` more
/// triples over odd composite moduli check closure only.
SuiteReport field_agreement_suite(unsigned prime_samples, unsigned composite_samples,
                                  std::uint64_t seed);

}  // namespace cmprime::cli
