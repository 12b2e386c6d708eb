#pragma once

// Exhaustive checks of the arithmetic facts about F_k that the provers and
// the sieve rely on.

#include <string>
#include <vector>

namespace cmprime {

struct SweepReport {
  unsigned long checked = 0;
  std::vector<std::string> violations;  ///< at most the first 20
  unsigned long violation_count = 0;
  bool ok() const { return violation_count == 0; }
};

/// For 1 <= k <= k_max: p | F_k exactly for the p of predicted_small_divisors,
/// F_k = 5 (mod 8), F_k = +-1 (mod 5) when k != 2 (mod 4), indices in T3 have
/// a small divisor, and F_k < F_(k+1).
SweepReport divisibility_sweep(unsigned long k_max);

/// fk_recurrence(k) == fk_closed_form(k) for 0 <= k <= k_max, and the
/// word-sized stream agrees with both modulo each small lemma prime.
SweepReport closed_form_sweep(unsigned long k_max);

/// (lift to 240 of T1, intersected with T2) minus T3, compared with S.
bool set_identity_holds();

}  // namespace cmprime
