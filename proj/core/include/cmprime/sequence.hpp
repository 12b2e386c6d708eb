#pragma once

// The sequence F_k = N(1 - 4 alpha^k) for alpha = (1 + sqrt(-15)) / 2, and
// the residue-class sets of indices k that the prover accepts.
//
//   F_k = 1 - 4 t_k + 4^(k+2),   t_k = alpha^k + conj(alpha)^k,
//   t_0 = 2, t_1 = 1, t_k = t_(k-1) - 4 t_(k-2),
//   F_0 = 9, F_1 = 61, F_k = F_(k-1) - 4 F_(k-2) + 4^(k+2) + 4.

#include <array>
#include <cstdint>
#include <vector>

#include "cmprime/modarith.hpp"

namespace cmprime {

struct FkValue {
  unsigned long k = 0;
  BigInt F;
  BigInt t;  ///< alpha^k + conj(alpha)^k
};

/// F_k from the integer recurrence alone.
BigInt fk_recurrence(unsigned long k);

/// t_k by Lucas-sequence index doubling (V_n with P = 1, Q = 4).
BigInt lucas_t(unsigned long k);

/// 1 - 4 t_k + 4^(k+2), with t_k from lucas_t.
BigInt fk_closed_form(unsigned long k);

/// Exact F_k. Both routes are evaluated; disagreement throws
/// InternalInconsistency.
FkValue fk_exact(unsigned long k);

/// Ascending k = 0, 1, 2, ... with the recurrence and the Lucas sequence
/// advanced in lockstep and cross-checked at every step.
class FkGenerator {
 public:
  FkGenerator();
  /// Returns F_k for the current k and advances.
  FkValue next();

 private:
  unsigned long k_ = 0;
  BigInt f_prev_, f_cur_;  // F_(k-1), F_k
  BigInt t_prev_, t_cur_;
  BigInt pow4_;            // 4^(k+2)
};

/// F_k mod m for k = 0, 1, 2, ... using only word arithmetic.
class FkModStream {
 public:
  /// Throws std::invalid_argument unless m >= 2.
  explicit FkModStream(std::uint64_t m);
  std::uint64_t next();
  unsigned long index() const noexcept { return k_; }

 private:
  std::uint64_t m_;
  unsigned long k_ = 0;
  std::uint64_t f_prev_ = 0, f_cur_ = 0, pow4_ = 0;
};

/// F_k mod m for k = 0..k_max.
std::vector<std::uint64_t> fk_mod_stream(unsigned long k_max, std::uint64_t m);

class ResidueClassSet {
 public:
  /// Residues are reduced and deduplicated.
  ResidueClassSet(unsigned modulus, std::vector<unsigned> residues);

  unsigned modulus() const noexcept { return modulus_; }
  const std::vector<unsigned>& residues() const noexcept { return residues_; }
  bool contains(unsigned long k) const;

  /// Same set of integers expressed modulo a multiple of the modulus.
  ResidueClassSet lift(unsigned new_modulus) const;
  ResidueClassSet intersect(const ResidueClassSet& other) const;
  ResidueClassSet minus(const ResidueClassSet& other) const;

  friend bool operator==(const ResidueClassSet&, const ResidueClassSet&) = default;

 private:
  unsigned modulus_;
  std::vector<unsigned> residues_;  // sorted, unique
};

enum class IndexSet { S, T1, T2, T3 };

const ResidueClassSet& residue_set(IndexSet which);
bool in_set(unsigned long k, IndexSet which);

/// Primes whose divisibility of F_k is decided by k modulo a small period.
inline constexpr std::array<unsigned, 6> kSmallDivisorPrimes{3, 5, 7, 11, 31, 61};

/// The subset of kSmallDivisorPrimes that divides F_k, from the congruence rules:
/// 3 iff k even; 5 iff k = 2 (mod 4); 7 iff k = 16 (mod 24);
/// 11 iff k = 48 (mod 60); 31 iff k = 6, 12 (mod 15); 61 iff k = 1 (mod 30).
std::vector<unsigned> predicted_small_divisors(unsigned long k);

}  // namespace cmprime
