#pragma once

#include <optional>
#include <string>
#include <variant>

#include "cmprime/certificate.hpp"
#include "cmprime/modarith.hpp"

namespace cmprime {

enum class CompositeReason {
  Step1NonResidue,   ///< 5^((F-1)/4) is not +-1
  Step4SqrtFail,     ///< d^2 != 5
  FinalYNonzero,     ///< chain end is not 2-torsion
  FinalZNotCoprime,  ///< chain end has Z == 0 mod F
  FactorFound,       ///< an explicit proper factor was exposed
  DegeneratePoint,   ///< the chain produced (0:0:0)
  EmbeddingFail,     ///< the image of sqrt(-2) does not square to -2
  PrematureZero,     ///< the next-to-last point is not strongly nonzero
  FinalNonzero,      ///< the last point is not zero
};

const char* to_string(CompositeReason reason);

struct Prime {
  std::optional<Certificate> certificate;
  std::string evidence;
};

struct Composite {
  CompositeReason reason;
  std::optional<BigInt> factor;  ///< 1 < factor < F and factor | F when set
  std::string detail;
};

struct DomainError {
  std::string detail;
};

using Verdict = std::variant<Prime, Composite, DomainError>;

inline bool is_prime(const Verdict& v) { return std::holds_alternative<Prime>(v); }
inline bool is_composite(const Verdict& v) { return std::holds_alternative<Composite>(v); }

/// Trial division by primes below `limit`. Composite with FactorFound when a
/// proper factor exists, Prime when N < limit^2 and none does, DomainError
/// otherwise.
Verdict trial_division_verdict(const BigInt& n, unsigned long limit = 1UL << 20);

}  // namespace cmprime
