#include "cmprime/verdict.hpp"

namespace cmprime {

const char* to_string(CompositeReason reason) {
  switch (reason) {
    case CompositeReason::Step1NonResidue: return "step1-non-residue";
    case CompositeReason::Step4SqrtFail: return "step4-sqrt-fail";
    case CompositeReason::FinalYNonzero: return "final-y-nonzero";
    case CompositeReason::FinalZNotCoprime: return "final-z-not-coprime";
    case CompositeReason::FactorFound: return "factor-found";
    case CompositeReason::DegeneratePoint: return "degenerate-point";
    case CompositeReason::EmbeddingFail: return "embedding-fail";
    case CompositeReason::PrematureZero: return "premature-zero";
    case CompositeReason::FinalNonzero: return "final-nonzero";
  }
  return "?";
}

Verdict trial_division_verdict(const BigInt& n, unsigned long limit) {
  if (n < 2) return DomainError{"n < 2"};
  for (unsigned long p = 2; p < limit; p += (p == 2 ? 1 : 2)) {
    const BigInt pp = p;
    if (pp * pp > n) return Prime{std::nullopt, "no divisor up to sqrt(n)"};
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      if (n == pp) return Prime{std::nullopt, "n is a small prime"};
      return Composite{CompositeReason::FactorFound, pp, "trial division"};
    }
  }
  return DomainError{"n too large for trial division"};
}

}  // namespace cmprime
