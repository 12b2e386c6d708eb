#pragma once

// Deterministic primality test for F_k, k in S, on the curve E_d with CM by
// the maximal order of Q(sqrt(-15)):
//
//   a4 = -3234 (16195646845 - 7242913457 d)
//   a6 = 38416 (5395199151946361 - 2412806411180256 d)
//   P_d = (0, -10179930516 + 4552603328 d)
//
// with d a square root of 5 mod F_k. F_k is prime iff 2^(2k+1) P_d has y = 0
// and z coprime to F_k, for one of the two signs of d.

#include <variant>

#include "cmprime/ecring.hpp"
#include "cmprime/sequence.hpp"
#include "cmprime/verdict.hpp"

namespace cmprime {

RingCurve curve15(const Modulus& mod, const Residue& d);
RingPoint point15(const Modulus& mod, const Residue& d);

/// Steps 1 to 4: the square root of 5 the test derives from Euler's
/// criterion. Composite with Step1NonResidue or Step4SqrtFail otherwise.
std::variant<Residue, Composite> derive_sqrt5(const Modulus& mod);

struct Test15Options {
  MulKernel kernel = MulKernel::Gmp;
  /// Retry the chain with -d when the first sign does not reach 2-torsion.
  bool retry_negated_d = true;
};

/// DomainError unless k is in S.
Verdict test15(unsigned long k, const Test15Options& options = {});

}  // namespace cmprime
