#pragma once

// Deterministic primality test for F = 1 + 9 * 2^k, k = 1 (mod 8), k >= 17,
// on the curve E: y^2 = x^3 - 78030 x - 7428456 with CM by Z[sqrt(-2)].
// With s the image of sqrt(-2) mod F and P = (125 s - 604, -9190 s - 6700),
// F is prime iff 2^((k-1)/2) (3P) is strongly nonzero and 2^((k+1)/2) (3P)
// is zero.

#include "cmprime/ecring.hpp"
#include "cmprime/verdict.hpp"

namespace cmprime {

struct SqrtM2Embedding {
  unsigned long k = 0;
  BigInt F;   ///< 1 + 9 * 2^k
  Residue s;  ///< -(3 (-2)^m)^(-1) for k = 2m + 1
};

BigInt proth9(unsigned long k);

/// Requires k odd. Throws PreconditionError otherwise. A non-unit 3 (-2)^m
/// is impossible since F is odd and prime to 3.
SqrtM2Embedding sqrt_m2_embedding(unsigned long k, const Modulus& mod);

RingCurve curve2(const Modulus& mod);
RingPoint point2(const Modulus& mod, const Residue& s);

/// DomainError unless k = 1 (mod 8) and k >= 17. Prime evidence is the
/// x-coordinate of the 2-torsion point reached before the last doubling.
Verdict test2(unsigned long k, MulKernel kernel = MulKernel::Gmp);

}  // namespace cmprime
