#pragma once

// Reference implementations for tests. Nothing here shares code with the
// cmprime library.

#include <gmpxx.h>

#include <cstdint>
#include <optional>

namespace cmprime::oracle {

enum class MrResult { ProbablePrime, Composite };

/// Strong probable-prime test. Bases 2..41 (deterministic below 3.3e24),
/// otherwise 64 bases drawn from a generator seeded by n. Throws
/// std::invalid_argument for n < 2.
MrResult miller_rabin(const mpz_class& n);

enum class ProthResult { Prime, Composite, Inconclusive };

/// Proth's theorem for n = h 2^e + 1, h odd: with a <= 100 a quadratic
/// non-residue, n is prime iff a^((n-1)/2) = -1 when h < 2^e. For larger h
/// a -1 is only accepted after Miller-Rabin agrees. Throws
/// std::invalid_argument for even h or e outside [1, 4096).
ProthResult proth_oracle(std::uint64_t h, unsigned e);

/// Affine points on y^2 = x^3 + a x + b over F_p, p prime < 2^24.
struct AffinePoint {
  std::uint64_t x = 0, y = 0;
  bool infinity = false;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

struct PrimeCurve {
  std::uint64_t p, a, b;
};

/// Chord-and-tangent addition with field inversion.
AffinePoint affine_group_law(const AffinePoint& P, const AffinePoint& Q, const PrimeCurve& c);

bool on_curve(const AffinePoint& P, const PrimeCurve& c);

/// Plain trial division.
bool is_prime_trial(std::uint64_t n);

}  // namespace cmprime::oracle
