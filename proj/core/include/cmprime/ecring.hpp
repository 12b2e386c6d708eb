#pragma once

// Short-Weierstrass curves y^2 = x^3 + a4 x + a6 over Z/NZ, N possibly
// composite. Points are projective (X:Y:Z). Only doubling is a general
// operation; the polynomial formula needs no inversions, so it is defined
// over any ring, and failures surface as gcds with N.

#include <cstdint>
#include <functional>
#include <variant>

#include "cmprime/modarith.hpp"

namespace cmprime {

struct RingCurve {
  Modulus mod;
  Residue a4;
  Residue a6;
};

/// Builds the curve from integer coefficients (reduced mod N).
RingCurve make_curve(const Modulus& mod, const BigInt& a4, const BigInt& a6);

struct RingPoint {
  Residue x, y, z;
  friend bool operator==(const RingPoint&, const RingPoint&) = default;
};

RingPoint affine_point(const Modulus& mod, const BigInt& x, const BigInt& y);
RingPoint infinity(const Modulus& mod);

/// gcd(16 (4 a4^3 + 27 a6^2), N). 1 means the discriminant is a unit.
BigInt discriminant_gcd(const RingCurve& c);

/// Y^2 Z == X^3 + a4 X Z^2 + a6 Z^3.
bool is_on_curve(const RingPoint& p, const RingCurve& c);

/// W = a4 Z^2 + 3 X^2, S = Y Z, B = X Y S, H = W^2 - 8 B;
/// X' = 2 H S, Y' = W (4 B - H) - 8 (Y S)^2, Z' = 8 S^3.
RingPoint double_point(const RingPoint& p, const RingCurve& c);

struct Degenerate {
  std::uint64_t step = 0;  ///< 1-based doubling that produced (0:0:0)
};

/// Called after every doubling with the 1-based step number.
using ChainObserver = std::function<void(std::uint64_t step, const RingPoint&)>;

/// n doublings. Stops with Degenerate as soon as an intermediate point is
/// (0:0:0) mod N.
std::variant<RingPoint, Degenerate> double_chain(const RingPoint& p, std::uint64_t n,
                                                 const RingCurve& c,
                                                 const ChainObserver& observer = {});

struct FactorRevealed {
  BigInt factor;  ///< 1 < factor < N, factor | N
};
struct ZeroResult {};

/// Chord-and-tangent addition of two points with unit Z. The result has
/// Z = 1. Equal points go through double_point.
std::variant<RingPoint, FactorRevealed, ZeroResult> add_affine(const RingPoint& p,
                                                               const RingPoint& q,
                                                               const RingCurve& c);

/// Scales to Z = 1. NotInvertible when Z is not a unit.
std::variant<RingPoint, NotInvertible> normalize(const RingPoint& p, const Modulus& mod);

enum class PointClass { Zero, StronglyNonzero, FactorRevealed, Degenerate };

struct Classification {
  PointClass kind;
  BigInt factor;  ///< set only for FactorRevealed
};

/// Degenerate if X == Y == Z == 0; Zero if Z == 0; StronglyNonzero if
/// gcd(Z, N) = 1; otherwise FactorRevealed with gcd(Z, N).
Classification classify(const RingPoint& p, const Modulus& mod);

const char* to_string(PointClass kind);

}  // namespace cmprime
