#include "cmprime/prover2.hpp"

#include <string>

#include "cmprime/errors.hpp"

namespace cmprime {

BigInt proth9(unsigned long k) {
  BigInt f = 9;
  mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), k);
  return f + 1;
}

SqrtM2Embedding sqrt_m2_embedding(unsigned long k, const Modulus& mod) {
  if (k % 2 == 0) throw PreconditionError("sqrt_m2_embedding: k must be odd");
  const unsigned long m = (k - 1) / 2;
  BigInt g = 3;
  mpz_mul_2exp(g.get_mpz_t(), g.get_mpz_t(), m);
  if (m % 2 == 1) g = -g;
  auto inv = mod.inverse(mod.reduce(g));
  if (!std::holds_alternative<Residue>(inv)) {
    throw InternalInconsistency("3 (-2)^m is not a unit mod 1 + 9 * 2^k");
  }
  return SqrtM2Embedding{k, mod.value(), mod.neg(std::get<Residue>(inv))};
}

RingCurve curve2(const Modulus& mod) { return make_curve(mod, -78030, -7428456); }

RingPoint point2(const Modulus& mod, const Residue& s) {
  return affine_point(mod, 125 * s.value() - 604, -9190 * s.value() - 6700);
}

Verdict test2(unsigned long k, MulKernel kernel) {
  if (k % 8 != 1 || k < 17) {
    return DomainError{"k = " + std::to_string(k) + " needs k = 1 (mod 8) and k >= 17"};
  }
  const Modulus mod(proth9(k), kernel);
  const SqrtM2Embedding emb = sqrt_m2_embedding(k, mod);
  if (!(mod.sqr(emb.s) == mod.from_int(-2))) {
    return Composite{CompositeReason::EmbeddingFail, std::nullopt, "s^2 != -2"};
  }
  const RingCurve curve = curve2(mod);
  const BigInt disc = discriminant_gcd(curve);
  if (disc != 1) {
    return Composite{CompositeReason::FactorFound, disc, "discriminant shares a factor"};
  }
  const RingPoint p = point2(mod, emb.s);

  // 3P = 2P + P.
  auto sum = add_affine(double_point(p, curve), p, curve);
  if (auto* f = std::get_if<FactorRevealed>(&sum)) {
    return Composite{CompositeReason::FactorFound, f->factor, "while forming 3P"};
  }
  if (std::holds_alternative<ZeroResult>(sum)) {
    return Composite{CompositeReason::PrematureZero, std::nullopt, "3P is zero"};
  }

  auto chained = double_chain(std::get<RingPoint>(sum), (k - 1) / 2, curve);
  if (auto* deg = std::get_if<Degenerate>(&chained)) {
    return Composite{CompositeReason::DegeneratePoint, std::nullopt,
                     "doubling " + std::to_string(deg->step) + " gave (0:0:0)"};
  }
  const RingPoint& q = std::get<RingPoint>(chained);
  const Classification before = classify(q, mod);
  if (before.kind == PointClass::FactorRevealed) {
    return Composite{CompositeReason::FactorFound, before.factor, "gcd(z, F)"};
  }
  if (before.kind != PointClass::StronglyNonzero) {
    return Composite{CompositeReason::PrematureZero, std::nullopt,
                     std::string("2^((k-1)/2) (3P) is ") + to_string(before.kind)};
  }
  const RingPoint last = double_point(q, curve);
  const Classification after = classify(last, mod);
  if (after.kind == PointClass::Degenerate) {
    return Composite{CompositeReason::DegeneratePoint, std::nullopt, "last doubling"};
  }
  if (after.kind != PointClass::Zero) {
    if (after.kind == PointClass::FactorRevealed) {
      return Composite{CompositeReason::FactorFound, after.factor, "gcd(z, F)"};
    }
    return Composite{CompositeReason::FinalNonzero, std::nullopt,
                     "2^((k+1)/2) (3P) is not zero"};
  }
  const Residue x = mod.mul(q.x, std::get<Residue>(mod.inverse(q.z)));
  return Prime{std::nullopt, "2-torsion point x = " + x.to_string()};
}

}  // namespace cmprime
