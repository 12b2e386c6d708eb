#include "cmprime/prover15.hpp"

#include <string>

namespace cmprime {
namespace {

struct ChainOutcome {
  std::optional<Certificate> certificate;  // set when the chain proves primality
  Composite failure{CompositeReason::FinalYNonzero, std::nullopt, {}};
};

ChainOutcome run_chain(const FkValue& fk, const Modulus& mod, const Residue& d) {
  const RingCurve curve = curve15(mod, d);
  const RingPoint p = point15(mod, d);
  ChainOutcome out;

  const BigInt disc = discriminant_gcd(curve);
  if (disc != 1 && disc != mod.value()) {
    out.failure = {CompositeReason::FactorFound, disc, "discriminant shares a factor"};
    return out;
  }

  const std::uint64_t n = 2 * static_cast<std::uint64_t>(fk.k) + 1;
  auto chained = double_chain(p, n, curve);
  if (auto* deg = std::get_if<Degenerate>(&chained)) {
    out.failure = {CompositeReason::DegeneratePoint, std::nullopt,
                   "doubling " + std::to_string(deg->step) + " gave (0:0:0)"};
    return out;
  }
  const RingPoint& q = std::get<RingPoint>(chained);
  const BigInt g = gcd(q.z.value(), mod.value());
  if (g != 1 && g != mod.value()) {
    out.failure = {CompositeReason::FactorFound, g, "gcd(z, F) is a proper factor"};
    return out;
  }
  if (!mod.is_zero(q.y)) {
    out.failure = {CompositeReason::FinalYNonzero, std::nullopt, "y != 0 after the chain"};
    return out;
  }
  if (g != 1) {
    out.failure = {CompositeReason::FinalZNotCoprime, std::nullopt, "z == 0 after the chain"};
    return out;
  }
  Certificate c;
  c.k = fk.k;
  c.F = fk.F;
  c.d = d.value();
  c.a4 = curve.a4.value();
  c.a6 = curve.a6.value();
  c.Py = p.y.value();
  c.doublings = n;
  c.final_x = q.x.value();
  c.final_z = q.z.value();
  out.certificate = std::move(c);
  return out;
}

}  // namespace

RingCurve curve15(const Modulus& mod, const Residue& d) {
  const BigInt dv = d.value();
  const BigInt a4 = BigInt(-3234) * (BigInt("16195646845") - BigInt("7242913457") * dv);
  const BigInt a6 =
      BigInt(38416) * (BigInt("5395199151946361") - BigInt("2412806411180256") * dv);
  return make_curve(mod, a4, a6);
}

RingPoint point15(const Modulus& mod, const Residue& d) {
  return affine_point(mod, 0, BigInt("-10179930516") + BigInt("4552603328") * d.value());
}

std::variant<Residue, Composite> derive_sqrt5(const Modulus& mod) {
  const BigInt& f = mod.value();
  const Residue five = mod.from_int(5);
  const Residue r = mod.pow(five, (f - 1) / 4);
  const bool plus = r == mod.one();
  if (!plus && !(r == mod.from_int(-1))) {
    return Composite{CompositeReason::Step1NonResidue, std::nullopt,
                     "5^((F-1)/4) is not +-1"};
  }
  const BigInt e = (f - 5) / 8;
  Residue d = mod.pow(five, e + 1);
  if (!plus) d = mod.mul(d, mod.pow(mod.from_int(2), 2 * e + 1));
  if (!(mod.sqr(d) == five)) {
    return Composite{CompositeReason::Step4SqrtFail, std::nullopt, "d^2 != 5"};
  }
  return d;
}

Verdict test15(unsigned long k, const Test15Options& options) {
  if (!in_set(k, IndexSet::S)) {
    return DomainError{"k = " + std::to_string(k) + " is not in S"};
  }
  const FkValue fk = fk_exact(k);
  const Modulus mod(fk.F, options.kernel);

  auto root = derive_sqrt5(mod);
  if (auto* c = std::get_if<Composite>(&root)) return *c;
  const Residue d = std::get<Residue>(root);

  ChainOutcome first = run_chain(fk, mod, d);
  if (first.certificate) return Prime{std::move(first.certificate), "d as derived"};
  if (first.failure.reason != CompositeReason::FinalYNonzero || !options.retry_negated_d) {
    return first.failure;
  }
  // The derived d may be -sqrt(5) at the prime above F_k that the point
  // order argument uses; the conjugate curve then has no 2-torsion at the
  // end of the chain. The other sign is an equally valid square root.
  ChainOutcome second = run_chain(fk, mod, mod.neg(d));
  if (second.certificate) return Prime{std::move(second.certificate), "d negated"};
  if (second.failure.reason == CompositeReason::FactorFound) return second.failure;
  return first.failure;
}

}  // namespace cmprime
