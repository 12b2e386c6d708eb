#include "cmprime/ecring.hpp"

namespace cmprime {

RingCurve make_curve(const Modulus& mod, const BigInt& a4, const BigInt& a6) {
  return RingCurve{mod, mod.reduce(a4), mod.reduce(a6)};
}

RingPoint affine_point(const Modulus& mod, const BigInt& x, const BigInt& y) {
  return RingPoint{mod.reduce(x), mod.reduce(y), mod.one()};
}

RingPoint infinity(const Modulus& mod) { return RingPoint{mod.zero(), mod.one(), mod.zero()}; }

BigInt discriminant_gcd(const RingCurve& c) {
  const Modulus& m = c.mod;
  const Residue a4_3 = m.mul(m.sqr(c.a4), c.a4);
  const Residue disc = m.mul_si(m.add(m.mul_si(a4_3, 4), m.mul_si(m.sqr(c.a6), 27)), 16);
  return gcd(disc.value(), m.value());
}

bool is_on_curve(const RingPoint& p, const RingCurve& c) {
  const Modulus& m = c.mod;
  const Residue z2 = m.sqr(p.z);
  const Residue lhs = m.mul(m.sqr(p.y), p.z);
  Residue rhs = m.mul(m.sqr(p.x), p.x);
  rhs = m.add(rhs, m.mul(c.a4, m.mul(p.x, z2)));
  rhs = m.add(rhs, m.mul(c.a6, m.mul(z2, p.z)));
  return lhs == rhs;
}

RingPoint double_point(const RingPoint& p, const RingCurve& c) {
  const Modulus& m = c.mod;
  // The polynomial formulas vanish identically at Z = 0; 2O = O.
  if (m.is_zero(p.z) && !(m.is_zero(p.x) && m.is_zero(p.y))) return infinity(m);
  const Residue w = m.add(m.mul(c.a4, m.sqr(p.z)), m.mul_si(m.sqr(p.x), 3));
  const Residue s = m.mul(p.y, p.z);
  const Residue ys = m.mul(p.y, s);
  const Residue b = m.mul(p.x, ys);
  const Residue h = m.sub(m.sqr(w), m.mul_si(b, 8));
  RingPoint out;
  out.x = m.mul_si(m.mul(h, s), 2);
  out.y = m.sub(m.mul(w, m.sub(m.mul_si(b, 4), h)), m.mul_si(m.sqr(ys), 8));
  out.z = m.mul_si(m.mul(m.sqr(s), s), 8);
  return out;
}

std::variant<RingPoint, Degenerate> double_chain(const RingPoint& p, std::uint64_t n,
                                                 const RingCurve& c,
                                                 const ChainObserver& observer) {
  const Modulus& m = c.mod;
  RingPoint q = p;
  for (std::uint64_t i = 1; i <= n; ++i) {
    q = double_point(q, c);
    if (m.is_zero(q.x) && m.is_zero(q.y) && m.is_zero(q.z)) return Degenerate{i};
    if (observer) observer(i, q);
  }
  return q;
}

std::variant<RingPoint, NotInvertible> normalize(const RingPoint& p, const Modulus& mod) {
  auto inv = mod.inverse(p.z);
  if (auto* bad = std::get_if<NotInvertible>(&inv)) return *bad;
  const Residue& zi = std::get<Residue>(inv);
  return RingPoint{mod.mul(p.x, zi), mod.mul(p.y, zi), mod.one()};
}

std::variant<RingPoint, FactorRevealed, ZeroResult> add_affine(const RingPoint& p,
                                                               const RingPoint& q,
                                                               const RingCurve& c) {
  const Modulus& m = c.mod;
  auto np = normalize(p, m);
  auto nq = normalize(q, m);
  for (auto* v : {&np, &nq}) {
    if (auto* bad = std::get_if<NotInvertible>(v)) {
      if (bad->gcd == m.value()) throw std::invalid_argument("add_affine: point at infinity");
      return FactorRevealed{bad->gcd};
    }
  }
  const RingPoint& a = std::get<RingPoint>(np);
  const RingPoint& b = std::get<RingPoint>(nq);

  if (a.x == b.x) {
    if (m.is_zero(m.add(a.y, b.y))) return ZeroResult{};
    if (a.y == b.y) {
      const RingPoint d = double_point(a, c);
      auto nd = normalize(d, m);
      if (auto* bad = std::get_if<NotInvertible>(&nd)) {
        if (bad->gcd == m.value()) return ZeroResult{};
        return FactorRevealed{bad->gcd};
      }
      return std::get<RingPoint>(nd);
    }
  }
  // Over a field the cases above are exhaustive when x_a == x_b; over a ring
  // the denominator inversion below reports whatever factor is exposed.
  auto inv = m.inverse(m.sub(b.x, a.x));
  if (auto* bad = std::get_if<NotInvertible>(&inv)) {
    if (bad->gcd == m.value()) throw std::logic_error("add_affine: unreachable zero denominator");
    return FactorRevealed{bad->gcd};
  }
  const Residue lambda = m.mul(m.sub(b.y, a.y), std::get<Residue>(inv));
  const Residue x3 = m.sub(m.sub(m.sqr(lambda), a.x), b.x);
  const Residue y3 = m.sub(m.mul(lambda, m.sub(a.x, x3)), a.y);
  return RingPoint{x3, y3, m.one()};
}

Classification classify(const RingPoint& p, const Modulus& mod) {
  if (mod.is_zero(p.x) && mod.is_zero(p.y) && mod.is_zero(p.z)) {
    return {PointClass::Degenerate, 0};
  }
  if (mod.is_zero(p.z)) return {PointClass::Zero, 0};
  BigInt g = gcd(p.z.value(), mod.value());
  if (g == 1) return {PointClass::StronglyNonzero, 0};
  return {PointClass::FactorRevealed, std::move(g)};
}

const char* to_string(PointClass kind) {
  switch (kind) {
    case PointClass::Zero: return "zero";
    case PointClass::StronglyNonzero: return "strongly-nonzero";
    case PointClass::FactorRevealed: return "factor-revealed";
    case PointClass::Degenerate: return "degenerate";
  }
  return "?";
}

}  // namespace cmprime
