#include <gtest/gtest.h>

#include <random>

#include "cmprime/errors.hpp"
#include "cmprime/hverify.hpp"
#include "cmprime/prover15.hpp"

using namespace cmprime;

namespace {

const HResidueContext& ctx9() {
  static const HResidueContext c = build_context(9);
  return c;
}

const CheckResult* find(const MainTheoremReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::uint64_t> cubic_roots(const RingCurve& c) {
  const std::uint64_t p = c.mod.value().get_ui();
  const std::uint64_t a = c.a4.value().get_ui(), b = c.a6.value().get_ui();
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 0; x < p; ++x) {
    const unsigned __int128 v = (static_cast<unsigned __int128>(x) * x % p * x + a * x + b) % p;
    if (v == 0) out.push_back(x);
  }
  return out;
}

}  // namespace

TEST(BuildContext, InvariantsHold) {
  for (unsigned long k : {9UL, 123UL}) {
    const HResidueContext ctx = build_context(k);
    EXPECT_TRUE(context_violations(ctx).empty()) << k;
  }
}

TEST(BuildContext, RejectsCompositeF) { EXPECT_THROW(build_context(19), PreconditionError); }

TEST(BuildContext, SwappedSquareRootOfMinusThreeBreaksTheContext) {
  HResidueContext c = ctx9();
  const Modulus& m = c.mod;
  c.t = m.neg(c.t);
  c.u = m.mul(c.d, c.t);
  c.beta = m.mul(m.add(c.d, c.t), std::get<Residue>(m.inverse(m.from_int(2))));
  c.alpha = m.sqr(c.beta);
  const auto v = context_violations(c);
  EXPECT_NE(std::find(v.begin(), v.end(), "1 + 2 beta^k = 0"), v.end());
}

TEST(AlphaMap, DegreesAreFourAndThree) {
  const AlphaMap map(ctx9(), Conjugation::Direct);
  EXPECT_FALSE(ctx9().mod.is_zero(map.f()[4]));
  EXPECT_FALSE(ctx9().mod.is_zero(map.g()[3]));
}

TEST(AlphaMap, PolesAreTwoDistinctValues) {
  // g is cubic but has a double root, so only two x-values are poles.
  const AlphaMap map(ctx9(), Conjugation::Direct);
  const auto poles = alpha_poles(map, ctx9().mod);
  EXPECT_EQ(poles, (std::vector<std::uint64_t>{563602, 3078138}));
  const Modulus& m = ctx9().mod;
  const Residue r = m.from_int(563602);
  const Residue deriv = m.add(m.add(map.g()[1], m.mul_si(m.mul(map.g()[2], r), 2)),
                              m.mul_si(m.mul(map.g()[3], m.sqr(r)), 3));
  EXPECT_TRUE(m.is_zero(deriv));
  EXPECT_TRUE(std::holds_alternative<PoleAtX>(alpha_x(r, ctx9())));
}

TEST(AlphaMap, TwoTorsionPoints) {
  // E has full rational 2-torsion. The point the prover lands on is killed by
  // alpha (a pole); the other two 2-torsion points are not.
  const RingCurve c = context_curve(ctx9());
  const auto roots = cubic_roots(c);
  ASSERT_EQ(roots.size(), 3u);
  const Residue landing = torsion_x(ctx9());
  EXPECT_EQ(landing.value(), 3078138);
  int poles = 0;
  for (std::uint64_t x : roots) {
    auto r = alpha_x(c.mod.from_int(static_cast<long>(x)), ctx9());
    if (std::holds_alternative<PoleAtX>(r)) {
      ++poles;
      EXPECT_EQ(x, 3078138u);
    }
  }
  EXPECT_EQ(poles, 1);
}

TEST(AlphaMap, MinimalPolynomialHoldsOnlyForTheDirectReading) {
  const HResidueContext& ctx = ctx9();
  const RingCurve c = context_curve(ctx);
  const AlphaMap direct(ctx, Conjugation::Direct), swapped(ctx, Conjugation::Swapped);
  std::mt19937_64 rng(9);
  int tried = 0, direct_ok = 0, swapped_ok = 0;
  while (tried < 50) {
    const Residue x = c.mod.reduce(BigInt(static_cast<unsigned long>(rng() % 4191181)));
    const Residue rhs = c.mod.add(c.mod.add(c.mod.mul(c.mod.sqr(x), x), c.mod.mul(c.a4, x)), c.a6);
    if (jacobi(rhs.value(), c.mod.value()) != 1) continue;
    ++tried;
    direct_ok += minimal_polynomial_holds(direct, c, x);
    swapped_ok += minimal_polynomial_holds(swapped, c, x);
  }
  EXPECT_EQ(direct_ok, 50);
  EXPECT_LT(swapped_ok, 5);
}

TEST(AlphaMap, MatchesXOnlyDoublingOfAlphaSquaredMinusAlpha) {
  // alpha conj(alpha) = 4, so alpha applied twice after alpha-bar equals 4 alpha.
  // Checked indirectly through the homogeneous map: alpha(O) = O.
  const AlphaMap map(ctx9(), Conjugation::Direct);
  const Modulus& m = ctx9().mod;
  const XPoint o = map.apply(XPoint{m.one(), m.zero()});
  EXPECT_TRUE(m.is_zero(o.Z));
  EXPECT_FALSE(m.is_zero(o.X));
}

TEST(MainTheoremChecks, ReportAtK9) {
  const MainTheoremReport r = verify_mainthm_checks(9);
  EXPECT_EQ(r.convention, Conjugation::Direct);
  for (const auto& c : r.checks) {
    if (c.name == "d-torsion-x-stated") {
      EXPECT_FALSE(c.pass);
    } else {
      EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
    }
  }
  ASSERT_NE(find(r, "d-torsion-x-closed-form"), nullptr);
  EXPECT_NE(r.to_text().find("check k=9 b-4alpha^k-P-zero PASS"), std::string::npos);
}

TEST(MainTheoremChecks, ReportAtK123) {
  const MainTheoremReport r = verify_mainthm_checks(123, 10);
  for (const auto& c : r.checks) {
    if (c.name != "d-torsion-x-stated") {
      EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
    }
  }
  EXPECT_TRUE(find(r, "context-d-is-certificate-d")->pass);
}

TEST(CountPoints, NinthTermGroupOrder) {
  const BigInt n = count_points(9);
  EXPECT_EQ(n, 4194304);
  EXPECT_EQ(n, BigInt(1) << 22);
  EXPECT_EQ(n % 16, 0);
  const BigInt trace = fk_exact(9).F + 1 - n;
  EXPECT_LE(trace * trace, 4 * fk_exact(9).F);
}

TEST(CountPoints, ShardedCountMatches) { EXPECT_EQ(count_points(9, 3), count_points(9, 1)); }

TEST(CountPoints, BudgetIsEnforced) { EXPECT_THROW(count_points(123), PreconditionError); }
