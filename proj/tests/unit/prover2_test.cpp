#include <gtest/gtest.h>

#include "cmprime/errors.hpp"
#include "cmprime/prover2.hpp"
#include "cmprime_oracles/oracles.hpp"

using namespace cmprime;

TEST(Test2, DomainChecks) {
  EXPECT_TRUE(std::holds_alternative<DomainError>(test2(8)));
  EXPECT_TRUE(std::holds_alternative<DomainError>(test2(9)));
  EXPECT_TRUE(std::holds_alternative<DomainError>(test2(1)));
  EXPECT_TRUE(std::holds_alternative<DomainError>(test2(19)));
}

TEST(Test2, NineIsHandledByTrialDivision) {
  EXPECT_EQ(proth9(9), 4609);
  const Verdict v = trial_division_verdict(proth9(9));
  ASSERT_TRUE(is_composite(v));
  EXPECT_EQ(*std::get<Composite>(v).factor, 11);
}

TEST(Test2, MatchesProthAndMillerRabin) {
  for (unsigned long k = 17; k <= 201; k += 8) {
    const Verdict v = test2(k);
    ASSERT_FALSE(std::holds_alternative<DomainError>(v)) << k;
    const auto proth = oracle::proth_oracle(9, static_cast<unsigned>(k));
    const bool mr = oracle::miller_rabin(proth9(k)) == oracle::MrResult::ProbablePrime;
    ASSERT_NE(proth, oracle::ProthResult::Inconclusive) << k;
    EXPECT_EQ(is_prime(v), proth == oracle::ProthResult::Prime) << k;
    EXPECT_EQ(is_prime(v), mr) << k;
    if (auto* c = std::get_if<Composite>(&v); c && c->factor) {
      EXPECT_TRUE(mpz_divisible_p(proth9(k).get_mpz_t(), c->factor->get_mpz_t()));
    }
  }
}

TEST(Test2, KnownPrimesAndComposites) {
  EXPECT_TRUE(is_prime(test2(17)));
  EXPECT_TRUE(is_prime(test2(33)));
  EXPECT_TRUE(is_composite(test2(25)));
  EXPECT_TRUE(is_prime(test2(81, MulKernel::Ntt)));
}

TEST(SqrtM2Embedding, SquaresToMinusTwoWheneverFIsPrime) {
  for (unsigned long k = 3; k <= 401; k += 2) {
    const Modulus mod(proth9(k));
    const SqrtM2Embedding e = sqrt_m2_embedding(k, mod);
    if (mpz_probab_prime_p(e.F.get_mpz_t(), 30)) {
      EXPECT_EQ(mod.sqr(e.s), mod.from_int(-2)) << k;
    }
  }
}

TEST(SqrtM2Embedding, RejectsEvenK) {
  const Modulus mod(proth9(8));
  EXPECT_THROW(sqrt_m2_embedding(8, mod), PreconditionError);
}

TEST(Test2, ChainLengthIsThreeTimesTwoToTheHalf) {
  // 3P followed by (k+1)/2 doublings: the scalar is 3 * 2^((k+1)/2).
  const unsigned long k = 17;
  const Modulus mod(proth9(k));
  const SqrtM2Embedding e = sqrt_m2_embedding(k, mod);
  const RingCurve c = curve2(mod);
  const RingPoint p = point2(mod, e.s);
  ASSERT_TRUE(is_on_curve(p, c));
  auto three = std::get<RingPoint>(add_affine(double_point(p, c), p, c));
  const RingPoint before = std::get<RingPoint>(double_chain(three, (k - 1) / 2, c));
  const RingPoint after = std::get<RingPoint>(double_chain(three, (k + 1) / 2, c));
  EXPECT_EQ(classify(before, mod).kind, PointClass::StronglyNonzero);
  EXPECT_EQ(classify(after, mod).kind, PointClass::Zero);
}
