#include <gtest/gtest.h>

#include <random>
#include <regex>

#include "cmprime/prover15.hpp"
#include "cmprime_oracles/oracles.hpp"

using namespace cmprime;

namespace {

Certificate certificate_for(unsigned long k) {
  const Verdict v = test15(k);
  return *std::get<Prime>(v).certificate;
}

bool has_failure(const CertificateReport& r, const std::string& name) {
  return std::find(r.failures.begin(), r.failures.end(), name) != r.failures.end();
}

}  // namespace

TEST(Test15, KnownPrimes) {
  EXPECT_TRUE(is_prime(test15(9)));
  EXPECT_TRUE(is_prime(test15(123)));
}

TEST(Test15, NineteenIsComposite) {
  const Verdict v = test15(19);
  ASSERT_TRUE(is_composite(v));
}

TEST(Test15, IndicesOutsideSAreRejected) {
  EXPECT_TRUE(std::holds_alternative<DomainError>(test15(27)));
  EXPECT_TRUE(std::holds_alternative<DomainError>(test15(0)));
  EXPECT_TRUE(std::holds_alternative<DomainError>(test15(10)));
}

TEST(Test15, DerivedSquareRootOfFiveCanHaveTheWrongSign) {
  // At k = 123 the derived d is -sqrt(5) at the relevant prime; only the
  // negated root reaches 2-torsion.
  const Verdict strict = test15(123, {MulKernel::Gmp, false});
  ASSERT_TRUE(is_composite(strict));
  EXPECT_EQ(std::get<Composite>(strict).reason, CompositeReason::FinalYNonzero);
  EXPECT_EQ(std::get<Prime>(test15(123)).evidence, "d negated");
  EXPECT_EQ(std::get<Prime>(test15(9)).evidence, "d as derived");
}

TEST(Test15, KernelsProduceTheSameCertificate) {
  const Certificate a = *std::get<Prime>(test15(123, {MulKernel::Gmp})).certificate;
  const Certificate b = *std::get<Prime>(test15(123, {MulKernel::Ntt})).certificate;
  EXPECT_EQ(a, b);
}

TEST(Test15, AgreesWithMillerRabinOnSUpTo600) {
  for (unsigned long k = 1; k <= 600; ++k) {
    if (!in_set(k, IndexSet::S)) continue;
    const Verdict v = test15(k);
    const bool mr = oracle::miller_rabin(fk_exact(k).F) == oracle::MrResult::ProbablePrime;
    EXPECT_EQ(is_prime(v), mr) << "k=" << k;
    if (auto* p = std::get_if<Prime>(&v)) {
      EXPECT_TRUE(verify_certificate(*p->certificate).ok) << k;
    }
    if (auto* c = std::get_if<Composite>(&v); c && c->factor) {
      EXPECT_EQ(c->reason, CompositeReason::FactorFound);
      EXPECT_GT(*c->factor, 1);
      EXPECT_LT(*c->factor, fk_exact(k).F);
      EXPECT_TRUE(mpz_divisible_p(fk_exact(k).F.get_mpz_t(), c->factor->get_mpz_t()));
    }
  }
}

TEST(Test15, IntermediatePointsStayOnTheCurve) {
  const FkValue fk = fk_exact(123);
  const Modulus mod(fk.F);
  const Certificate cert = certificate_for(123);
  const Residue d = mod.reduce(cert.d);
  const RingCurve c = curve15(mod, d);
  std::mt19937_64 rng(123);
  std::vector<std::uint64_t> sample;
  for (int i = 0; i < 16; ++i) sample.push_back(rng() % cert.doublings + 1);
  unsigned seen = 0;
  (void)double_chain(point15(mod, d), cert.doublings, c,
                     [&](std::uint64_t step, const RingPoint& q) {
                       if (std::find(sample.begin(), sample.end(), step) == sample.end()) return;
                       ++seen;
                       EXPECT_TRUE(is_on_curve(q, c)) << step;
                     });
  EXPECT_GE(seen, 1u);
}

TEST(Certificate, RoundTripsThroughJson) {
  const Certificate c = certificate_for(9);
  EXPECT_EQ(certificate_from_json(to_json(c)), c);
  EXPECT_TRUE(verify_certificate(c).ok);
  EXPECT_EQ(c.doublings, 19u);
  EXPECT_EQ(c.F, 4191181);
}

TEST(Certificate, JsonIsWhitespaceInsensitive) {
  const Certificate c = certificate_for(9);
  std::string compact = std::regex_replace(to_json(c), std::regex("[\\s]+"), "");
  EXPECT_EQ(certificate_from_json(compact), c);
  EXPECT_EQ(certificate_from_json("\n\n  " + to_json(c) + "\t\n"), c);
}

TEST(Certificate, JsonRejectsMalformedDocuments) {
  const std::string good = to_json(certificate_for(9));
  auto replaced = [&](const std::string& from, const std::string& to) {
    return std::regex_replace(good, std::regex(from), to);
  };
  EXPECT_THROW(certificate_from_json("not json"), CertificateFormatError);
  EXPECT_THROW(certificate_from_json("[]"), CertificateFormatError);
  EXPECT_THROW(certificate_from_json(replaced("cm15-cert-v1", "cm15-cert-v2")),
               CertificateFormatError);
  EXPECT_THROW(certificate_from_json(replaced("\"final_z\"", "\"final_y\"")),
               CertificateFormatError);
  EXPECT_THROW(certificate_from_json(replaced("\\{", "{\"extra\": 1,")), CertificateFormatError);
  EXPECT_THROW(certificate_from_json(replaced("\"d\": \"", "\"d\": \"-")), CertificateFormatError);
  EXPECT_THROW(certificate_from_json(replaced("\"d\": \"", "\"d\": \"0x")), CertificateFormatError);
  EXPECT_THROW(certificate_from_json(replaced("\"k\": 9", "\"k\": \"9\"")), CertificateFormatError);
  EXPECT_THROW(certificate_from_json(replaced("\"k\": 9", "\"k\": -9")), CertificateFormatError);
}

TEST(Certificate, PerturbedSquareRootIsRejected) {
  Certificate c = certificate_for(9);
  c.d += 1;
  const CertificateReport r = verify_certificate(c);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(has_failure(r, "d-squared-is-5"));
}

TEST(Certificate, ShortChainIsRejected) {
  Certificate c = certificate_for(9);
  c.doublings = 18;
  const CertificateReport r = verify_certificate(c);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(has_failure(r, "final-y-zero"));
}

TEST(Certificate, OtherTamperingIsRejected) {
  const Certificate good = certificate_for(123);
  Certificate c = good;
  c.F += 2;
  EXPECT_TRUE(has_failure(verify_certificate(c), "F-equals-F_k"));
  c = good;
  c.final_x = (c.final_x + 1) % c.F;
  EXPECT_TRUE(has_failure(verify_certificate(c), "final-point-matches"));
  c = good;
  c.final_z = 0;
  EXPECT_FALSE(verify_certificate(c).ok);
  c = good;
  c.a4 = (c.a4 + 1) % c.F;
  EXPECT_TRUE(has_failure(verify_certificate(c), "a4"));
  c = good;
  c.Py = (c.Py + 1) % c.F;
  EXPECT_TRUE(has_failure(verify_certificate(c), "Py"));
  c = good;
  c.d = c.F + c.d;
  EXPECT_TRUE(has_failure(verify_certificate(c), "residues-reduced"));
  EXPECT_TRUE(verify_certificate(good, MulKernel::Ntt).ok);
}

TEST(StrictTorsion, StatedIdentityDoesNotHold) {
  // The 2-torsion point the chain reaches is not at +-2643963 d - 5912081;
  // the hverify tests pin down where it actually is.
  EXPECT_FALSE(strict_torsion_check(certificate_for(9)));
  EXPECT_FALSE(strict_torsion_check(certificate_for(123)));
}

TEST(StrictTorsion, AcceptsEitherSignWhenTheIdentityIsMet) {
  Certificate c = certificate_for(9);
  const Modulus m(c.F);
  c.final_z = 1;
  c.final_x = m.reduce(BigInt(2643963) * c.d - 5912081).value();
  EXPECT_TRUE(strict_torsion_check(c));
  c.final_x = m.reduce(BigInt(-2643963) * c.d - 5912081).value();
  EXPECT_TRUE(strict_torsion_check(c));
  c.final_x += 1;
  EXPECT_FALSE(strict_torsion_check(c));
}

TEST(DeriveSqrt5, CompositeExitPaths) {
  EXPECT_TRUE(std::holds_alternative<Composite>(derive_sqrt5(Modulus(fk_exact(19).F))));
  // 61 = F_1: 5^15 = -1 mod 61, and the derived d squares to 5.
  auto r = derive_sqrt5(Modulus(61));
  ASSERT_TRUE(std::holds_alternative<Residue>(r));
  EXPECT_EQ(Modulus(61).sqr(std::get<Residue>(r)).value(), 5);
}

TEST(Verdict, TrialDivisionFallback) {
  const Verdict v = trial_division_verdict(4609);
  ASSERT_TRUE(is_composite(v));
  EXPECT_EQ(*std::get<Composite>(v).factor, 11);
  EXPECT_TRUE(is_prime(trial_division_verdict(37)));
  EXPECT_TRUE(is_prime(trial_division_verdict(2)));
  EXPECT_TRUE(std::holds_alternative<DomainError>(trial_division_verdict(1)));
}
