#include "cmprime/modarith.hpp"

#include "ntt.hpp"

namespace cmprime {

std::string to_string(MulKernel kernel) {
  return kernel == MulKernel::Gmp ? "gmp" : "ntt";
}

MulKernel parse_kernel(const std::string& name) {
  if (name == "gmp") return MulKernel::Gmp;
  if (name == "ntt") return MulKernel::Ntt;
  throw std::invalid_argument("unknown multiplication kernel: " + name);
}

Modulus::Modulus(BigInt n, MulKernel kernel) : n_(std::move(n)), kernel_(kernel) {
  if (n_ < 2) throw std::invalid_argument("modulus must be >= 2");
  if (kernel_ == MulKernel::Ntt) ntt_ = std::make_shared<const detail::BarrettNtt>(n_);
}

std::size_t Modulus::bits() const { return mpz_sizeinbase(n_.get_mpz_t(), 2); }

Residue Modulus::reduce(const BigInt& x) const {
  BigInt r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), n_.get_mpz_t());
  return Residue(std::move(r));
}

Residue Modulus::from_int(long x) const { return reduce(BigInt(x)); }

Residue Modulus::one() const { return Residue(BigInt(1)); }

Residue Modulus::add(const Residue& a, const Residue& b) const {
  BigInt s = a.v_ + b.v_;
  if (s >= n_) s -= n_;
  return Residue(std::move(s));
}

Residue Modulus::sub(const Residue& a, const Residue& b) const {
  BigInt d = a.v_ - b.v_;
  if (sgn(d) < 0) d += n_;
  return Residue(std::move(d));
}

Residue Modulus::neg(const Residue& a) const {
  if (sgn(a.v_) == 0) return a;
  return Residue(n_ - a.v_);
}

Residue Modulus::reduce_product(BigInt&& product) const {
  mpz_tdiv_r(product.get_mpz_t(), product.get_mpz_t(), n_.get_mpz_t());
  return Residue(std::move(product));
}

Residue Modulus::mul(const Residue& a, const Residue& b) const {
  if (ntt_) return Residue(ntt_->multiply(a.v_, b.v_));
  BigInt p;
  mpz_mul(p.get_mpz_t(), a.v_.get_mpz_t(), b.v_.get_mpz_t());
  return reduce_product(std::move(p));
}

Residue Modulus::sqr(const Residue& a) const {
  if (ntt_) return Residue(ntt_->square(a.v_));
  BigInt p;
  mpz_mul(p.get_mpz_t(), a.v_.get_mpz_t(), a.v_.get_mpz_t());
  return reduce_product(std::move(p));
}

Residue Modulus::mul_si(const Residue& a, long c) const {
  BigInt p;
  mpz_mul_si(p.get_mpz_t(), a.v_.get_mpz_t(), c);
  return reduce(p);
}

Residue Modulus::pow(const Residue& base, const BigInt& exponent) const {
  if (sgn(exponent) < 0) throw std::invalid_argument("negative exponent");
  if (!ntt_) {
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.v_.get_mpz_t(), exponent.get_mpz_t(), n_.get_mpz_t());
    return Residue(std::move(r));
  }
  Residue r = one();
  for (std::size_t i = mpz_sizeinbase(exponent.get_mpz_t(), 2); i-- > 0;) {
    r = sqr(r);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) r = mul(r, base);
  }
  return r;
}

std::variant<Residue, NotInvertible> Modulus::inverse(const Residue& a) const {
  BigInt g = gcd(a.v_, n_);
  if (g != 1) return NotInvertible{std::move(g)};
  BigInt r;
  mpz_invert(r.get_mpz_t(), a.v_.get_mpz_t(), n_.get_mpz_t());
  return Residue(std::move(r));
}

Residue mod_pow(const Modulus& mod, const Residue& base, const BigInt& exponent) {
  return mod.pow(base, exponent);
}

std::variant<Residue, NotInvertible> mod_inv(const Modulus& mod, const Residue& a) {
  return mod.inverse(a);
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

int jacobi(const BigInt& a, const BigInt& n) {
  if (sgn(n) < 1 || mpz_even_p(n.get_mpz_t())) {
    throw std::invalid_argument("jacobi: n must be odd and positive");
  }
  return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

std::optional<Residue> sqrt_mod(const Residue& a, const Modulus& p) {
  if (p.is_zero(a)) return p.zero();
  const BigInt& n = p.value();
  if (n == 2) return a;
  if (jacobi(a.value(), n) != 1) return std::nullopt;

  // n - 1 = q * 2^s with q odd.
  BigInt q = n - 1;
  const auto s = static_cast<unsigned long>(mpz_scan1(q.get_mpz_t(), 0));
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);

  // The search is bounded so that composite n cannot loop forever.
  long z = 2;
  while (jacobi(BigInt(z), n) != -1) {
    if (++z > 100000) return std::nullopt;
  }

  unsigned long m = s;
  Residue c = p.pow(p.from_int(z), q);
  Residue t = p.pow(a, q);
  Residue r = p.pow(a, (q + 1) / 2);
  const Residue one = p.one();
  while (!(t == one)) {
    unsigned long i = 0;
    Residue t2 = t;
    while (!(t2 == one)) {
      t2 = p.sqr(t2);
      if (++i == m) return std::nullopt;
    }
    Residue b = c;
    for (unsigned long j = 0; j + i + 1 < m; ++j) b = p.sqr(b);
    m = i;
    c = p.sqr(b);
    t = p.mul(t, c);
    r = p.mul(r, b);
  }
  if (!(p.sqr(r) == a)) return std::nullopt;
  return r;
}

}  // namespace cmprime
