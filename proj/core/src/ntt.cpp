#include "ntt.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <stdexcept>

namespace cmprime::detail {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kPrime = 0xFFFFFFFF00000001ULL;
constexpr u64 kEpsilon = 0xFFFFFFFFULL;  // 2^64 mod P
constexpr u64 kGenerator = 7;
constexpr unsigned kMaxLog = 31;
constexpr unsigned kDigitBits = 16;

// Branch-free: transform data is effectively random, so carries are
// unpredictable and branches would dominate the butterfly cost.
inline u64 add_mod(u64 a, u64 b) {
  u64 s;
  const u64 carry = __builtin_add_overflow(a, b, &s);
  s += (0 - carry) & kEpsilon;
  return s - (kPrime & (0 - static_cast<u64>(s >= kPrime)));
}

inline u64 sub_mod(u64 a, u64 b) {
  u64 d;
  const u64 borrow = __builtin_sub_overflow(a, b, &d);
  return d - ((0 - borrow) & kEpsilon);
}

inline u64 reduce128(u128 x) {
  const u64 lo = static_cast<u64>(x);
  const u64 hi = static_cast<u64>(x >> 64);
  const u64 hi_hi = hi >> 32;
  const u64 hi_lo = hi & kEpsilon;
  u64 t0;
  const u64 borrow = __builtin_sub_overflow(lo, hi_hi, &t0);
  t0 -= (0 - borrow) & kEpsilon;
  const u64 t1 = hi_lo * kEpsilon;
  u64 t2;
  const u64 carry = __builtin_add_overflow(t0, t1, &t2);
  t2 += (0 - carry) & kEpsilon;
  return t2 - (kPrime & (0 - static_cast<u64>(t2 >= kPrime)));
}

inline u64 mul_mod(u64 a, u64 b) { return reduce128(static_cast<u128>(a) * b); }

u64 pow_mod(u64 b, u64 e) {
  u64 r = 1;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, b);
    b = mul_mod(b, b);
    e >>= 1;
  }
  return r;
}

// Level l holds w^j, j < 2^l, for w a primitive 2^(l+1)-th root of unity.
// Levels are built once and never mutated afterwards.
struct RootTable {
  std::array<std::once_flag, kMaxLog> once;
  std::array<std::vector<u64>, kMaxLog> fwd;
  std::array<std::vector<u64>, kMaxLog> inv;

  void ensure(unsigned level) {
    std::call_once(once[level], [this, level] {
      const u64 half = u64{1} << level;
      const u64 w = pow_mod(kGenerator, (kPrime - 1) >> (level + 1));
      const u64 wi = pow_mod(w, kPrime - 2);
      std::vector<u64> f(half), g(half);
      u64 x = 1, y = 1;
      for (u64 j = 0; j < half; ++j) {
        f[j] = x;
        g[j] = y;
        x = mul_mod(x, w);
        y = mul_mod(y, wi);
      }
      fwd[level] = std::move(f);
      inv[level] = std::move(g);
    });
  }
};

RootTable& roots() {
  static RootTable table;
  return table;
}

// Decimation in frequency: natural order in, bit-reversed order out.
void transform_forward(Coeffs& a, unsigned log_len) {
  auto& table = roots();
  const std::size_t n = a.size();
  for (unsigned level = log_len; level-- > 0;) {
    table.ensure(level);
    const u64* w = table.fwd[level].data();
    const std::size_t half = std::size_t{1} << level;
    for (std::size_t start = 0; start < n; start += 2 * half) {
      u64* lo = a.data() + start;
      u64* hi = lo + half;
      for (std::size_t j = 0; j < half; ++j) {
        const u64 u = lo[j];
        const u64 v = hi[j];
        lo[j] = add_mod(u, v);
        hi[j] = mul_mod(sub_mod(u, v), w[j]);
      }
    }
  }
}

// Decimation in time: bit-reversed order in, natural order out, scaled by 1/n.
void transform_inverse(Coeffs& a, unsigned log_len) {
  auto& table = roots();
  const std::size_t n = a.size();
  for (unsigned level = 0; level < log_len; ++level) {
    table.ensure(level);
    const u64* w = table.inv[level].data();
    const std::size_t half = std::size_t{1} << level;
    for (std::size_t start = 0; start < n; start += 2 * half) {
      u64* lo = a.data() + start;
      u64* hi = lo + half;
      for (std::size_t j = 0; j < half; ++j) {
        const u64 u = lo[j];
        const u64 v = mul_mod(hi[j], w[j]);
        lo[j] = add_mod(u, v);
        hi[j] = sub_mod(u, v);
      }
    }
  }
  const u64 n_inv = pow_mod(static_cast<u64>(n), kPrime - 2);
  for (auto& x : a) x = mul_mod(x, n_inv);
}

std::size_t digit_count(std::size_t bits) {
  return (bits + kDigitBits - 1) / kDigitBits;
}

std::size_t bit_size(const mpz_class& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

void load_digits(const mpz_class& x, Coeffs& out) {
  const std::size_t limbs = mpz_size(x.get_mpz_t());
  const mp_limb_t* src = mpz_limbs_read(x.get_mpz_t());
  static_assert(sizeof(mp_limb_t) == 8, "64-bit limbs expected");
  std::size_t i = 0;
  for (std::size_t l = 0; l < limbs; ++l) {
    mp_limb_t limb = src[l];
    for (int j = 0; j < 4 && i < out.size(); ++j, ++i) {
      out[i] = limb & 0xFFFF;
      limb >>= 16;
    }
  }
}

mpz_class store_digits(const Coeffs& c) {
  // Each coefficient is the true (nonnegative) convolution value, < 2^63.
  const std::size_t limbs = c.size() / 4 + 3;
  mpz_class z;
  mp_limb_t* dst = mpz_limbs_write(z.get_mpz_t(), static_cast<mp_size_t>(limbs));
  std::fill(dst, dst + limbs, 0);
  u128 acc = 0;
  std::size_t i = 0;
  auto put = [&](u64 digit) {
    dst[i / 4] |= static_cast<mp_limb_t>(digit) << (16 * (i % 4));
    ++i;
  };
  for (u64 coeff : c) {
    acc += coeff;
    put(static_cast<u64>(acc & 0xFFFF));
    acc >>= 16;
  }
  while (acc != 0) {
    put(static_cast<u64>(acc & 0xFFFF));
    acc >>= 16;
  }
  std::size_t used = limbs;
  while (used > 0 && dst[used - 1] == 0) --used;
  mpz_limbs_finish(z.get_mpz_t(), static_cast<mp_size_t>(used));
  return z;
}

}  // namespace

unsigned ntt_log_length(std::size_t bits_a, std::size_t bits_b) {
  const std::size_t need = digit_count(bits_a) + digit_count(bits_b);
  const unsigned log_len =
      static_cast<unsigned>(std::bit_width(std::max<std::size_t>(need, 2) - 1));
  if (log_len > kMaxLog) throw std::length_error("ntt: operands too large");
  return log_len;
}

Coeffs ntt_forward(const mpz_class& x, unsigned log_len) {
  Coeffs a(std::size_t{1} << log_len, 0);
  if (digit_count(bit_size(x)) > a.size()) {
    throw std::length_error("ntt: operand does not fit the transform length");
  }
  load_digits(x, a);
  transform_forward(a, log_len);
  return a;
}

mpz_class ntt_product(const Coeffs& a_hat, const Coeffs& b_hat, unsigned log_len) {
  Coeffs c(a_hat.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = mul_mod(a_hat[i], b_hat[i]);
  transform_inverse(c, log_len);
  return store_digits(c);
}

mpz_class ntt_multiply(const mpz_class& a, const mpz_class& b) {
  if (sgn(a) < 0 || sgn(b) < 0) throw std::invalid_argument("ntt: negative operand");
  if (sgn(a) == 0 || sgn(b) == 0) return 0;
  const unsigned log_len = ntt_log_length(bit_size(a), bit_size(b));
  const Coeffs a_hat = ntt_forward(a, log_len);
  if (a == b) return ntt_product(a_hat, a_hat, log_len);
  return ntt_product(a_hat, ntt_forward(b, log_len), log_len);
}

BarrettNtt::BarrettNtt(const mpz_class& n) : n_(n) {
  if (n_ < 2) throw std::invalid_argument("BarrettNtt: modulus must be >= 2");
  k_ = bit_size(n_);
  mpz_class two_2k;
  mpz_ui_pow_ui(two_2k.get_mpz_t(), 2, 2 * k_);
  mu_ = two_2k / n_;
  log_len_ = ntt_log_length(k_ + 1, k_ + 1);
  mu_hat_ = ntt_forward(mu_, log_len_);
  n_hat_ = ntt_forward(n_, log_len_);
}

mpz_class BarrettNtt::reduce(const mpz_class& x) const {
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), x.get_mpz_t(), k_ - 1);
  q = ntt_product(ntt_forward(q, log_len_), mu_hat_, log_len_);
  mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), k_ + 1);
  mpz_class r = x - ntt_product(ntt_forward(q, log_len_), n_hat_, log_len_);
  while (r >= n_) r -= n_;
  return r;
}

mpz_class BarrettNtt::multiply(const mpz_class& a, const mpz_class& b) const {
  if (sgn(a) == 0 || sgn(b) == 0) return 0;
  const Coeffs a_hat = ntt_forward(a, log_len_);
  const Coeffs b_hat = ntt_forward(b, log_len_);
  return reduce(ntt_product(a_hat, b_hat, log_len_));
}

mpz_class BarrettNtt::square(const mpz_class& a) const {
  if (sgn(a) == 0) return 0;
  const Coeffs a_hat = ntt_forward(a, log_len_);
  return reduce(ntt_product(a_hat, a_hat, log_len_));
}

}  // namespace cmprime::detail
