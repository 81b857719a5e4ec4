#ifndef OVERCHEV_FP_HPP
#define OVERCHEV_FP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace overchev {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline u32 check_prime_modulus(u64 p) {
  if (!is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return static_cast<u32>(p);
}

inline u32 reduce_mod(i64 x, u32 p) {
  i64 r = x % static_cast<i64>(p);
  if (r < 0) r += p;
  return static_cast<u32>(r);
}

inline u32 add_mod(u32 a, u32 b, u32 p) { return static_cast<u32>((u64(a) + b) % p); }
inline u32 sub_mod(u32 a, u32 b, u32 p) { return static_cast<u32>((u64(a) + p - b) % p); }
inline u32 mul_mod(u32 a, u32 b, u32 p) { return static_cast<u32>(u64(a) * b % p); }

inline u32 pow_mod(u32 a, u64 e, u32 p) {
  u64 r = 1 % p, b = a % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<u32>(r);
}

inline u32 inv_mod(u32 a, u32 p) {
  if (a % p == 0) throw std::domain_error("division by zero mod " + std::to_string(p));
  return pow_mod(a % p, p - 2, p);
}

/// Element of the prime field F_p.  Carries its modulus so values from
/// different fields cannot be mixed silently.
class Fp {
 public:
  Fp(i64 value, u32 p) : p_(check_prime_modulus(p)), v_(reduce_mod(value, p_)) {}

  u32 residue() const { return v_; }
  u32 modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(const Fp& o) const { return raw(add_mod(v_, same(o).v_, p_), p_); }
  Fp operator-(const Fp& o) const { return raw(sub_mod(v_, same(o).v_, p_), p_); }
  Fp operator*(const Fp& o) const { return raw(mul_mod(v_, same(o).v_, p_), p_); }
  Fp operator-() const { return raw(sub_mod(0, v_, p_), p_); }
  Fp inverse() const { return raw(inv_mod(v_, p_), p_); }
  Fp operator/(const Fp& o) const { return *this * same(o).inverse(); }
  Fp pow(u64 e) const { return raw(pow_mod(v_, e, p_), p_); }

  bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  static Fp zero(u32 p) { return Fp(0, p); }
  static Fp one(u32 p) { return Fp(1, p); }

 private:
  static Fp raw(u32 v, u32 p) {
    Fp f;
    f.v_ = v;
    f.p_ = p;
    return f;
  }
  Fp() : p_(2), v_(0) {}
  const Fp& same(const Fp& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed moduli in Fp arithmetic");
    return o;
  }
  u32 p_;
  u32 v_;
};

/// Dual number a + b*eps over F_p with eps^2 = 0.  The slope component
/// transports first derivatives through exact arithmetic.
class Dual {
 public:
  Dual(Fp value, Fp slope) : v_(value), s_(slope) {
    if (v_.modulus() != s_.modulus())
      throw std::invalid_argument("mixed moduli in Dual");
  }
  explicit Dual(Fp value) : Dual(value, Fp::zero(value.modulus())) {}

  const Fp& value() const { return v_; }
  const Fp& slope() const { return s_; }
  u32 modulus() const { return v_.modulus(); }

  Dual operator+(const Dual& o) const { return Dual(v_ + o.v_, s_ + o.s_); }
  Dual operator-(const Dual& o) const { return Dual(v_ - o.v_, s_ - o.s_); }
  Dual operator*(const Dual& o) const {
    return Dual(v_ * o.v_, v_ * o.s_ + s_ * o.v_);
  }
  Dual operator-() const { return Dual(-v_, -s_); }
  bool is_unit() const { return !v_.is_zero(); }
  Dual inverse() const {
    // (a + b eps)^-1 = a^-1 - a^-2 b eps
    Fp ai = v_.inverse();
    return Dual(ai, -(ai * ai * s_));
  }
  bool operator==(const Dual& o) const { return v_ == o.v_ && s_ == o.s_; }
  bool operator!=(const Dual& o) const { return !(*this == o); }

  static Dual variable(Fp at) { return Dual(at, Fp::one(at.modulus())); }

 private:
  Fp v_, s_;
};

/// Integer binomial coefficient "n choose k" reduced mod p, with the
/// falling-factorial convention for negative n:
///   binom(n,k) = n(n-1)...(n-k+1) / k!
/// For n >= 0 this agrees with Lucas' theorem digit by digit.
inline Fp binom_mod(i64 n, i64 k, u32 p) {
  check_prime_modulus(p);
  if (k < 0) throw std::invalid_argument("binom_mod: k must be nonnegative");
  if (k == 0) return Fp::one(p);
  if (n < 0) {
    // n(n-1)...(n-k+1)/k! = (-1)^k binom(k-n-1, k)
    Fp b = binom_mod(k - n - 1, k, p);
    return (k % 2 == 0) ? b : -b;
  }
  if (n < k) return Fp::zero(p);
  // Lucas: product of digit binomials base p.
  u64 nn = static_cast<u64>(n), kk = static_cast<u64>(k);
  u32 result = 1;
  while (kk > 0 || nn > 0) {
    u32 nd = static_cast<u32>(nn % p), kd = static_cast<u32>(kk % p);
    if (kd > nd) return Fp::zero(p);
    // small binomial nd choose kd with nd, kd < p
    u32 num = 1, den = 1;
    for (u32 i = 0; i < kd; ++i) {
      num = mul_mod(num, nd - i, p);
      den = mul_mod(den, i + 1, p);
    }
    result = mul_mod(result, mul_mod(num, inv_mod(den, p), p), p);
    nn /= p;
    kk /= p;
  }
  return Fp(result, p);
}

/// (k!)^{-1} mod p for 0 <= k < p.  Rejects k >= p: there the factorial is
/// divisible by p, which signals a truncated-exponential bug upstream.
inline Fp factorial_inverse(i64 k, u32 p) {
  check_prime_modulus(p);
  if (k < 0 || k >= static_cast<i64>(p))
    throw std::invalid_argument("factorial_inverse: need 0 <= k < p, got k=" +
                                std::to_string(k) + ", p=" + std::to_string(p));
  u32 f = 1;
  for (i64 i = 2; i <= k; ++i) f = mul_mod(f, static_cast<u32>(i), p);
  return Fp(inv_mod(f, p), p);
}

}  // namespace overchev

#endif
