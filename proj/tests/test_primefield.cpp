#include <random>
#include <vector>

#include "doctest.h"
#include "overchev/fp.hpp"
#include "overchev/fpmatrix.hpp"

using namespace overchev;

namespace {

// Independent binomial oracle: Pascal's triangle reduced mod p.
u32 pascal_binom(int n, int k, u32 p) {
  std::vector<std::vector<u32>> t(n + 1);
  for (int i = 0; i <= n; ++i) {
    t[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) t[i][j] = add_mod(t[i - 1][j - 1], t[i - 1][j], p);
  }
  return k <= n ? t[n][k] : 0;
}

// Independent oracle for negative arguments: the literal falling-factorial
// product n(n-1)...(n-k+1)/k! with k < p.
u32 falling_binom(i64 n, int k, u32 p) {
  u32 num = 1;
  for (int i = 0; i < k; ++i) num = mul_mod(num, reduce_mod(n - i, p), p);
  u32 den = 1;
  for (int i = 2; i <= k; ++i) den = mul_mod(den, i, p);
  return mul_mod(num, inv_mod(den, p), p);
}

}  // namespace

TEST_CASE("binom_mod anchors") {
  CHECK(binom_mod(5, 2, 3).residue() == 1);  // 10 mod 3
  CHECK(binom_mod(7, 0, 5).residue() == 1);
  CHECK(binom_mod(-3, 0, 7).residue() == 1);
  CHECK(binom_mod(5, 1, 5).residue() == 0);  // p choose 1
  CHECK(binom_mod(7, 1, 7).residue() == 0);
  CHECK_THROWS_AS(binom_mod(4, 2, 6), std::invalid_argument);
  CHECK_THROWS_AS(binom_mod(4, -1, 5), std::invalid_argument);
}

TEST_CASE("binom_mod agrees with Pascal for 0 <= n,k < p^2") {
  for (u32 p : {2u, 3u, 5u, 7u}) {
    for (int n = 0; n < static_cast<int>(p * p); ++n)
      for (int k = 0; k < static_cast<int>(p * p); ++k)
        CHECK(binom_mod(n, k, p).residue() == pascal_binom(n, k, p));
  }
}

TEST_CASE("binom_mod negative arguments via falling factorial") {
  for (u32 p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (int k = 0; k < static_cast<int>(p); ++k) {
      u32 expect = (k % 2 == 0) ? 1 : p - 1;  // (-1 choose k) = (-1)^k
      CHECK(binom_mod(-1, k, p).residue() == expect);
      CHECK(binom_mod(-1, k, p).residue() == falling_binom(-1, k, p));
      for (i64 n : {-2, -5, -7}) CHECK(binom_mod(n, k, p).residue() == falling_binom(n, k, p));
    }
  }
}

TEST_CASE("factorial_inverse") {
  CHECK(factorial_inverse(0, 7).residue() == 1);
  CHECK(factorial_inverse(2, 5).residue() == 3);  // 2*3 = 6 = 1 mod 5
  CHECK(factorial_inverse(4, 5).residue() == 4);  // 4! = 24 = 4, 4*4 = 16 = 1
  for (u32 p : {2u, 3u, 5u, 7u, 11u}) {
    u32 f = 1;
    for (u32 k = 0; k < p; ++k) {
      if (k >= 2) f = mul_mod(f, k, p);
      CHECK(mul_mod(f, factorial_inverse(k, p).residue(), p) == 1);
    }
    CHECK_THROWS_AS(factorial_inverse(p, p), std::invalid_argument);
  }
}

TEST_CASE("field axioms hold exactly") {
  for (u32 p : {2u, 3u, 5u, 7u}) {
    for (u32 a = 0; a < p; ++a)
      for (u32 b = 0; b < p; ++b) {
        Fp fa(a, p), fb(b, p);
        CHECK(fa + fb == fb + fa);
        CHECK(fa * fb == fb * fa);
        if (b != 0) CHECK((fa / fb) * fb == fa);
        for (u32 c = 0; c < p; ++c) {
          Fp fc(c, p);
          CHECK((fa + fb) + fc == fa + (fb + fc));
          CHECK((fa * fb) * fc == fa * (fb * fc));
          CHECK(fa * (fb + fc) == fa * fb + fa * fc);
        }
      }
  }
  CHECK_THROWS_AS(Fp(1, 4), std::invalid_argument);
}

TEST_CASE("dual numbers satisfy the chain rule on random polynomials") {
  std::mt19937_64 rng(2024);
  for (u32 p : {5u, 7u, 13u}) {
    for (int trial = 0; trial < 40; ++trial) {
      int deg = static_cast<int>(rng() % (p - 1));
      std::vector<u32> coeff(deg + 1);
      for (auto& c : coeff) c = static_cast<u32>(rng() % p);
      // formal derivative coefficients
      std::vector<u32> dcoeff;
      for (int i = 1; i <= deg; ++i) dcoeff.push_back(mul_mod(coeff[i], i % p, p));
      for (u32 a = 0; a < p; ++a) {
        Dual x = Dual::variable(Fp(a, p));
        Dual acc(Fp::zero(p));
        Dual xpow(Fp::one(p));
        for (int i = 0; i <= deg; ++i) {
          acc = acc + xpow * Dual(Fp(coeff[i], p));
          xpow = xpow * x;
        }
        u32 fa = 0, fda = 0, apow = 1;
        for (int i = 0; i <= deg; ++i) {
          fa = add_mod(fa, mul_mod(coeff[i], apow, p), p);
          apow = mul_mod(apow, a, p);
        }
        apow = 1;
        for (std::size_t i = 0; i < dcoeff.size(); ++i) {
          fda = add_mod(fda, mul_mod(dcoeff[i], apow, p), p);
          apow = mul_mod(apow, a, p);
        }
        CHECK(acc.value().residue() == fa);
        CHECK(acc.slope().residue() == fda);
      }
    }
  }
}

TEST_CASE("dual units and inverses") {
  Dual d(Fp(2, 5), Fp(3, 5));
  CHECK(d.is_unit());
  Dual one(Fp::one(5));
  CHECK(d * d.inverse() == one);
  Dual nonunit(Fp(0, 5), Fp(3, 5));
  CHECK(!nonunit.is_unit());
}

TEST_CASE("nullspace anchors") {
  FpMat z(4, 4, 5);
  CHECK(z.nullspace().size() == 4);
  CHECK(FpMat::identity(6, 3).nullspace().empty());

  // one free column: x + 2y = 0 over F_5
  FpMat m(1, 2, 5);
  m.set(0, 0, 1);
  m.set(0, 1, 2);
  auto ns = m.nullspace();
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][1] == 1);
  CHECK(add_mod(mul_mod(1, ns[0][0], 5), mul_mod(2, ns[0][1], 5), 5) == 0);
}

TEST_CASE("rank is invariant under row permutation") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    u32 p = (trial % 2) ? 5 : 3;
    FpMat m(6, 5, p);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 5; ++j) m.set(i, j, static_cast<i64>(rng() % p));
    std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
    for (std::size_t i = 5; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    FpMat shuffled(6, 5, p);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 5; ++j) shuffled.set(i, j, m.at(perm[i], j));
    CHECK(m.rank() == shuffled.rank());
  }
}

TEST_CASE("matrix inverse and multiplication") {
  FpMat a(2, 2, 7);
  a.set(0, 0, 1); a.set(0, 1, 3); a.set(1, 0, 2); a.set(1, 1, 1);
  auto inv = a.inverse();
  REQUIRE(inv.has_value());
  CHECK(a * *inv == FpMat::identity(2, 7));
  FpMat singular(2, 2, 7);
  singular.set(0, 0, 1); singular.set(0, 1, 2); singular.set(1, 0, 2); singular.set(1, 1, 4);
  CHECK(!singular.inverse().has_value());
  CHECK(singular.rank() == 1);
}

TEST_CASE("echelon span is canonical and incremental") {
  Echelon e(4, 5);
  CHECK(e.insert({1, 2, 0, 0}));
  CHECK(e.insert({0, 0, 1, 1}));
  CHECK(!e.insert({2, 4, 3, 3}));  // combination of the two
  CHECK(e.dim() == 2);
  CHECK(e.contains({1, 2, 1, 1}));
  CHECK(!e.contains({1, 0, 0, 0}));
}
