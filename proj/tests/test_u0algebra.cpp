#include <random>

#include "doctest.h"
#include "overchev/repmod.hpp"
#include "overchev/u0algebra.hpp"

using namespace overchev;
using Element = U0Algebra::Element;

namespace {

U0Algebra sl2_u0(u32 p) { return U0Algebra(RestrictedLieAlgebra('A', 1, p)); }

Element random_element(const U0Algebra& u, std::mt19937_64& rng, int n_terms) {
  Element out;
  auto monos = u.pbw_monomials();
  for (int t = 0; t < n_terms; ++t) {
    const Mono& m = monos[rng() % monos.size()];
    u32 c = static_cast<u32>(rng() % u.modulus());
    out = U0Algebra::add(out, Element{{m, c ? c : 1}}, u.modulus());
  }
  return out;
}

Mono mono_of(const U0Algebra& u, std::initializer_list<std::pair<std::size_t, int>> exps) {
  Mono m(u.num_generators(), 0);
  for (auto [i, e] : exps) m[i] = static_cast<std::uint8_t>(e);
  return m;
}

}  // namespace

TEST_CASE("straightening anchors in U0(sl2)") {
  U0Algebra u = sl2_u0(5);
  const std::size_t f = 0, h = 1, e = 2;

  // e f = f e + h
  Element ef = u.multiply(u.generator(e), u.generator(f));
  Element expected{{mono_of(u, {{f, 1}, {e, 1}}), 1}, {mono_of(u, {{h, 1}}), 1}};
  CHECK(ef == expected);

  // h f = f h - 2 f
  Element hf = u.multiply(u.generator(h), u.generator(f));
  Element expected2{{mono_of(u, {{f, 1}, {h, 1}}), 1}, {mono_of(u, {{f, 1}}), 5 - 2}};
  CHECK(hf == expected2);

  // e * e^{p-1} = 0
  Element etop = u.power(u.generator(e), 4);
  CHECK(u.multiply(u.generator(e), etop).empty());

  // h^p = h
  Element hp = u.power(u.generator(h), 5);
  CHECK(hp == u.generator(h));
}

TEST_CASE("associativity on random triples") {
  std::mt19937_64 rng(99);
  for (u32 p : {2u, 3u, 5u}) {
    U0Algebra u = sl2_u0(p);
    int trials = p == 5 ? 100 : 200;
    for (int t = 0; t < trials; ++t) {
      Element a = random_element(u, rng, 2), b = random_element(u, rng, 2),
              c = random_element(u, rng, 2);
      CHECK(u.multiply(u.multiply(a, b), c) == u.multiply(a, u.multiply(b, c)));
    }
  }
}

TEST_CASE("coproduct anchors") {
  U0Algebra u = sl2_u0(5);
  const std::size_t e = 2;
  Mono empty(3, 0);

  // primitive generator
  U0Algebra::Tensor de = u.coproduct(u.generator(e));
  U0Algebra::Tensor expect{{{mono_of(u, {{e, 1}}), empty}, 1},
                           {{empty, mono_of(u, {{e, 1}})}, 1}};
  CHECK(de == expect);

  // Delta(e^2) = e^2 (x) 1 + 2 e (x) e + 1 (x) e^2
  U0Algebra::Tensor de2 = u.coproduct(u.power(u.generator(e), 2));
  U0Algebra::Tensor expect2{{{mono_of(u, {{e, 2}}), empty}, 1},
                            {{mono_of(u, {{e, 1}}), mono_of(u, {{e, 1}})}, 2},
                            {{empty, mono_of(u, {{e, 2}})}, 1}};
  CHECK(de2 == expect2);

  CHECK(u.coproduct(u.one()) == U0Algebra::Tensor{{{empty, empty}, 1}});
}

TEST_CASE("coproduct is an algebra homomorphism") {
  std::mt19937_64 rng(123);
  for (u32 p : {2u, 3u}) {
    U0Algebra u = sl2_u0(p);
    for (int t = 0; t < 30; ++t) {
      Element a = random_element(u, rng, 2), b = random_element(u, rng, 2);
      CHECK(u.coproduct(u.multiply(a, b)) ==
            u.tensor_multiply(u.coproduct(a), u.coproduct(b)));
    }
  }
}

TEST_CASE("antipode anchors") {
  U0Algebra u = sl2_u0(5);
  const std::size_t f = 0, e = 2;

  Element se = u.antipode(u.generator(e));
  CHECK(se == U0Algebra::scale(u.generator(e), 4, 5));

  // S(f e) = S(e) S(f) = e f
  Element fe{{mono_of(u, {{f, 1}, {e, 1}}), 1}};
  CHECK(u.antipode(fe) == u.multiply(u.generator(e), u.generator(f)));

  CHECK(u.antipode(u.one()) == u.one());
}

TEST_CASE("antipode is an involution and satisfies the Hopf axiom") {
  for (u32 p : {2u, 3u, 5u}) {
    U0Algebra u = sl2_u0(p);
    for (const Mono& m : u.pbw_monomials()) {
      Element x{{m, 1}};
      CHECK(u.antipode(u.antipode(x)) == x);
      // multiply (S (x) id) Delta(x) = counit(x) 1
      U0Algebra::Tensor dx = u.coproduct(x);
      Element acc;
      for (const auto& [mm, c] : dx) {
        Element left = u.antipode(Element{{mm.first, 1}});
        Element prod = u.multiply(left, Element{{mm.second, 1}});
        acc = U0Algebra::add(acc, U0Algebra::scale(prod, c, p), p);
      }
      CHECK(acc == U0Algebra::scale(u.one(), u.counit(x), p));
    }
  }
}

TEST_CASE("exponential elements") {
  U0Algebra u3 = sl2_u0(3);
  const std::size_t e = 2;

  CHECK(u3.exp_element(u3.lie().zero()) == u3.one());

  // exp(e) = 1 + e + 2 e^2 at p = 3
  Element ee = u3.exp_element(u3.lie().basis_vector(u3.lie().pos_index(0)));
  Element expect{{Mono(3, 0), 1}, {mono_of(u3, {{e, 1}}), 1}, {mono_of(u3, {{e, 2}}), 2}};
  CHECK(ee == expect);

  // exp(x) exp(-x) = 1 for all cone points, p in {3,5}
  for (u32 p : {3u, 5u}) {
    U0Algebra u = sl2_u0(p);
    auto cone = u.lie().np_cone_points();
    for (const FpVec& x : cone.points) {
      FpVec neg(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) neg[i] = sub_mod(0, x[i], p);
      CHECK(u.multiply(u.exp_element(x), u.exp_element(neg)) == u.one());
    }
  }

  // non-p-nilpotent input is rejected
  U0Algebra u5 = sl2_u0(5);
  CHECK_THROWS_AS(u5.exp_element(u5.lie().basis_vector(u5.lie().cartan_index(0))),
                  std::invalid_argument);
}

TEST_CASE("exponential elements match the operator exponential on U0") {
  // left multiplication by exp(x) equals the truncated exponential of the
  // left regular action of x
  for (u32 p : {2u, 3u}) {
    U0Algebra u = sl2_u0(p);
    Representation reg = regular_rep_u0(u);
    auto monos = u.pbw_monomials();
    auto cone = u.lie().np_cone_points();
    for (const FpVec& x : cone.points) {
      Element ex = u.exp_element(x);
      FpMat left(monos.size(), monos.size(), p);
      for (std::size_t j = 0; j < monos.size(); ++j) {
        Element prod = u.multiply(ex, Element{{monos[j], 1}});
        for (const auto& [mm, c] : prod) left.set(u.mono_rank(mm), j, static_cast<i64>(c));
      }
      CHECK(left == exp_operator(reg, x, Fp(1, p)));
    }
  }
}

TEST_CASE("group-like deviation degrees") {
  // p = 2: deviation is exactly -(x (x) x)
  {
    U0Algebra u = sl2_u0(2);
    auto dev = u.deviation_degree(u.lie().pos_index(0));
    CHECK(dev.has_terms);
    CHECK(dev.min_max_degree == 1);
    CHECK(dev.min_total_degree == 2);
  }
  for (u32 p : {2u, 3u, 5u, 7u}) {
    U0Algebra u = sl2_u0(p);
    for (std::size_t idx : {u.lie().pos_index(0), u.lie().neg_index(0)}) {
      auto dev = u.deviation_degree(idx);
      CHECK(dev.has_terms);
      CHECK(dev.min_max_degree >= (p + 1) / 2);
      CHECK(dev.min_total_degree >= p);
    }
  }
}

TEST_CASE("left regular representation is faithful") {
  for (u32 p : {2u, 3u, 5u}) {
    U0Algebra u = sl2_u0(p);
    auto monos = u.pbw_monomials();
    std::size_t d = u.pbw_dimension();
    Echelon span(d * d, p);
    for (const Mono& m : monos) {
      FpVec flat(d * d, 0);
      for (std::size_t j = 0; j < monos.size(); ++j) {
        Element prod = u.multiply(Element{{m, 1}}, Element{{monos[j], 1}});
        FpVec col = u.to_vector(prod);
        for (std::size_t i = 0; i < d; ++i) flat[i * d + j] = col[i];
      }
      span.insert(flat);
    }
    CHECK(span.dim() == d);
  }
}

TEST_CASE("over-restricted enveloping dimension, double oracle") {
  {
    // p = 2: the ideal is generated by e and f themselves, and h = ef - fe
    // lies in it, so the quotient is the ground field.
    U0Algebra u = sl2_u0(2);
    auto dims = u.over_env_dimension();
    CHECK(dims.dim_closure == 1);
    CHECK(dims.dim_regular == 1);
  }
  for (u32 p : {3u, 5u}) {
    U0Algebra u = sl2_u0(p);
    auto dims = u.over_env_dimension();
    CHECK(dims.dim_closure == dims.dim_regular);
    CHECK(dims.dim_closure >= 1);
    CHECK(dims.dim_closure < dims.dim_u0);
    MESSAGE("dim U_over(sl2, p=", p, ") = ", dims.dim_closure);
  }
}
