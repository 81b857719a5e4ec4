#include <random>

#include "doctest.h"
#include "overchev/groupgen.hpp"

using namespace overchev;

namespace {

std::size_t sl2_order(u32 p) { return std::size_t(p) * (p * p - 1); }

}  // namespace

TEST_CASE("BFS group orders for sl2 modules") {
  // |SL2(F_p)| on the natural module
  CHECK(pseudo_chevalley_group(weyl_module_sl2(1, 3), GeneratorPolicy::RootExponentials)
            .order() == 24);
  CHECK(pseudo_chevalley_group(weyl_module_sl2(1, 5), GeneratorPolicy::RootExponentials)
            .order() == 120);
  CHECK(pseudo_chevalley_group(weyl_module_sl2(1, 7), GeneratorPolicy::RootExponentials)
            .order() == 336);
  for (u32 p : {3u, 5u, 7u})
    CHECK(pseudo_chevalley_group(weyl_module_sl2(1, p), GeneratorPolicy::RootExponentials)
              .order() == sl2_order(p));

  // |PSL2(F_p)| on the adjoint module
  RestrictedLieAlgebra g3('A', 1, 3), g5('A', 1, 5);
  CHECK(pseudo_chevalley_group(adjoint_rep(g3), GeneratorPolicy::RootExponentials).order() ==
        12);
  CHECK(pseudo_chevalley_group(adjoint_rep(g5), GeneratorPolicy::RootExponentials).order() ==
        60);
}

TEST_CASE("identity generators give the trivial group") {
  MatrixGroup g({FpMat::identity(3, 5)}, {{"id", 1}}, 100);
  CHECK(g.order() == 1);
  CHECK(g.word_diameter() == 0);
}

TEST_CASE("group closure under products and inverses") {
  MatrixGroup g = pseudo_chevalley_group(weyl_module_sl2(1, 5),
                                         GeneratorPolicy::RootExponentials);
  REQUIRE(g.closed());
  std::mt19937_64 rng(31337);
  for (int t = 0; t < 1000; ++t) {
    const FpMat& a = g.elements()[rng() % g.order()];
    const FpMat& b = g.elements()[rng() % g.order()];
    CHECK(g.contains(a * b));
    CHECK(g.contains(*a.inverse()));
  }
  // canonical words evaluate to their elements
  for (std::size_t i = 0; i < g.order(); ++i)
    CHECK(g.eval_word(g.words()[i]) == g.elements()[i]);
}

TEST_CASE("root-exponential and full-cone policies agree on sl2 natural") {
  CHECK(generator_policies_agree(weyl_module_sl2(1, 3)));
  CHECK(generator_policies_agree(weyl_module_sl2(1, 5)));
}

TEST_CASE("regular representation of U0(sl2) at p=2") {
  U0Algebra u(RestrictedLieAlgebra('A', 1, 2));
  Representation reg = regular_rep_u0(u);
  MatrixGroup by_roots = pseudo_chevalley_group(reg, GeneratorPolicy::RootExponentials);
  MatrixGroup by_cone = pseudo_chevalley_group(reg, GeneratorPolicy::FullCone);
  CHECK(by_roots.order() == 12);
  // the cone point e+f+h generates beyond the root exponentials here
  CHECK(by_cone.order() == 24);
  CHECK(!generator_policies_agree(reg));
  for (const FpMat& m : by_roots.elements()) CHECK(by_cone.contains(m));
}

TEST_CASE("element cap aborts cleanly") {
  MatrixGroup g = pseudo_chevalley_group(weyl_module_sl2(1, 5),
                                         GeneratorPolicy::RootExponentials, 50);
  CHECK(!g.closed());
  CHECK(g.order() <= 50);
}

TEST_CASE("phi for the natural module at p=5: kernel {+-I}") {
  PhiVerdict v = build_phi(weyl_module_sl2(1, 5));
  CHECK(v.closed);
  CHECK(v.gv_order == 120);
  CHECK(v.gg_order == 60);
  CHECK(v.is_function);
  CHECK(v.kernel_size == 2);
  CHECK(v.kernel_central);
  CHECK(v.kernel_in_aut);
  CHECK(v.counts_consistent);
  CHECK(v.gv_order % v.kernel_size == 0);  // Lagrange sanity
  CHECK(v.gv_order == v.kernel_size * v.gg_order);
}

TEST_CASE("phi for an over-restricted faithful module: V(2) at p=5") {
  PhiVerdict v = build_phi(weyl_module_sl2(2, 5));
  CHECK(v.closed);
  CHECK(v.is_function);
  CHECK(v.kernel_central);
  CHECK(v.kernel_in_aut);
  CHECK(v.counts_consistent);
  MESSAGE("V(2) p=5: |G_V| = ", v.gv_order, ", |G_g| = ", v.gg_order,
          ", kernel = ", v.kernel_size);
}

TEST_CASE("phi degenerates on the trivial module") {
  PhiVerdict v = build_phi(weyl_module_sl2(0, 5));
  CHECK(v.gv_order == 1);
  CHECK(v.kernel_size == v.gv_order);  // the kernel is all of G_V
  CHECK(v.kernel_central);
  CHECK(v.kernel_in_aut);
  // the graph carries the whole adjoint group; the function verdict is a
  // reported cardinality comparison
  CHECK(v.graph_order == v.gg_order);
  MESSAGE("trivial module: function verdict = ", v.is_function);
}

TEST_CASE("tangent space of G_V for sl2 natural at p=5") {
  Representation nat = weyl_module_sl2(1, 5);
  RestrictedLieAlgebra g('A', 1, 5);
  MatrixGroup gv = pseudo_chevalley_group(nat, GeneratorPolicy::RootExponentials);
  std::vector<FpVec> dirs{g.basis_vector(g.pos_index(0)), g.basis_vector(g.neg_index(0))};
  TangentSpace ts = tangent_space(nat, dirs, gv);
  CHECK(ts.dimension == 3);
  CHECK(ts.stabilized);
  CHECK(ts.first_order_matches);

  // g_1 span: theta of the cone points spans an operator space of dimension
  // dim g_1; here g_0 (bracket closure of the cone) has the same dimension
  auto cone = g.np_cone_points();
  Echelon theta_span(4, 5);
  for (const FpVec& x : cone.points) {
    FpMat m = nat.act(x);
    theta_span.insert({m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)});
  }
  CHECK(theta_span.dim() == cone.span_dim);
  auto sub = g.generated_subalgebra(cone.points);
  CHECK(sub.basis.size() == cone.span_dim);
  CHECK(ts.dimension == sub.basis.size());
}

TEST_CASE("word diameter is deterministic across runs") {
  Representation nat = weyl_module_sl2(1, 3);
  MatrixGroup a = pseudo_chevalley_group(nat, GeneratorPolicy::RootExponentials);
  MatrixGroup b = pseudo_chevalley_group(nat, GeneratorPolicy::RootExponentials);
  CHECK(a.word_diameter() == b.word_diameter());
  CHECK(a.word_diameter() <= static_cast<int>(a.order()));
  REQUIRE(a.order() == b.order());
  for (std::size_t i = 0; i < a.order(); ++i) {
    CHECK(a.elements()[i] == b.elements()[i]);
    CHECK(a.words()[i] == b.words()[i]);
  }
  CHECK(group_report_json(a) == group_report_json(b));
}

TEST_CASE("group report JSON shape") {
  MatrixGroup g = pseudo_chevalley_group(weyl_module_sl2(1, 3),
                                         GeneratorPolicy::RootExponentials);
  std::string js = group_report_json(g);
  CHECK(js.find("\"schema_version\"") != std::string::npos);
  CHECK(js.find("\"order\": 24") != std::string::npos);
  CHECK(js.find("\"generators\"") != std::string::npos);
}
