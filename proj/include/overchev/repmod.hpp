#ifndef OVERCHEV_REPMOD_HPP
#define OVERCHEV_REPMOD_HPP

#include <optional>
#include <set>
#include <vector>

#include "overchev/liealgebra.hpp"
#include "overchev/u0algebra.hpp"

namespace overchev {

/// Restricted representation: one matrix per Lie basis element, with an
/// optional X(T)-grading of the module basis.
class Representation {
 public:
  Representation(RestrictedLieAlgebra g, std::vector<FpMat> matrices,
                 std::optional<std::vector<Weight>> grading = std::nullopt);

  const RestrictedLieAlgebra& lie() const { return g_; }
  u32 modulus() const { return g_.modulus(); }
  std::size_t dimension() const { return dim_; }
  const FpMat& matrix(std::size_t basis_index) const { return mats_[basis_index]; }
  FpMat act(const FpVec& x) const;

  bool graded() const { return grading_.has_value(); }
  const std::vector<Weight>& grading() const;
  std::set<Weight> weight_set() const;

  /// theta([x,y]) = [theta(x), theta(y)] on all basis pairs.
  bool is_homomorphism() const;
  /// If graded, theta(e_beta) shifts grades by beta.
  bool grading_compatible() const;

  void corrupt_entry(std::size_t basis_index, std::size_t i, std::size_t j);  // tests

 private:
  RestrictedLieAlgebra g_;
  std::size_t dim_;
  std::vector<FpMat> mats_;
  std::optional<std::vector<Weight>> grading_;
};

/// sl2 Weyl module V(m): h v_i = (m-2i) v_i, f v_i = (i+1) v_{i+1},
/// e v_i = (m-i+1) v_{i-1}, graded by m-2i.
Representation weyl_module_sl2(int m, u32 p);

Representation adjoint_rep(const RestrictedLieAlgebra& g);

/// Left regular representation of g on U_0(g) over the PBW basis, graded by
/// the root-lattice grade of the monomials.
Representation regular_rep_u0(const U0Algebra& u);

/// theta(x)^p = theta(x^[p]) on all basis elements.
bool is_restricted(const Representation& rep);

struct OverRestrictedVerdict {
  bool over_restricted = false;
  bool certified = false;       // exhaustive cone enumeration
  std::size_t checked = 0;
  std::optional<FpVec> counterexample;
};

/// theta(x)^{floor((p+1)/2)} = 0 for all p-nilpotent x: exhaustive over the
/// F_p-cone when feasible, sampled (non-certifying) otherwise.
OverRestrictedVerdict is_over_restricted(const Representation& rep, bool exhaustive = true,
                                         u64 seed = 0xC0FFEE, int samples = 200);

/// xi of a weight set: least n >= 1 with X and X + n alpha disjoint for all
/// roots alpha.
int height_of_weight_set(const RootSystem& rs, const std::set<Weight>& weights);
int height(const Representation& rep);

/// Truncated exponential of t*x on the module; rejects non-nilpotent action.
FpMat exp_operator(const Representation& rep, const FpVec& x, const Fp& t);

/// Dual-number variant: value exp(theta(a x)) with its derivative in a.
DualMat exp_operator_dual(const Representation& rep, const FpVec& x, const Dual& t);

/// Exact check of theta(e^{ad x} y) = e^{theta x} theta(y) e^{-theta x}.
bool verify_abs_chev(const Representation& rep, const FpVec& x, const FpVec& y);

}  // namespace overchev

#endif
