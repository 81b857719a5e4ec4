#ifndef OVERCHEV_U0ALGEBRA_HPP
#define OVERCHEV_U0ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "overchev/liealgebra.hpp"

namespace overchev {

/// PBW exponent vector over the ordered Lie basis (negative roots, Cartan,
/// positive roots), every exponent reduced below p.
using Mono = std::vector<std::uint8_t>;

/// Restricted enveloping algebra U_0(g) with the PBW basis, straightening
/// multiplication and the Hopf operations.  Elements are sparse maps from
/// canonical monomials to nonzero coefficients.
class U0Algebra {
 public:
  using Element = std::map<Mono, u32>;
  using Tensor = std::map<std::pair<Mono, Mono>, u32>;

  explicit U0Algebra(RestrictedLieAlgebra g);

  const RestrictedLieAlgebra& lie() const { return g_; }
  u32 modulus() const { return p_; }
  std::size_t num_generators() const { return n_; }

  Element zero() const { return {}; }
  Element one() const { return {{Mono(n_, 0), 1}}; }
  Element generator(std::size_t i) const;
  Element from_lie(const FpVec& x) const;

  static Element add(const Element& a, const Element& b, u32 p);
  static Element sub(const Element& a, const Element& b, u32 p);
  static Element scale(const Element& a, u32 c, u32 p);
  Element multiply(const Element& a, const Element& b) const;
  Element power(const Element& a, u32 k) const;

  Tensor coproduct(const Element& a) const;
  Element antipode(const Element& a) const;
  u32 counit(const Element& a) const;

  Tensor tensor_multiply(const Tensor& a, const Tensor& b) const;
  static Tensor tensor_add(const Tensor& a, const Tensor& b, u32 p);
  static Tensor tensor_sub(const Tensor& a, const Tensor& b, u32 p);

  /// Truncated exponential sum_{k<p} x^k / k! for p-nilpotent x.
  Element exp_element(const FpVec& x) const;

  /// Group-like deviation of exp(x) for a p-nilpotent basis element:
  /// the surviving terms of coproduct(exp x) - exp x (x) exp x are powers
  /// x^i (x) x^j; reports min max(i,j) and min (i+j) over them.
  struct Deviation {
    bool has_terms = false;
    i64 min_max_degree = 0;
    i64 min_total_degree = 0;
  };
  Deviation deviation_degree(std::size_t basis_index) const;

  /// Dimension of U_0 / <e_alpha^{floor((p+1)/2)}, alpha in Phi> computed by
  /// two independent oracles (two-sided ideal closure; rank of the left
  /// regular representation of the quotient).  Throws if they disagree.
  struct OverEnvDim {
    std::size_t dim_u0 = 0;
    std::size_t ideal_dim = 0;
    std::size_t dim_closure = 0;
    std::size_t dim_regular = 0;
  };
  OverEnvDim over_env_dimension() const;

  // --- full PBW enumeration (requires p^dim within desk scale) -------------
  std::size_t pbw_dimension() const;              // p^dim, guarded
  std::vector<Mono> pbw_monomials() const;        // mixed-radix odometer order
  std::size_t mono_rank(const Mono& m) const;
  FpVec to_vector(const Element& a) const;        // coordinates over monomials
  Weight mono_grade(const Mono& m) const;

 private:
  Element mono_times_generator(const Mono& m, std::size_t gen) const;
  Element elem_times_generator(const Element& a, std::size_t gen) const;
  Element mono_times_mono(const Mono& a, const Mono& b) const;
  Tensor coproduct_mono(const Mono& m) const;

  RestrictedLieAlgebra g_;
  u32 p_;
  std::size_t n_;
  mutable std::mutex memo_mu_;
  mutable std::map<std::pair<Mono, std::size_t>, Element> memo_;
};

}  // namespace overchev

#endif
