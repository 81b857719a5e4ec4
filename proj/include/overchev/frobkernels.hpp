#ifndef OVERCHEV_FROBKERNELS_HPP
#define OVERCHEV_FROBKERNELS_HPP

#include "overchev/groupgen.hpp"
#include "overchev/repmod.hpp"

namespace overchev {

/// Divided-power operators of the n-th Frobenius kernel on the sl2 Weyl
/// module V(m): e^(k), f^(k) and binomial Cartan operators for 0 <= k < p^n,
/// with the integral-form coefficient rules
///   e^(k) v_i = binom(m-i+k, k) v_{i-k}
///   f^(k) v_i = binom(i+k, k)   v_{i+k}
///   (h choose k) v_i = binom(m-2i, k) v_i.
class DividedPowerAction {
 public:
  enum class Kind { E, F, HBinom };

  DividedPowerAction(int m, u32 p, int n);

  int highest_weight() const { return m_; }
  u32 modulus() const { return p_; }
  int level() const { return n_; }
  u64 q() const { return q_; }  // p^n
  std::size_t dimension() const { return static_cast<std::size_t>(m_) + 1; }

  FpMat divided_matrix(Kind kind, u64 k) const;

  /// Y_{+-alpha}(t) = sum_{k<p^n} t^k theta(e_{+-alpha}^(k)); a one-parameter
  /// subgroup: Y(t) Y(s) = Y(t+s).
  FpMat y_operator(bool positive_root, const Fp& t) const;

  /// theta(e^(k)) = theta(f^(k)) = 0 for all k >= floor((p^n+1)/2).
  bool n_over_restricted() const;

  /// Hopf-expansion evaluation of theta(ad(Z_alpha(t))(d)) against
  /// Y_alpha(t) theta(d) Y_alpha(-t); exact matrix equality.
  bool verify_abs_n_chev(bool positive_root, const Fp& t, const FpMat& d) const;

  FpMat theta_e() const { return divided_matrix(Kind::E, 1); }
  FpMat theta_f() const { return divided_matrix(Kind::F, 1); }
  FpMat theta_h() const;

 private:
  int m_;
  u32 p_;
  int n_;
  u64 q_;
};

/// Integral divided adjoint powers (ad e_{+-alpha})^(k) of sl2 reduced mod p
/// (basis order f, h, e); zero for k >= 3.
FpMat sl2_adjoint_divided(bool positive_root, u64 k, u32 p);

/// Adjoint one-parameter operator sum_{k<q} t^k (ad e_{+-alpha})^(k).
FpMat sl2_adjoint_y(bool positive_root, const Fp& t, u64 q);

/// Graph-subgroup verdict for phi: G_{(n),V} -> G_{(n),g} with divided-power
/// exponential generators.
PhiVerdict build_phi_frobenius(const DividedPowerAction& action,
                               std::size_t cap = kDefaultElementCap);

}  // namespace overchev

#endif
