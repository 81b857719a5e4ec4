#include "overchev/frobkernels.hpp"

#include <stdexcept>

namespace overchev {

DividedPowerAction::DividedPowerAction(int m, u32 p, int n)
    : m_(m), p_(check_prime_modulus(p)), n_(n) {
  if (m < 0) throw std::invalid_argument("DividedPowerAction: m >= 0 required");
  if (n < 1) throw std::invalid_argument("DividedPowerAction: n >= 1 required");
  q_ = 1;
  for (int i = 0; i < n; ++i) {
    q_ *= p_;
    if (q_ > (1u << 20)) throw std::invalid_argument("DividedPowerAction: p^n too large");
  }
}

FpMat DividedPowerAction::divided_matrix(Kind kind, u64 k) const {
  const std::size_t d = dimension();
  FpMat out(d, d, p_);
  for (std::size_t i = 0; i < d; ++i) {
    i64 ii = static_cast<i64>(i), kk = static_cast<i64>(k);
    switch (kind) {
      case Kind::E:
        if (i >= k)
          out.set(i - k, i, static_cast<i64>(binom_mod(m_ - ii + kk, kk, p_).residue()));
        break;
      case Kind::F:
        if (i + k < d)
          out.set(i + k, i, static_cast<i64>(binom_mod(ii + kk, kk, p_).residue()));
        break;
      case Kind::HBinom:
        out.set(i, i, static_cast<i64>(binom_mod(m_ - 2 * ii, kk, p_).residue()));
        break;
    }
  }
  return out;
}

FpMat DividedPowerAction::theta_h() const {
  const std::size_t d = dimension();
  FpMat out(d, d, p_);
  for (std::size_t i = 0; i < d; ++i) out.set(i, i, m_ - 2 * static_cast<i64>(i));
  return out;
}

FpMat DividedPowerAction::y_operator(bool positive_root, const Fp& t) const {
  if (t.modulus() != p_) throw std::invalid_argument("y_operator: modulus mismatch");
  const std::size_t d = dimension();
  FpMat out(d, d, p_);
  Fp tk = Fp::one(p_);
  for (u64 k = 0; k < q_; ++k) {
    if (k) tk = tk * t;
    if (tk.is_zero()) break;  // t = 0: only the k = 0 term
    out = out + divided_matrix(positive_root ? Kind::E : Kind::F, k).scaled(tk.residue());
  }
  return out;
}

bool DividedPowerAction::n_over_restricted() const {
  const u64 start = (q_ + 1) / 2;
  for (u64 k = start; k < q_; ++k) {
    if (!divided_matrix(Kind::E, k).is_zero()) return false;
    if (!divided_matrix(Kind::F, k).is_zero()) return false;
  }
  return true;
}

bool DividedPowerAction::verify_abs_n_chev(bool positive_root, const Fp& t,
                                           const FpMat& d) const {
  if (d.rows() != dimension() || d.modulus() != p_)
    throw std::invalid_argument("verify_abs_n_chev: operator shape mismatch");
  Kind kind = positive_root ? Kind::E : Kind::F;
  std::vector<FpMat> divided;
  for (u64 k = 0; k < q_; ++k) divided.push_back(divided_matrix(kind, k));

  // theta(ad(Z(t))(d)) = sum_{k<q} sum_{i+j=k} theta(t^i e^(i)) theta(d)
  // theta((-t)^j e^(j))
  FpMat lhs(dimension(), dimension(), p_);
  Fp neg_t = -t;
  for (u64 k = 0; k < q_; ++k)
    for (u64 i = 0; i <= k; ++i) {
      u64 j = k - i;
      Fp c = t.pow(i) * neg_t.pow(j);
      if (c.is_zero()) continue;
      lhs = lhs + (divided[i] * d * divided[j]).scaled(c.residue());
    }
  FpMat rhs = y_operator(positive_root, t) * d * y_operator(positive_root, neg_t);
  return lhs == rhs;
}

FpMat sl2_adjoint_divided(bool positive_root, u64 k, u32 p) {
  check_prime_modulus(p);
  FpMat out(3, 3, p);  // basis order f, h, e
  if (k == 0) return FpMat::identity(3, p);
  if (k == 1) {
    if (positive_root) {
      out.set(1, 0, 1);   // ad(e) f = h
      out.set(2, 1, -2);  // ad(e) h = -2e
    } else {
      out.set(1, 2, -1);  // ad(f) e = -h
      out.set(0, 1, 2);   // ad(f) h = 2f
    }
    return out;
  }
  if (k == 2) {
    if (positive_root) out.set(2, 0, -1);  // (ad e)^2 / 2 : f -> -e
    else out.set(0, 2, -1);                // (ad f)^2 / 2 : e -> -f
    return out;
  }
  return out;  // zero for k >= 3
}

FpMat sl2_adjoint_y(bool positive_root, const Fp& t, u64 q) {
  const u32 p = t.modulus();
  FpMat out(3, 3, p);
  for (u64 k = 0; k < q && k < 3; ++k)
    out = out + sl2_adjoint_divided(positive_root, k, p).scaled(t.pow(k).residue());
  return out;
}

PhiVerdict build_phi_frobenius(const DividedPowerAction& action, std::size_t cap) {
  const u32 p = action.modulus();
  std::vector<FpMat> gv, gg;
  std::vector<GeneratorLabel> labels;
  for (bool positive : {true, false}) {
    for (u32 t = 1; t < p; ++t) {
      gv.push_back(action.y_operator(positive, Fp(t, p)));
      gg.push_back(sl2_adjoint_y(positive, Fp(t, p), action.q()));
      labels.push_back({positive ? "e[1]" : "f[1]", t});
    }
  }
  std::vector<FpMat> commutant{action.theta_f(), action.theta_h(), action.theta_e()};
  return build_phi_pairs(gv, gg, labels, commutant, cap);
}

}  // namespace overchev
