#include "overchev/repmod.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace overchev {

Representation::Representation(RestrictedLieAlgebra g, std::vector<FpMat> matrices,
                               std::optional<std::vector<Weight>> grading)
    : g_(std::move(g)), mats_(std::move(matrices)), grading_(std::move(grading)) {
  if (mats_.size() != g_.dim())
    throw std::invalid_argument("representation needs one matrix per basis element");
  dim_ = mats_.empty() ? 0 : mats_[0].rows();
  for (const FpMat& m : mats_)
    if (m.rows() != dim_ || m.cols() != dim_ || m.modulus() != g_.modulus())
      throw std::invalid_argument("representation matrices must be square and share p");
  if (grading_ && grading_->size() != dim_)
    throw std::invalid_argument("grading needs one weight per module basis vector");
}

FpMat Representation::act(const FpVec& x) const {
  FpMat out(dim_, dim_, modulus());
  for (std::size_t i = 0; i < g_.dim(); ++i)
    if (x[i]) out = out + mats_[i].scaled(x[i]);
  return out;
}

const std::vector<Weight>& Representation::grading() const {
  if (!grading_) throw std::invalid_argument("representation carries no grading");
  return *grading_;
}

std::set<Weight> Representation::weight_set() const {
  const auto& g = grading();
  return std::set<Weight>(g.begin(), g.end());
}

bool Representation::is_homomorphism() const {
  for (std::size_t a = 0; a < g_.dim(); ++a)
    for (std::size_t b = 0; b < g_.dim(); ++b) {
      FpMat lhs = act(g_.bracket(g_.basis_vector(a), g_.basis_vector(b)));
      FpMat rhs = mats_[a] * mats_[b] - mats_[b] * mats_[a];
      if (lhs != rhs) return false;
    }
  return true;
}

bool Representation::grading_compatible() const {
  if (!grading_) return true;
  const int r = g_.rank();
  for (std::size_t a = 0; a < g_.dim(); ++a) {
    Weight shift = g_.basis_grade(a);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t i = 0; i < dim_; ++i) {
        if (!mats_[a].at(i, j)) continue;
        for (int k = 0; k < r; ++k)
          if ((*grading_)[i].fw[k] != (*grading_)[j].fw[k] + shift.fw[k]) return false;
      }
  }
  return true;
}

void Representation::corrupt_entry(std::size_t basis_index, std::size_t i, std::size_t j) {
  mats_[basis_index].set(i, j, static_cast<i64>(mats_[basis_index].at(i, j)) + 1);
}

Representation weyl_module_sl2(int m, u32 p) {
  if (m < 0) throw std::invalid_argument("weyl_module_sl2: highest weight must be >= 0");
  RestrictedLieAlgebra g('A', 1, p);
  const std::size_t d = static_cast<std::size_t>(m) + 1;
  FpMat F(d, d, p), H(d, d, p), E(d, d, p);
  std::vector<Weight> grading;
  for (std::size_t i = 0; i < d; ++i) {
    i64 ii = static_cast<i64>(i);
    if (i + 1 < d) F.set(i + 1, i, ii + 1);            // f v_i = (i+1) v_{i+1}
    H.set(i, i, m - 2 * ii);                           // h v_i = (m-2i) v_i
    if (i > 0) E.set(i - 1, i, m - ii + 1);            // e v_i = (m-i+1) v_{i-1}
    grading.push_back(Weight{{m - 2 * ii}});
  }
  Representation rep(g, {F, H, E}, grading);
  if (!rep.is_homomorphism() || !rep.grading_compatible())
    throw std::logic_error("weyl_module_sl2 construction failed its checks");
  return rep;
}

Representation adjoint_rep(const RestrictedLieAlgebra& g) {
  std::vector<FpMat> mats;
  std::vector<Weight> grading;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    mats.push_back(g.adjoint_matrix(g.basis_vector(i)));
    grading.push_back(g.basis_grade(i));
  }
  Representation rep(g, std::move(mats), std::move(grading));
  if (!rep.is_homomorphism() || !rep.grading_compatible())
    throw std::logic_error("adjoint_rep construction failed its checks");
  return rep;
}

Representation regular_rep_u0(const U0Algebra& u) {
  const RestrictedLieAlgebra& g = u.lie();
  const std::size_t d = u.pbw_dimension();
  std::vector<Mono> monos = u.pbw_monomials();
  std::vector<FpMat> mats;
  std::vector<Weight> grading;
  for (std::size_t a = 0; a < g.dim(); ++a) {
    FpMat m(d, d, g.modulus());
    for (std::size_t j = 0; j < d; ++j) {
      U0Algebra::Element prod = u.multiply(u.generator(a), {{monos[j], 1}});
      for (const auto& [mono, c] : prod) m.set(u.mono_rank(mono), j, static_cast<i64>(c));
    }
    mats.push_back(std::move(m));
  }
  for (std::size_t j = 0; j < d; ++j) grading.push_back(u.mono_grade(monos[j]));
  Representation rep(g, std::move(mats), std::move(grading));
  if (!rep.is_homomorphism() || !rep.grading_compatible())
    throw std::logic_error("regular_rep_u0 construction failed its checks");
  return rep;
}

bool is_restricted(const Representation& rep) {
  const RestrictedLieAlgebra& g = rep.lie();
  for (std::size_t a = 0; a < g.dim(); ++a)
    if (rep.matrix(a).pow(g.modulus()) != rep.act(g.p_power_basis(a))) return false;
  return true;
}

OverRestrictedVerdict is_over_restricted(const Representation& rep, bool exhaustive,
                                         u64 seed, int samples) {
  const RestrictedLieAlgebra& g = rep.lie();
  const u32 p = g.modulus();
  const u32 power = (p + 1) / 2;
  OverRestrictedVerdict out;
  out.over_restricted = true;

  auto check_point = [&](const FpVec& x) {
    ++out.checked;
    if (!rep.act(x).pow(power).is_zero()) {
      out.over_restricted = false;
      if (!out.counterexample) out.counterexample = x;
      return false;
    }
    return true;
  };

  if (exhaustive) {
    auto cone = g.np_cone_points();  // throws beyond desk scale
    out.certified = true;
    for (const FpVec& x : cone.points)
      if (!check_point(x)) break;
    return out;
  }

  out.certified = false;
  for (std::size_t i = 0; i < g.num_pos(); ++i) {
    if (!check_point(g.basis_vector(g.pos_index(i)))) return out;
    if (!check_point(g.basis_vector(g.neg_index(i)))) return out;
  }
  std::mt19937_64 rng(seed);
  for (int t = 0; t < samples; ++t) {
    FpVec x(g.dim());
    for (auto& c : x) c = static_cast<u32>(rng() % p);
    if (!g.is_p_nilpotent(x)) continue;
    if (!check_point(x)) return out;
  }
  return out;
}

int height_of_weight_set(const RootSystem& rs, const std::set<Weight>& weights) {
  if (weights.empty()) return 0;
  i64 span = 0;
  for (const Weight& w : weights)
    for (i64 c : w.fw) span = std::max(span, std::abs(c));
  const int cap = static_cast<int>(4 * span + 2 * rs.rank() + 4);
  for (int n = 1; n <= cap; ++n) {
    bool disjoint = true;
    for (const Root& beta : rs.positive_roots()) {
      Weight alpha = rs.root_weight(beta);
      for (const Weight& w : weights) {
        Weight shifted = w;
        for (int k = 0; k < rs.rank(); ++k) shifted.fw[k] += i64(n) * alpha.fw[k];
        if (weights.count(shifted)) {
          disjoint = false;
          break;
        }
      }
      if (!disjoint) break;
    }
    if (disjoint) return n;
  }
  throw std::logic_error("height_of_weight_set: no separating shift found");
}

int height(const Representation& rep) {
  return height_of_weight_set(rep.lie().roots(), rep.weight_set());
}

FpMat exp_operator(const Representation& rep, const FpVec& x, const Fp& t) {
  const u32 p = rep.modulus();
  if (t.modulus() != p) throw std::invalid_argument("exp_operator: modulus mismatch");
  FpMat M = rep.act(x);
  if (!M.pow(p).is_zero())
    throw std::invalid_argument("exp_operator: theta(x)^p != 0");
  FpMat out = FpMat::identity(rep.dimension(), p);
  FpMat pow = FpMat::identity(rep.dimension(), p);
  Fp tk = Fp::one(p);
  for (u32 k = 1; k < p; ++k) {
    pow = pow * M;
    tk = tk * t;
    out = out + pow.scaled(mul_mod(tk.residue(), factorial_inverse(k, p).residue(), p));
  }
  return out;
}

DualMat exp_operator_dual(const Representation& rep, const FpVec& x, const Dual& t) {
  const u32 p = rep.modulus();
  FpMat M = rep.act(x);
  if (!M.pow(p).is_zero())
    throw std::invalid_argument("exp_operator_dual: theta(x)^p != 0");
  DualMat out = DualMat::identity(rep.dimension(), p);
  DualMat pow = DualMat::identity(rep.dimension(), p);
  const DualMat Md = DualMat::constant(M);
  Dual tk(Fp::one(p));
  for (u32 k = 1; k < p; ++k) {
    pow = pow * Md;
    tk = tk * t;
    Dual c = tk * Dual(factorial_inverse(k, p));
    out = out + pow.scaled(c);
  }
  return out;
}

bool verify_abs_chev(const Representation& rep, const FpVec& x, const FpVec& y) {
  const RestrictedLieAlgebra& g = rep.lie();
  const u32 p = g.modulus();
  FpMat ad = g.adjoint_matrix(x);
  if (!ad.pow(p).is_zero())
    throw std::invalid_argument("verify_abs_chev: x is not p-nilpotent");
  // e^{ad x}(y)
  FpVec image = y;
  FpVec adk = y;
  for (u32 k = 1; k < p; ++k) {
    adk = ad.apply(adk);
    u32 c = factorial_inverse(k, p).residue();
    for (std::size_t i = 0; i < image.size(); ++i)
      image[i] = add_mod(image[i], mul_mod(c, adk[i], p), p);
  }
  FpMat lhs = rep.act(image);
  FpVec neg(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) neg[i] = sub_mod(0, x[i], p);
  FpMat rhs = exp_operator(rep, x, Fp::one(p)) * rep.act(y) *
              exp_operator(rep, neg, Fp::one(p));
  return lhs == rhs;
}

}  // namespace overchev
