#include "overchev/u0algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace overchev {

namespace {

void accumulate(U0Algebra::Element& acc, const Mono& m, u32 c, u32 p) {
  if (!c) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
    return;
  }
  it->second = add_mod(it->second, c, p);
  if (!it->second) acc.erase(it);
}

void accumulate_tensor(U0Algebra::Tensor& acc, const std::pair<Mono, Mono>& m, u32 c,
                       u32 p) {
  if (!c) return;
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
    return;
  }
  it->second = add_mod(it->second, c, p);
  if (!it->second) acc.erase(it);
}

}  // namespace

U0Algebra::U0Algebra(RestrictedLieAlgebra g)
    : g_(std::move(g)), p_(g_.modulus()), n_(g_.dim()) {
  if (p_ > 0xff)
    throw std::invalid_argument("U0Algebra stores PBW exponents as bytes; p < 256 required");
}

U0Algebra::Element U0Algebra::generator(std::size_t i) const {
  Mono m(n_, 0);
  m[i] = 1;
  return {{m, 1}};
}

U0Algebra::Element U0Algebra::from_lie(const FpVec& x) const {
  Element out;
  for (std::size_t i = 0; i < n_; ++i)
    if (x[i]) {
      Mono m(n_, 0);
      m[i] = 1;
      out[m] = x[i];
    }
  return out;
}

U0Algebra::Element U0Algebra::add(const Element& a, const Element& b, u32 p) {
  Element out = a;
  for (const auto& [m, c] : b) accumulate(out, m, c, p);
  return out;
}

U0Algebra::Element U0Algebra::sub(const Element& a, const Element& b, u32 p) {
  Element out = a;
  for (const auto& [m, c] : b) accumulate(out, m, sub_mod(0, c, p), p);
  return out;
}

U0Algebra::Element U0Algebra::scale(const Element& a, u32 c, u32 p) {
  Element out;
  for (const auto& [m, coeff] : a) {
    u32 v = mul_mod(coeff, c % p, p);
    if (v) out[m] = v;
  }
  return out;
}

U0Algebra::Element U0Algebra::mono_times_generator(const Mono& m, std::size_t gen) const {
  {
    std::lock_guard<std::mutex> lock(memo_mu_);
    auto it = memo_.find({m, gen});
    if (it != memo_.end()) return it->second;
  }
  Element result;
  std::size_t top = n_;
  for (std::size_t i = n_; i-- > 0;)
    if (m[i]) {
      top = i;
      break;
    }
  if (top == n_ || top <= gen) {
    // append in order; reduce with x^p = x^[p] when the exponent fills up
    if (m[gen] + 1u < p_) {
      Mono t = m;
      t[gen] = static_cast<std::uint8_t>(t[gen] + 1);
      result = {{t, 1}};
    } else {
      Mono prefix = m;
      prefix[gen] = 0;
      const FpVec& pp = g_.p_power_basis(gen);
      for (std::size_t d = 0; d < n_; ++d) {
        if (!pp[d]) continue;
        Element piece = mono_times_generator(prefix, d);
        for (const auto& [mm, c] : piece) accumulate(result, mm, mul_mod(c, pp[d], p_), p_);
      }
    }
  } else {
    // m = n * b_top with top > gen:  m g = (n g) b_top + n [b_top, g]
    Mono nlow = m;
    nlow[top] = static_cast<std::uint8_t>(nlow[top] - 1);
    result = elem_times_generator(mono_times_generator(nlow, gen), top);
    for (const auto& [idx, c] : g_.bracket_basis(top, gen)) {
      Element piece = mono_times_generator(nlow, idx);
      for (const auto& [mm, cc] : piece) accumulate(result, mm, mul_mod(cc, c, p_), p_);
    }
  }
  std::lock_guard<std::mutex> lock(memo_mu_);
  memo_.emplace(std::make_pair(m, gen), result);
  return result;
}

U0Algebra::Element U0Algebra::elem_times_generator(const Element& a, std::size_t gen) const {
  Element out;
  for (const auto& [m, c] : a) {
    Element piece = mono_times_generator(m, gen);
    for (const auto& [mm, cc] : piece) accumulate(out, mm, mul_mod(cc, c, p_), p_);
  }
  return out;
}

U0Algebra::Element U0Algebra::mono_times_mono(const Mono& a, const Mono& b) const {
  Element acc = {{a, 1}};
  for (std::size_t i = 0; i < n_; ++i)
    for (std::uint8_t k = 0; k < b[i]; ++k) acc = elem_times_generator(acc, i);
  return acc;
}

U0Algebra::Element U0Algebra::multiply(const Element& a, const Element& b) const {
  Element out;
  for (const auto& [mb, cb] : b) {
    for (const auto& [ma, ca] : a) {
      Element piece = mono_times_mono(ma, mb);
      u32 c = mul_mod(ca, cb, p_);
      for (const auto& [mm, cc] : piece) accumulate(out, mm, mul_mod(cc, c, p_), p_);
    }
  }
  return out;
}

U0Algebra::Element U0Algebra::power(const Element& a, u32 k) const {
  Element out = one();
  for (u32 i = 0; i < k; ++i) out = multiply(out, a);
  return out;
}

U0Algebra::Tensor U0Algebra::tensor_multiply(const Tensor& a, const Tensor& b) const {
  Tensor out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Element left = mono_times_mono(ma.first, mb.first);
      Element right = mono_times_mono(ma.second, mb.second);
      u32 c = mul_mod(ca, cb, p_);
      for (const auto& [ml, cl] : left)
        for (const auto& [mr, cr] : right)
          accumulate_tensor(out, {ml, mr}, mul_mod(c, mul_mod(cl, cr, p_), p_), p_);
    }
  return out;
}

U0Algebra::Tensor U0Algebra::tensor_add(const Tensor& a, const Tensor& b, u32 p) {
  Tensor out = a;
  for (const auto& [m, c] : b) accumulate_tensor(out, m, c, p);
  return out;
}

U0Algebra::Tensor U0Algebra::tensor_sub(const Tensor& a, const Tensor& b, u32 p) {
  Tensor out = a;
  for (const auto& [m, c] : b) accumulate_tensor(out, m, sub_mod(0, c, p), p);
  return out;
}

U0Algebra::Tensor U0Algebra::coproduct_mono(const Mono& m) const {
  Mono empty(n_, 0);
  Tensor acc = {{{empty, empty}, 1}};
  for (std::size_t i = 0; i < n_; ++i) {
    if (!m[i]) continue;
    Mono gi(n_, 0);
    gi[i] = 1;
    Tensor delta_gen = {{{gi, empty}, 1}, {{empty, gi}, 1}};
    for (std::uint8_t k = 0; k < m[i]; ++k) acc = tensor_multiply(acc, delta_gen);
  }
  return acc;
}

U0Algebra::Tensor U0Algebra::coproduct(const Element& a) const {
  Tensor out;
  for (const auto& [m, c] : a) {
    Tensor dm = coproduct_mono(m);
    for (const auto& [mm, cc] : dm) accumulate_tensor(out, mm, mul_mod(cc, c, p_), p_);
  }
  return out;
}

U0Algebra::Element U0Algebra::antipode(const Element& a) const {
  Element out;
  for (const auto& [m, c] : a) {
    Element acc = one();
    int degree = 0;
    for (std::size_t i = n_; i-- > 0;) {
      for (std::uint8_t k = 0; k < m[i]; ++k) {
        acc = elem_times_generator(acc, i);
        ++degree;
      }
    }
    u32 sign = (degree % 2 == 0) ? 1u : p_ - 1u;
    for (const auto& [mm, cc] : acc)
      accumulate(out, mm, mul_mod(mul_mod(cc, sign, p_), c, p_), p_);
  }
  return out;
}

u32 U0Algebra::counit(const Element& a) const {
  auto it = a.find(Mono(n_, 0));
  return it == a.end() ? 0 : it->second;
}

U0Algebra::Element U0Algebra::exp_element(const FpVec& x) const {
  if (!g_.is_p_nilpotent(x))
    throw std::invalid_argument("exp_element: argument is not p-nilpotent");
  Element xe = from_lie(x);
  Element out = one();
  Element xpow = one();
  for (u32 k = 1; k < p_; ++k) {
    xpow = multiply(xpow, xe);
    out = add(out, scale(xpow, factorial_inverse(k, p_).residue(), p_), p_);
  }
  return out;
}

U0Algebra::Deviation U0Algebra::deviation_degree(std::size_t basis_index) const {
  const FpVec& pp = g_.p_power_basis(basis_index);
  if (!std::all_of(pp.begin(), pp.end(), [](u32 c) { return c == 0; }))
    throw std::invalid_argument("deviation_degree: basis element is not p-nilpotent");
  Element ex = exp_element(g_.basis_vector(basis_index));
  Tensor exex;
  for (const auto& [ma, ca] : ex)
    for (const auto& [mb, cb] : ex)
      accumulate_tensor(exex, {ma, mb}, mul_mod(ca, cb, p_), p_);
  Tensor dev = tensor_sub(coproduct(ex), exex, p_);

  Deviation out;
  for (const auto& [mm, c] : dev) {
    (void)c;
    i64 a = 0, b = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (mm.first[i]) {
        if (i != basis_index) throw std::logic_error("deviation term off the x-axis");
        a = mm.first[i];
      }
      if (mm.second[i]) {
        if (i != basis_index) throw std::logic_error("deviation term off the x-axis");
        b = mm.second[i];
      }
    }
    i64 mx = std::max(a, b), tot = a + b;
    if (!out.has_terms) {
      out.has_terms = true;
      out.min_max_degree = mx;
      out.min_total_degree = tot;
    } else {
      out.min_max_degree = std::min(out.min_max_degree, mx);
      out.min_total_degree = std::min(out.min_total_degree, tot);
    }
  }
  return out;
}

std::size_t U0Algebra::pbw_dimension() const {
  double total = 1;
  for (std::size_t i = 0; i < n_; ++i) total *= p_;
  if (total > 1e6)
    throw std::invalid_argument("U0 enumeration needs p^dim <= 10^6, got ~" +
                                std::to_string(total));
  std::size_t d = 1;
  for (std::size_t i = 0; i < n_; ++i) d *= p_;
  return d;
}

std::vector<Mono> U0Algebra::pbw_monomials() const {
  std::size_t total = pbw_dimension();
  std::vector<Mono> out;
  out.reserve(total);
  Mono m(n_, 0);
  while (true) {
    out.push_back(m);
    std::size_t j = 0;
    while (j < n_ && m[j] == p_ - 1) m[j++] = 0;
    if (j == n_) break;
    ++m[j];
  }
  return out;
}

std::size_t U0Algebra::mono_rank(const Mono& m) const {
  std::size_t r = 0, base = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    r += m[i] * base;
    base *= p_;
  }
  return r;
}

FpVec U0Algebra::to_vector(const Element& a) const {
  FpVec v(pbw_dimension(), 0);
  for (const auto& [m, c] : a) v[mono_rank(m)] = c;
  return v;
}

Weight U0Algebra::mono_grade(const Mono& m) const {
  Weight w = g_.roots().zero_weight();
  for (std::size_t i = 0; i < n_; ++i) {
    if (!m[i]) continue;
    Weight gi = g_.basis_grade(i);
    for (int j = 0; j < g_.rank(); ++j) w.fw[j] += i64(m[i]) * gi.fw[j];
  }
  return w;
}

U0Algebra::OverEnvDim U0Algebra::over_env_dimension() const {
  OverEnvDim out;
  out.dim_u0 = pbw_dimension();
  const u32 m = (p_ + 1) / 2;  // floor((p+1)/2)

  // oracle one: two-sided ideal closure under multiplication by the Lie
  // generators on both sides
  Echelon ideal(out.dim_u0, p_);
  std::vector<Element> work;
  for (std::size_t i = 0; i < g_.num_pos(); ++i) {
    for (std::size_t idx : {g_.pos_index(i), g_.neg_index(i)}) {
      Element gen_power = power(generator(idx), m);
      if (ideal.insert(to_vector(gen_power))) work.push_back(gen_power);
    }
  }
  while (!work.empty()) {
    Element el = std::move(work.back());
    work.pop_back();
    for (std::size_t i = 0; i < n_; ++i) {
      Element left = multiply(generator(i), el);
      if (ideal.insert(to_vector(left))) work.push_back(left);
      Element right = elem_times_generator(el, i);
      if (ideal.insert(to_vector(right))) work.push_back(right);
    }
  }
  out.ideal_dim = ideal.dim();
  out.dim_closure = out.dim_u0 - out.ideal_dim;

  // oracle two: rank of the left regular representation of the quotient.
  // Non-pivot monomials form a basis of U0/I; the matrices of left
  // multiplication by all PBW monomials span an algebra isomorphic to the
  // quotient exactly when the closure above really is a two-sided ideal.
  std::vector<Mono> monos = pbw_monomials();
  std::vector<std::size_t> pivot_set;
  {
    std::vector<bool> is_pivot(out.dim_u0, false);
    for (const FpVec& row : ideal.basis()) {
      std::size_t piv = 0;
      while (piv < row.size() && row[piv] == 0) ++piv;
      is_pivot[piv] = true;
    }
    for (std::size_t i = 0; i < out.dim_u0; ++i)
      if (!is_pivot[i]) pivot_set.push_back(i);  // complement coordinates
  }
  const std::size_t q = pivot_set.size();
  std::vector<std::size_t> coord_of(out.dim_u0, SIZE_MAX);
  for (std::size_t j = 0; j < q; ++j) coord_of[pivot_set[j]] = j;

  Echelon span(q * q, p_);
  for (const Mono& u : monos) {
    FpVec mat(q * q, 0);
    for (std::size_t j = 0; j < q; ++j) {
      Element prod = mono_times_mono(u, monos[pivot_set[j]]);
      FpVec col = ideal.reduce(to_vector(prod));
      for (std::size_t t = 0; t < col.size(); ++t) {
        if (!col[t]) continue;
        if (coord_of[t] == SIZE_MAX)
          throw std::logic_error("quotient reduction left a pivot coordinate");
        mat[coord_of[t] * q + j] = col[t];
      }
    }
    span.insert(mat);
  }
  out.dim_regular = span.dim();

  if (out.dim_regular != out.dim_closure)
    throw std::logic_error("over-restricted enveloping dimension oracles disagree: " +
                           std::to_string(out.dim_closure) + " vs " +
                           std::to_string(out.dim_regular));
  return out;
}

}  // namespace overchev
