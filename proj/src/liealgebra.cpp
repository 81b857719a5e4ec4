#include "overchev/liealgebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace overchev {

namespace {

std::vector<int> vec_add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}
std::vector<int> vec_sub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}
std::vector<int> vec_neg(std::vector<int> a) {
  for (int& x : a) x = -x;
  return a;
}

std::string render_coeff(const std::vector<int>& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

}  // namespace

ChevalleyData::ChevalleyData(const RootSystem& rs) : rs_(rs) {
  dim_ = 2 * rs_.num_positive_roots() + rs_.rank();
  build();
  verify_jacobi();
}

void ChevalleyData::build() {
  const auto& pos = rs_.positive_roots();
  const int r = rs_.rank();
  const std::size_t m = pos.size();

  std::map<std::vector<int>, std::size_t> pos_of;
  for (std::size_t i = 0; i < m; ++i) pos_of[pos[i].coeff] = i;

  // signed root lookup: +1 positive / -1 negative / 0 not a root, with index
  auto lookup = [&](const std::vector<int>& v) -> std::pair<int, std::size_t> {
    bool nonneg = std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(v.begin(), v.end(), [](int x) { return x <= 0; });
    if (nonneg) {
      auto it = pos_of.find(v);
      if (it != pos_of.end()) return {+1, it->second};
    }
    if (nonpos) {
      auto it = pos_of.find(vec_neg(v));
      if (it != pos_of.end()) return {-1, it->second};
    }
    return {0, 0};
  };
  auto is_root = [&](const std::vector<int>& v) { return lookup(v).first != 0; };

  // longest k with y - k x still a root
  auto chain_down = [&](const std::vector<int>& x, const std::vector<int>& y) {
    int k = 0;
    std::vector<int> cur = vec_sub(y, x);
    while (is_root(cur)) {
      ++k;
      cur = vec_sub(cur, x);
    }
    return k;
  };

  // ---- structure constants on pairs of positive roots --------------------
  // Extraspecial pairs get +(chain+1); every other special pair is forced by
  // the Jacobi identity against the extraspecial pair of the same sum.
  std::vector<i64> Npos(m * m, 0);
  auto npos = [&](std::size_t i, std::size_t j) -> i64& { return Npos[i * m + j]; };

  // N_{mu, -nu} for distinct positive roots with mu - nu a root
  auto mixed_pos_neg = [&](std::size_t mu, std::size_t nu) -> i64 {
    std::vector<int> d = vec_sub(pos[mu].coeff, pos[nu].coeff);
    auto [sgn, di] = lookup(d);
    if (sgn == 0) throw std::logic_error("mixed_pos_neg: difference not a root");
    if (sgn > 0) {
      // mu = delta + nu:  N_{mu,-nu} = (|delta|^2 / |mu|^2) N_{delta,nu}
      i64 num = i64(pos[di].length2) * npos(di, nu);
      if (num % pos[mu].length2 != 0) throw std::logic_error("non-integral mixed constant");
      return num / pos[mu].length2;
    }
    // nu = delta' + mu:  N_{mu,-nu} = (|delta'|^2 / |nu|^2) N_{delta',mu}
    i64 num = i64(pos[di].length2) * npos(di, mu);
    if (num % pos[nu].length2 != 0) throw std::logic_error("non-integral mixed constant");
    return num / pos[nu].length2;
  };

  for (std::size_t g = 0; g < m; ++g) {
    if (pos[g].height == 1) continue;
    // special pairs summing to pos[g], ordered
    std::vector<std::pair<std::size_t, std::size_t>> special;
    for (std::size_t a = 0; a < m; ++a) {
      auto [sgn, b] = lookup(vec_sub(pos[g].coeff, pos[a].coeff));
      if (sgn > 0 && a < b) special.push_back({a, b});
    }
    if (special.empty()) throw std::logic_error("positive root without special pair");
    const auto [a1, b1] = special.front();  // minimal first component: extraspecial
    npos(a1, b1) = chain_down(pos[a1].coeff, pos[b1].coeff) + 1;
    npos(b1, a1) = -npos(a1, b1);

    // denominator N_{gamma, -alpha1} = (|beta1|^2/|gamma|^2) N_{beta1, alpha1}
    i64 dnum = i64(pos[b1].length2) * npos(b1, a1);
    if (dnum % pos[g].length2 != 0) throw std::logic_error("non-integral denominator");
    const i64 denom = dnum / pos[g].length2;

    for (std::size_t s = 1; s < special.size(); ++s) {
      const auto [a2, b2] = special[s];
      // Jacobi on (e_alpha, e_beta, e_{-alpha1}), coefficient of e_{beta1}
      i64 t1 = 0, t2 = 0;
      std::vector<int> xi = vec_sub(pos[b2].coeff, pos[a1].coeff);
      if (auto [sx, xi_i] = lookup(xi); sx > 0)
        t1 = mixed_pos_neg(b2, a1) * npos(xi_i, a2);
      else if (sx < 0)
        throw std::logic_error("unexpected negative difference in sign derivation");
      std::vector<int> zeta = vec_sub(pos[a2].coeff, pos[a1].coeff);
      if (auto [sz, zeta_i] = lookup(zeta); sz > 0)
        t2 = -mixed_pos_neg(a2, a1) * npos(zeta_i, b2);
      else if (sz < 0)
        throw std::logic_error("unexpected negative difference in sign derivation");
      i64 rhs = -(t1 + t2);
      if (rhs % denom != 0) throw std::logic_error("sign derivation not divisible");
      i64 val = rhs / denom;
      i64 expect = chain_down(pos[a2].coeff, pos[b2].coeff) + 1;
      if (val != expect && val != -expect)
        throw std::logic_error("structure constant magnitude mismatch in " + rs_.name());
      npos(a2, b2) = val;
      npos(b2, a2) = -val;
    }
  }

  // ---- full bracket table -------------------------------------------------
  table_.assign(dim_ * dim_, {});
  auto set_entry = [&](std::size_t a, std::size_t b,
                       std::vector<std::pair<std::size_t, i64>> terms) {
    table_[a * dim_ + b] = std::move(terms);
  };
  auto root_basis_index = [&](int sgn, std::size_t i) {
    return sgn > 0 ? pos_index(i) : neg_index(i);
  };

  // [h_j, e_{+-beta}] and [h_j, h_k]
  for (int j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      i64 pairing = 0;
      for (int k = 0; k < r; ++k) pairing += i64(rs_.cartan(j, k)) * pos[i].coeff[k];
      for (int sgn : {+1, -1}) {
        i64 c = sgn * pairing;
        std::size_t e_idx = root_basis_index(sgn, i);
        if (c != 0) {
          set_entry(cartan_index(j), e_idx, {{e_idx, c}});
          set_entry(e_idx, cartan_index(j), {{e_idx, -c}});
        }
      }
    }
  }

  // [e_x, e_y]
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      for (int si : {+1, -1}) {
        for (int sj : {+1, -1}) {
          std::size_t ai = root_basis_index(si, i), bj = root_basis_index(sj, j);
          if (i == j && si == sj) continue;  // [x, x] = 0
          if (i == j && si != sj) {
            // [e_beta, e_{-beta}] = coroot, [e_{-beta}, e_beta] = -coroot
            std::vector<std::pair<std::size_t, i64>> terms;
            for (int k = 0; k < r; ++k)
              if (pos[i].coroot[k] != 0)
                terms.push_back({cartan_index(k), i64(si) * pos[i].coroot[k]});
            set_entry(ai, bj, std::move(terms));
            continue;
          }
          std::vector<int> x = pos[i].coeff, y = pos[j].coeff;
          if (si < 0) x = vec_neg(x);
          if (sj < 0) y = vec_neg(y);
          auto [sgn_sum, sum_i] = lookup(vec_add(x, y));
          if (sgn_sum == 0) continue;
          i64 n = 0;
          if (si > 0 && sj > 0) n = npos(i, j);
          else if (si < 0 && sj < 0) n = -npos(i, j);
          else if (si > 0) n = mixed_pos_neg(i, j);
          else n = -mixed_pos_neg(j, i);
          if (n == 0) throw std::logic_error("vanishing constant on a root pair");
          i64 expect = chain_down(x, y) + 1;
          if (n != expect && n != -expect)
            throw std::logic_error("constant magnitude mismatch in " + rs_.name());
          set_entry(ai, bj, {{root_basis_index(sgn_sum, sum_i), n}});
        }
      }
    }
  }
}

void ChevalleyData::verify_jacobi() const {
  std::vector<i64> acc(dim_, 0);
  std::vector<std::size_t> touched;
  auto add_double_bracket = [&](std::size_t a, std::size_t b, std::size_t c) {
    for (const auto& [t, coeff] : bracket_z(a, b))
      for (const auto& [u, coeff2] : bracket_z(t, c)) {
        if (acc[u] == 0) touched.push_back(u);
        acc[u] += coeff * coeff2;
      }
  };
  for (std::size_t i = 0; i < dim_; ++i) {
    // antisymmetry of the table
    for (std::size_t j = i; j < dim_; ++j) {
      const auto& ij = bracket_z(i, j);
      const auto& ji = bracket_z(j, i);
      if (ij.size() != ji.size()) throw std::logic_error("bracket table not antisymmetric");
      for (std::size_t k = 0; k < ij.size(); ++k)
        if (ij[k].first != ji[k].first || ij[k].second != -ji[k].second)
          throw std::logic_error("bracket table not antisymmetric");
    }
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = j + 1; k < dim_; ++k) {
        add_double_bracket(i, j, k);
        add_double_bracket(j, k, i);
        add_double_bracket(k, i, j);
        bool ok = true;
        for (std::size_t u : touched) {
          if (acc[u] != 0) ok = false;
          acc[u] = 0;
        }
        touched.clear();
        if (!ok)
          throw std::logic_error("Jacobi identity failed during construction of " + rs_.name());
      }
  }
}

std::string ChevalleyData::basis_label(std::size_t i) const {
  const std::size_t m = num_pos();
  if (i < m) return "f" + render_coeff(rs_.positive_roots()[i].coeff);
  if (i < m + static_cast<std::size_t>(rank()))
    return "h" + std::to_string(i - m + 1);
  return "e" + render_coeff(rs_.positive_roots()[i - m - rank()].coeff);
}

Weight ChevalleyData::basis_grade(std::size_t i) const {
  const std::size_t m = num_pos();
  if (i < m) return rs_.negative_root_weight(rs_.positive_roots()[i]);
  if (i < m + static_cast<std::size_t>(rank())) return rs_.zero_weight();
  return rs_.root_weight(rs_.positive_roots()[i - m - rank()]);
}

std::shared_ptr<const ChevalleyData> ChevalleyData::get(char type, int rank) {
  static std::mutex mu;
  static std::map<std::pair<char, int>, std::shared_ptr<const ChevalleyData>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(type, rank);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto data = std::make_shared<const ChevalleyData>(RootSystem(type, rank));
  cache[key] = data;
  return data;
}

// ---------------------------------------------------------------------------

RestrictedLieAlgebra::RestrictedLieAlgebra(char type, int rank, u32 p)
    : data_(ChevalleyData::get(type, rank)), p_(check_prime_modulus(p)) {
  const std::size_t n = dim();
  table_.assign(n * n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& [idx, c] : data_->bracket_z(a, b)) {
        u32 cm = reduce_mod(c, p_);
        if (cm) table_[a * n + b].push_back({idx, cm});
      }
    }
  ppow_.assign(n, zero());
  for (int j = 0; j < rank; ++j) {
    std::size_t h = cartan_index(j);
    ppow_[h][h] = 1;  // h^[p] = h; root vectors stay at 0
  }
  verify_restrictedness();
}

void RestrictedLieAlgebra::verify_restrictedness() const {
  const std::size_t n = dim();
  for (std::size_t a = 0; a < n; ++a) {
    FpMat lhs = adjoint_matrix(ppow_[a]);
    for (std::size_t y = 0; y < n; ++y) {
      FpVec v = basis_vector(y);
      for (u32 k = 0; k < p_; ++k) {
        FpVec w = zero();
        bool nonzero = false;
        for (std::size_t t = 0; t < n; ++t) {
          if (!v[t]) continue;
          for (const auto& [idx, c] : bracket_basis(a, t)) {
            w[idx] = add_mod(w[idx], mul_mod(v[t], c, p_), p_);
          }
        }
        for (u32 x : w) nonzero = nonzero || (x != 0);
        v = std::move(w);
        if (!nonzero) break;
      }
      for (std::size_t i = 0; i < n; ++i)
        if (v[i] != lhs.at(i, y))
          throw std::logic_error("restrictedness check failed: ad(x^[p]) != ad(x)^p");
    }
  }
}

FpVec RestrictedLieAlgebra::bracket(const FpVec& x, const FpVec& y) const {
  const std::size_t n = dim();
  FpVec out = zero();
  for (std::size_t a = 0; a < n; ++a) {
    if (!x[a]) continue;
    for (std::size_t b = 0; b < n; ++b) {
      if (!y[b]) continue;
      u32 xy = mul_mod(x[a], y[b], p_);
      for (const auto& [idx, c] : bracket_basis(a, b))
        out[idx] = add_mod(out[idx], mul_mod(xy, c, p_), p_);
    }
  }
  return out;
}

FpMat RestrictedLieAlgebra::adjoint_matrix(const FpVec& x) const {
  const std::size_t n = dim();
  FpMat m(n, n, p_);
  for (std::size_t a = 0; a < n; ++a) {
    if (!x[a]) continue;
    for (std::size_t b = 0; b < n; ++b)
      for (const auto& [idx, c] : bracket_basis(a, b))
        m.add_at(idx, b, static_cast<i64>(mul_mod(x[a], c, p_)));
  }
  return m;
}

FpVec RestrictedLieAlgebra::p_power(const FpVec& x) const {
  std::vector<std::size_t> sup;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i]) sup.push_back(i);
  if (sup.empty()) return zero();

  // single basis term: (c b)^[p] = c^p b^[p] = c b^[p] over F_p
  auto single = [&](std::size_t idx, u32 c) {
    FpVec v = zero();
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] = mul_mod(c, ppow_[idx][i], p_);
    return v;
  };
  if (sup.size() == 1) return single(sup[0], x[sup[0]]);

  // Jacobson: split x = y + z with y the first support term and recurse;
  // i * s_i(y,z) is the t^{i-1} coefficient of ad(t y + z)^{p-1}(y).
  FpVec y = zero();
  y[sup[0]] = x[sup[0]];
  FpVec z = x;
  z[sup[0]] = 0;

  FpVec out = single(sup[0], x[sup[0]]);
  FpVec zp = p_power(z);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_mod(out[i], zp[i], p_);

  std::vector<FpVec> poly{y};  // polynomial in t with FpVec coefficients
  for (u32 step = 0; step + 1 < p_; ++step) {
    std::vector<FpVec> next(poly.size() + 1, zero());
    for (std::size_t d = 0; d < poly.size(); ++d) {
      FpVec by = bracket(y, poly[d]);
      FpVec bz = bracket(z, poly[d]);
      for (std::size_t k = 0; k < by.size(); ++k) {
        next[d + 1][k] = add_mod(next[d + 1][k], by[k], p_);
        next[d][k] = add_mod(next[d][k], bz[k], p_);
      }
    }
    poly = std::move(next);
  }
  for (u32 i = 1; i < p_; ++i) {
    if (i - 1 >= poly.size()) break;
    u32 inv = inv_mod(i, p_);
    for (std::size_t k = 0; k < out.size(); ++k)
      out[k] = add_mod(out[k], mul_mod(inv, poly[i - 1][k], p_), p_);
  }
  return out;
}

bool RestrictedLieAlgebra::is_p_nilpotent(const FpVec& x) const {
  FpVec v = p_power(x);
  return std::all_of(v.begin(), v.end(), [](u32 c) { return c == 0; });
}

std::vector<FpVec> RestrictedLieAlgebra::centre() const {
  const std::size_t n = dim();
  std::vector<FpVec> span;
  for (std::size_t i = 0; i < n; ++i) span.push_back(basis_vector(i));
  // intersect with ker ad(b) one basis element at a time
  for (std::size_t a = 0; a < n && !span.empty(); ++a) {
    FpMat m(n, span.size(), p_);
    for (std::size_t j = 0; j < span.size(); ++j) {
      for (std::size_t t = 0; t < n; ++t) {
        if (!span[j][t]) continue;
        for (const auto& [idx, c] : bracket_basis(a, t))
          m.add_at(idx, j, static_cast<i64>(mul_mod(span[j][t], c, p_)));
      }
    }
    std::vector<FpVec> kernel = m.nullspace();
    std::vector<FpVec> next;
    for (const FpVec& coeffs : kernel) {
      FpVec v = zero();
      for (std::size_t j = 0; j < span.size(); ++j)
        for (std::size_t k = 0; k < n; ++k)
          v[k] = add_mod(v[k], mul_mod(coeffs[j], span[j][k], p_), p_);
      next.push_back(std::move(v));
    }
    span = std::move(next);
  }
  Echelon ech(n, p_);
  for (const FpVec& v : span) ech.insert(v);
  return ech.basis();
}

RestrictedLieAlgebra::Subalgebra RestrictedLieAlgebra::generated_subalgebra(
    const std::vector<FpVec>& gens) const {
  Echelon ech(dim(), p_);
  for (const FpVec& g : gens) ech.insert(g);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<FpVec> basis = ech.basis();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (ech.insert(bracket(basis[i], basis[j]))) grew = true;
  }
  Subalgebra sub;
  sub.basis = ech.basis();
  sub.restricted_closed = true;
  for (const FpVec& b : sub.basis)
    if (!ech.contains(p_power(b))) sub.restricted_closed = false;
  return sub;
}

RestrictedLieAlgebra::ConePoints RestrictedLieAlgebra::np_cone_points() const {
  const std::size_t n = dim();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p_;
  if (n > 10 || total > 1e6)
    throw std::invalid_argument(
        "np_cone_points: enumeration needs dim <= 10 and p^dim <= 10^6, got dim = " +
        std::to_string(n) + ", p^dim ~ " + std::to_string(total));
  ConePoints out;
  Echelon span(n, p_);
  FpVec v = zero();
  while (true) {
    if (is_p_nilpotent(v)) {
      out.points.push_back(v);
      span.insert(v);
    }
    std::size_t j = 0;
    while (j < n && v[j] == p_ - 1) v[j++] = 0;
    if (j == n) break;
    ++v[j];
  }
  out.span_dim = span.dim();
  return out;
}

}  // namespace overchev
