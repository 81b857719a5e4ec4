#include "overchev/rootdata.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace overchev {

namespace {

i64 floordiv(i64 a, i64 b) {
  i64 q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

struct Frac {
  i64 num = 0, den = 1;
  void normalize() {
    if (den < 0) { num = -num; den = -den; }
    i64 g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }
  Frac operator-(const Frac& o) const { return make(num * o.den - o.num * den, den * o.den); }
  Frac operator*(const Frac& o) const { return make(num * o.num, den * o.den); }
  Frac operator/(const Frac& o) const { return make(num * o.den, den * o.num); }
  static Frac make(i64 n, i64 d) {
    Frac f{n, d};
    f.normalize();
    return f;
  }
};

// Solve C x = k exactly over the rationals (C invertible, small rank).
std::vector<Frac> solve_rational(std::vector<std::vector<Frac>> C, std::vector<Frac> k) {
  const std::size_t n = k.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && C[piv][col].num == 0) ++piv;
    if (piv == n) throw std::logic_error("singular Cartan matrix");
    std::swap(C[piv], C[col]);
    std::swap(k[piv], k[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || C[i][col].num == 0) continue;
      Frac f = C[i][col] / C[col][col];
      for (std::size_t j = col; j < n; ++j) C[i][j] = C[i][j] - f * C[col][j];
      k[i] = k[i] - f * k[col];
    }
  }
  std::vector<Frac> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = k[i] / C[i][i];
  return x;
}

}  // namespace

RootSystem::RootSystem(char type, int rank) : type_(type), rank_(rank) {
  auto fail = [&] {
    throw std::invalid_argument("unsupported root system " + std::string(1, type) +
                                std::to_string(rank));
  };
  switch (type) {
    case 'A': if (rank < 1) fail(); break;
    case 'B': if (rank < 2) fail(); break;
    case 'C': if (rank < 2) fail(); break;
    case 'D': if (rank < 3) fail(); break;
    case 'E': if (rank < 6 || rank > 8) fail(); break;
    case 'F': if (rank != 4) fail(); break;
    case 'G': if (rank != 2) fail(); break;
    default: fail();
  }
  build_cartan();
  build_positive_roots();
}

void RootSystem::build_cartan() {
  const int r = rank_;
  cartan_.assign(r, std::vector<int>(r, 0));
  dsym_.assign(r, 1);
  for (int i = 0; i < r; ++i) cartan_[i][i] = 2;
  auto chain_edge = [&](int i, int j) { cartan_[i][j] = cartan_[j][i] = -1; };

  switch (type_) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) chain_edge(i, i + 1);
      break;
    case 'B':  // last simple root short
      for (int i = 0; i + 1 < r; ++i) chain_edge(i, i + 1);
      cartan_[r - 1][r - 2] = -2;
      for (int i = 0; i + 1 < r; ++i) dsym_[i] = 2;
      break;
    case 'C':  // last simple root long
      for (int i = 0; i + 1 < r; ++i) chain_edge(i, i + 1);
      cartan_[r - 2][r - 1] = -2;
      dsym_[r - 1] = 2;
      break;
    case 'D':
      for (int i = 0; i + 1 < r - 1; ++i) chain_edge(i, i + 1);
      chain_edge(r - 3, r - 1);
      break;
    case 'E':
      chain_edge(0, 2);
      chain_edge(1, 3);
      for (int i = 2; i + 1 < r; ++i) chain_edge(i, i + 1);
      break;
    case 'F':
      chain_edge(0, 1);
      chain_edge(2, 3);
      cartan_[1][2] = -1;
      cartan_[2][1] = -2;
      dsym_[0] = dsym_[1] = 2;
      break;
    case 'G':  // alpha_1 short
      cartan_[0][1] = -3;
      cartan_[1][0] = -1;
      dsym_[1] = 3;
      break;
  }
  // symmetry of the underlying bilinear form: d_i c_ij = d_j c_ji
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (i64(dsym_[i]) * cartan_[i][j] != i64(dsym_[j]) * cartan_[j][i])
        throw std::logic_error("asymmetric Cartan data for " + name());
}

void RootSystem::build_positive_roots() {
  const int r = rank_;
  std::set<std::vector<int>> all;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    all.insert(e);
    frontier.push_back(e);
  }
  // reflection closure: every root is a Weyl image of a simple root
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& b : frontier) {
      for (int i = 0; i < r; ++i) {
        i64 c = 0;
        for (int j = 0; j < r; ++j) c += i64(cartan_[i][j]) * b[j];
        std::vector<int> s = b;
        s[i] -= static_cast<int>(c);
        if (all.insert(s).second) next.push_back(std::move(s));
      }
    }
    frontier = std::move(next);
  }

  positive_.clear();
  for (const auto& b : all) {
    bool nonneg = std::all_of(b.begin(), b.end(), [](int x) { return x >= 0; });
    if (!nonneg) continue;
    Root root;
    root.coeff = b;
    root.height = std::accumulate(b.begin(), b.end(), 0);
    i64 norm2 = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) norm2 += i64(b[i]) * b[j] * dsym_[i] * cartan_[i][j];
    if (norm2 <= 0 || norm2 % 2 != 0) throw std::logic_error("bad root norm in " + name());
    root.length2 = static_cast<int>(norm2 / 2);
    root.coroot.resize(r);
    for (int j = 0; j < r; ++j) {
      i64 m = i64(b[j]) * dsym_[j];
      if (m % root.length2 != 0) throw std::logic_error("non-integral coroot in " + name());
      root.coroot[j] = static_cast<int>(m / root.length2);
    }
    positive_.push_back(std::move(root));
  }
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeff < b.coeff;
  });
}

i64 RootSystem::pair(const Weight& w, const Root& beta) const {
  if (static_cast<int>(w.fw.size()) != rank_)
    throw std::invalid_argument("weight rank mismatch");
  i64 s = 0;
  for (int j = 0; j < rank_; ++j) s += i64(beta.coroot[j]) * w.fw[j];
  return s;
}

Weight RootSystem::root_weight(const Root& beta) const {
  Weight w{std::vector<i64>(rank_, 0)};
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) w.fw[i] += i64(cartan_[i][j]) * beta.coeff[j];
  return w;
}

Weight RootSystem::negative_root_weight(const Root& beta) const {
  Weight w = root_weight(beta);
  for (auto& x : w.fw) x = -x;
  return w;
}

std::pair<std::vector<i64>, i64> RootSystem::two_rho_coefficients() const {
  std::vector<i64> a(rank_, 0);
  for (const Root& beta : positive_)
    for (int j = 0; j < rank_; ++j) a[j] += beta.coeff[j];
  i64 amax = *std::max_element(a.begin(), a.end());
  return {a, amax};
}

int RootSystem::coxeter_number() const { return highest_root().height + 1; }

Weight RootSystem::reflect(const Weight& w, int i) const {
  Weight s = w;
  i64 c = w.fw[i];
  for (int j = 0; j < rank_; ++j) s.fw[j] -= c * cartan_[j][i];
  return s;
}

bool RootSystem::is_dominant(const Weight& w) const {
  return std::all_of(w.fw.begin(), w.fw.end(), [](i64 x) { return x >= 0; });
}

std::set<Weight> RootSystem::weyl_orbit(const Weight& w) const {
  std::set<Weight> orbit{w};
  std::vector<Weight> frontier{w};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const Weight& v : frontier)
      for (int i = 0; i < rank_; ++i) {
        Weight s = reflect(v, i);
        if (orbit.insert(s).second) next.push_back(std::move(s));
      }
    frontier = std::move(next);
  }
  return orbit;
}

std::set<Weight> RootSystem::weyl_weight_set(const Weight& lambda) const {
  if (!is_dominant(lambda)) throw std::invalid_argument("weyl_weight_set: lambda not dominant");
  const int r = rank_;
  // root-basis coordinates of lambda; dominant weights below lambda have
  // subtraction coefficients bounded by them
  std::vector<std::vector<Frac>> C(r, std::vector<Frac>(r));
  std::vector<Frac> k(r);
  for (int i = 0; i < r; ++i) {
    k[i] = Frac::make(lambda.fw[i], 1);
    for (int j = 0; j < r; ++j) C[i][j] = Frac::make(cartan_[i][j], 1);
  }
  std::vector<Frac> l = solve_rational(C, k);
  std::vector<i64> bound(r);
  for (int i = 0; i < r; ++i) bound[i] = floordiv(l[i].num, l[i].den);

  std::set<Weight> weights;
  std::vector<i64> c(r, 0);
  // enumerate dominant mu = lambda - sum c_i alpha_i, 0 <= c_i <= bound_i
  auto alpha_fw = [&](int j) {
    std::vector<i64> v(r);
    for (int i = 0; i < r; ++i) v[i] = cartan_[i][j];
    return v;
  };
  std::vector<std::vector<i64>> alphas;
  for (int j = 0; j < r; ++j) alphas.push_back(alpha_fw(j));
  std::vector<int> idx(r, 0);
  // iterative odometer over the box
  while (true) {
    Weight mu = lambda;
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) mu.fw[i] -= c[j] * alphas[j][i];
    if (is_dominant(mu)) {
      auto orbit = weyl_orbit(mu);
      weights.insert(orbit.begin(), orbit.end());
    }
    int j = 0;
    while (j < r && c[j] == bound[j]) c[j++] = 0;
    if (j == r) break;
    ++c[j];
  }
  return weights;
}

std::vector<i64> pairing_vector(const RootSystem& rs, const Weight& lambda) {
  Weight shifted = lambda;
  for (auto& x : shifted.fw) x += 1;  // lambda + rho
  std::vector<i64> out;
  out.reserve(rs.num_positive_roots());
  for (const Root& beta : rs.positive_roots()) out.push_back(rs.pair(shifted, beta));
  return out;
}

AlcoveBands alcove_bands(const RootSystem& rs, const Weight& lambda, u32 p) {
  check_prime_modulus(p);
  AlcoveBands out;
  out.pairings = pairing_vector(rs, lambda);
  for (i64 s : out.pairings) {
    out.bands.push_back(floordiv(s, p));
    out.on_wall.push_back(s % static_cast<i64>(p) == 0);
    out.any_wall = out.any_wall || out.on_wall.back();
  }
  bool strictly_dominant = std::all_of(out.pairings.begin(), out.pairings.begin() + rs.rank(),
                                       [](i64 s) { return s > 0; });
  if (rs.rank() > 2 || out.any_wall || !strictly_dominant) return out;

  // Enumerate dominant alcoves inside the bounding box given by the simple
  // bands: sample off-wall rational points x_j = p (2k_j + 1) / (2N) in
  // simple-coroot pairing coordinates and collect their band vectors.  N is
  // fine enough that every alcove of a rank <= 2 affine Weyl group contains
  // a sample point.
  const i64 N = 120;
  const int r = rs.rank();
  const auto& roots = rs.positive_roots();
  std::vector<i64> kmax(r, 0);
  for (int j = 0; j < r; ++j) {
    for (std::size_t b = 0; b < roots.size(); ++b) {
      bool is_alpha_j = roots[b].height == 1 && roots[b].coeff[j] == 1;
      if (is_alpha_j) kmax[j] = (out.bands[b] + 1) * N;
    }
  }
  std::set<std::vector<i64>> seen;  // band vectors componentwise <= target
  const std::vector<i64>& target = out.bands;
  std::vector<i64> k(r, 0);
  while (true) {
    std::vector<i64> bands;
    bands.reserve(roots.size());
    bool wall = false, le = true;
    for (std::size_t b = 0; b < roots.size(); ++b) {
      i64 num = 0;
      for (int j = 0; j < r; ++j) num += i64(roots[b].coroot[j]) * (2 * k[j] + 1);
      if (num % (2 * N) == 0) { wall = true; break; }
      i64 band = floordiv(num, 2 * N);
      bands.push_back(band);
      if (band > target[b]) { le = false; break; }
    }
    if (!wall && le) seen.insert(bands);
    int j = 0;
    while (j < r && k[j] == kmax[j] - 1) k[j++] = 0;
    if (j == r) break;
    ++k[j];
  }
  if (seen.find(target) == seen.end())
    throw std::logic_error("alcove sampling missed the target alcove");
  out.count_below = static_cast<i64>(seen.size()) - 1;
  return out;
}

}  // namespace overchev
