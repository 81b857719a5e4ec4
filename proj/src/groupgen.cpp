#include "overchev/groupgen.hpp"

#include <random>
#include <stdexcept>

#include "json.hpp"

namespace overchev {

MatrixGroup::MatrixGroup(std::vector<FpMat> generators, std::vector<GeneratorLabel> labels,
                         std::size_t element_cap)
    : gens_(std::move(generators)), labels_(std::move(labels)) {
  if (gens_.empty()) throw std::invalid_argument("MatrixGroup: no generators");
  if (labels_.size() != gens_.size())
    throw std::invalid_argument("MatrixGroup: one label per generator");
  for (const FpMat& g : gens_)
    if (!g.inverse().has_value())
      throw std::invalid_argument("MatrixGroup: generator is not invertible");

  const std::size_t n = gens_[0].rows();
  FpMat id = FpMat::identity(n, gens_[0].modulus());
  elements_.push_back(id);
  words_.push_back({});
  depth_.push_back(0);
  index_[id.encode()] = 0;
  for (std::size_t cursor = 0; cursor < elements_.size(); ++cursor) {
    for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
      FpMat prod = elements_[cursor] * gens_[gi];
      std::string key = prod.encode();
      if (index_.count(key)) continue;
      if (elements_.size() >= element_cap) {
        closed_ = false;
        return;
      }
      index_[key] = elements_.size();
      std::vector<std::size_t> w = words_[cursor];
      w.push_back(gi);
      words_.push_back(std::move(w));
      depth_.push_back(depth_[cursor] + 1);
      elements_.push_back(std::move(prod));
    }
  }
}

std::size_t MatrixGroup::index_of(const FpMat& m) const {
  auto it = index_.find(m.encode());
  if (it == index_.end()) throw std::invalid_argument("element not in group");
  return it->second;
}

int MatrixGroup::word_diameter() const {
  int d = 0;
  for (int x : depth_) d = std::max(d, x);
  return d;
}

FpMat MatrixGroup::eval_word(const std::vector<std::size_t>& word) const {
  FpMat acc = FpMat::identity(gens_[0].rows(), gens_[0].modulus());
  for (std::size_t gi : word) acc = acc * gens_[gi];
  return acc;
}

std::pair<std::vector<FpVec>, std::vector<GeneratorLabel>> exponential_generator_set(
    const Representation& rep, GeneratorPolicy policy) {
  const RestrictedLieAlgebra& g = rep.lie();
  std::vector<FpVec> dirs;
  std::vector<GeneratorLabel> labels;
  if (policy == GeneratorPolicy::RootExponentials) {
    for (std::size_t i = 0; i < g.num_pos(); ++i) {
      for (std::size_t idx : {g.pos_index(i), g.neg_index(i)})
        for (u32 t = 1; t < g.modulus(); ++t) {
          dirs.push_back(g.basis_vector(idx));
          labels.push_back({g.basis_label(idx), t});
        }
    }
  } else {
    auto cone = g.np_cone_points();
    for (const FpVec& x : cone.points) {
      bool zero = std::all_of(x.begin(), x.end(), [](u32 c) { return c == 0; });
      if (zero) continue;
      std::string sym = "x[";
      for (std::size_t i = 0; i < x.size(); ++i)
        sym += (i ? "," : "") + std::to_string(x[i]);
      sym += "]";
      dirs.push_back(x);
      labels.push_back({sym, 1});
    }
  }
  return {dirs, labels};
}

MatrixGroup pseudo_chevalley_group(const Representation& rep, GeneratorPolicy policy,
                                   std::size_t cap) {
  auto [dirs, labels] = exponential_generator_set(rep, policy);
  std::vector<FpMat> gens;
  for (std::size_t i = 0; i < dirs.size(); ++i)
    gens.push_back(exp_operator(rep, dirs[i], Fp(labels[i].t, rep.modulus())));
  return MatrixGroup(std::move(gens), std::move(labels), cap);
}

bool generator_policies_agree(const Representation& rep, std::size_t cap) {
  MatrixGroup a = pseudo_chevalley_group(rep, GeneratorPolicy::RootExponentials, cap);
  MatrixGroup b = pseudo_chevalley_group(rep, GeneratorPolicy::FullCone, cap);
  if (!a.closed() || !b.closed() || a.order() != b.order()) return false;
  for (const FpMat& m : a.elements())
    if (!b.contains(m)) return false;
  return true;
}

namespace {

FpMat block_diag(const FpMat& a, const FpMat& b) {
  FpMat m(a.rows() + b.rows(), a.cols() + b.cols(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.set(i, j, static_cast<i64>(a.at(i, j)));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.set(a.rows() + i, a.cols() + j, static_cast<i64>(b.at(i, j)));
  return m;
}

FpMat top_block(const FpMat& m, std::size_t n) {
  FpMat a(n, n, m.modulus());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, static_cast<i64>(m.at(i, j)));
  return a;
}

FpMat bottom_block(const FpMat& m, std::size_t n) {
  std::size_t off = m.rows() - n;
  FpMat b(n, n, m.modulus());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      b.set(i, j, static_cast<i64>(m.at(off + i, off + j)));
  return b;
}

bool commutes(const FpMat& a, const FpMat& b) { return a * b == b * a; }

}  // namespace

PhiVerdict build_phi_pairs(const std::vector<FpMat>& gv_gens,
                           const std::vector<FpMat>& gg_gens,
                           const std::vector<GeneratorLabel>& labels,
                           const std::vector<FpMat>& commutant_basis, std::size_t cap) {
  if (gv_gens.size() != gg_gens.size())
    throw std::invalid_argument("build_phi_pairs: generator lists must match");
  const std::size_t nv = gv_gens[0].rows(), ng = gg_gens[0].rows();

  std::vector<FpMat> paired;
  for (std::size_t i = 0; i < gv_gens.size(); ++i)
    paired.push_back(block_diag(gv_gens[i], gg_gens[i]));

  PhiVerdict out;
  out.generator_labels.reserve(labels.size());
  for (const auto& l : labels) out.generator_labels.push_back(l.str());

  MatrixGroup graph(paired, labels, cap);
  MatrixGroup gv(gv_gens, labels, cap);
  MatrixGroup gg(gg_gens, labels, cap);
  out.closed = graph.closed() && gv.closed() && gg.closed();
  out.graph_order = graph.order();
  out.gv_order = gv.order();
  out.gg_order = gg.order();
  out.is_function = out.graph_order == out.gv_order;

  FpMat id_g = FpMat::identity(ng, gg_gens[0].modulus());
  std::vector<FpMat> kernel;
  for (const FpMat& pair : graph.elements())
    if (bottom_block(pair, ng) == id_g) kernel.push_back(top_block(pair, nv));
  out.kernel_size = kernel.size();

  out.kernel_central = true;
  // commuting with the generators is equivalent to commuting with the group;
  // check against all elements when the group is small enough
  const bool full = gv.order() * kernel.size() <= 200000;
  for (const FpMat& k : kernel) {
    if (full) {
      for (const FpMat& g : gv.elements())
        if (!commutes(k, g)) out.kernel_central = false;
    } else {
      for (const FpMat& g : gv.generators())
        if (!commutes(k, g)) out.kernel_central = false;
    }
  }
  out.kernel_in_aut = true;
  for (const FpMat& k : kernel)
    for (const FpMat& theta : commutant_basis)
      if (!commutes(k, theta)) out.kernel_in_aut = false;

  out.counts_consistent =
      !out.is_function || out.gv_order == out.kernel_size * out.gg_order;
  return out;
}

PhiVerdict build_phi(const Representation& rep, GeneratorPolicy policy, std::size_t cap) {
  const RestrictedLieAlgebra& g = rep.lie();
  Representation ad = adjoint_rep(g);
  auto [dirs, labels] = exponential_generator_set(rep, policy);
  std::vector<FpMat> gv_gens, gg_gens;
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    Fp t(labels[i].t, rep.modulus());
    gv_gens.push_back(exp_operator(rep, dirs[i], t));
    gg_gens.push_back(exp_operator(ad, dirs[i], t));
  }
  std::vector<FpMat> theta_basis;
  for (std::size_t i = 0; i < g.dim(); ++i) theta_basis.push_back(rep.matrix(i));
  return build_phi_pairs(gv_gens, gg_gens, labels, theta_basis, cap);
}

TangentSpace tangent_space(const Representation& rep, const std::vector<FpVec>& directions,
                           const MatrixGroup& group, u64 seed) {
  const u32 p = rep.modulus();
  const std::size_t d = rep.dimension();
  TangentSpace out;
  Echelon span(d * d, p);
  auto flatten = [&](const FpMat& m) {
    FpVec v(d * d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) v[i * d + j] = m.at(i, j);
    return v;
  };

  // dual-number derivatives along each one-parameter family, pulled back to
  // the identity
  out.first_order_matches = true;
  for (const FpVec& x : directions) {
    for (u32 a = 0; a < p; ++a) {
      DualMat e = exp_operator_dual(rep, x, Dual::variable(Fp(a, p)));
      auto inv = e.value().inverse();
      if (!inv) throw std::logic_error("exponential is not invertible");
      FpMat pulled = *inv * e.slope();
      span.insert(flatten(pulled));
      if (a == 0 && e.slope() != rep.act(x)) out.first_order_matches = false;
    }
  }

  // conjugates g theta(x) g^{-1} for the generators and random group elements
  auto add_conjugates = [&](const FpMat& g) {
    auto inv = g.inverse();
    if (!inv) return;
    for (const FpVec& x : directions) span.insert(flatten(g * rep.act(x) * *inv));
  };
  for (const FpMat& g : group.generators()) add_conjugates(g);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < 100; ++t) add_conjugates(group.elements()[rng() % group.order()]);

  std::size_t before = span.dim();
  for (int t = 0; t < 20; ++t) add_conjugates(group.elements()[rng() % group.order()]);
  out.stabilized = span.dim() == before;
  out.dimension = span.dim();
  out.basis = span.basis();
  return out;
}

std::string group_report_json(const MatrixGroup& g) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["order"] = g.order();
  j["closed"] = g.closed();
  j["diameter"] = g.word_diameter();
  j["matrix_size"] = g.elements()[0].rows();
  j["modulus"] = g.elements()[0].modulus();
  std::vector<std::string> labels;
  for (const auto& l : g.labels()) labels.push_back(l.str());
  j["generators"] = labels;
  return j.dump(2);
}

}  // namespace overchev
