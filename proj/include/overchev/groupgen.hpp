#ifndef OVERCHEV_GROUPGEN_HPP
#define OVERCHEV_GROUPGEN_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "overchev/repmod.hpp"

namespace overchev {

struct GeneratorLabel {
  std::string direction;  // basis/cone-point description
  u32 t = 1;              // exponential parameter
  std::string str() const { return "exp(t=" + std::to_string(t) + "; " + direction + ")"; }
};

/// Finite matrix group enumerated breadth-first from its generators, with
/// deterministic discovery order (parent order, then generator index) and a
/// canonical shortest lexicographically-least word per element.
class MatrixGroup {
 public:
  MatrixGroup(std::vector<FpMat> generators, std::vector<GeneratorLabel> labels,
              std::size_t element_cap);

  std::size_t order() const { return elements_.size(); }
  bool closed() const { return closed_; }
  const std::vector<FpMat>& elements() const { return elements_; }
  const std::vector<FpMat>& generators() const { return gens_; }
  const std::vector<GeneratorLabel>& labels() const { return labels_; }
  const std::vector<std::vector<std::size_t>>& words() const { return words_; }
  int depth(std::size_t i) const { return depth_[i]; }

  bool contains(const FpMat& m) const { return index_.count(m.encode()) > 0; }
  std::size_t index_of(const FpMat& m) const;

  /// Maximum BFS depth over all elements.
  int word_diameter() const;

  /// Evaluate a generator word; the canonical words satisfy eval(word(i)) ==
  /// elements()[i].
  FpMat eval_word(const std::vector<std::size_t>& word) const;

 private:
  std::vector<FpMat> gens_;
  std::vector<GeneratorLabel> labels_;
  std::vector<FpMat> elements_;
  std::vector<std::vector<std::size_t>> words_;
  std::vector<int> depth_;
  std::unordered_map<std::string, std::size_t> index_;
  bool closed_ = true;
};

constexpr std::size_t kDefaultElementCap = 1000000;

enum class GeneratorPolicy { RootExponentials, FullCone };

/// Exponential generators of the pseudo-Chevalley group of a representation:
/// (direction, t) pairs with their labels.
std::pair<std::vector<FpVec>, std::vector<GeneratorLabel>> exponential_generator_set(
    const Representation& rep, GeneratorPolicy policy);

MatrixGroup pseudo_chevalley_group(const Representation& rep, GeneratorPolicy policy,
                                   std::size_t cap = kDefaultElementCap);

/// Whether root-exponential and full-cone generator policies produce the same
/// subgroup (compared as element sets).
bool generator_policies_agree(const Representation& rep,
                              std::size_t cap = kDefaultElementCap);

/// Graph-subgroup construction of phi: G_V -> G_g: enumerate the group of
/// paired block matrices (theta side, adjoint side) generated by matched
/// exponentials, and read the verdicts off cardinalities.
struct PhiVerdict {
  std::size_t graph_order = 0;
  std::size_t gv_order = 0;
  std::size_t gg_order = 0;
  bool is_function = false;        // graph order == order of G_V
  std::size_t kernel_size = 0;     // elements pairing with the adjoint identity
  bool kernel_central = false;     // commute with all of G_V
  bool kernel_in_aut = false;      // commute with every theta(y)
  bool counts_consistent = false;  // |G_V| = |kernel| * |G_g| when a function
  bool closed = true;
  std::vector<std::string> generator_labels;
};

/// Generic paired-group verdict: gv_gens[i] is matched with gg_gens[i];
/// commutant_basis are the operators the kernel must commute with.
PhiVerdict build_phi_pairs(const std::vector<FpMat>& gv_gens,
                           const std::vector<FpMat>& gg_gens,
                           const std::vector<GeneratorLabel>& labels,
                           const std::vector<FpMat>& commutant_basis,
                           std::size_t cap = kDefaultElementCap);

/// phi for a restricted representation against the adjoint representation of
/// its Lie algebra, with the chosen generator policy.
PhiVerdict build_phi(const Representation& rep,
                     GeneratorPolicy policy = GeneratorPolicy::RootExponentials,
                     std::size_t cap = kDefaultElementCap);

/// Tangent space of the enumerated group at the identity: dual-number
/// derivatives of the exponential one-parameter families together with group
/// conjugates of the direction operators.
struct TangentSpace {
  std::size_t dimension = 0;
  std::vector<FpVec> basis;     // vectorized matrices, echelonized
  bool stabilized = false;      // no growth on a fresh batch of conjugates
  bool first_order_matches = false;  // slope at t=0 equals theta(x) for all x
};
TangentSpace tangent_space(const Representation& rep, const std::vector<FpVec>& directions,
                           const MatrixGroup& group, u64 seed = 0xC0FFEE);

/// Versioned JSON document describing an enumerated group.
std::string group_report_json(const MatrixGroup& g);

}  // namespace overchev

#endif
