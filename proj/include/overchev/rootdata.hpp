#ifndef OVERCHEV_ROOTDATA_HPP
#define OVERCHEV_ROOTDATA_HPP

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "overchev/fp.hpp"

namespace overchev {

/// Weight of the maximal torus, stored in fundamental-weight coordinates
/// (so <omega_i, alpha_j^vee> = delta_ij and all entries are integers).
struct Weight {
  std::vector<i64> fw;

  bool operator==(const Weight& o) const { return fw == o.fw; }
  bool operator<(const Weight& o) const { return fw < o.fw; }
};

/// A root in simple-root coordinates together with cached pairing data.
struct Root {
  std::vector<int> coeff;    // coordinates in the simple-root basis
  std::vector<int> coroot;   // coroot in the simple-coroot basis
  int height = 0;
  int length2 = 0;           // (beta,beta)/2 normalized so short roots give 1
};

/// Finite root system of type A..G.  Positive roots are produced by
/// reflection closure from the simple roots and ordered by (height, lex).
class RootSystem {
 public:
  RootSystem(char type, int rank);

  char type() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const { return std::string(1, type_) + std::to_string(rank_); }

  /// cartan(i,j) = <alpha_j, alpha_i^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive_roots() const { return positive_.size(); }
  const Root& highest_root() const { return positive_.back(); }

  /// Pairing <w, beta^vee> for w in fundamental-weight coordinates.
  i64 pair(const Weight& w, const Root& beta) const;

  /// Root expressed in fundamental-weight coordinates (Cartan matrix column
  /// combination), i.e. its image in the weight lattice.
  Weight root_weight(const Root& beta) const;
  Weight negative_root_weight(const Root& beta) const;
  Weight zero_weight() const { return Weight{std::vector<i64>(rank_, 0)}; }

  /// Coefficients a_1..a_r of 2*rho = sum of positive roots in the
  /// simple-root basis, and their maximum a.
  std::pair<std::vector<i64>, i64> two_rho_coefficients() const;

  /// Coxeter number h = 1 + height of the highest root.
  int coxeter_number() const;

  /// Orbit of a weight under the Weyl group (simple-reflection closure).
  std::set<Weight> weyl_orbit(const Weight& w) const;

  /// Set of weights of the irreducible/Weyl module with dominant highest
  /// weight lambda: all weights whose dominant conjugate mu satisfies
  /// lambda - mu in the nonnegative root lattice.
  std::set<Weight> weyl_weight_set(const Weight& lambda) const;

  Weight reflect(const Weight& w, int i) const;  // simple reflection s_i
  bool is_dominant(const Weight& w) const;

 private:
  void build_cartan();
  void build_positive_roots();

  char type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> dsym_;  // d_i = (alpha_i, alpha_i)/2, short roots = 1
  std::vector<Root> positive_;
};

/// Per-positive-root data of the p-alcove position of a weight:
/// band_beta = floor(<lambda+rho, beta^vee> / p).
struct AlcoveBands {
  std::vector<i64> pairings;      // <lambda+rho, beta^vee> per positive root
  std::vector<i64> bands;
  std::vector<bool> on_wall;      // pairing divisible by p
  bool any_wall = false;
  i64 count_below = -1;           // -1 when not computed (rank > 2)
};

/// Pairings of lambda+rho with all positive coroots.
std::vector<i64> pairing_vector(const RootSystem& rs, const Weight& lambda);

/// Band vector and the number of dominant alcoves whose band vectors are
/// componentwise <= and not equal (rank <= 2 only for the count).
AlcoveBands alcove_bands(const RootSystem& rs, const Weight& lambda, u32 p);

}  // namespace overchev

#endif
