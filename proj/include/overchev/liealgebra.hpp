#ifndef OVERCHEV_LIEALGEBRA_HPP
#define OVERCHEV_LIEALGEBRA_HPP

#include <memory>
#include <string>
#include <vector>

#include "overchev/fpmatrix.hpp"
#include "overchev/rootdata.hpp"

namespace overchev {

/// Integral Chevalley structure constants for a root system, built by the
/// extraspecial-pair sign algorithm and validated by an exhaustive Jacobi
/// check over Z.  Basis order: negative roots, Cartan h_1..h_r, positive
/// roots; root blocks follow the (height, lex) order of RootSystem.
class ChevalleyData {
 public:
  explicit ChevalleyData(const RootSystem& rs);

  const RootSystem& roots() const { return rs_; }
  std::size_t dim() const { return dim_; }
  int rank() const { return rs_.rank(); }
  std::size_t num_pos() const { return rs_.num_positive_roots(); }

  std::size_t neg_index(std::size_t i) const { return i; }
  std::size_t cartan_index(int j) const { return num_pos() + j; }
  std::size_t pos_index(std::size_t i) const { return num_pos() + rank() + i; }

  /// [basis_a, basis_b] over Z as sparse (index, coefficient) terms.
  const std::vector<std::pair<std::size_t, i64>>& bracket_z(std::size_t a,
                                                            std::size_t b) const {
    return table_[a * dim_ + b];
  }

  std::string basis_label(std::size_t i) const;

  /// Weight-lattice grade of a basis element (roots grade by themselves,
  /// Cartan by zero).
  Weight basis_grade(std::size_t i) const;

  /// Shared cache, one instance per (type, rank).
  static std::shared_ptr<const ChevalleyData> get(char type, int rank);

 private:
  void build();
  void verify_jacobi() const;

  RootSystem rs_;
  std::size_t dim_;
  std::vector<std::vector<std::pair<std::size_t, i64>>> table_;
};

/// Chevalley-basis restricted Lie algebra over F_p.  Elements are coefficient
/// vectors in the fixed basis (negative roots, Cartan, positive roots).
class RestrictedLieAlgebra {
 public:
  RestrictedLieAlgebra(char type, int rank, u32 p);

  const RootSystem& roots() const { return data_->roots(); }
  const ChevalleyData& data() const { return *data_; }
  std::size_t dim() const { return data_->dim(); }
  u32 modulus() const { return p_; }
  int rank() const { return data_->rank(); }
  std::size_t num_pos() const { return data_->num_pos(); }

  std::size_t neg_index(std::size_t i) const { return data_->neg_index(i); }
  std::size_t cartan_index(int j) const { return data_->cartan_index(j); }
  std::size_t pos_index(std::size_t i) const { return data_->pos_index(i); }
  std::string basis_label(std::size_t i) const { return data_->basis_label(i); }
  Weight basis_grade(std::size_t i) const { return data_->basis_grade(i); }

  FpVec zero() const { return FpVec(dim(), 0); }
  FpVec basis_vector(std::size_t i) const {
    FpVec v = zero();
    v[i] = 1;
    return v;
  }

  const std::vector<std::pair<std::size_t, u32>>& bracket_basis(std::size_t a,
                                                                std::size_t b) const {
    return table_[a * dim() + b];
  }
  FpVec bracket(const FpVec& x, const FpVec& y) const;

  /// Matrix of y -> [x, y] in the fixed basis.
  FpMat adjoint_matrix(const FpVec& x) const;

  /// p-operation on basis elements: root vectors to 0, h_i to h_i.
  const FpVec& p_power_basis(std::size_t i) const { return ppow_[i]; }

  /// p-operation on an arbitrary element via Jacobson's expansion
  /// (a+b)^[p] = a^[p] + b^[p] + sum_i s_i(a,b).
  FpVec p_power(const FpVec& x) const;

  bool is_p_nilpotent(const FpVec& x) const;

  /// Z(g) as an echelonized basis, the intersection of the kernels of the
  /// adjoint matrices of all basis elements.
  std::vector<FpVec> centre() const;

  struct Subalgebra {
    std::vector<FpVec> basis;
    bool restricted_closed = false;
  };
  /// Smallest bracket-closed subspace containing the generators, plus a flag
  /// reporting closure under the p-operation.
  Subalgebra generated_subalgebra(const std::vector<FpVec>& gens) const;

  struct ConePoints {
    std::vector<FpVec> points;   // all F_p-points with x^[p] = 0, zero included
    std::size_t span_dim = 0;    // dim g_1
  };
  ConePoints np_cone_points() const;

 private:
  void verify_restrictedness() const;

  std::shared_ptr<const ChevalleyData> data_;
  u32 p_;
  std::vector<std::vector<std::pair<std::size_t, u32>>> table_;
  std::vector<FpVec> ppow_;
};

}  // namespace overchev

#endif
