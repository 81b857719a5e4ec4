#ifndef OVERCHEV_FPMATRIX_HPP
#define OVERCHEV_FPMATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "overchev/fp.hpp"

namespace overchev {

using FpVec = std::vector<u32>;  // residues mod a modulus tracked by the caller

/// Dense matrix over F_p.  All entries share one modulus; residues are kept
/// reduced, so the row-major byte encoding is canonical.
class FpMat {
 public:
  FpMat(std::size_t rows, std::size_t cols, u32 p)
      : p_(check_prime_modulus(p)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static FpMat identity(std::size_t n, u32 p) {
    FpMat m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u32 modulus() const { return p_; }

  u32 at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, i64 v) { a_[i * cols_ + j] = reduce_mod(v, p_); }
  void add_at(std::size_t i, std::size_t j, i64 v) {
    a_[i * cols_ + j] = reduce_mod(static_cast<i64>(a_[i * cols_ + j]) + v, p_);
  }

  const FpVec& data() const { return a_; }

  FpMat operator+(const FpMat& o) const {
    FpMat r = compatible(o, true);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = add_mod(a_[k], o.a_[k], p_);
    return r;
  }
  FpMat operator-(const FpMat& o) const {
    FpMat r = compatible(o, true);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = sub_mod(a_[k], o.a_[k], p_);
    return r;
  }
  FpMat operator*(const FpMat& o) const {
    FpMat r = compatible(o, false);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        u32 aik = a_[i * cols_ + k];
        if (!aik) continue;
        const u32* orow = &o.a_[k * o.cols_];
        u32* rrow = &r.a_[i * o.cols_];
        for (std::size_t j = 0; j < o.cols_; ++j)
          rrow[j] = static_cast<u32>((u64(rrow[j]) + u64(aik) * orow[j]) % p_);
      }
    return r;
  }
  FpMat scaled(u32 c) const {
    FpMat r(rows_, cols_, p_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = mul_mod(a_[k], c % p_, p_);
    return r;
  }
  FpMat operator-() const { return scaled(p_ - 1); }

  FpMat pow(u64 e) const {
    if (rows_ != cols_) throw std::invalid_argument("pow of non-square matrix");
    FpMat r = identity(rows_, p_), b = *this;
    while (e) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  bool is_zero() const {
    for (u32 v : a_)
      if (v) return false;
    return true;
  }
  bool operator==(const FpMat& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const FpMat& o) const { return !(*this == o); }

  FpMat transpose() const {
    FpMat r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
    return r;
  }

  FpVec apply(const FpVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
    FpVec r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
      u64 acc = 0;
      for (std::size_t j = 0; j < cols_; ++j) acc += u64(a_[i * cols_ + j]) * v[j];
      r[i] = static_cast<u32>(acc % p_);
    }
    return r;
  }

  /// Canonical injective byte encoding (row-major reduced residues).
  std::string encode() const {
    std::string s;
    s.reserve(a_.size() * (p_ <= 0xff ? 1 : 2));
    for (u32 v : a_) {
      if (p_ <= 0xff) {
        s.push_back(static_cast<char>(v));
      } else {
        s.push_back(static_cast<char>(v & 0xff));
        s.push_back(static_cast<char>((v >> 8) & 0xff));
      }
    }
    return s;
  }

  /// Reduced row echelon form; pivot search takes the first nonzero entry in
  /// the lowest unused column, so the output is deterministic.
  FpMat rref(std::size_t* out_rank = nullptr) const {
    FpMat m = *this;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
      std::size_t piv = r;
      while (piv < rows_ && m.a_[piv * cols_ + c] == 0) ++piv;
      if (piv == rows_) continue;
      if (piv != r)
        for (std::size_t j = 0; j < cols_; ++j)
          std::swap(m.a_[piv * cols_ + j], m.a_[r * cols_ + j]);
      u32 inv = inv_mod(m.a_[r * cols_ + c], p_);
      for (std::size_t j = 0; j < cols_; ++j)
        m.a_[r * cols_ + j] = mul_mod(m.a_[r * cols_ + j], inv, p_);
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == r) continue;
        u32 f = m.a_[i * cols_ + c];
        if (!f) continue;
        for (std::size_t j = 0; j < cols_; ++j)
          m.a_[i * cols_ + j] =
              sub_mod(m.a_[i * cols_ + j], mul_mod(f, m.a_[r * cols_ + j], p_), p_);
      }
      ++r;
    }
    if (out_rank) *out_rank = r;
    return m;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    rref(&r);
    return r;
  }

  /// Echelonized basis of the right kernel {v : Mv = 0}.  Free columns are
  /// enumerated in ascending index order.
  std::vector<FpVec> nullspace() const {
    std::size_t r = 0;
    FpMat m = rref(&r);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(cols_, false);
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t c = 0;
      while (c < cols_ && m.a_[i * cols_ + c] == 0) ++c;
      pivot_col.push_back(c);
      is_pivot[c] = true;
    }
    std::vector<FpVec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
      if (is_pivot[f]) continue;
      FpVec v(cols_, 0);
      v[f] = 1;
      for (std::size_t i = 0; i < r; ++i)
        v[pivot_col[i]] = sub_mod(0, m.a_[i * cols_ + f], p_);
      basis.push_back(std::move(v));
    }
    return basis;
  }

  std::optional<FpMat> inverse() const {
    if (rows_ != cols_) return std::nullopt;
    FpMat aug(rows_, 2 * cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) aug.a_[i * 2 * cols_ + j] = a_[i * cols_ + j];
      aug.a_[i * 2 * cols_ + cols_ + i] = 1;
    }
    std::size_t r = 0;
    FpMat red = aug.rref(&r);
    for (std::size_t i = 0; i < rows_; ++i)
      if (red.a_[i * 2 * cols_ + i] != 1) return std::nullopt;
    FpMat inv(rows_, cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        inv.a_[i * cols_ + j] = red.a_[i * 2 * cols_ + cols_ + j];
    return inv;
  }

 private:
  FpMat compatible(const FpMat& o, bool same_shape) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed moduli in FpMat arithmetic");
    if (same_shape) {
      if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("shape mismatch in FpMat arithmetic");
      return FpMat(rows_, cols_, p_);
    }
    if (cols_ != o.rows_) throw std::invalid_argument("shape mismatch in FpMat product");
    return FpMat(rows_, o.cols_, p_);
  }

  u32 p_;
  std::size_t rows_, cols_;
  FpVec a_;
};

/// Incremental row-echelon span of vectors over F_p.  insert() returns true
/// when the vector enlarged the span.  Rows are kept fully reduced with the
/// pivot normalized to 1, lowest pivot column first, so the stored basis is
/// canonical for the subspace.
class Echelon {
 public:
  Echelon(std::size_t width, u32 p) : p_(check_prime_modulus(p)), width_(width) {}

  std::size_t dim() const { return rows_.size(); }
  std::size_t width() const { return width_; }
  const std::vector<FpVec>& basis() const { return rows_; }

  /// Reduce v against the current basis (does not modify the span).
  FpVec reduce(FpVec v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      u32 c = v[pivots_[i]];
      if (!c) continue;
      for (std::size_t j = 0; j < width_; ++j)
        v[j] = sub_mod(v[j], mul_mod(c, rows_[i][j], p_), p_);
    }
    return v;
  }

  bool contains(const FpVec& v) const {
    FpVec r = reduce(v);
    for (u32 x : r)
      if (x) return false;
    return true;
  }

  bool insert(FpVec v) {
    if (v.size() != width_) throw std::invalid_argument("Echelon: width mismatch");
    v = reduce(std::move(v));
    std::size_t piv = 0;
    while (piv < width_ && v[piv] == 0) ++piv;
    if (piv == width_) return false;
    u32 inv = inv_mod(v[piv], p_);
    for (std::size_t j = 0; j < width_; ++j) v[j] = mul_mod(v[j], inv, p_);
    // back-substitute into earlier rows, keep rows sorted by pivot
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      u32 c = rows_[i][piv];
      if (!c) continue;
      for (std::size_t j = 0; j < width_; ++j)
        rows_[i][j] = sub_mod(rows_[i][j], mul_mod(c, v[j], p_), p_);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }

 private:
  u32 p_;
  std::size_t width_;
  std::vector<FpVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Matrix over the dual numbers F_p[eps]/(eps^2), stored as value + slope.
class DualMat {
 public:
  DualMat(FpMat value, FpMat slope) : v_(std::move(value)), s_(std::move(slope)) {
    if (v_.rows() != s_.rows() || v_.cols() != s_.cols() || v_.modulus() != s_.modulus())
      throw std::invalid_argument("DualMat: mismatched parts");
  }
  static DualMat constant(FpMat m) {
    FpMat z(m.rows(), m.cols(), m.modulus());
    return DualMat(std::move(m), std::move(z));
  }
  static DualMat identity(std::size_t n, u32 p) { return constant(FpMat::identity(n, p)); }

  const FpMat& value() const { return v_; }
  const FpMat& slope() const { return s_; }

  DualMat operator*(const DualMat& o) const {
    return DualMat(v_ * o.v_, v_ * o.s_ + s_ * o.v_);
  }
  DualMat operator+(const DualMat& o) const { return DualMat(v_ + o.v_, s_ + o.s_); }
  DualMat scaled(const Dual& c) const {
    return DualMat(v_.scaled(c.value().residue()),
                   v_.scaled(c.slope().residue()) + s_.scaled(c.value().residue()));
  }

 private:
  FpMat v_, s_;
};

}  // namespace overchev

#endif
