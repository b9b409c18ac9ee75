#ifndef BSTACK_MATRIX_HPP_
#define BSTACK_MATRIX_HPP_

#include <string>
#include <vector>

#include "bstack/cyclotomic.hpp"

namespace bstack {

/// Dense matrix over the cyclotomic field. Row-major storage.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols)
      : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  Matrix(int rows, int cols, std::vector<CyclotomicNumber> entries)
      : rows_(rows), cols_(cols), e_(std::move(entries)) {
    if (e_.size() != static_cast<size_t>(rows) * cols)
      fail("matrix entry count mismatch");
  }

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const CyclotomicNumber& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  CyclotomicNumber& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const std::vector<CyclotomicNumber>& entries() const { return e_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(const CyclotomicNumber& s) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] != b.e_[i]) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  CyclotomicNumber trace() const;
  Matrix transpose() const;
  /// All entries re-embedded into Q(zeta_M); requires each order | M.
  Matrix embedded(int M) const;
  /// Least common multiple of the entry field orders.
  int entry_order_lcm() const;
  bool is_identity() const;
  /// True iff the matrix is lambda*I for some scalar lambda.
  bool is_scalar(CyclotomicNumber* lambda = nullptr) const;

  /// Matrix-vector product (v as column vector).
  std::vector<CyclotomicNumber> apply(const std::vector<CyclotomicNumber>& v) const;

  /// Inverse via Gauss-Jordan; throws if singular.
  Matrix inverse() const;

  /// Canonical serialization key (used for hashing group elements).
  std::string key() const;

 private:
  int rows_, cols_;
  std::vector<CyclotomicNumber> e_;
};

/// Reduced row echelon form and rank. The RREF of a matrix is unique,
/// which makes it usable as a canonical form.
Matrix rref(const Matrix& m, int* rank_out = nullptr);

/// Linear subspace of k^d in canonical form: the basis matrix is the RREF
/// of any spanning set, with zero rows dropped. Two subspaces are equal
/// iff their basis matrices are identical.
class Subspace {
 public:
  /// Whole-space / zero-space constructors.
  static Subspace zero(int ambient_dim);
  static Subspace full(int ambient_dim);
  /// Span of the rows of `vectors` (need not be independent).
  static Subspace span(int ambient_dim, const Matrix& vectors);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  bool contains_vector(const std::vector<CyclotomicNumber>& v) const;
  std::string key() const { return std::to_string(ambient_) + "|" + basis_.key(); }

 private:
  Subspace(int ambient, Matrix basis) : ambient_(ambient), basis_(std::move(basis)) {}
  int ambient_;
  Matrix basis_;  // RREF, no zero rows
};

/// Null space {v : Mv = 0} in canonical form.
Subspace kernel(const Matrix& m);

/// A cap B; throws InputError on ambient dimension mismatch.
Subspace intersect(const Subspace& a, const Subspace& b);

/// True iff b is contained in a; throws on ambient mismatch.
bool contains(const Subspace& a, const Subspace& b);

/// A + B (span of the union).
Subspace join(const Subspace& a, const Subspace& b);

}  // namespace bstack

#endif
