#include "bstack/matrix.hpp"

#include <algorithm>

namespace bstack {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = CyclotomicNumber(Rational(1));
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) fail("matrix product: shape mismatch");
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const CyclotomicNumber& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const CyclotomicNumber& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail("matrix sum: shape mismatch");
  Matrix r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail("matrix difference: shape mismatch");
  Matrix r = a;
  for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
  return r;
}

Matrix Matrix::scaled(const CyclotomicNumber& s) const {
  Matrix r = *this;
  for (auto& x : r.e_) x *= s;
  return r;
}

CyclotomicNumber Matrix::trace() const {
  if (rows_ != cols_) fail("trace of non-square matrix");
  CyclotomicNumber t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Matrix Matrix::embedded(int M) const {
  Matrix r = *this;
  for (auto& x : r.e_) x = x.embedded(M);
  return r;
}

int Matrix::entry_order_lcm() const {
  long long m = 1;
  for (const auto& x : e_) m = lcm_ll(m, x.order());
  return static_cast<int>(m);
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

bool Matrix::is_scalar(CyclotomicNumber* lambda) const {
  if (rows_ != cols_ || rows_ == 0) return false;
  const CyclotomicNumber& l = at(0, 0);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j) {
        if (at(i, j) != l) return false;
      } else if (!at(i, j).is_zero()) {
        return false;
      }
    }
  if (lambda) *lambda = l;
  return true;
}

std::vector<CyclotomicNumber> Matrix::apply(const std::vector<CyclotomicNumber>& v) const {
  if (static_cast<int>(v.size()) != cols_) fail("apply: length mismatch");
  std::vector<CyclotomicNumber> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) fail("inverse of non-square matrix");
  int n = rows_;
  // Augment with identity and run Gauss-Jordan.
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, n + i) = CyclotomicNumber(Rational(1));
  }
  int rank = 0;
  Matrix red = rref(aug, &rank);
  for (int i = 0; i < n; ++i)
    if (red.at(i, i).is_zero()) fail("matrix not invertible");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
  return inv;
}

std::string Matrix::key() const {
  std::string s = std::to_string(rows_) + "x" + std::to_string(cols_) + ";";
  for (const auto& x : e_) {
    s += x.key();
    s += ";";
  }
  return s;
}

Matrix rref(const Matrix& m, int* rank_out) {
  Matrix a = m;
  int rows = a.rows(), cols = a.cols();
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < rows; ++r)
      if (!a.at(r, col).is_zero()) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < cols; ++j) std::swap(a.at(sel, j), a.at(pivot_row, j));
    CyclotomicNumber inv = a.at(pivot_row, col).inverse();
    for (int j = col; j < cols; ++j) a.at(pivot_row, j) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row || a.at(r, col).is_zero()) continue;
      CyclotomicNumber f = a.at(r, col);
      for (int j = col; j < cols; ++j) a.at(r, j) -= f * a.at(pivot_row, j);
    }
    ++pivot_row;
  }
  if (rank_out) *rank_out = pivot_row;
  return a;
}

Subspace Subspace::zero(int ambient_dim) { return Subspace(ambient_dim, Matrix(0, ambient_dim)); }

Subspace Subspace::full(int ambient_dim) {
  return Subspace(ambient_dim, Matrix::identity(ambient_dim));
}

Subspace Subspace::span(int ambient_dim, const Matrix& vectors) {
  if (vectors.cols() != ambient_dim) fail("span: ambient dimension mismatch");
  int rank = 0;
  Matrix red = rref(vectors, &rank);
  Matrix basis(rank, ambient_dim);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < ambient_dim; ++j) basis.at(i, j) = red.at(i, j);
  return Subspace(ambient_dim, std::move(basis));
}

bool Subspace::contains_vector(const std::vector<CyclotomicNumber>& v) const {
  if (static_cast<int>(v.size()) != ambient_) fail("contains_vector: length mismatch");
  // Reduce v against the RREF basis rows.
  std::vector<CyclotomicNumber> w = v;
  for (int r = 0; r < basis_.rows(); ++r) {
    int lead = -1;
    for (int j = 0; j < ambient_; ++j)
      if (!basis_.at(r, j).is_zero()) { lead = j; break; }
    if (lead < 0) continue;
    if (w[lead].is_zero()) continue;
    CyclotomicNumber f = w[lead];  // pivot entries are 1
    for (int j = 0; j < ambient_; ++j) w[j] -= f * basis_.at(r, j);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

Subspace kernel(const Matrix& m) {
  int n = m.cols();
  int rank = 0;
  Matrix red = rref(m, &rank);
  // Identify pivot columns.
  std::vector<int> pivot_col(rank, -1);
  std::vector<bool> is_pivot(n, false);
  int pr = 0;
  for (int c = 0; c < n && pr < rank; ++c) {
    if (!red.at(pr, c).is_zero()) {
      pivot_col[pr] = c;
      is_pivot[c] = true;
      ++pr;
    }
  }
  // One basis vector per free column.
  Matrix vecs(n - rank, n);
  int row = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    vecs.at(row, c) = CyclotomicNumber(Rational(1));
    for (int r = 0; r < rank; ++r)
      vecs.at(row, pivot_col[r]) = -red.at(r, c);
    ++row;
  }
  return Subspace::span(n, vecs);
}

namespace {
// Rows spanning the annihilator {f : f(v) = 0 for all v in S} under the
// standard pairing; computed as the kernel of the basis matrix.
Matrix annihilator_rows(const Subspace& s) {
  Subspace ann = kernel(s.basis());
  return ann.basis();
}
}  // namespace

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw InputError("intersect: ambient dimension mismatch");
  if (a == b) return a;
  // A cap B = vectors annihilated by ann(A) and ann(B) stacked.
  Matrix na = annihilator_rows(a);
  Matrix nb = annihilator_rows(b);
  Matrix stacked(na.rows() + nb.rows(), a.ambient_dim());
  for (int i = 0; i < na.rows(); ++i)
    for (int j = 0; j < a.ambient_dim(); ++j) stacked.at(i, j) = na.at(i, j);
  for (int i = 0; i < nb.rows(); ++i)
    for (int j = 0; j < a.ambient_dim(); ++j) stacked.at(na.rows() + i, j) = nb.at(i, j);
  return kernel(stacked);
}

bool contains(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw InputError("contains: ambient dimension mismatch");
  if (b.dim() > a.dim()) return false;
  for (int i = 0; i < b.basis().rows(); ++i) {
    std::vector<CyclotomicNumber> v(a.ambient_dim());
    for (int j = 0; j < a.ambient_dim(); ++j) v[j] = b.basis().at(i, j);
    if (!a.contains_vector(v)) return false;
  }
  return true;
}

Subspace join(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw InputError("join: ambient dimension mismatch");
  Matrix stacked(a.dim() + b.dim(), a.ambient_dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.ambient_dim(); ++j) stacked.at(i, j) = a.basis().at(i, j);
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < a.ambient_dim(); ++j) stacked.at(a.dim() + i, j) = b.basis().at(i, j);
  return Subspace::span(a.ambient_dim(), stacked);
}

}  // namespace bstack
