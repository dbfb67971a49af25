#include "qorb/matrix.hpp"

#include <sstream>

namespace qorb {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyc(1L);
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<long>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = Cyc(rows[i][j]);
  }
  return m;
}

Mat Mat::from_cyc_rows(const std::vector<std::vector<Cyc>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw Error(ErrorKind::InvalidInput, "ragged matrix literal");
    for (int j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix addition shape mismatch");
  Mat r = *this;
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] += o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const { return *this + (o * Cyc(-1L)); }

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_)
    throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Cyc& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

Mat Mat::operator*(const Cyc& c) const {
  Mat r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Cyc Mat::trace() const {
  Cyc t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<int> Mat::rref() {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int p = -1;
    for (int i = row; i < rows_; ++i)
      if (!at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(row, j));
    Cyc inv = at(row, col).inverse();
    for (int j = col; j < cols_; ++j) at(row, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == row || at(i, col).is_zero()) continue;
      Cyc f = at(i, col);
      for (int j = col; j < cols_; ++j) at(i, j) -= f * at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int Mat::rank() const {
  Mat m = *this;
  return static_cast<int>(m.rref().size());
}

Mat Mat::kernel_basis() const {
  Mat m = *this;
  std::vector<int> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < cols_; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Mat basis(cols_, static_cast<int>(free_cols.size()));
  for (size_t f = 0; f < free_cols.size(); ++f) {
    int fc = free_cols[f];
    basis.at(fc, static_cast<int>(f)) = Cyc(1L);
    for (size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], static_cast<int>(f)) = -m.at(static_cast<int>(r), fc);
  }
  return basis;
}

std::optional<std::vector<Cyc>> Mat::solve(const std::vector<Cyc>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw Error(ErrorKind::DimensionMismatch, "solve rhs length mismatch");
  Mat aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;  // inconsistent
  std::vector<Cyc> x(cols_, Cyc());
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(static_cast<int>(r), cols_);
  return x;
}

std::optional<Mat> Mat::inverse() const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "inverse of non-square matrix");
  Mat aug = hcat(*this, identity(rows_));
  std::vector<int> pivots = aug.rref();
  // Singular iff some pivot escapes into the identity block ([A|I] always has
  // full row rank, so the pivot count alone detects nothing).
  if (static_cast<int>(pivots.size()) != rows_ ||
      (rows_ > 0 && pivots.back() != rows_ - 1))
    return std::nullopt;
  Mat inv(rows_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
  return inv;
}

Cyc Mat::det() const {
  if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
  Mat m = *this;
  Cyc d(1L);
  int row = 0;
  for (int col = 0; col < cols_; ++col) {
    int p = -1;
    for (int i = row; i < rows_; ++i)
      if (!m.at(i, col).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) return Cyc();
    if (p != row) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(row, j));
      d = -d;
    }
    d *= m.at(row, col);
    Cyc inv = m.at(row, col).inverse();
    for (int i = row + 1; i < rows_; ++i) {
      if (m.at(i, col).is_zero()) continue;
      Cyc f = m.at(i, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
  }
  return d;
}

std::vector<Cyc> Mat::apply(const std::vector<Cyc>& v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw Error(ErrorKind::DimensionMismatch, "apply length mismatch");
  std::vector<Cyc> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

Mat Mat::col(int j) const {
  Mat c(rows_, 1);
  for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
  return c;
}

std::string Mat::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? ", " : "");
    os << (i + 1 < rows_ ? ";\n" : "]");
  }
  return os.str();
}

Mat hcat(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows()) throw Error(ErrorKind::DimensionMismatch, "hcat row mismatch");
  Mat r(A.rows(), A.cols() + B.cols());
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) r.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols(); ++j) r.at(i, A.cols() + j) = B.at(i, j);
  }
  return r;
}

int column_rank(const Mat& A) { return A.rank(); }

}  // namespace qorb
