#pragma once

#include <optional>
#include <vector>

#include "qorb/cyclotomic.hpp"

namespace qorb {

// Dense exact matrix over cyclotomic scalars.  All eliminations are exact;
// rank/kernel/solve share one deterministic row-echelon routine, so the
// reported bases are reproducible run to run.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}
  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  // Row-major rational entries, e.g. {{0,1},{-1,0}}.
  static Mat from_rows(const std::vector<std::vector<long>>& rows);
  static Mat from_cyc_rows(const std::vector<std::vector<Cyc>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Cyc& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }
  Cyc& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat operator*(const Cyc& c) const;
  Mat operator-() const { return *this * Cyc(-1L); }
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }

  Mat transpose() const;
  Cyc trace() const;
  bool is_zero() const;

  // Reduced row echelon form; returns pivot column indices.
  std::vector<int> rref();
  int rank() const;
  // Basis of the right kernel as columns of the returned matrix.  Each basis
  // vector sets one free variable to 1 and the remaining free variables to 0.
  Mat kernel_basis() const;
  // One solution of A x = b, if any.
  std::optional<std::vector<Cyc>> solve(const std::vector<Cyc>& b) const;
  std::optional<Mat> inverse() const;
  Cyc det() const;

  std::vector<Cyc> apply(const std::vector<Cyc>& v) const;  // A v
  Mat col(int j) const;
  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Cyc> a_;
};

// Horizontal concatenation [A | B].
Mat hcat(const Mat& A, const Mat& B);

// Intersection-free helpers for vector spaces given as column-span matrices.
int column_rank(const Mat& A);

}  // namespace qorb
