#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "wmb/rational.hpp"

namespace wmb::lin {

using Vec = std::vector<Rat>;

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static Mat identity(int n);
  static Mat zero(int rows, int cols) { return Mat(rows, cols); }
  static Mat from_rows(const std::vector<Vec>& rows, int cols);
  static Mat from_cols(const std::vector<Vec>& cols, int rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  Vec row(int i) const;
  Vec col(int j) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Vec apply(const Vec& x) const;
  Mat transpose() const;
  bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> a_;
};

// Row span in reduced row-echelon form: pivots are 1, strictly increasing
// pivot columns, zeros above and below each pivot, no zero rows stored.
struct Subspace {
  int ambient = 0;
  std::vector<Vec> basis;

  static Subspace span(int ambient, const std::vector<Vec>& vecs);
  int dim() const { return int(basis.size()); }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const { return ambient == o.ambient && basis == o.basis; }
};

Mat rref(const Mat& m);
int rank(const Mat& m);

// Null space {x : m x = 0} of an rows x cols matrix, inside Q^cols.
Subspace kernel(const Mat& m);

// Column space of m, inside Q^rows.
Subspace image(const Mat& m);

struct SolveResult {
  std::optional<Vec> x;
  bool unique = false;
};

// Some solution of m x = b, with a uniqueness flag.
SolveResult solve(const Mat& m, const Vec& b);

// Solve m X = b columnwise; empty optional if any column is unsolvable.
std::optional<Mat> solve_matrix(const Mat& m, const Mat& b);

struct NotIdempotent : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// For p with p^2 = p, a factorization p = injection . surjection with
// surjection . injection = identity on Q^rank(p).
struct IdempotentSplit {
  Mat injection;   // ambient x r, columns span Im(p)
  Mat surjection;  // r x ambient
};
IdempotentSplit split_idempotent(const Mat& p);

inline Vec unit_vec(int n, int i) {
  Vec v(n);
  v[i] = 1;
  return v;
}
Vec vec_sub(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& v);

}  // namespace wmb::lin
