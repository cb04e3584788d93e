#include "wmb/matrix.hpp"

#include <algorithm>

namespace wmb {

Rat rat_parse(const std::string& s) { return Rat(s); }

}  // namespace wmb

namespace wmb::lin {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
  Mat m(int(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < cols; ++j) m.at(int(i), j) = rows[i][j];
  return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, int rows) {
  Mat m(rows, int(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < rows; ++i) m.at(i, int(j)) = cols[j][i];
  return m;
}

Vec Mat::row(int i) const {
  Vec v(cols_);
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Vec Mat::col(int j) const {
  Vec v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("Mat::operator*: shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += v * o.at(k, j);
      }
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator+: shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("Mat::operator-: shape mismatch");
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Vec Mat::apply(const Vec& x) const {
  if (int(x.size()) != cols_) throw std::invalid_argument("Mat::apply: size mismatch");
  Vec r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != 0 && x[j] != 0) r[i] += at(i, j) * x[j];
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Mat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& v) { return v == 0; });
}

Mat rref(const Mat& m) {
  Mat r = m;
  int lead = 0;
  for (int row = 0; row < r.rows() && lead < r.cols(); ++row) {
    int pivot = -1;
    while (lead < r.cols()) {
      for (int i = row; i < r.rows(); ++i)
        if (r.at(i, lead) != 0) {
          pivot = i;
          break;
        }
      if (pivot >= 0) break;
      ++lead;
    }
    if (pivot < 0) break;
    if (pivot != row)
      for (int j = 0; j < r.cols(); ++j) std::swap(r.at(pivot, j), r.at(row, j));
    Rat inv = 1 / r.at(row, lead);
    for (int j = lead; j < r.cols(); ++j) r.at(row, j) *= inv;
    for (int i = 0; i < r.rows(); ++i) {
      if (i == row || r.at(i, lead) == 0) continue;
      Rat f = r.at(i, lead);
      for (int j = lead; j < r.cols(); ++j) r.at(i, j) -= f * r.at(row, j);
    }
    ++lead;
  }
  return r;
}

int rank(const Mat& m) {
  Mat r = rref(m);
  int rk = 0;
  for (int i = 0; i < r.rows(); ++i) {
    bool nonzero = false;
    for (int j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) ++rk;
  }
  return rk;
}

Subspace Subspace::span(int ambient, const std::vector<Vec>& vecs) {
  Subspace s;
  s.ambient = ambient;
  if (vecs.empty()) return s;
  Mat r = rref(Mat::from_rows(vecs, ambient));
  for (int i = 0; i < r.rows(); ++i) {
    Vec row = r.row(i);
    if (!vec_is_zero(row)) s.basis.push_back(std::move(row));
  }
  return s;
}

bool Subspace::contains(const Vec& v) const {
  // Reduce v against the RREF basis; membership iff the residue vanishes.
  Vec w = v;
  for (const Vec& b : basis) {
    int p = 0;
    while (p < ambient && b[p] == 0) ++p;
    if (p < ambient && w[p] != 0) {
      Rat f = w[p];
      for (int j = p; j < ambient; ++j) w[j] -= f * b[j];
    }
  }
  return vec_is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis.begin(), other.basis.end(),
                     [&](const Vec& v) { return contains(v); });
}

Subspace kernel(const Mat& m) {
  Mat r = rref(m);
  std::vector<int> pivot_col(r.rows(), -1);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (r.at(i, j) != 0) {
        pivot_col[i] = j;
        is_pivot[j] = true;
        break;
      }
  std::vector<Vec> gens;
  for (int j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols());
    v[j] = 1;
    for (int i = 0; i < r.rows(); ++i)
      if (pivot_col[i] >= 0) v[pivot_col[i]] = -r.at(i, j);
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

Subspace image(const Mat& m) {
  std::vector<Vec> cols;
  cols.reserve(m.cols());
  for (int j = 0; j < m.cols(); ++j) cols.push_back(m.col(j));
  return Subspace::span(m.rows(), cols);
}

SolveResult solve(const Mat& m, const Vec& b) {
  if (int(b.size()) != m.rows()) throw std::invalid_argument("solve: size mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Mat r = rref(aug);
  std::vector<int> pivot_of_row(r.rows(), -1);
  std::vector<int> row_of_col(m.cols(), -1);
  for (int i = 0; i < r.rows(); ++i) {
    for (int j = 0; j <= m.cols(); ++j)
      if (r.at(i, j) != 0) {
        pivot_of_row[i] = j;
        break;
      }
    if (pivot_of_row[i] == m.cols()) return {std::nullopt, false};  // 0 = 1 row
    if (pivot_of_row[i] >= 0) row_of_col[pivot_of_row[i]] = i;
  }
  Vec x(m.cols());
  bool unique = true;
  for (int j = 0; j < m.cols(); ++j) {
    if (row_of_col[j] >= 0)
      x[j] = r.at(row_of_col[j], m.cols());
    else
      unique = false;  // free variable, set to 0
  }
  return {x, unique};
}

std::optional<Mat> solve_matrix(const Mat& m, const Mat& b) {
  Mat x(m.cols(), b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    SolveResult s = solve(m, b.col(j));
    if (!s.x) return std::nullopt;
    for (int i = 0; i < m.cols(); ++i) x.at(i, j) = (*s.x)[i];
  }
  return x;
}

IdempotentSplit split_idempotent(const Mat& p) {
  if (p.rows() != p.cols()) throw NotIdempotent("split_idempotent: not square");
  if (!(p * p == p)) throw NotIdempotent("split_idempotent: p^2 != p");
  Subspace im = image(p);
  int r = im.dim();
  IdempotentSplit s{Mat(p.rows(), r), Mat(r, p.rows())};
  std::vector<Vec> cols;
  for (const Vec& v : im.basis) cols.push_back(v);
  s.injection = Mat::from_cols(cols, p.rows());
  // p x lies in Im(p) for every x, and the injection has full column rank,
  // so the coordinate matrix exists and is unique.
  auto surj = solve_matrix(s.injection, p);
  if (!surj) throw NotIdempotent("split_idempotent: image decomposition failed");
  s.surjection = *surj;
  return s;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

}  // namespace wmb::lin
