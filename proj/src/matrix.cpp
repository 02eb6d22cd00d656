#include "tmsv/matrix.hpp"

#include <cassert>

#include "tmsv/errors.hpp"

namespace tmsv {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<QVec>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols)
      throw DimensionMismatch("ragged row list");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_cols(const std::vector<QVec>& cols) {
  if (cols.empty()) return Matrix();
  Matrix m(static_cast<int>(cols[0].size()), static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols; ++c) {
    if (static_cast<int>(cols[c].size()) != m.rows)
      throw DimensionMismatch("ragged column list");
    for (int r = 0; r < m.rows; ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& q : a)
    if (!tmsv::is_zero(q)) return false;
  return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw DimensionMismatch("matrix product shapes");
  Matrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Rational& xik = x.at(i, k);
      if (is_zero(xik)) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Rational& ykj = y.at(k, j);
        if (!is_zero(ykj)) z.at(i, j) += xik * ykj;
      }
    }
  return z;
}

namespace {

// In-place reduced row echelon form. Returns pivot columns. Pivot row for a
// column: first unprocessed row with nonzero entry.
std::vector<int> rref(Matrix& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int pr = -1;
    for (int r = row; r < m.rows; ++r)
      if (!is_zero(m.at(r, col))) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row)
      for (int c = col; c < m.cols; ++c) std::swap(m.at(pr, c), m.at(row, c));
    Rational inv = 1 / m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      const Rational f = m.at(r, col);
      if (is_zero(f)) continue;
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(const Matrix& m) {
  Matrix w = m;
  return static_cast<int>(rref(w).size());
}

std::vector<QVec> kernel_basis(const Matrix& m) {
  Matrix w = m;
  std::vector<int> pivots = rref(w);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<QVec> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(m.cols, Rational(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -w.at(static_cast<int>(i), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVec> span_basis(const std::vector<QVec>& vectors) {
  if (vectors.empty()) return {};
  Matrix w = Matrix::from_rows(vectors);
  std::vector<int> pivots = rref(w);
  std::vector<QVec> basis;
  for (size_t i = 0; i < pivots.size(); ++i) {
    QVec v(w.cols);
    for (int c = 0; c < w.cols; ++c) v[c] = w.at(static_cast<int>(i), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<QVec> subspace_sum_basis(
    const std::vector<std::vector<QVec>>& generating_families) {
  std::vector<QVec> stacked;
  size_t dim = 0;
  bool dim_set = false;
  for (const auto& fam : generating_families)
    for (const auto& v : fam) {
      if (!dim_set) {
        dim = v.size();
        dim_set = true;
      } else if (v.size() != dim) {
        throw DimensionMismatch("subspace_sum_basis: mixed ambient dimensions");
      }
      stacked.push_back(v);
    }
  return span_basis(stacked);
}

std::optional<QVec> solve_in_span(const std::vector<QVec>& basis,
                                  const QVec& target) {
  if (basis.empty()) {
    for (const auto& q : target)
      if (!is_zero(q)) return std::nullopt;
    return QVec{};
  }
  const int dim = static_cast<int>(basis[0].size());
  if (static_cast<int>(target.size()) != dim)
    throw DimensionMismatch("solve_in_span: target dimension");
  const int k = static_cast<int>(basis.size());
  Matrix aug(dim, k + 1);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < dim; ++r) aug.at(r, c) = basis[c][r];
  for (int r = 0; r < dim; ++r) aug.at(r, k) = target[r];
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == k) return std::nullopt;
  QVec x(k, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i)
    x[pivots[i]] = aug.at(static_cast<int>(i), k);
  // Solution may be non-unique if basis is dependent; echelon choice is
  // deterministic either way.
  return x;
}

std::vector<int> nonpivot_coords(const std::vector<QVec>& echelon, int dim) {
  std::vector<bool> pivot(dim, false);
  for (const auto& row : echelon)
    for (int c = 0; c < dim; ++c)
      if (!is_zero(row[c])) {
        pivot[c] = true;
        break;
      }
  std::vector<int> out;
  for (int c = 0; c < dim; ++c)
    if (!pivot[c]) out.push_back(c);
  return out;
}

QVec quotient_coords(const std::vector<QVec>& echelon,
                     const std::vector<int>& nonpivot, const QVec& v) {
  const int dim = static_cast<int>(v.size());
  std::vector<QVec> combined = echelon;
  for (int c : nonpivot) {
    QVec e(dim, Rational(0));
    e[c] = 1;
    combined.push_back(std::move(e));
  }
  Matrix x = coords_in_basis(combined, {v});
  QVec out(nonpivot.size(), Rational(0));
  for (size_t i = 0; i < nonpivot.size(); ++i)
    out[i] = x.at(static_cast<int>(echelon.size() + i), 0);
  return out;
}

Matrix coords_in_basis(const std::vector<QVec>& basis,
                       const std::vector<QVec>& vectors) {
  Matrix out(static_cast<int>(basis.size()), static_cast<int>(vectors.size()));
  for (size_t j = 0; j < vectors.size(); ++j) {
    auto x = solve_in_span(basis, vectors[j]);
    if (!x) throw DimensionMismatch("coords_in_basis: vector outside span");
    for (size_t i = 0; i < x->size(); ++i)
      out.at(static_cast<int>(i), static_cast<int>(j)) = (*x)[i];
  }
  return out;
}

}  // namespace tmsv
