#include "crystals/matrix.hpp"

namespace crystals::roots {

using crystals::alg::internal_error;

Matrix::Matrix(CtxPtr ctx, int n) : ctx_(std::move(ctx)) {
  rows_.assign(n, std::vector<RF>(n, RF::zero(ctx_)));
}

Matrix Matrix::identity(const CtxPtr& ctx, int n) {
  Matrix m(ctx, n);
  for (int i = 0; i < n; ++i) m.rows_[i][i] = RF::constant(ctx, 1);
  return m;
}

Matrix Matrix::diagonal(const std::vector<RF>& d) {
  if (d.empty()) throw std::invalid_argument("empty diagonal");
  Matrix m(d.front().ctx(), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.rows_[i][i] = d[i];
  return m;
}

Matrix Matrix::from_int(const CtxPtr& ctx,
                        const std::vector<std::vector<int>>& src) {
  Matrix m(ctx, static_cast<int>(src.size()));
  for (size_t i = 0; i < src.size(); ++i)
    for (size_t j = 0; j < src[i].size(); ++j)
      m.rows_[i][j] = RF::constant(ctx, src[i][j]);
  return m;
}

Matrix Matrix::operator*(const Matrix& b) const {
  Matrix r(ctx_, n());
  for (int i = 0; i < n(); ++i)
    for (int k = 0; k < n(); ++k) {
      if (rows_[i][k].is_zero()) continue;
      for (int j = 0; j < n(); ++j) {
        if (b.rows_[k][j].is_zero()) continue;
        r.rows_[i][j] += rows_[i][k] * b.rows_[k][j];
      }
    }
  return r;
}

namespace {

RF det_rec(const Matrix& m, std::vector<int>& cols, int row) {
  int n = m.n();
  if (row == n) return RF::constant(m.ctx(), 1);
  RF acc = RF::zero(m.ctx());
  int sign = 1;
  for (size_t k = 0; k < cols.size(); ++k) {
    int c = cols[k];
    if (!m.at(row, c).is_zero()) {
      std::vector<int> rest;
      rest.reserve(cols.size() - 1);
      for (size_t t = 0; t < cols.size(); ++t)
        if (t != k) rest.push_back(cols[t]);
      RF sub = det_rec(m, rest, row + 1);
      RF term = m.at(row, c) * sub;
      acc += sign > 0 ? term : -term;
    }
    sign = -sign;
  }
  return acc;
}

}  // namespace

RF Matrix::det() const {
  std::vector<int> cols(n());
  for (int j = 0; j < n(); ++j) cols[j] = j;
  return det_rec(*this, cols, 0);
}

RF Matrix::principal_minor(int k) const {
  Matrix sub(ctx_, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub.rows_[i][j] = rows_[i][j];
  return sub.det();
}

Matrix Matrix::adjugate() const {
  int m = n();
  Matrix adj(ctx_, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Matrix sub(ctx_, m - 1);
      for (int r = 0, rr = 0; r < m; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < m; ++c) {
          if (c == i) continue;
          sub.rows_[rr][cc] = rows_[r][c];
          ++cc;
        }
        ++rr;
      }
      RF cof = sub.det();
      adj.rows_[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

Matrix Matrix::inverse() const {
  RF d = det();
  if (d.is_zero()) throw internal_error("inverse of a singular matrix");
  Matrix adj = adjugate();
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) adj.rows_[i][j] /= d;
  return adj;
}

Matrix Matrix::transpose() const {
  Matrix r(ctx_, n());
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) r.rows_[j][i] = rows_[i][j];
  return r;
}

std::vector<RF> Matrix::diagonal_entries() const {
  std::vector<RF> d;
  d.reserve(n());
  for (int i = 0; i < n(); ++i) d.push_back(rows_[i][i]);
  return d;
}

Matrix Matrix::substitute(const std::map<int, RF>& assignment) const {
  Matrix r(ctx_, n());
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j)
      r.rows_[i][j] = rows_[i][j].substitute(assignment);
  return r;
}

GaussFactors ldu(const Matrix& g) {
  int n = g.n();
  const CtxPtr& ctx = g.ctx();
  Matrix a = g;
  Matrix L = Matrix::identity(ctx, n);
  Matrix U = Matrix::identity(ctx, n);
  std::vector<RF> d;
  d.reserve(n);
  for (int k = 0; k < n; ++k) {
    RF piv = a.at(k, k);
    if (piv.is_zero())
      throw internal_error("LDU: vanishing leading principal minor");
    d.push_back(piv);
    for (int j = k + 1; j < n; ++j) U.at(k, j) = a.at(k, j) / piv;
    for (int i = k + 1; i < n; ++i) L.at(i, k) = a.at(i, k) / piv;
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a.at(i, j) -= L.at(i, k) * a.at(k, j);
  }
  return {std::move(L), std::move(d), std::move(U)};
}

GaussFactors udl(const Matrix& g) {
  int n = g.n();
  // Conjugate by the reversal matrix J (J g J flips both indices), take
  // the LDU there, and conjugate the factors back: upper <-> lower.
  Matrix rev(g.ctx(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rev.at(i, j) = g.at(n - 1 - i, n - 1 - j);
  GaussFactors f = ldu(rev);
  auto conj = [n, &g](const Matrix& m) {
    Matrix r(g.ctx(), n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.at(i, j) = m.at(n - 1 - i, n - 1 - j);
    return r;
  };
  std::vector<RF> d(f.d.rbegin(), f.d.rend());
  // g = conj(left) * diag(d) * conj(right): upper, diagonal, lower.
  return {conj(f.left), std::move(d), conj(f.right)};
}

}  // namespace crystals::roots
