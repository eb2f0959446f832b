#include "crystals/minors.hpp"

namespace crystals::roots {

Matrix x_plus(const CtxPtr& ctx, int n, int i, const RF& a) {
  Matrix m = Matrix::identity(ctx, n);
  m.at(i - 1, i) = a;
  return m;
}

Matrix x_minus(const CtxPtr& ctx, int n, int i, const RF& a) {
  Matrix m = Matrix::identity(ctx, n);
  m.at(i, i - 1) = a;
  return m;
}

Matrix chart_factor(const CtxPtr& ctx, int n, int i, const RF& c) {
  Matrix m = Matrix::identity(ctx, n);
  m.at(i - 1, i - 1) = c.inv();
  m.at(i, i - 1) = RF::constant(ctx, 1);
  m.at(i, i) = c;
  return m;
}

Matrix sbar(const CtxPtr& ctx, int n, int i) {
  Matrix m = Matrix::identity(ctx, n);
  m.at(i - 1, i - 1) = RF::zero(ctx);
  m.at(i, i) = RF::zero(ctx);
  m.at(i - 1, i) = RF::constant(ctx, -1);
  m.at(i, i - 1) = RF::constant(ctx, 1);
  return m;
}

Matrix sbar_inv(const CtxPtr& ctx, int n, int i) {
  Matrix m = Matrix::identity(ctx, n);
  m.at(i - 1, i - 1) = RF::zero(ctx);
  m.at(i, i) = RF::zero(ctx);
  m.at(i - 1, i) = RF::constant(ctx, 1);
  m.at(i, i - 1) = RF::constant(ctx, -1);
  return m;
}

Matrix wbar(const CtxPtr& ctx, const Perm& w) {
  Matrix m = Matrix::identity(ctx, w.n());
  for (int i : w.reduced_word()) m = m * sbar(ctx, w.n(), i);
  return m;
}

Matrix wbar_inv(const CtxPtr& ctx, const Perm& w) {
  std::vector<int> word = w.reduced_word();
  Matrix m = Matrix::identity(ctx, w.n());
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    m = m * sbar_inv(ctx, w.n(), *it);
  return m;
}

RF generalized_minor(const Matrix& g, const Perm& u, const Perm& v, int i) {
  Matrix h = wbar_inv(g.ctx(), u) * g * wbar(g.ctx(), v);
  return h.principal_minor(i);
}

Matrix iota(const Matrix& g) {
  RF d = g.det();
  if (d.is_zero())
    throw crystals::alg::internal_error("iota of a singular matrix");
  Matrix adj = g.adjugate();
  Matrix r(g.ctx(), g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j) {
      RF e = adj.at(i, j) / d;
      r.at(i, j) = ((i + j) % 2 == 0) ? e : -e;
    }
  return r;
}

RF chi_st(const Matrix& g) {
  RF s = RF::zero(g.ctx());
  for (int i = 0; i + 1 < g.n(); ++i) s += g.at(i, i + 1);
  return s;
}

}  // namespace crystals::roots
