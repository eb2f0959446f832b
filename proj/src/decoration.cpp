#include "crystals/geom_crystal.hpp"

namespace crystals::geom {

using crystals::alg::internal_error;
using crystals::roots::generalized_minor;
using crystals::roots::iota;
using crystals::roots::ldu;
using crystals::roots::wbar;
using crystals::roots::wbar_inv;
using crystals::roots::x_plus;

namespace {

// chi^st(pi+(g)) = sum_i Delta_{omega_i, s_i omega_i}(g) /
//                        Delta_{omega_i, omega_i}(g).
RF chi_pi_plus(const Matrix& g) {
  int n = g.n();
  Perm e = Perm::identity(n);
  RF f = RF::zero(g.ctx());
  for (int i = 1; i <= n - 1; ++i) {
    RF den = generalized_minor(g, e, e, i);
    if (den.is_zero())
      throw internal_error("f_B minor denominator vanishes");
    RF num = generalized_minor(g, e, Perm::simple(n, i), i);
    f += num / den;
  }
  return f;
}

}  // namespace

RF fB_of_matrix(const Matrix& g) {
  Perm w0 = Perm::longest(g.n());
  Matrix w0inv = wbar_inv(g.ctx(), w0);
  return chi_pi_plus(w0inv * g) + chi_pi_plus(w0inv * iota(g));
}

RF decoration_fB(const ChartCrystal& X) {
  if (!X.torus)
    throw std::invalid_argument("decoration_fB requires a type-w_0 chart");
  RF f = fB_of_matrix(X.M);
  crystals::alg::certify_positive(f);
  return f;
}

Matrix theta_plus(const CtxPtr& ctx, int n, const std::vector<int>& word,
                  const std::vector<int>& cvars) {
  Matrix m = Matrix::identity(ctx, n);
  for (size_t k = 0; k < word.size(); ++k)
    m = m * x_plus(ctx, n, word[k], RF::var(ctx, cvars[k]));
  return m;
}

Matrix eta_w(const Matrix& u, const Perm& w) {
  // eta^w(u) = iota(pi-(u * (w^-1)bar)) with pi- the B^- factor of the
  // Gauss decomposition (L * diag part).
  Matrix h = u * wbar(u.ctx(), w.inverse());
  auto f = ldu(h);
  Matrix bminus = f.left * Matrix::diagonal(f.d);
  return iota(bminus);
}

RF fw_on_theta_minus(const ChartCrystal& X) {
  Perm w = Perm::identity(X.n);
  for (int i : X.word) w = w * Perm::simple(X.n, i);
  return chi_pi_plus(wbar_inv(X.ctx, w) * X.M);
}

RF decoration_fw(int n, const std::vector<int>& word, const CtxPtr& ctx,
                 const std::vector<int>& cvars) {
  // On the theta+ chart of U^w the decoration transported through eta^w
  // is chi^st(theta+(c)) = c_1 + ... + c_l; the transport identity is
  // asserted symbolically.
  Perm w = Perm::identity(n);
  for (int i : word) w = w * Perm::simple(n, i);
  Matrix u = theta_plus(ctx, n, word, cvars);
  Matrix b = eta_w(u, w);
  RF via_minors = chi_pi_plus(wbar_inv(ctx, w) * b);
  RF direct = RF::zero(ctx);
  for (int cv : cvars) direct += RF::var(ctx, cv);
  if (!(via_minors == direct))
    throw internal_error("f_w: eta-transport route disagrees with chi^st");
  crystals::alg::certify_positive(direct);
  return direct;
}

}  // namespace crystals::geom
