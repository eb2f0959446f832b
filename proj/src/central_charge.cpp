#include "crystals/geom_crystal.hpp"

namespace crystals::geom {

using crystals::alg::internal_error;
using crystals::roots::GaussFactors;
using crystals::roots::chi_st;
using crystals::roots::ldu;
using crystals::roots::udl;
using crystals::roots::wbar;
using crystals::roots::wbar_inv;

namespace {

// sigma(g) = w0bar * iota(g)^-1 * w0bar^-1 with iota(g)^-1 = D g D,
// D = diag((-1)^i).
Matrix sigma(const Matrix& g) {
  int n = g.n();
  Matrix dgd(g.ctx(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dgd.at(i, j) = ((i + j) % 2 == 0) ? g.at(i, j) : -g.at(i, j);
  Perm w0 = Perm::longest(n);
  return wbar(g.ctx(), w0) * dgd * wbar_inv(g.ctx(), w0);
}

}  // namespace

// Central charge of g * g' by both routes; throws on disagreement.
RF central_charge_of_matrices(const Matrix& gx, const Matrix& gy) {
  const CtxPtr& ctx = gx.ctx();
  int n = gx.n();
  RF direct = fB_of_matrix(gx) + fB_of_matrix(gy) - fB_of_matrix(gx * gy);

  // Factored route: write g = u0 t w0bar u, g' = u' t' w0bar u0'.
  // From w0bar^-1 g = (lower) * t_rev * u: u is the U-factor of the LDU
  // and t_i is the reversed diagonal. From g' w0bar^-1 = u' t' (lower):
  // u' and t' are the upper factor and diagonal of the UDL.
  Perm w0 = Perm::longest(n);
  GaussFactors fx = ldu(wbar_inv(ctx, w0) * gx);
  std::vector<RF> t(n, RF::zero(ctx));
  for (int i = 0; i < n; ++i) t[i] = fx.d[n - 1 - i];
  GaussFactors fy = udl(gy * wbar_inv(ctx, w0));
  Matrix upp = fx.right * fy.left;  // u'' = u u'
  Matrix m =
      Matrix::diagonal(t) * sigma(upp * Matrix::diagonal(fy.d));
  RF factored = chi_st(upp) + fB_of_matrix(m);

  if (!(direct == factored))
    throw internal_error("central charge: routes disagree");
  return direct;
}

RF central_charge(const ChartCrystal& X, const ChartCrystal& Y) {
  if (X.ctx != Y.ctx)
    throw std::invalid_argument("central_charge: charts must share context");
  RF delta = central_charge_of_matrices(X.M, Y.M);
  crystals::alg::certify_positive(delta);
  return delta;
}

Rat central_charge_at(const ChartCrystal& X, const ChartCrystal& Y,
                      const std::vector<Rat>& point) {
  auto eval_matrix = [&](const Matrix& g) {
    Matrix r(g.ctx(), g.n());
    for (int i = 0; i < g.n(); ++i)
      for (int j = 0; j < g.n(); ++j)
        r.at(i, j) = RF::constant(g.ctx(), g.at(i, j).eval(point));
    return r;
  };
  RF delta = central_charge_of_matrices(eval_matrix(X.M), eval_matrix(Y.M));
  return delta.num().eval({}) / delta.den().eval({});
}

}  // namespace crystals::geom
