#include "crystals/geom_crystal.hpp"

#include <stdexcept>

namespace crystals::geom {

using crystals::alg::internal_error;
using crystals::alg::make_ctx;
using crystals::roots::chart_factor;
using crystals::roots::generalized_minor;
using crystals::roots::x_plus;

namespace {

// Rank-one structure data of the factor x_{-i_k}(c_k) at node j:
// phi_j = c, eps_j = 1/c when j = i_k, zero otherwise;
// gamma = (..., 1/c at i_k, c at i_k+1, ...).
RF rank_one_alpha_gamma(const ChartCrystal& X, int node, int j, const RF& c) {
  // alpha_j(gamma) = gamma_j / gamma_{j+1} (1-based j).
  int64_t ej = (j == node + 1 ? 1 : 0) - (j == node ? 1 : 0);
  int64_t ej1 = (j + 1 == node + 1 ? 1 : 0) - (j + 1 == node ? 1 : 0);
  (void)X;
  return c.pow(ej - ej1);
}

}  // namespace

ChartCrystal build_chart_in(const CtxPtr& ctx, int n,
                            const std::vector<int>& word, bool torus,
                            const std::vector<std::string>& tnames,
                            const std::vector<std::string>& cnames) {
  // Validate the word: must be reduced.
  Perm w = Perm::identity(n);
  for (int i : word) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("word index range");
    w = w * Perm::simple(n, i);
  }
  if (w.length() != static_cast<int>(word.size()))
    throw std::invalid_argument("word is not reduced");
  if (torus && !(w == Perm::longest(n)))
    throw std::invalid_argument("torus chart requires a word of w_0");

  ChartCrystal X;
  X.ctx = ctx;
  X.n = n;
  X.word = word;
  X.torus = torus;
  size_t l = word.size();
  if (torus)
    for (int k = 0; k < n; ++k) X.tvars.push_back(ctx->intern(tnames[k]));
  for (size_t k = 0; k < l; ++k) X.cvars.push_back(ctx->intern(cnames[k]));
  X.dvar = ctx->intern("d");

  auto cvar = [&](size_t k) { return RF::var(ctx, X.cvars[k]); };

  // Chart matrix.
  X.M = Matrix::identity(ctx, n);
  if (torus) {
    std::vector<RF> t;
    for (int k = 0; k < n; ++k) t.push_back(RF::var(ctx, X.tvars[k]));
    X.M = Matrix::diagonal(t);
  }
  for (size_t k = 0; k < l; ++k)
    X.M = X.M * chart_factor(ctx, n, word[k], cvar(k));

  // Route (a): recursive rank-one product, left fold starting at the
  // torus factor (phi = eps = 0, gamma = t).
  std::vector<RF> gam(n, RF::constant(ctx, 1));
  if (torus)
    for (int k = 0; k < n; ++k) gam[k] = RF::var(ctx, X.tvars[k]);
  std::map<int, RF> phi, eps;
  for (int j = 1; j <= n - 1; ++j) {
    phi[j] = RF::zero(ctx);
    eps[j] = RF::zero(ctx);
  }
  for (size_t k = 0; k < l; ++k) {
    int node = word[k];
    RF c = cvar(k);
    for (int j = 1; j <= n - 1; ++j) {
      RF alpha_left = gam[j - 1] / gam[j];
      RF phi_y = (j == node) ? c : RF::zero(ctx);
      RF eps_y = (j == node) ? c.inv() : RF::zero(ctx);
      RF alpha_y = rank_one_alpha_gamma(X, node, j, c);
      // (x * y): phi'' = phi(x) + phi(y)/alpha_j(gamma(x)),
      //          eps'' = eps(y) + eps(x) * alpha_j(gamma(y)).
      phi[j] = phi[j] + phi_y / alpha_left;
      eps[j] = eps_y + eps[j] * alpha_y;
    }
    gam[node - 1] = gam[node - 1] / c;
    gam[node] = gam[node] * c;
  }

  // Route (b): generalized-minor ratios on the chart matrix; the two
  // routes must agree exactly.
  Perm e = Perm::identity(n);
  RF prev = RF::constant(ctx, 1);
  for (int k = 1; k <= n; ++k) {
    RF mk = X.M.principal_minor(k);
    RF g = mk / prev;
    prev = mk;
    if (!(g == gam[k - 1]))
      throw internal_error("chart gamma: minor route disagrees");
  }
  for (int j = 1; j <= n - 1; ++j) {
    RF den = generalized_minor(X.M, e, e, j);
    RF num = generalized_minor(X.M, Perm::simple(n, j), e, j);
    if (!((num / den) == phi[j]))
      throw internal_error("chart phi: minor route disagrees");
    RF eps_b = (num / den) * (gam[j - 1] / gam[j]);
    if (!(eps_b == eps[j]))
      throw internal_error("chart eps: minor route disagrees");
  }
  X.gamma = std::move(gam);
  X.phi = std::move(phi);
  X.eps = std::move(eps);

  // e_i^d coordinate updates: right-to-left fold over the binary product
  // (Z_{k-1} * X_k) with c1 = (d eps_L + phi_R)/(eps_L + phi_R) passed
  // left and c2 = d/c1 applied to the rank-one factor as c -> c/c2.
  for (int i = 1; i <= n - 1; ++i) {
    // eps_i of each prefix Z_k.
    std::vector<RF> eps_pref(l + 1, RF::zero(ctx));
    for (size_t k = 0; k < l; ++k) {
      int node = word[k];
      RF c = cvar(k);
      RF eps_y = (i == node) ? c.inv() : RF::zero(ctx);
      eps_pref[k + 1] =
          eps_y + eps_pref[k] * rank_one_alpha_gamma(X, node, i, c);
    }
    std::vector<RF> upd;
    for (size_t k = 0; k < l; ++k) upd.push_back(cvar(k));
    RF dcur = RF::var(ctx, X.dvar);
    for (size_t k = l; k-- > 0;) {
      if (word[k] != i) continue;
      RF phi_R = cvar(k);
      const RF& eps_L = eps_pref[k];
      if (eps_L.is_zero()) {
        upd[k] = cvar(k) / dcur;
        dcur = RF::constant(ctx, 1);
        break;  // c1 = 1: nothing changes further left
      }
      RF denom = eps_L + phi_R;
      RF c1 = (dcur * eps_L + phi_R) / denom;
      RF c2 = dcur / c1;
      upd[k] = cvar(k) / c2;
      dcur = c1;
    }
    X.e_upd[i] = std::move(upd);
  }
  return X;
}

ChartCrystal build_chart(int n, const std::vector<int>& word, bool torus) {
  CtxPtr ctx = make_ctx();
  std::vector<std::string> tnames, cnames;
  for (int k = 1; k <= n; ++k) tnames.push_back("t" + std::to_string(k));
  for (size_t k = 1; k <= word.size(); ++k)
    cnames.push_back("c" + std::to_string(k));
  return build_chart_in(ctx, n, word, torus, tnames, cnames);
}

std::vector<Rat> apply_e(const ChartCrystal& X, int i, const Rat& d,
                         std::vector<Rat> point) {
  auto it = X.e_upd.find(i);
  if (it == X.e_upd.end()) return point;
  if (point.size() <= static_cast<size_t>(X.dvar))
    point.resize(X.dvar + 1, 0);
  point[X.dvar] = d;
  std::vector<Rat> newc;
  newc.reserve(it->second.size());
  for (const RF& f : it->second) newc.push_back(f.eval(point));
  for (size_t k = 0; k < newc.size(); ++k) point[X.cvars[k]] = newc[k];
  point[X.dvar] = 0;  // scratch slot; keep points comparable
  return point;
}

bool check_e_matrix_identity(const ChartCrystal& X, int i) {
  const CtxPtr& ctx = X.ctx;
  RF d = RF::var(ctx, X.dvar);
  const RF& ph = X.phi.at(i);
  const RF& ep = X.eps.at(i);
  if (ph.is_zero() || ep.is_zero()) return true;  // no i-action
  std::map<int, RF> subst;
  const auto& upd = X.e_upd.at(i);
  for (size_t k = 0; k < upd.size(); ++k) subst[X.cvars[k]] = upd[k];
  Matrix lhs = X.M.substitute(subst);
  RF one = RF::constant(ctx, 1);
  Matrix rhs = x_plus(ctx, X.n, i, (d - one) / ph) * X.M *
               x_plus(ctx, X.n, i, (d.inv() - one) / ep);
  return lhs == rhs;
}

}  // namespace crystals::geom
