#include "crystals/trop_crystal.hpp"

#include <algorithm>

#include "crystals/lp.hpp"

namespace crystals::tc {

using crystals::alg::RF;
using crystals::alg::Rat;
using crystals::alg::certify_positive;
using crystals::alg::internal_error;
using crystals::kash::CrystalElement;
using crystals::trop::LPStatus;
using crystals::trop::lp_max_free;
using crystals::trop::trop;

std::vector<int64_t> TropChartCrystal::covector(
    const Weight& lambda, const std::vector<int64_t>& m,
    int64_t step) const {
  std::vector<int64_t> cov(dim(), 0);
  for (size_t k = 0; k < chart.tvars.size(); ++k)
    cov[chart.tvars[k]] = lambda[k];
  for (size_t k = 0; k < chart.cvars.size(); ++k) cov[chart.cvars[k]] = m[k];
  cov[chart.dvar] = step;
  return cov;
}

std::vector<int64_t> TropChartCrystal::weight_at(
    const Weight& lambda, const std::vector<int64_t>& m) const {
  return gamma_t.eval(covector(lambda, m));
}

std::vector<int64_t> TropChartCrystal::apply_e(
    int i, int64_t step, const Weight& lambda,
    const std::vector<int64_t>& m) const {
  return e_t.at(i).eval(covector(lambda, m, step));
}

TropChartCrystal tropicalize_chart(const ChartCrystal& X,
                                   const crystals::alg::RF& decoration) {
  TropChartCrystal T;
  T.chart = X;
  std::vector<crystals::alg::PosRF> gcomps;
  for (const RF& g : X.gamma) gcomps.push_back(certify_positive(g));
  T.gamma_t = crystals::trop::trop_map(gcomps);
  for (const auto& [i, f] : X.phi) {
    if (f.is_zero()) continue;  // trivial support: -infinity sentinel
    T.phi_t.emplace(i, trop(certify_positive(f)).negate());
    T.eps_t.emplace(i, trop(certify_positive(X.eps.at(i))).negate());
  }
  T.f_t = trop(certify_positive(decoration));
  for (const auto& [i, upd] : X.e_upd) {
    std::vector<crystals::alg::PosRF> comps;
    for (const RF& u : upd) comps.push_back(certify_positive(u));
    T.e_t.emplace(i, crystals::trop::trop_map(comps));
  }
  return T;
}

TropChartCrystal tropicalize_chart(const ChartCrystal& X) {
  return tropicalize_chart(X, crystals::geom::decoration_fB(X));
}

namespace {

// Rows a_j . m + b_j >= 0 cutting out {m : f-tilde(lambda, m) >= 0}.
void region_rows(const TropChartCrystal& T, const Weight& lambda,
                 LatticeRegion& R) {
  size_t l = T.chart.cvars.size();
  auto pieces = T.f_t.affine_pieces(T.dim());
  for (const auto& row : pieces) {
    std::vector<int64_t> a(l, 0);
    for (size_t k = 0; k < l; ++k) a[k] = row[T.chart.cvars[k]];
    int64_t b = 0;
    for (size_t k = 0; k < T.chart.tvars.size(); ++k)
      b += row[T.chart.tvars[k]] * lambda[k];
    R.rows.push_back(std::move(a));
    R.consts.push_back(b);
  }
}

// Exact bounding box by LP: maximize +-m_j over { -a.m <= b }.
void region_box(LatticeRegion& R, size_t l) {
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> bb;
  for (size_t r = 0; r < R.rows.size(); ++r) {
    std::vector<Rat> arow(l);
    for (size_t k = 0; k < l; ++k)
      arow[k] = Rat(static_cast<long>(-R.rows[r][k]));
    A.push_back(std::move(arow));
    bb.push_back(Rat(static_cast<long>(R.consts[r])));
  }
  R.feasible = true;
  R.lo.assign(l, 0);
  R.hi.assign(l, 0);
  for (size_t j = 0; j < l && R.feasible; ++j) {
    for (int dir : {+1, -1}) {
      std::vector<Rat> c(l, 0);
      c[j] = dir;
      auto res = lp_max_free(A, bb, c);
      if (res.status == LPStatus::Infeasible) {
        R.feasible = false;
        break;
      }
      if (res.status == LPStatus::Unbounded)
        throw internal_error("lattice region is unbounded");
      // Integer bound: floor of the rational optimum.
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), res.value.get_num_mpz_t(),
                 res.value.get_den_mpz_t());
      int64_t bound = q.get_si();
      if (dir > 0)
        R.hi[j] = bound;
      else
        R.lo[j] = -bound;
    }
  }
}

}  // namespace

LatticeRegion region_at(const TropChartCrystal& T, const Weight& lambda) {
  LatticeRegion R;
  region_rows(T, lambda, R);
  region_box(R, T.chart.cvars.size());
  return R;
}

namespace {

bool in_region(const LatticeRegion& R, const std::vector<int64_t>& m) {
  for (size_t r = 0; r < R.rows.size(); ++r) {
    int64_t v = R.consts[r];
    for (size_t k = 0; k < m.size(); ++k) v += R.rows[r][k] * m[k];
    if (v < 0) return false;
  }
  return true;
}

FiniteCrystal assemble(const TropChartCrystal& T, const Weight& lambda,
                       const LatticeRegion& R) {
  int n = T.chart.n;
  FiniteCrystal B;
  B.n = n;
  for (const auto& [i, f] : T.phi_t) B.support.insert(i);
  if (!R.feasible) return B;
  size_t l = T.chart.cvars.size();
  std::map<std::vector<int64_t>, int> index;
  std::vector<int64_t> m = R.lo;
  // Enumerate the bounding box; keep region members.
  while (true) {
    if (in_region(R, m)) {
      CrystalElement el;
      el.id = static_cast<int>(B.elements.size());
      el.coords = m;
      std::vector<int64_t> cov = T.covector(lambda, m);
      el.weight = T.gamma_t.eval(cov);
      for (const auto& [i, f] : T.phi_t) {
        el.phi[i] = f.eval(cov);
        el.eps[i] = T.eps_t.at(i).eval(cov);
      }
      index[m] = el.id;
      B.elements.push_back(std::move(el));
    }
    size_t j = 0;
    while (j < l && m[j] == R.hi[j]) {
      m[j] = R.lo[j];
      ++j;
    }
    if (j == l) break;
    if (l == 0) break;
    ++m[j];
  }
  for (const auto& el : B.elements) {
    for (int i : B.support) {
      std::vector<int64_t> tgt = T.apply_e(i, 1, lambda, el.coords);
      auto it = index.find(tgt);
      if (it != index.end()) B.e_edges[i][el.id] = it->second;
    }
  }
  return B;
}

}  // namespace

FiniteCrystal enumerate_Blambda(const TropChartCrystal& T,
                                const Weight& lambda) {
  int n = T.chart.n;
  if (static_cast<int>(lambda.size()) != n)
    throw std::invalid_argument("lambda rank mismatch");
  for (int k = 0; k + 1 < n; ++k)
    if (lambda[k] < lambda[k + 1]) {
      FiniteCrystal B;
      B.n = n;
      for (const auto& [i, f] : T.phi_t) B.support.insert(i);
      return B;  // empty for non-dominant lambda
    }
  return assemble(T, lambda, region_at(T, lambda));
}

TropicalFunction trop_central_charge(const crystals::alg::RF& delta) {
  return trop(certify_positive(delta));
}

std::vector<int> default_word(int n) {
  std::vector<int> w;
  for (int k = 1; k <= n - 1; ++k)
    for (int i = k; i >= 1; --i) w.push_back(i);
  return w;
}

TensorDecomposition tensor_decompose(int n, const std::vector<int>& word,
                                     const Weight& lambda, const Weight& mu,
                                     bool with_charge) {
  using crystals::geom::build_chart_in;
  auto ctx = crystals::alg::make_ctx();
  std::vector<std::string> tn, cn, sn, bn;
  for (int k = 1; k <= n; ++k) {
    tn.push_back("t" + std::to_string(k));
    sn.push_back("s" + std::to_string(k));
  }
  for (size_t k = 1; k <= word.size(); ++k) {
    cn.push_back("c" + std::to_string(k));
    bn.push_back("b" + std::to_string(k));
  }
  ChartCrystal X = build_chart_in(ctx, n, word, true, tn, cn);
  ChartCrystal Y = build_chart_in(ctx, n, word, true, sn, bn);
  TropChartCrystal TX = tropicalize_chart(X);
  TropChartCrystal TY = tropicalize_chart(Y);
  FiniteCrystal BL = enumerate_Blambda(TX, lambda);
  FiniteCrystal BM = enumerate_Blambda(TY, mu);

  TensorDecomposition out;
  out.product = crystals::kash::tensor(BL, BM);

  TropicalFunction dt;
  if (with_charge) {
    dt = trop_central_charge(crystals::geom::central_charge(X, Y));
    size_t l = word.size();
    for (const auto& el : out.product.elements) {
      std::vector<int64_t> cov(ctx->size(), 0);
      for (int k = 0; k < n; ++k) {
        cov[X.tvars[k]] = lambda[k];
        cov[Y.tvars[k]] = mu[k];
      }
      for (size_t k = 0; k < l; ++k) {
        cov[X.cvars[k]] = el.coords[k];
        cov[Y.cvars[k]] = el.coords[l + k];
      }
      out.charge[el.id] = dt.eval(cov);
    }
  }

  std::map<Weight, TensorComponent> comps;
  for (int id : crystals::kash::highest_weight_elements(out.product)) {
    const CrystalElement& el = out.product.elements[id];
    auto& c = comps[el.weight];
    c.nu = el.weight;
    ++c.multiplicity;
    if (with_charge) ++c.q_poly[out.charge.at(id)];
  }
  for (auto& [nu, c] : comps) out.components.push_back(std::move(c));
  return out;
}

FiniteCrystal schubert_crystal(int n, const std::vector<int>& word,
                               int64_t height_bound) {
  using crystals::geom::build_chart;
  ChartCrystal X = build_chart(n, word, /*torus=*/false);
  RF fw = crystals::geom::fw_on_theta_minus(X);
  TropChartCrystal T = tropicalize_chart(X, fw);
  size_t l = word.size();

  // Region rows from f-tilde_w plus the height truncation. The cut region
  // is unbounded on its own; the coroot height ht(m) =
  // sum_k -(gamma-tilde_1 + ... + gamma-tilde_k) is linear in m (the chart
  // diagonal is monomial), and ht(m) <= bound closes the region.
  LatticeRegion R;
  region_rows(T, Weight{}, R);
  std::vector<int64_t> hrow(l, 0);
  std::vector<int64_t> zero(l, 0);
  std::vector<int64_t> w0 = T.weight_at(Weight{}, zero);
  auto height_of = [n](const std::vector<int64_t>& wt) {
    int64_t h = 0, acc = 0;
    for (int k = 0; k < n - 1; ++k) {
      acc += wt[k];
      h += -acc;
    }
    return h;
  };
  int64_t h0 = height_of(w0);
  for (size_t j = 0; j < l; ++j) {
    std::vector<int64_t> e = zero;
    e[j] = 1;
    hrow[j] = -(height_of(T.weight_at(Weight{}, e)) - h0);
  }
  // ht(m) <= bound  <=>  hrow . m + (bound - h0) >= 0.
  R.rows.push_back(hrow);
  R.consts.push_back(height_bound - h0);
  region_box(R, l);
  return assemble(T, Weight{}, R);
}

}  // namespace crystals::tc
