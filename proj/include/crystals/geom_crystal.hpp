#pragma once

#include <map>
#include <vector>

#include "crystals/matrix.hpp"
#include "crystals/minors.hpp"
#include "crystals/weyl.hpp"

namespace crystals::geom {

using crystals::alg::CtxPtr;
using crystals::alg::Rat;
using crystals::alg::RF;
using crystals::roots::Matrix;
using crystals::roots::Perm;

// Decorated geometric crystal on the toric chart
//   M = diag(t_1..t_n) * x_{-i_1}(c_1) * ... * x_{-i_l}(c_l)
// (torus omitted for Schubert-cell charts). Structure maps are stored as
// certified-positive rational functions of the chart variables; the
// crystal action e_i^d is stored as per-coordinate update functions of
// (d, t, c).
struct ChartCrystal {
  CtxPtr ctx;
  int n = 0;
  std::vector<int> word;        // reduced word (1-based simple indices)
  bool torus = true;
  std::vector<int> tvars;       // ctx indices of t_1..t_n (empty if !torus)
  std::vector<int> cvars;       // ctx indices of c_1..c_l
  int dvar = -1;                // ctx index of the action parameter d

  Matrix M;                     // chart matrix (lower triangular)
  std::vector<RF> gamma;        // n components of the weight map
  std::map<int, RF> phi, eps;   // i -> structure map, i = 1..n-1
  // i -> per-coordinate updates c'_k(d, t, c); t is fixed by the action.
  std::map<int, std::vector<RF>> e_upd;

  // alpha_i(gamma) = gamma_i / gamma_{i+1}.
  RF alpha_gamma(int i) const { return gamma[i - 1] / gamma[i]; }
};

// Build the decorated chart crystal for the given reduced word; validates
// that the word is reduced. Structure maps are computed both from the
// recursive rank-one product and from generalized-minor ratios, and the
// two routes are asserted identical. With torus=false the word may be a
// reduced word of any w; with torus=true it must be a word of w_0.
ChartCrystal build_chart(int n, const std::vector<int>& word,
                         bool torus = true);

// Variant sharing a caller-supplied context (for two-chart products);
// tnames/cnames give the variable names to intern.
ChartCrystal build_chart_in(const CtxPtr& ctx, int n,
                            const std::vector<int>& word, bool torus,
                            const std::vector<std::string>& tnames,
                            const std::vector<std::string>& cnames);

// Apply e_i^d numerically: point assigns every context variable; returns
// the point with the c-coordinates updated. No-op when i has no support.
std::vector<Rat> apply_e(const ChartCrystal& X, int i, const Rat& d,
                         std::vector<Rat> point);

// Symbolic cross-check of eq. e_i^c(x) = x_i((c-1)/phi) x x_i((1/c-1)/eps):
// substitutes the coordinate updates into the chart matrix and compares
// with the two-sided multiplication. Exact equality required.
bool check_e_matrix_identity(const ChartCrystal& X, int i);

// Randomized exact verification of the geometric pre-crystal identities,
// commuting relations, the type-A braid relation and the composition law.
struct AxiomReport {
  int trials = 0;
  int failures = 0;
  std::vector<std::string> messages;
  bool ok() const { return failures == 0; }
};
AxiomReport verify_geometric_axioms(const ChartCrystal& X, int trials,
                                    uint64_t seed);

// Decoration f_B on a type-w_0 chart (Lemma "formula fL" route):
// f_B(g) = sum_i X_i(pi+(w0bar^-1 g)) + sum_i X_i(pi+(w0bar^-1 iota(g)))
// with X_i(pi+(g)) = Delta_{omega_i, s_i omega_i}(g) / Delta_{omega_i,
// omega_i}(g). Result is reduced and positivity-certified.
RF decoration_fB(const ChartCrystal& X);

// The same functional applied to an arbitrary matrix in the open cell.
RF fB_of_matrix(const Matrix& g);

// chi^st-decoration f_w of a Demazure cell, expressed on the theta+ chart
// of U^w: equals c_1 + ... + c_l. The eta^w-transport identity
// f_w(eta^w(theta+(c))) = chi^st(theta+(c)) is what makes this form exact;
// fw_on_theta_minus below gives the minor-ratio route on the theta- chart.
RF decoration_fw(int n, const std::vector<int>& word, const CtxPtr& ctx,
                 const std::vector<int>& cvars);

// f_w(theta-(c)) = chi^st(pi+(wbar^-1 theta-(c))) by minor ratios.
RF fw_on_theta_minus(const ChartCrystal& X);

// eta^w(u) = iota(pi-(u * (w^-1)bar)): positive isomorphism U^w -> B^-_w.
Matrix eta_w(const Matrix& u, const Perm& w);

// theta+ chart matrix x_{i_1}(c_1) ... x_{i_l}(c_l).
Matrix theta_plus(const CtxPtr& ctx, int n, const std::vector<int>& word,
                  const std::vector<int>& cvars);

// Central charge of the product of two type-w_0 charts, computed by both
// the direct route f_B(x) + f_B(y) - f_B(xy) and the factored route
// chi^st(u u') + f_B(m(u u', t, t')); throws internal_error when the two
// disagree. X and Y must share a context with disjoint variables.
RF central_charge(const ChartCrystal& X, const ChartCrystal& Y);

// Both-route charge of two explicit matrices in the open cell (used for
// numeric spot checks at rational points); throws on route disagreement.
RF central_charge_of_matrices(const Matrix& gx, const Matrix& gy);

// Numeric evaluation: point assigns every context variable of both charts.
Rat central_charge_at(const ChartCrystal& X, const ChartCrystal& Y,
                      const std::vector<Rat>& point);

}  // namespace crystals::geom
