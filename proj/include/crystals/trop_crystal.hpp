#pragma once

#include "crystals/geom_crystal.hpp"
#include "crystals/kashiwara.hpp"
#include "crystals/tropical.hpp"

namespace crystals::tc {

using crystals::geom::ChartCrystal;
using crystals::kash::FiniteCrystal;
using crystals::kash::Weight;
using crystals::trop::TropicalFunction;
using crystals::trop::TropicalMap;

// Piecewise-linear shadow of a decorated chart crystal. Covectors live on
// the full variable context of the chart: lambda sits on the t-variables,
// m on the c-variables, and the step count n of e_i^n on the d-variable.
struct TropChartCrystal {
  ChartCrystal chart;
  TropicalMap gamma_t;                        // n components (weight map)
  std::map<int, TropicalFunction> phi_t;      // -Trop(phi_i)
  std::map<int, TropicalFunction> eps_t;      // -Trop(eps_i)
  TropicalFunction f_t;                       // +Trop(decoration)
  std::map<int, TropicalMap> e_t;             // coordinate action of e_i^n

  size_t dim() const { return chart.ctx->size(); }

  // Assemble a covector from (lambda, m) and the step count.
  std::vector<int64_t> covector(const Weight& lambda,
                                const std::vector<int64_t>& m,
                                int64_t step = 0) const;

  std::vector<int64_t> weight_at(const Weight& lambda,
                                 const std::vector<int64_t>& m) const;
  // Apply e_i^step to the m-coordinates (no region check).
  std::vector<int64_t> apply_e(int i, int64_t step, const Weight& lambda,
                               const std::vector<int64_t>& m) const;
};

// Tropicalize a decorated chart crystal; every structure map and the
// decoration must certify positive. With decoration = f_B for torus
// charts, or a caller-supplied decoration (Schubert cells).
TropChartCrystal tropicalize_chart(const ChartCrystal& X);
TropChartCrystal tropicalize_chart(const ChartCrystal& X,
                                   const crystals::alg::RF& decoration);

// Affine inequalities cutting out {m : f-tilde(lambda, m) >= 0} at fixed
// lambda, plus an exact bounding box for the m coordinates.
struct LatticeRegion {
  // rows a_j (length l) and constants b_j: a_j . m + b_j >= 0.
  std::vector<std::vector<int64_t>> rows;
  std::vector<int64_t> consts;
  bool feasible = true;
  std::vector<int64_t> lo, hi;  // valid when feasible
};
LatticeRegion region_at(const TropChartCrystal& T, const Weight& lambda);

// Enumerate B^lambda (empty for non-dominant lambda); throws
// internal_error when the region is unbounded.
FiniteCrystal enumerate_Blambda(const TropChartCrystal& T,
                                const Weight& lambda);

// Trop of the geometric central charge.
TropicalFunction trop_central_charge(const crystals::alg::RF& delta);

struct TensorComponent {
  Weight nu;
  int64_t multiplicity = 0;
  std::map<int64_t, int64_t> q_poly;  // exponent -> coefficient
};

// Full tensor machinery for GL_n with the standard (or given) reduced
// word: enumerates B^lambda and B^mu, forms the product crystal, and
// decomposes by highest weights; with_charge also evaluates the
// tropicalized central charge on every highest-weight element.
struct TensorDecomposition {
  std::vector<TensorComponent> components;
  FiniteCrystal product;                    // the full product crystal
  std::map<int, int64_t> charge;            // id -> Delta-tilde (if asked)
};
TensorDecomposition tensor_decompose(int n, const std::vector<int>& word,
                                     const Weight& lambda, const Weight& mu,
                                     bool with_charge);

// Default reduced word of w_0: (1, 2,1, 3,2,1, ...).
std::vector<int> default_word(int n);

// Weight-truncated Schubert-cell crystal on the theta- chart of B^-_w,
// cut out by f-tilde_w >= 0 and coroot height <= height_bound.
FiniteCrystal schubert_crystal(int n, const std::vector<int>& word,
                               int64_t height_bound);

}  // namespace crystals::tc
