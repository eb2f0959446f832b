#pragma once

#include <vector>

#include "crystals/polytope.hpp"
#include "crystals/ratfun.hpp"

namespace crystals::trop {

using crystals::alg::PosRF;
using crystals::alg::RF;

// Piecewise-linear function obtained by tropicalizing a positive rational
// function (min convention): eval(l) = chi_plus(l) - chi_minus(l).
class TropicalFunction {
public:
  TropicalFunction() = default;
  explicit TropicalFunction(VirtualPolytope vp) : vp_(std::move(vp)) {}

  const VirtualPolytope& polytope() const { return vp_; }

  int64_t eval(const std::vector<int64_t>& covector) const {
    return vp_.plus.chi(covector) - vp_.minus.chi(covector);
  }

  // Trop(fg) = Trop(f) + Trop(g); Trop(f/g) = Trop(f) - Trop(g);
  // Trop(f+g) = min(Trop f, Trop g) for positive summands.
  TropicalFunction operator+(const TropicalFunction& b) const {
    return TropicalFunction(VirtualPolytope::sum(vp_, b.vp_));
  }
  TropicalFunction operator-(const TropicalFunction& b) const {
    return *this + b.negate();
  }
  TropicalFunction negate() const {
    return TropicalFunction({vp_.minus, vp_.plus});
  }
  static TropicalFunction min(const TropicalFunction& a,
                              const TropicalFunction& b) {
    return TropicalFunction(VirtualPolytope::vee(a.vp_, b.vp_));
  }

  bool operator==(const TropicalFunction& b) const { return vp_ == b.vp_; }

  // Affine pieces of eval as a min of linear forms: requires the minus
  // polytope to be a single point nu (monomial denominator); returns the
  // covector coefficients mu - nu, one row per plus-vertex, padded to dim.
  std::vector<std::vector<int64_t>> affine_pieces(size_t dim) const;

  bool has_monomial_denominator() const {
    return vp_.minus.vertices().size() == 1;
  }

private:
  VirtualPolytope vp_;
};

// Tropicalization of a certified-positive rational function.
TropicalFunction trop(const PosRF& f);

// Componentwise tropicalization of a positive rational map.
class TropicalMap {
public:
  TropicalMap() = default;
  explicit TropicalMap(std::vector<TropicalFunction> comps)
      : comps_(std::move(comps)) {}

  const std::vector<TropicalFunction>& components() const { return comps_; }

  std::vector<int64_t> eval(const std::vector<int64_t>& covector) const {
    std::vector<int64_t> out;
    out.reserve(comps_.size());
    for (const auto& c : comps_) out.push_back(c.eval(covector));
    return out;
  }

private:
  std::vector<TropicalFunction> comps_;
};

TropicalMap trop_map(const std::vector<PosRF>& components);

}  // namespace crystals::trop
