#pragma once

#include <vector>

#include "crystals/laurent.hpp"

namespace crystals::trop {

using crystals::alg::Exp;
using crystals::alg::Poly;
using crystals::alg::Rat;

// Lattice polytope stored as its vertex set (sorted, duplicate-free;
// interior support points are pruned by exact LP hull-membership tests).
class NewtonPolytope {
public:
  NewtonPolytope() = default;
  explicit NewtonPolytope(std::vector<Exp> points);

  const std::vector<Exp>& vertices() const { return verts_; }
  bool operator==(const NewtonPolytope& b) const;

  // Support function in the min convention: chi_P(l) = min_{v} <v, l>.
  int64_t chi(const std::vector<int64_t>& covector) const;

  static NewtonPolytope minkowski_sum(const NewtonPolytope& a,
                                      const NewtonPolytope& b);
  // Convex hull of the union (the polytope join P v Q).
  static NewtonPolytope vee(const NewtonPolytope& a, const NewtonPolytope& b);

  static NewtonPolytope origin(size_t dim = 0);

private:
  std::vector<Exp> verts_;
};

// Newton polytope of a nonzero Laurent polynomial.
NewtonPolytope newton(const Poly& f);

// Formal difference [plus] - [minus] in the Grothendieck group of
// polytopes under Minkowski sum.
struct VirtualPolytope {
  NewtonPolytope plus;
  NewtonPolytope minus;

  // Cross rule: (P,Q) == (P',Q') iff P + Q' = P' + Q.
  bool operator==(const VirtualPolytope& b) const;

  static VirtualPolytope sum(const VirtualPolytope& a,
                             const VirtualPolytope& b);
  static VirtualPolytope vee(const VirtualPolytope& a,
                             const VirtualPolytope& b);
};

}  // namespace crystals::trop
