#include "crystals/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "crystals/lp.hpp"

namespace crystals::trop {

namespace {

bool exp_less(const Exp& a, const Exp& b) { return Exp::cmp(a, b) < 0; }

size_t ambient_dim(const std::vector<Exp>& pts) {
  size_t d = 0;
  for (const auto& p : pts) d = std::max(d, p.e.size());
  return d;
}

// Is p in the convex hull of pts? Solved as feasibility of
// { lambda >= 0 : sum lambda_i q_i = p, sum lambda_i = 1 }.
bool in_hull(const Exp& p, const std::vector<Exp>& pts) {
  if (pts.empty()) return false;
  size_t d = ambient_dim(pts);
  d = std::max(d, p.e.size());
  size_t n = pts.size();
  std::vector<std::vector<Rat>> A(d + 1, std::vector<Rat>(n, 0));
  std::vector<Rat> b(d + 1, 0);
  for (size_t r = 0; r < d; ++r) {
    for (size_t j = 0; j < n; ++j)
      A[r][j] = Rat(static_cast<long>(pts[j].get(r)));
    b[r] = Rat(static_cast<long>(p.get(r)));
  }
  for (size_t j = 0; j < n; ++j) A[d][j] = 1;
  b[d] = 1;
  return lp_feasible_eq_nonneg(A, b);
}

std::vector<Exp> prune_to_vertices(std::vector<Exp> pts) {
  std::sort(pts.begin(), pts.end(), exp_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Exp> verts;
  for (size_t i = 0; i < pts.size(); ++i) {
    std::vector<Exp> others;
    others.reserve(pts.size() - 1);
    for (size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_hull(pts[i], others)) verts.push_back(pts[i]);
  }
  return verts;
}

}  // namespace

NewtonPolytope::NewtonPolytope(std::vector<Exp> points) {
  if (points.empty())
    throw std::invalid_argument("NewtonPolytope requires at least one point");
  verts_ = prune_to_vertices(std::move(points));
}

bool NewtonPolytope::operator==(const NewtonPolytope& b) const {
  return verts_ == b.verts_;
}

int64_t NewtonPolytope::chi(const std::vector<int64_t>& covector) const {
  bool first = true;
  int64_t best = 0;
  for (const auto& v : verts_) {
    int64_t dot = 0;
    size_t d = std::min(v.e.size(), covector.size());
    for (size_t i = 0; i < d; ++i) dot += v.e[i] * covector[i];
    if (first || dot < best) {
      best = dot;
      first = false;
    }
  }
  return best;
}

NewtonPolytope NewtonPolytope::minkowski_sum(const NewtonPolytope& a,
                                             const NewtonPolytope& b) {
  std::vector<Exp> pts;
  pts.reserve(a.verts_.size() * b.verts_.size());
  for (const auto& u : a.verts_)
    for (const auto& v : b.verts_) pts.push_back(Exp::add(u, v));
  return NewtonPolytope(std::move(pts));
}

NewtonPolytope NewtonPolytope::vee(const NewtonPolytope& a,
                                   const NewtonPolytope& b) {
  std::vector<Exp> pts = a.verts_;
  pts.insert(pts.end(), b.verts_.begin(), b.verts_.end());
  return NewtonPolytope(std::move(pts));
}

NewtonPolytope NewtonPolytope::origin(size_t) {
  return NewtonPolytope({Exp{}});
}

NewtonPolytope newton(const Poly& f) {
  if (f.is_zero())
    throw std::invalid_argument("newton polytope of the zero polynomial");
  std::vector<Exp> pts;
  pts.reserve(f.terms.size());
  for (const auto& t : f.terms) pts.push_back(t.first);
  return NewtonPolytope(std::move(pts));
}

bool VirtualPolytope::operator==(const VirtualPolytope& b) const {
  return NewtonPolytope::minkowski_sum(plus, b.minus) ==
         NewtonPolytope::minkowski_sum(b.plus, minus);
}

VirtualPolytope VirtualPolytope::sum(const VirtualPolytope& a,
                                     const VirtualPolytope& b) {
  return {NewtonPolytope::minkowski_sum(a.plus, b.plus),
          NewtonPolytope::minkowski_sum(a.minus, b.minus)};
}

VirtualPolytope VirtualPolytope::vee(const VirtualPolytope& a,
                                     const VirtualPolytope& b) {
  // ([P]-[Q]) v ([P']-[Q']) = [(P+Q') v (P'+Q)] - [Q+Q']
  return {NewtonPolytope::vee(NewtonPolytope::minkowski_sum(a.plus, b.minus),
                              NewtonPolytope::minkowski_sum(b.plus, a.minus)),
          NewtonPolytope::minkowski_sum(a.minus, b.minus)};
}

}  // namespace crystals::trop
