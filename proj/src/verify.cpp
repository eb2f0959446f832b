#include <random>
#include <sstream>

#include "crystals/geom_crystal.hpp"

namespace crystals::geom {

namespace {

Rat random_positive_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(1, 6);
  Rat r(dist(rng), dist(rng));
  r.canonicalize();
  return r;
}

std::vector<Rat> random_point(const ChartCrystal& X, std::mt19937_64& rng) {
  std::vector<Rat> p(X.ctx->size(), 1);
  for (int v : X.tvars) p[v] = random_positive_rat(rng);
  for (int v : X.cvars) p[v] = random_positive_rat(rng);
  return p;
}

struct Checker {
  AxiomReport& report;
  void expect(bool ok, const std::string& what,
              const std::vector<Rat>& point) {
    if (ok) return;
    ++report.failures;
    std::ostringstream os;
    os << what << " failed at point (";
    for (size_t i = 0; i < point.size(); ++i) {
      if (i) os << ", ";
      os << point[i];
    }
    os << ")";
    report.messages.push_back(os.str());
  }
};

}  // namespace

AxiomReport verify_geometric_axioms(const ChartCrystal& X, int trials,
                                    uint64_t seed) {
  AxiomReport report;
  std::mt19937_64 rng(seed);
  Checker check{report};
  int n = X.n;
  for (int trial = 0; trial < trials; ++trial) {
    ++report.trials;
    std::vector<Rat> p = random_point(X, rng);
    Rat c = random_positive_rat(rng);
    Rat c2 = random_positive_rat(rng);
    for (int i = 1; i <= n - 1; ++i) {
      std::vector<Rat> q = apply_e(X, i, c, p);
      // Pre-crystal identities.
      for (int j = 1; j <= n; ++j) {
        Rat scale = 1;
        if (j == i) scale = c;
        if (j == i + 1) scale = 1 / c;
        check.expect(X.gamma[j - 1].eval(q) == scale * X.gamma[j - 1].eval(p),
                     "gamma(e_i^c x) = alpha_i^vee(c) gamma(x)", p);
      }
      check.expect(X.eps.at(i).eval(q) == c * X.eps.at(i).eval(p),
                   "eps_i(e_i^c x) = c eps_i(x)", p);
      check.expect(X.phi.at(i).eval(q) == X.phi.at(i).eval(p) / c,
                   "phi_i(e_i^c x) = c^-1 phi_i(x)", p);
      // Composition law e_i^c e_i^c2 = e_i^{c c2}.
      check.expect(apply_e(X, i, c2, q) == apply_e(X, i, c * c2, p),
                   "e_i^c e_i^c' = e_i^{cc'}", p);
      // alpha_i(gamma) = eps_i / phi_i.
      if (X.phi.at(i).eval(p) != 0)
        check.expect(X.alpha_gamma(i).eval(p) ==
                         X.eps.at(i).eval(p) / X.phi.at(i).eval(p),
                     "alpha_i(gamma) = eps_i/phi_i", p);
      for (int j = i + 1; j <= n - 1; ++j) {
        if (j - i >= 2) {
          // Commuting relation for orthogonal nodes.
          check.expect(apply_e(X, j, c2, apply_e(X, i, c, p)) ==
                           apply_e(X, i, c, apply_e(X, j, c2, p)),
                       "e_i e_j commute (|i-j|>=2)", p);
        } else {
          // Type-A braid: e_i^{c1} e_j^{c1c2} e_i^{c2} =
          //               e_j^{c2} e_i^{c1c2} e_j^{c1}.
          std::vector<Rat> lhs =
              apply_e(X, i, c2, apply_e(X, j, c * c2, apply_e(X, i, c, p)));
          std::vector<Rat> rhs =
              apply_e(X, j, c, apply_e(X, i, c * c2, apply_e(X, j, c2, p)));
          check.expect(lhs == rhs, "rank-2 braid relation", p);
        }
      }
    }
  }
  return report;
}

}  // namespace crystals::geom
