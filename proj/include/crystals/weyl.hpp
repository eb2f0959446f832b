#pragma once

#include <cstdint>
#include <set>
#include <vector>

namespace crystals::roots {

// GL_n root datum: weight lattice Z^n, simple roots a_i = e_i - e_{i+1}
// (1 <= i <= n-1), coroots likewise in the dual copy, pairing = dot product.
struct RootDatum {
  int n;

  explicit RootDatum(int n_) : n(n_) {}
  int rank() const { return n - 1; }  // number of simple roots

  std::vector<int64_t> simple_root(int i) const;    // 1-based i
  std::vector<int64_t> simple_coroot(int i) const;  // 1-based i
  static int64_t pair(const std::vector<int64_t>& wt,
                      const std::vector<int64_t>& cowt);
  // Cartan entry <a_j, a_i^vee>.
  int64_t cartan(int i, int j) const;
};

// Permutation of {0..n-1} stored as images: p[i] = w(i).
// Composition convention: (w * w')(i) = w(w'(i)), i.e. w' acts first.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images) : p_(std::move(images)) {}

  static Perm identity(int n);
  static Perm simple(int n, int i);   // s_i, 1-based i, swaps i-1 and i
  static Perm longest(int n);         // w_0: i -> n-1-i

  int n() const { return static_cast<int>(p_.size()); }
  int operator()(int i) const { return p_[i]; }
  const std::vector<int>& images() const { return p_; }

  Perm operator*(const Perm& b) const;
  Perm inverse() const;
  bool operator==(const Perm& b) const { return p_ == b.p_; }
  bool operator<(const Perm& b) const { return p_ < b.p_; }

  int length() const;  // inversion count
  // Lexicographically-chosen reduced word (1-based simple reflections).
  std::vector<int> reduced_word() const;

  // Action on weights in Z^n: (w.wt)[w(i)] = wt[i].
  std::vector<int64_t> act(const std::vector<int64_t>& wt) const;

private:
  std::vector<int> p_;
};

// Demazure (star) product: w * s_i = ws_i if longer, else w.
Perm demazure_star(const Perm& w, const Perm& wp);

// Bruhat order via the rank-matrix criterion.
bool bruhat_leq(const Perm& u, const Perm& w);

// All n! permutations (for brute-force oracles; small n only).
std::vector<Perm> all_perms(int n);

// Longest element w_0^P of the parabolic generated by {s_j : j in J}
// together with w_P = w_0^P * w_0. J holds 1-based simple indices.
struct Parabolic {
  Perm w0P;
  Perm wP;
};
Parabolic parabolic_element(int n, const std::set<int>& J);

// J'' with w_{P(J)} * w_{P(J')} = w_{P(J'')} under the Demazure product;
// throws if the product is not of parabolic form.
std::set<int> levi_monoid_star(int n, const std::set<int>& J,
                               const std::set<int>& Jp);

}  // namespace crystals::roots
