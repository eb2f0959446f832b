#include "crystals/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "crystals/ratfun.hpp"

namespace crystals::roots {

std::vector<int64_t> RootDatum::simple_root(int i) const {
  std::vector<int64_t> r(n, 0);
  r[i - 1] = 1;
  r[i] = -1;
  return r;
}

std::vector<int64_t> RootDatum::simple_coroot(int i) const {
  return simple_root(i);
}

int64_t RootDatum::pair(const std::vector<int64_t>& wt,
                        const std::vector<int64_t>& cowt) {
  int64_t s = 0;
  size_t d = std::min(wt.size(), cowt.size());
  for (size_t k = 0; k < d; ++k) s += wt[k] * cowt[k];
  return s;
}

int64_t RootDatum::cartan(int i, int j) const {
  return pair(simple_root(j), simple_coroot(i));
}

Perm Perm::identity(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return Perm(std::move(p));
}

Perm Perm::simple(int n, int i) {
  Perm w = identity(n);
  std::swap(w.p_[i - 1], w.p_[i]);
  return w;
}

Perm Perm::longest(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return Perm(std::move(p));
}

Perm Perm::operator*(const Perm& b) const {
  std::vector<int> p(p_.size());
  for (size_t i = 0; i < p_.size(); ++i) p[i] = p_[b.p_[i]];
  return Perm(std::move(p));
}

Perm Perm::inverse() const {
  std::vector<int> p(p_.size());
  for (size_t i = 0; i < p_.size(); ++i) p[p_[i]] = static_cast<int>(i);
  return Perm(std::move(p));
}

int Perm::length() const {
  int c = 0;
  for (size_t i = 0; i < p_.size(); ++i)
    for (size_t j = i + 1; j < p_.size(); ++j)
      if (p_[i] > p_[j]) ++c;
  return c;
}

std::vector<int> Perm::reduced_word() const {
  // Repeatedly strip the smallest left descent: if w(i-1) > w(i) at
  // positions i-1, i then w = w' s_i with l(w') = l(w) - 1, where w'
  // is w with those one-line entries swapped. Collect right-to-left.
  std::vector<int> word;
  std::vector<int> p = p_;
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 1; i < p.size(); ++i) {
      if (p[i - 1] > p[i]) {
        std::swap(p[i - 1], p[i]);
        word.push_back(static_cast<int>(i));
        moved = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<int64_t> Perm::act(const std::vector<int64_t>& wt) const {
  std::vector<int64_t> out(p_.size(), 0);
  for (size_t i = 0; i < p_.size(); ++i) out[p_[i]] = wt[i];
  return out;
}

Perm demazure_star(const Perm& w, const Perm& wp) {
  Perm r = w;
  for (int i : wp.reduced_word()) {
    Perm rs = r * Perm::simple(r.n(), i);
    if (rs.length() > r.length()) r = rs;
  }
  return r;
}

bool bruhat_leq(const Perm& u, const Perm& w) {
  int n = u.n();
  // u <= w iff for all i, j: #{k <= i : u(k) <= j} >= #{k <= i : w(k) <= j}
  for (int i = 0; i < n; ++i) {
    int ru = 0, rw = 0;
    std::vector<int> cu(n, 0), cw(n, 0);
    for (int k = 0; k <= i; ++k) {
      cu[u(k)] = 1;
      cw[w(k)] = 1;
    }
    for (int j = 0; j < n; ++j) {
      ru += cu[j];
      rw += cw[j];
      if (ru < rw) return false;
    }
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(p));
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Parabolic parabolic_element(int n, const std::set<int>& J) {
  // The longest element of W_J reverses each maximal consecutive block:
  // indices {a, a+1, ..., b} in J reverse positions a-1 .. b.
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  int i = 1;
  while (i <= n - 1) {
    if (!J.count(i)) {
      ++i;
      continue;
    }
    int b = i;
    while (b + 1 <= n - 1 && J.count(b + 1)) ++b;
    std::reverse(p.begin() + (i - 1), p.begin() + (b + 1));
    i = b + 1;
  }
  Perm w0P((std::vector<int>(p)));
  return {w0P, w0P * Perm::longest(n)};
}

std::set<int> levi_monoid_star(int n, const std::set<int>& J,
                               const std::set<int>& Jp) {
  Perm prod =
      demazure_star(parabolic_element(n, J).wP, parabolic_element(n, Jp).wP);
  // Search subsets of J cap J' for the matching parabolic form.
  std::vector<int> cap;
  for (int j : J)
    if (Jp.count(j)) cap.push_back(j);
  for (uint64_t mask = 0; mask < (uint64_t(1) << cap.size()); ++mask) {
    std::set<int> Jpp;
    for (size_t k = 0; k < cap.size(); ++k)
      if (mask & (uint64_t(1) << k)) Jpp.insert(cap[k]);
    if (parabolic_element(n, Jpp).wP == prod) return Jpp;
  }
  throw crystals::alg::internal_error(
      "levi_monoid_star: Demazure product is not of parabolic form");
}

}  // namespace crystals::roots
