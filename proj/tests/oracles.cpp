#include "oracles.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracles {

int64_t weyl_dim(const Weight& lambda) {
  int n = static_cast<int>(lambda.size());
  int64_t num = 1, den = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  if (num % den != 0) throw std::runtime_error("weyl_dim: not integral");
  return num / den;
}

namespace {

// Enumerate rows below `row`, accumulating the weight from the bottom:
// wt_k = |row of length k| - |row of length k-1|.
void gt_rec(const Weight& row, Weight& wt, Character& out) {
  int k = static_cast<int>(row.size());
  if (k == 1) {
    wt[0] = row[0];
    Weight acc = wt;
    ++out[acc];
    return;
  }
  Weight next(k - 1);
  int64_t upper_sum = 0;
  for (int64_t v : row) upper_sum += v;
  // Enumerate interleaved rows: row[i] >= next[i] >= row[i+1].
  auto rec = [&](auto&& self, int i) -> void {
    if (i == k - 1) {
      int64_t s = 0;
      for (int64_t v : next) s += v;
      wt[k - 1] = upper_sum - s;
      gt_rec(next, wt, out);
      return;
    }
    for (int64_t v = row[i + 1]; v <= row[i]; ++v) {
      next[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

}  // namespace

Character gt_character(const Weight& lambda) {
  for (size_t i = 0; i + 1 < lambda.size(); ++i)
    if (lambda[i] < lambda[i + 1])
      throw std::invalid_argument("gt_character: non-dominant weight");
  Character out;
  Weight wt(lambda.size(), 0);
  gt_rec(lambda, wt, out);
  return out;
}

Character product(const Character& a, const Character& b) {
  Character out;
  for (const auto& [wa, ma] : a)
    for (const auto& [wb, mb] : b) {
      Weight w(wa.size());
      for (size_t k = 0; k < w.size(); ++k) w[k] = wa[k] + wb[k];
      out[w] += ma * mb;
    }
  return out;
}

std::map<Weight, int64_t> lr_decompose(const Character& chi, int n) {
  Character rest = chi;
  std::map<Weight, int64_t> out;
  while (!rest.empty()) {
    // Lexicographically largest weight present; it must be a dominant
    // highest weight of the remaining sum.
    auto it = std::prev(rest.end());
    Weight nu = it->first;
    int64_t mult = it->second;
    if (mult <= 0) throw std::runtime_error("lr_decompose: negative term");
    for (size_t k = 0; k + 1 < nu.size(); ++k)
      if (nu[k] < nu[k + 1])
        throw std::runtime_error("lr_decompose: non-dominant leader");
    out[nu] += mult;
    for (const auto& [w, m] : gt_character(nu)) {
      auto jt = rest.find(w);
      if (jt == rest.end() || jt->second < mult * m)
        throw std::runtime_error("lr_decompose: subtraction fails");
      jt->second -= mult * m;
      if (jt->second == 0) rest.erase(jt);
    }
  }
  (void)n;
  return out;
}

crystals::roots::Perm demazure_oracle(const crystals::roots::Perm& w,
                                      const crystals::roots::Perm& wp) {
  using crystals::roots::bruhat_leq;
  using crystals::roots::Perm;
  std::set<Perm> prods;
  for (const Perm& u : crystals::roots::all_perms(w.n()))
    if (bruhat_leq(u, w))
      for (const Perm& v : crystals::roots::all_perms(w.n()))
        if (bruhat_leq(v, wp)) prods.insert(u * v);
  // Unique Bruhat maximum.
  const Perm* best = nullptr;
  for (const Perm& p : prods) {
    bool is_max = true;
    for (const Perm& q : prods)
      if (!bruhat_leq(q, p)) {
        is_max = false;
        break;
      }
    if (is_max) {
      if (best) throw std::runtime_error("demazure_oracle: non-unique max");
      best = &p;
    }
  }
  if (!best) throw std::runtime_error("demazure_oracle: no maximum");
  return *best;
}

int64_t coroot_height(const Weight& mu) {
  int64_t acc = 0, ht = 0;
  for (size_t k = 0; k + 1 < mu.size(); ++k) {
    acc += mu[k];
    ht += -acc;
  }
  return ht;
}

Character schubert_series(int n, const std::vector<int>& word, int64_t bound) {
  Character acc;
  acc[Weight(n, 0)] = 1;
  for (size_t k = 0; k < word.size(); ++k) {
    // alpha^vee_(k) = s_{i_1} ... s_{i_{k-1}} (alpha^vee_{i_k}).
    Weight coroot(n, 0);
    coroot[word[k] - 1] = 1;
    coroot[word[k]] = -1;
    for (size_t t = k; t-- > 0;) std::swap(coroot[word[t] - 1], coroot[word[t]]);
    Weight neg(n);
    for (int r = 0; r < n; ++r) neg[r] = -coroot[r];
    int64_t ht = coroot_height(neg);
    if (ht <= 0) throw std::runtime_error("schubert_series: word not reduced");
    Character next;
    for (const auto& [wt, m] : acc)
      for (int64_t c = 0; coroot_height(wt) + c * ht <= bound; ++c) {
        Weight v = wt;
        for (int r = 0; r < n; ++r) v[r] -= c * coroot[r];
        next[v] += m;
      }
    acc = std::move(next);
  }
  return acc;
}

}  // namespace oracles
