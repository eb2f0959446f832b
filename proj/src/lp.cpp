#include "crystals/lp.hpp"

#include <stdexcept>

namespace crystals::trop {

namespace {

// Dense exact-arithmetic simplex on the standard form
//   maximize c.y  subject to  A y = b, y >= 0,
// two-phase, Bland's rule (no cycling).
class Simplex {
public:
  Simplex(std::vector<std::vector<Rat>> A, std::vector<Rat> b)
      : A_(std::move(A)), b_(std::move(b)),
        m_(static_cast<int>(b_.size())),
        n_(m_ ? static_cast<int>(A_[0].size()) : 0) {
    for (int r = 0; r < m_; ++r)
      if (b_[r] < 0) {
        b_[r] = -b_[r];
        for (auto& v : A_[r]) v = -v;
      }
  }

  // Returns false if infeasible.
  bool phase1() {
    // artificial variables n_..n_+m_-1 form the initial basis
    for (int r = 0; r < m_; ++r) {
      A_[r].resize(n_ + m_, 0);
      A_[r][n_ + r] = 1;
    }
    basis_.resize(m_);
    for (int r = 0; r < m_; ++r) basis_[r] = n_ + r;
    std::vector<Rat> obj(n_ + m_, 0);
    for (int j = n_; j < n_ + m_; ++j) obj[j] = -1;
    Rat val = run(obj);
    if (val != 0) return false;
    // pivot remaining artificials out of the basis
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      int col = -1;
      for (int j = 0; j < n_; ++j)
        if (A_[r][j] != 0) {
          col = j;
          break;
        }
      if (col >= 0) pivot(r, col);
      // else the row is all zeros in the original columns: redundant
    }
    for (int r = 0; r < m_; ++r) A_[r].resize(n_);
    return true;
  }

  // Returns true when bounded; sets value. Call after phase1.
  bool phase2(const std::vector<Rat>& c, Rat& value) {
    std::vector<Rat> obj = c;
    obj.resize(static_cast<size_t>(n_), 0);
    Rat val = run(obj, &value);
    (void)val;
    return !unbounded_;
  }

private:
  // Price out objective, iterate Bland pivots; returns objective value.
  Rat run(const std::vector<Rat>& obj, Rat* out = nullptr) {
    unbounded_ = false;
    int width = static_cast<int>(A_.empty() ? 0 : A_[0].size());
    while (true) {
      // reduced costs: obj_j - sum_r y_r A_rj with y from basis objective
      std::vector<Rat> lambda(m_, 0);
      // Solve for simplex multipliers implicitly: since tableau rows are
      // kept in basis-canonical form, reduced cost of column j is
      // obj_j - sum_r obj_{basis_r} * A_rj.
      int enter = -1;
      for (int j = 0; j < width; ++j) {
        bool basic = false;
        for (int r = 0; r < m_; ++r)
          if (basis_[r] == j) basic = true;
        if (basic) continue;
        Rat rc = j < static_cast<int>(obj.size()) ? obj[j] : Rat(0);
        for (int r = 0; r < m_; ++r) {
          Rat cb = basis_[r] < static_cast<int>(obj.size())
                       ? obj[basis_[r]]
                       : Rat(0);
          if (cb != 0 && A_[r][j] != 0) rc -= cb * A_[r][j];
        }
        if (rc > 0) {
          enter = j;
          break;  // Bland: smallest improving index
        }
      }
      if (enter < 0) break;
      int leave = -1;
      Rat best;
      for (int r = 0; r < m_; ++r) {
        if (A_[r][enter] <= 0) continue;
        Rat ratio = b_[r] / A_[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) {
        unbounded_ = true;
        break;
      }
      pivot(leave, enter);
    }
    Rat val = 0;
    for (int r = 0; r < m_; ++r) {
      Rat cb = basis_[r] < static_cast<int>(obj.size()) ? obj[basis_[r]]
                                                        : Rat(0);
      val += cb * b_[r];
    }
    if (out) *out = val;
    return val;
  }

  void pivot(int r, int col) {
    Rat p = A_[r][col];
    for (auto& v : A_[r]) v /= p;
    b_[r] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r || A_[i][col] == 0) continue;
      Rat f = A_[i][col];
      for (size_t j = 0; j < A_[i].size(); ++j) A_[i][j] -= f * A_[r][j];
      b_[i] -= f * b_[r];
    }
    basis_[r] = col;
  }

  std::vector<std::vector<Rat>> A_;
  std::vector<Rat> b_;
  int m_, n_;
  std::vector<int> basis_;
  bool unbounded_ = false;
};

}  // namespace

LPResult lp_max_free(const std::vector<std::vector<Rat>>& A,
                     const std::vector<Rat>& b, const std::vector<Rat>& c) {
  size_t m = A.size();
  size_t n = c.size();
  // Standard form variables: x = u - v with u, v >= 0, slack per row.
  std::vector<std::vector<Rat>> S(m, std::vector<Rat>(2 * n + m, 0));
  for (size_t r = 0; r < m; ++r) {
    for (size_t j = 0; j < n; ++j) {
      S[r][j] = A[r][j];
      S[r][n + j] = -A[r][j];
    }
    S[r][2 * n + r] = 1;
  }
  Simplex sx(std::move(S), b);
  if (!sx.phase1()) return {LPStatus::Infeasible, 0};
  std::vector<Rat> obj(2 * n + m, 0);
  for (size_t j = 0; j < n; ++j) {
    obj[j] = c[j];
    obj[n + j] = -c[j];
  }
  Rat value;
  if (!sx.phase2(obj, value)) return {LPStatus::Unbounded, 0};
  return {LPStatus::Optimal, value};
}

bool lp_feasible_eq_nonneg(const std::vector<std::vector<Rat>>& Aeq,
                           const std::vector<Rat>& beq) {
  Simplex sx(Aeq, beq);
  return sx.phase1();
}

}  // namespace crystals::trop
