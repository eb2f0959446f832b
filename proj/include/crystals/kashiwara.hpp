#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace crystals::kash {

using Weight = std::vector<int64_t>;

// One element of a finite Kashiwara crystal. phi/eps hold only finite
// values; an absent key is the -infinity sentinel (trivial support).
struct CrystalElement {
  int id = -1;
  std::vector<int64_t> coords;  // lattice point, when tropicalized
  Weight weight;                // gamma-tilde in Z^n
  std::map<int, int64_t> phi;
  std::map<int, int64_t> eps;

  std::optional<int64_t> phi_at(int i) const;
  std::optional<int64_t> eps_at(int i) const;
};

// Finite Kashiwara crystal for GL_n: elements plus, for each i, the
// partial bijection e_i (the +1 arrow) as a map id -> id.
class FiniteCrystal {
public:
  int n = 0;
  std::set<int> support;
  std::vector<CrystalElement> elements;
  std::map<int, std::map<int, int>> e_edges;  // i -> (from -> to)

  size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }

  std::optional<int> apply_e(int i, int id) const;   // e_i
  std::optional<int> apply_f(int i, int id) const;   // e_i^{-1}
  // e_i^k for any k (negative = f); nullopt if the string ends.
  std::optional<int> apply_en(int i, int64_t k, int id) const;

  // String lengths up/down from an element.
  int64_t string_up(int i, int id) const;
  int64_t string_down(int i, int id) const;

  // Structural sanity: edge weight/phi/eps shift rules and the axiom
  // phi - eps = <alpha_i, weight>; throws internal_error on violation.
  void validate() const;
};

// Pairing <alpha_i, wt> = wt_i - wt_{i+1} (1-based i).
int64_t alpha_pair(int i, const Weight& wt);

// Tensor product (Kashiwara's product with the factors swapped);
// element (x, y) gets id = id_x * |B'| + id_y.
FiniteCrystal tensor(const FiniteCrystal& B, const FiniteCrystal& Bp);

// e_i^n on a product element computed by the closed n1/n2 formulas
// (cross-validation for the iterated edge rule).
std::optional<std::pair<int, int>> tensor_en_pair(const FiniteCrystal& B,
                                                 const FiniteCrystal& Bp,
                                                 int i, int64_t n, int idx,
                                                 int idy);

std::vector<int> highest_weight_elements(const FiniteCrystal& B);

struct NormalityReport {
  bool upper = true;
  bool lower = true;
  std::vector<std::string> violations;
  bool normal() const { return upper && lower; }
};
NormalityReport is_normal(const FiniteCrystal& B);

std::vector<FiniteCrystal> connected_components(const FiniteCrystal& B);

// Weight generating function as a multiset of weights.
std::map<Weight, int64_t> character(const FiniteCrystal& B);

FiniteCrystal opposite(const FiniteCrystal& B);

// Isomorphism of connected crystals with unique highest-weight elements,
// by canonical BFS labeling (children ordered by i).
bool isomorphic(const FiniteCrystal& A, const FiniteCrystal& B);

// Joseph closed-family criterion: C_{lambda+mu} embeds strictly into
// C_lambda x C_mu starting from the highest-weight elements.
struct ClosedFamilyReport {
  bool ok = true;
  std::vector<std::string> problems;
};
ClosedFamilyReport closed_family_check(const FiniteCrystal& Clam,
                                       const FiniteCrystal& Cmu,
                                       const FiniteCrystal& Csum);

// Sum of q^{charge(id)} over highest-weight elements of weight nu;
// returned as exponent -> coefficient.
std::map<int64_t, int64_t> q_multiplicity(
    const FiniteCrystal& B, const std::map<int, int64_t>& charge,
    const Weight& nu);

}  // namespace crystals::kash
