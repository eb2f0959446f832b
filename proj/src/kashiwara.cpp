#include "crystals/kashiwara.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "crystals/ratfun.hpp"

namespace crystals::kash {

using crystals::alg::internal_error;

std::optional<int64_t> CrystalElement::phi_at(int i) const {
  auto it = phi.find(i);
  if (it == phi.end()) return std::nullopt;
  return it->second;
}

std::optional<int64_t> CrystalElement::eps_at(int i) const {
  auto it = eps.find(i);
  if (it == eps.end()) return std::nullopt;
  return it->second;
}

int64_t alpha_pair(int i, const Weight& wt) {
  return wt[i - 1] - wt[i];
}

std::optional<int> FiniteCrystal::apply_e(int i, int id) const {
  auto it = e_edges.find(i);
  if (it == e_edges.end()) return std::nullopt;
  auto jt = it->second.find(id);
  if (jt == it->second.end()) return std::nullopt;
  return jt->second;
}

std::optional<int> FiniteCrystal::apply_f(int i, int id) const {
  auto it = e_edges.find(i);
  if (it == e_edges.end()) return std::nullopt;
  for (const auto& [from, to] : it->second)
    if (to == id) return from;
  return std::nullopt;
}

std::optional<int> FiniteCrystal::apply_en(int i, int64_t k, int id) const {
  std::optional<int> cur = id;
  for (int64_t s = 0; s < (k < 0 ? -k : k) && cur; ++s)
    cur = k > 0 ? apply_e(i, *cur) : apply_f(i, *cur);
  return cur;
}

int64_t FiniteCrystal::string_up(int i, int id) const {
  int64_t k = 0;
  std::optional<int> cur = id;
  while ((cur = apply_e(i, *cur))) ++k;
  return k;
}

int64_t FiniteCrystal::string_down(int i, int id) const {
  int64_t k = 0;
  std::optional<int> cur = id;
  while ((cur = apply_f(i, *cur))) ++k;
  return k;
}

void FiniteCrystal::validate() const {
  for (const auto& el : elements) {
    for (int i : support) {
      auto p = el.phi_at(i), e = el.eps_at(i);
      if (p.has_value() != e.has_value())
        throw internal_error("element with mixed phi/eps support");
      if (p && *p - *e != alpha_pair(i, el.weight))
        throw internal_error("phi - eps != <alpha_i, weight>");
    }
  }
  for (const auto& [i, edges] : e_edges) {
    std::set<int> targets;
    for (const auto& [from, to] : edges) {
      if (!targets.insert(to).second)
        throw internal_error("e_i is not injective");
      const CrystalElement& a = elements[from];
      const CrystalElement& b = elements[to];
      Weight expect = a.weight;
      expect[i - 1] += 1;
      expect[i] -= 1;
      if (b.weight != expect) throw internal_error("edge weight rule");
      if (!a.phi_at(i) || !b.phi_at(i) ||
          *b.phi_at(i) != *a.phi_at(i) + 1 ||
          *b.eps_at(i) != *a.eps_at(i) - 1)
        throw internal_error("edge phi/eps shift rule");
    }
  }
}

namespace {

// max with the -infinity sentinel.
std::optional<int64_t> omax(std::optional<int64_t> a,
                            std::optional<int64_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::max(*a, *b);
}

}  // namespace

FiniteCrystal tensor(const FiniteCrystal& B, const FiniteCrystal& Bp) {
  if (B.n != Bp.n)
    throw std::invalid_argument("tensor: root datum mismatch");
  FiniteCrystal P;
  P.n = B.n;
  P.support = B.support;
  P.support.insert(Bp.support.begin(), Bp.support.end());
  int m = static_cast<int>(Bp.size());
  for (const auto& x : B.elements)
    for (const auto& y : Bp.elements) {
      CrystalElement el;
      el.id = x.id * m + y.id;
      el.coords = x.coords;
      el.coords.insert(el.coords.end(), y.coords.begin(), y.coords.end());
      el.weight.resize(P.n);
      for (int k = 0; k < P.n; ++k)
        el.weight[k] = x.weight[k] + y.weight[k];
      for (int i : P.support) {
        // phi'' = max(phi(x), phi(y) + <alpha_i, wt(x)>)
        // eps'' = max(eps(y), eps(x) - <alpha_i, wt(y)>)
        std::optional<int64_t> py = y.phi_at(i);
        if (py) py = *py + alpha_pair(i, x.weight);
        std::optional<int64_t> ph = omax(x.phi_at(i), py);
        std::optional<int64_t> ex = x.eps_at(i);
        if (ex) ex = *ex - alpha_pair(i, y.weight);
        std::optional<int64_t> ep = omax(y.eps_at(i), ex);
        if (ph) el.phi[i] = *ph;
        if (ep) el.eps[i] = *ep;
      }
      P.elements.push_back(std::move(el));
    }
  std::sort(P.elements.begin(), P.elements.end(),
            [](const CrystalElement& a, const CrystalElement& b) {
              return a.id < b.id;
            });
  // Edges: e_i acts on the left factor when eps(x) > phi(y), else right.
  for (int i : P.support) {
    for (const auto& x : B.elements)
      for (const auto& y : Bp.elements) {
        auto ex = x.eps_at(i);
        auto py = y.phi_at(i);
        bool on_left = ex && (!py || *ex > *py);
        std::optional<int> tgt;
        if (on_left) {
          auto nx = B.apply_e(i, x.id);
          if (nx) tgt = *nx * m + y.id;
        } else if (py || ex) {
          auto ny = Bp.apply_e(i, y.id);
          if (ny) tgt = x.id * m + *ny;
        }
        if (tgt) P.e_edges[i][x.id * m + y.id] = *tgt;
      }
  }
  return P;
}

std::optional<std::pair<int, int>> tensor_en_pair(const FiniteCrystal& B,
                                                 const FiniteCrystal& Bp,
                                                 int i, int64_t n, int idx,
                                                 int idy) {
  if (n == 0) return std::make_pair(idx, idy);
  auto ex = B.elements[idx].eps_at(i);
  auto py = Bp.elements[idy].phi_at(i);
  int64_t n1, n2;
  if (!ex && !py) return std::nullopt;
  if (!ex) {
    n1 = 0;
    n2 = n;
  } else if (!py) {
    n1 = n;
    n2 = 0;
  } else {
    n1 = std::max(*ex, *py) - std::max(*ex - n, *py);
    n2 = std::max(*ex, *py + n) - std::max(*ex, *py);
  }
  auto nx = B.apply_en(i, n1, idx);
  auto ny = Bp.apply_en(i, n2, idy);
  if (!nx || !ny) return std::nullopt;
  return std::make_pair(*nx, *ny);
}

std::vector<int> highest_weight_elements(const FiniteCrystal& B) {
  std::vector<int> out;
  for (const auto& el : B.elements) {
    bool top = true;
    for (int i : B.support)
      if (B.apply_e(i, el.id)) {
        top = false;
        break;
      }
    if (top) out.push_back(el.id);
  }
  return out;
}

NormalityReport is_normal(const FiniteCrystal& B) {
  NormalityReport r;
  for (const auto& el : B.elements)
    for (int i : B.support) {
      auto e = el.eps_at(i);
      auto p = el.phi_at(i);
      if (!e || *e != B.string_up(i, el.id)) {
        r.upper = false;
        std::ostringstream os;
        os << "eps_" << i << "(" << el.id << ") != up-string length";
        r.violations.push_back(os.str());
      }
      if (!p || *p != B.string_down(i, el.id)) {
        r.lower = false;
        std::ostringstream os;
        os << "phi_" << i << "(" << el.id << ") != down-string length";
        r.violations.push_back(os.str());
      }
    }
  return r;
}

std::vector<FiniteCrystal> connected_components(const FiniteCrystal& B) {
  int nels = static_cast<int>(B.size());
  std::vector<int> comp(nels, -1);
  // Ids may be sparse; build an index.
  std::map<int, int> idx;
  for (int k = 0; k < nels; ++k) idx[B.elements[k].id] = k;
  int ncomp = 0;
  for (int start = 0; start < nels; ++start) {
    if (comp[start] >= 0) continue;
    std::deque<int> queue{start};
    comp[start] = ncomp;
    while (!queue.empty()) {
      int k = queue.front();
      queue.pop_front();
      int id = B.elements[k].id;
      for (int i : B.support) {
        for (auto nb : {B.apply_e(i, id), B.apply_f(i, id)}) {
          if (!nb) continue;
          int t = idx.at(*nb);
          if (comp[t] < 0) {
            comp[t] = ncomp;
            queue.push_back(t);
          }
        }
      }
    }
    ++ncomp;
  }
  std::vector<FiniteCrystal> out(ncomp);
  std::vector<std::map<int, int>> remap(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    out[c].n = B.n;
    out[c].support = B.support;
  }
  for (int k = 0; k < nels; ++k) {
    int c = comp[k];
    CrystalElement el = B.elements[k];
    int nid = static_cast<int>(out[c].elements.size());
    remap[c][el.id] = nid;
    el.id = nid;
    out[c].elements.push_back(std::move(el));
  }
  for (const auto& [i, edges] : B.e_edges)
    for (const auto& [from, to] : edges) {
      int c = comp[idx.at(from)];
      out[c].e_edges[i][remap[c].at(from)] = remap[c].at(to);
    }
  return out;
}

std::map<Weight, int64_t> character(const FiniteCrystal& B) {
  std::map<Weight, int64_t> ch;
  for (const auto& el : B.elements) ++ch[el.weight];
  return ch;
}

FiniteCrystal opposite(const FiniteCrystal& B) {
  FiniteCrystal O;
  O.n = B.n;
  O.support = B.support;
  O.elements = B.elements;
  for (auto& el : O.elements) {
    for (auto& w : el.weight) w = -w;
    std::swap(el.phi, el.eps);
  }
  for (const auto& [i, edges] : B.e_edges)
    for (const auto& [from, to] : edges) O.e_edges[i][to] = from;
  return O;
}

namespace {

// Canonical BFS order from the unique highest-weight element; children
// visited by ascending i, e-direction before f-direction.
std::vector<int> canonical_order(const FiniteCrystal& B, int hw) {
  std::vector<int> order;
  std::map<int, int> label;
  std::deque<int> queue{hw};
  label[hw] = 0;
  while (!queue.empty()) {
    int id = queue.front();
    queue.pop_front();
    order.push_back(id);
    for (int i : B.support)
      for (auto nb : {B.apply_e(i, id), B.apply_f(i, id)}) {
        if (!nb || label.count(*nb)) continue;
        label[*nb] = static_cast<int>(label.size());
        queue.push_back(*nb);
      }
  }
  return order;
}

}  // namespace

bool isomorphic(const FiniteCrystal& A, const FiniteCrystal& B) {
  if (A.size() != B.size() || A.n != B.n || A.support != B.support)
    return false;
  auto ha = highest_weight_elements(A);
  auto hb = highest_weight_elements(B);
  if (ha.size() != 1 || hb.size() != 1) return false;
  std::vector<int> oa = canonical_order(A, ha[0]);
  std::vector<int> ob = canonical_order(B, hb[0]);
  if (oa.size() != A.size() || ob.size() != B.size()) return false;
  std::map<int, int> la, lb;
  for (size_t k = 0; k < oa.size(); ++k) la[oa[k]] = static_cast<int>(k);
  for (size_t k = 0; k < ob.size(); ++k) lb[ob[k]] = static_cast<int>(k);
  for (size_t k = 0; k < oa.size(); ++k) {
    const CrystalElement& x = A.elements[oa[k]];
    const CrystalElement& y = B.elements[ob[k]];
    if (x.weight != y.weight || x.phi != y.phi || x.eps != y.eps)
      return false;
    for (int i : A.support) {
      auto ea = A.apply_e(i, x.id);
      auto eb = B.apply_e(i, y.id);
      if (ea.has_value() != eb.has_value()) return false;
      if (ea && la.at(*ea) != lb.at(*eb)) return false;
    }
  }
  return true;
}

ClosedFamilyReport closed_family_check(const FiniteCrystal& Clam,
                                       const FiniteCrystal& Cmu,
                                       const FiniteCrystal& Csum) {
  ClosedFamilyReport r;
  auto fail = [&](const std::string& msg) {
    r.ok = false;
    r.problems.push_back(msg);
  };
  auto hl = highest_weight_elements(Clam);
  auto hm = highest_weight_elements(Cmu);
  auto hs = highest_weight_elements(Csum);
  if (hl.size() != 1 || hm.size() != 1 || hs.size() != 1) {
    fail("highest-weight element is not unique");
    return r;
  }
  FiniteCrystal P = tensor(Clam, Cmu);
  int m = static_cast<int>(Cmu.size());
  int start = hl[0] * m + hm[0];
  {
    Weight sum = Clam.elements[hl[0]].weight;
    for (int k = 0; k < P.n; ++k) sum[k] += Cmu.elements[hm[0]].weight[k];
    if (Csum.elements[hs[0]].weight != sum) {
      fail("highest weights do not add up");
      return r;
    }
  }
  std::map<int, int> image{{hs[0], start}};
  std::set<int> used{start};
  std::deque<int> queue{hs[0]};
  std::map<int, int> sidx, pidx;
  for (size_t k = 0; k < Csum.size(); ++k) sidx[Csum.elements[k].id] = k;
  for (size_t k = 0; k < P.size(); ++k) pidx[P.elements[k].id] = k;
  while (!queue.empty() && r.ok) {
    int a = queue.front();
    queue.pop_front();
    int p = image.at(a);
    const CrystalElement& ea = Csum.elements[sidx.at(a)];
    const CrystalElement& ep = P.elements[pidx.at(p)];
    if (ea.weight != ep.weight) fail("weight mismatch at mapped element");
    for (int i : Csum.support) {
      if (ea.phi_at(i) != ep.phi_at(i) || ea.eps_at(i) != ep.eps_at(i)) {
        fail("phi/eps mismatch at mapped element (i=" +
             std::to_string(i) + ")");
        continue;
      }
      for (int dir = 0; dir < 2; ++dir) {
        auto na = dir ? Csum.apply_f(i, a) : Csum.apply_e(i, a);
        auto np = dir ? P.apply_f(i, p) : P.apply_e(i, p);
        if (!na) continue;
        if (!np) {
          fail("edge of C_{lambda+mu} missing in the product (i=" +
               std::to_string(i) + ")");
          continue;
        }
        auto it = image.find(*na);
        if (it == image.end()) {
          if (!used.insert(*np).second) {
            fail("embedding is not injective");
            continue;
          }
          image[*na] = *np;
          queue.push_back(*na);
        } else if (it->second != *np) {
          fail("edge images conflict (i=" + std::to_string(i) + ")");
        }
      }
    }
  }
  if (r.ok && image.size() != Csum.size())
    fail("C_{lambda+mu} is not connected from its highest weight");
  return r;
}

std::map<int64_t, int64_t> q_multiplicity(
    const FiniteCrystal& B, const std::map<int, int64_t>& charge,
    const Weight& nu) {
  std::map<int64_t, int64_t> poly;
  for (int id : highest_weight_elements(B)) {
    const CrystalElement* el = nullptr;
    for (const auto& e : B.elements)
      if (e.id == id) el = &e;
    if (!el) continue;
    if (el->weight != nu) continue;
    auto it = charge.find(id);
    if (it == charge.end())
      throw std::invalid_argument("q_multiplicity: missing charge value");
    ++poly[it->second];
  }
  return poly;
}

}  // namespace crystals::kash
