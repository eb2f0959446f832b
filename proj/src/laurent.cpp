#include "crystals/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crystals::alg {

void Exp::set(size_t i, int64_t v) {
  if (i >= e.size()) {
    if (v == 0) return;
    e.resize(i + 1, 0);
  }
  e[i] = v;
  trim();
}

void Exp::trim() {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

int64_t Exp::degree() const {
  int64_t d = 0;
  for (int64_t x : e) d += x;
  return d;
}

bool Exp::is_zero() const {
  for (int64_t x : e)
    if (x != 0) return false;
  return true;
}

Exp Exp::add(const Exp& a, const Exp& b) {
  Exp r;
  r.e.resize(std::max(a.e.size(), b.e.size()), 0);
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.get(i) + b.get(i);
  r.trim();
  return r;
}

Exp Exp::sub(const Exp& a, const Exp& b) {
  Exp r;
  r.e.resize(std::max(a.e.size(), b.e.size()), 0);
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = a.get(i) - b.get(i);
  r.trim();
  return r;
}

Exp Exp::min(const Exp& a, const Exp& b) {
  Exp r;
  r.e.resize(std::max(a.e.size(), b.e.size()), 0);
  for (size_t i = 0; i < r.e.size(); ++i)
    r.e[i] = std::min(a.get(i), b.get(i));
  r.trim();
  return r;
}

Exp Exp::neg() const {
  Exp r = *this;
  for (int64_t& x : r.e) x = -x;
  return r;
}

int Exp::cmp(const Exp& a, const Exp& b) {
  int64_t da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  size_t n = std::max(a.e.size(), b.e.size());
  for (size_t i = 0; i < n; ++i) {
    int64_t x = a.get(i), y = b.get(i);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

Poly Poly::constant(const CtxPtr& c, const Rat& q) {
  Poly p(c);
  if (q != 0) p.terms.emplace_back(Exp{}, q);
  return p;
}

Poly Poly::var(const CtxPtr& c, int idx, int64_t exp) {
  Exp e;
  e.set(static_cast<size_t>(idx), exp);
  return monomial(c, e, 1);
}

Poly Poly::monomial(const CtxPtr& c, const Exp& e, const Rat& q) {
  Poly p(c);
  if (q != 0) p.terms.emplace_back(e, q);
  return p;
}

bool Poly::is_constant() const {
  return terms.empty() || (terms.size() == 1 && terms[0].first.is_zero());
}

bool Poly::is_one() const {
  return terms.size() == 1 && terms[0].first.is_zero() &&
         terms[0].second == 1;
}

const Exp& Poly::leading_exp() const {
  if (terms.empty()) throw std::logic_error("leading_exp of zero polynomial");
  return terms.front().first;
}

const Rat& Poly::leading_coeff() const {
  if (terms.empty())
    throw std::logic_error("leading_coeff of zero polynomial");
  return terms.front().second;
}

void Poly::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) {
              return Exp::cmp(a.first, b.first) > 0;
            });
  std::vector<std::pair<Exp, Rat>> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && Exp::cmp(out.back().first, t.first) == 0) {
      out.back().second += t.second;
      if (out.back().second == 0) out.pop_back();
    } else if (t.second != 0) {
      out.push_back(std::move(t));
    }
  }
  terms = std::move(out);
}

void require_same_ctx(const Poly& a, const Poly& b) {
  if (a.ctx != b.ctx)
    throw std::logic_error("operands belong to different variable contexts");
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms) t.second = -t.second;
  return r;
}

Poly Poly::operator+(const Poly& b) const {
  require_same_ctx(*this, b);
  Poly r(ctx);
  r.terms.reserve(terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < terms.size() && j < b.terms.size()) {
    int c = Exp::cmp(terms[i].first, b.terms[j].first);
    if (c > 0) {
      r.terms.push_back(terms[i++]);
    } else if (c < 0) {
      r.terms.push_back(b.terms[j++]);
    } else {
      Rat s = terms[i].second + b.terms[j].second;
      if (s != 0) r.terms.emplace_back(terms[i].first, s);
      ++i, ++j;
    }
  }
  while (i < terms.size()) r.terms.push_back(terms[i++]);
  while (j < b.terms.size()) r.terms.push_back(b.terms[j++]);
  return r;
}

Poly Poly::operator-(const Poly& b) const { return *this + (-b); }

Poly Poly::operator*(const Poly& b) const {
  require_same_ctx(*this, b);
  if (is_zero() || b.is_zero()) return Poly::zero(ctx);
  if (b.is_monomial()) {
    Poly r(ctx);
    r.terms.reserve(terms.size());
    for (const auto& t : terms)
      r.terms.emplace_back(Exp::add(t.first, b.terms[0].first),
                           t.second * b.terms[0].second);
    r.normalize();
    return r;
  }
  std::map<std::vector<int64_t>, Rat> acc;
  for (const auto& ta : terms)
    for (const auto& tb : b.terms) {
      Exp e = Exp::add(ta.first, tb.first);
      acc[e.e] += ta.second * tb.second;
    }
  Poly r(ctx);
  r.terms.reserve(acc.size());
  for (auto& [ev, q] : acc) {
    if (q == 0) continue;
    Exp e;
    e.e = ev;
    r.terms.emplace_back(std::move(e), std::move(q));
  }
  r.normalize();
  return r;
}

bool Poly::operator==(const Poly& b) const {
  if (ctx != b.ctx) return false;
  if (terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < terms.size(); ++i)
    if (!(terms[i].first == b.terms[i].first) ||
        terms[i].second != b.terms[i].second)
      return false;
  return true;
}

Poly Poly::scale(const Rat& q) const {
  if (q == 0) return Poly::zero(ctx);
  Poly r = *this;
  for (auto& t : r.terms) t.second *= q;
  return r;
}

Poly Poly::pow(int64_t k) const {
  if (k < 0) throw std::logic_error("Poly::pow: negative exponent");
  Poly r = Poly::constant(ctx, 1);
  Poly base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

Poly Poly::shift(const Exp& by) const {
  Poly r(ctx);
  r.terms.reserve(terms.size());
  for (const auto& t : terms)
    r.terms.emplace_back(Exp::add(t.first, by), t.second);
  return r;
}

Exp Poly::min_exponents() const {
  if (terms.empty())
    throw std::logic_error("min_exponents of zero polynomial");
  Exp m = terms[0].first;
  for (size_t i = 1; i < terms.size(); ++i)
    m = Exp::min(m, terms[i].first);
  return m;
}

bool Poly::is_polynomial() const {
  for (const auto& t : terms)
    for (int64_t x : t.first.e)
      if (x < 0) return false;
  return true;
}

bool Poly::all_coeffs_nonneg() const {
  for (const auto& t : terms)
    if (t.second < 0) return false;
  return true;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  Rat acc = 0;
  for (const auto& t : terms) {
    Rat v = t.second;
    for (size_t i = 0; i < t.first.e.size(); ++i) {
      int64_t k = t.first.e[i];
      if (k == 0) continue;
      if (i >= point.size())
        throw std::logic_error("eval: missing value for variable " +
                               ctx->name(static_cast<int>(i)));
      const Rat& x = point[i];
      if (x == 0 && k < 0) throw std::domain_error("eval: division by zero");
      Rat p;
      mpz_class num = x.get_num(), den = x.get_den();
      unsigned long a = static_cast<unsigned long>(k < 0 ? -k : k);
      mpz_class pn, pd;
      mpz_pow_ui(pn.get_mpz_t(), num.get_mpz_t(), a);
      mpz_pow_ui(pd.get_mpz_t(), den.get_mpz_t(), a);
      if (k > 0)
        p = Rat(pn, pd);
      else
        p = Rat(pd, pn);
      p.canonicalize();
      v *= p;
    }
    acc += v;
  }
  return acc;
}

int Poly::max_var() const {
  int m = -1;
  for (const auto& t : terms)
    for (size_t i = 0; i < t.first.e.size(); ++i)
      if (t.first.e[i] != 0 && static_cast<int>(i) > m)
        m = static_cast<int>(i);
  return m;
}

bool Poly::has_var(int v) const {
  for (const auto& t : terms)
    if (t.first.get(static_cast<size_t>(v)) != 0) return true;
  return false;
}

int64_t Poly::deg_in(int v) const {
  int64_t d = 0;
  for (const auto& t : terms)
    d = std::max(d, t.first.get(static_cast<size_t>(v)));
  return d;
}

int64_t Poly::low_deg_in(int v) const {
  if (terms.empty()) return 0;
  int64_t d = terms[0].first.get(static_cast<size_t>(v));
  for (const auto& t : terms)
    d = std::min(d, t.first.get(static_cast<size_t>(v)));
  return d;
}

std::vector<Poly> Poly::coeffs_in(int v) const {
  if (low_deg_in(v) < 0)
    throw std::logic_error("coeffs_in: negative exponent in variable");
  std::vector<Poly> cs(static_cast<size_t>(deg_in(v)) + 1, Poly::zero(ctx));
  for (const auto& t : terms) {
    int64_t k = t.first.get(static_cast<size_t>(v));
    Exp rest = t.first;
    rest.set(static_cast<size_t>(v), 0);
    cs[static_cast<size_t>(k)].terms.emplace_back(rest, t.second);
  }
  for (auto& c : cs) c.normalize();
  return cs;
}

Poly Poly::from_coeffs(const CtxPtr& ctx, int v, const std::vector<Poly>& cs) {
  Poly r(ctx);
  for (size_t k = 0; k < cs.size(); ++k) {
    Exp shift;
    shift.set(static_cast<size_t>(v), static_cast<int64_t>(k));
    for (const auto& t : cs[k].terms)
      r.terms.emplace_back(Exp::add(t.first, shift), t.second);
  }
  r.normalize();
  return r;
}

std::string Poly::str() const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms) {
    Rat c = t.second;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool printed = false;
    if (c != 1 || t.first.is_zero()) {
      os << c.get_str();
      printed = true;
    }
    for (size_t i = 0; i < t.first.e.size(); ++i) {
      if (t.first.e[i] == 0) continue;
      if (printed) os << " * ";
      os << ctx->name(static_cast<int>(i));
      if (t.first.e[i] != 1) os << "^" << t.first.e[i];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace crystals::alg
