#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "crystals/varctx.hpp"

namespace crystals::alg {

using Rat = mpq_class;

// Exponent vector over the ambient variable context. Trailing zero
// exponents are implicit, so vectors created before a context extension
// compare correctly against longer ones.
struct Exp {
  std::vector<int64_t> e;

  int64_t get(size_t i) const { return i < e.size() ? e[i] : 0; }
  void set(size_t i, int64_t v);
  void trim();
  int64_t degree() const;  // total degree (sum of entries)
  bool is_zero() const;

  static Exp add(const Exp& a, const Exp& b);
  static Exp sub(const Exp& a, const Exp& b);
  static Exp min(const Exp& a, const Exp& b);  // componentwise
  Exp neg() const;

  // Graded lexicographic order: compare total degree, then lex.
  // Returns <0, 0, >0.
  static int cmp(const Exp& a, const Exp& b);

  bool operator==(const Exp& b) const { return cmp(*this, b) == 0; }
};

// Multivariate Laurent polynomial with exact rational coefficients.
// Terms are kept sorted in descending graded-lex order with no zero
// coefficients, so equality is structural.
class Poly {
public:
  CtxPtr ctx;
  std::vector<std::pair<Exp, Rat>> terms;

  Poly() = default;
  explicit Poly(CtxPtr c) : ctx(std::move(c)) {}

  static Poly zero(const CtxPtr& c) { return Poly(c); }
  static Poly constant(const CtxPtr& c, const Rat& q);
  static Poly var(const CtxPtr& c, int idx, int64_t exp = 1);
  static Poly monomial(const CtxPtr& c, const Exp& e, const Rat& q);

  bool is_zero() const { return terms.empty(); }
  bool is_monomial() const { return terms.size() == 1; }
  bool is_constant() const;
  bool is_one() const;
  size_t size() const { return terms.size(); }

  const Exp& leading_exp() const;
  const Rat& leading_coeff() const;

  Poly operator-() const;
  Poly operator+(const Poly& b) const;
  Poly operator-(const Poly& b) const;
  Poly operator*(const Poly& b) const;
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  bool operator==(const Poly& b) const;

  Poly scale(const Rat& q) const;
  Poly pow(int64_t k) const;  // k >= 0
  Poly shift(const Exp& by) const;  // multiply by the monomial x^by

  // Componentwise minimum of the support exponents (the "unit part" of a
  // Laurent polynomial). Zero polynomial is rejected.
  Exp min_exponents() const;

  // True when every exponent is nonnegative (a genuine polynomial).
  bool is_polynomial() const;
  bool all_coeffs_nonneg() const;

  Rat eval(const std::vector<Rat>& point) const;

  int max_var() const;  // largest variable index used, -1 for constants
  bool has_var(int v) const;
  int64_t deg_in(int v) const;
  int64_t low_deg_in(int v) const;

  // Dense coefficient list in variable v (index = exponent of v); requires
  // nonnegative exponents in v.
  std::vector<Poly> coeffs_in(int v) const;
  static Poly from_coeffs(const CtxPtr& ctx, int v,
                          const std::vector<Poly>& cs);

  std::string str() const;

  void normalize();  // sort, merge, drop zeros (used by constructors)
};

void require_same_ctx(const Poly& a, const Poly& b);

}  // namespace crystals::alg
