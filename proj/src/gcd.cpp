#include "crystals/gcd.hpp"

#include <stdexcept>

namespace crystals::alg {

namespace {

// gcd of numerators / lcm of denominators; positive.
Rat rat_content(const Poly& a) {
  mpz_class g = 0, l = 1;
  for (const auto& t : a.terms) {
    mpz_class num = abs(t.second.get_num());
    mpz_class den = t.second.get_den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  Rat c(g, l);
  c.canonicalize();
  return c;
}

// Coefficient of v^deg in a, as a polynomial in the remaining variables.
Poly lead_coeff_in(const Poly& a, int v, int64_t deg) {
  Poly r(a.ctx);
  for (const auto& t : a.terms) {
    if (t.first.get(static_cast<size_t>(v)) != deg) continue;
    Exp rest = t.first;
    rest.set(static_cast<size_t>(v), 0);
    r.terms.emplace_back(rest, t.second);
  }
  r.normalize();
  return r;
}

Poly shift_in(const Poly& a, int v, int64_t k) {
  Exp e;
  e.set(static_cast<size_t>(v), k);
  return a.shift(e);
}

// Pseudo-remainder of A by B in variable v: lc(B)^(degA-degB+1) * A mod B.
Poly prem(const Poly& A, const Poly& B, int v) {
  int64_t dB = B.deg_in(v);
  Poly lB = lead_coeff_in(B, v, dB);
  int64_t e = A.deg_in(v) - dB + 1;
  Poly R = A;
  while (!R.is_zero()) {
    int64_t dR = R.deg_in(v);
    if (dR < dB) break;
    Poly lR = lead_coeff_in(R, v, dR);
    R = lB * R - shift_in(lR, v, dR - dB) * B;
    --e;
  }
  for (; e > 0; --e) R = lB * R;
  return R;
}

// Content of a with respect to variable v (gcd of its v-coefficients).
Poly content_in(const Poly& a, int v) {
  Poly g = Poly::zero(a.ctx);
  for (const auto& c : a.coeffs_in(v))
    if (!c.is_zero()) g = poly_gcd(g, c);
  return g;
}

Poly monomial_gcd(const Poly& a, const Poly& b) {
  Exp e = Exp::min(a.min_exponents(), b.min_exponents());
  return Poly::monomial(a.ctx, e, 1);
}

}  // namespace

Poly normalize_primitive(const Poly& a) {
  if (a.is_zero()) return a;
  Rat c = rat_content(a);
  if (a.leading_coeff() < 0) c = -c;
  Rat inv = 1 / c;
  return a.scale(inv);
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::logic_error("poly_divexact: division by zero");
  Poly r = a;
  Poly q(a.ctx);
  while (!r.is_zero()) {
    Exp e = Exp::sub(r.leading_exp(), b.leading_exp());
    for (int64_t x : e.e)
      if (x < 0) throw std::logic_error("poly_divexact: not divisible");
    Rat c = r.leading_coeff() / b.leading_coeff();
    Poly m = Poly::monomial(a.ctx, e, c);
    q += m;
    r -= m * b;
  }
  return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return normalize_primitive(b);
  if (b.is_zero()) return normalize_primitive(a);
  if (a == b || a == -b) return normalize_primitive(a);
  if (a.is_monomial() || b.is_monomial()) return monomial_gcd(a, b);

  int v = std::max(a.max_var(), b.max_var());
  if (v < 0) return Poly::constant(a.ctx, 1);
  if (!a.has_var(v)) return poly_gcd(a, content_in(b, v));
  if (!b.has_var(v)) return poly_gcd(content_in(a, v), b);

  Poly cont_a = content_in(a, v);
  Poly cont_b = content_in(b, v);
  Poly F = poly_divexact(a, cont_a);
  Poly G = poly_divexact(b, cont_b);
  Poly cont = poly_gcd(cont_a, cont_b);

  if (F.deg_in(v) < G.deg_in(v)) std::swap(F, G);

  Poly one = Poly::constant(a.ctx, 1);
  Poly g = one, h = one;
  Poly result;
  while (true) {
    int64_t delta = F.deg_in(v) - G.deg_in(v);
    Poly R = prem(F, G, v);
    if (R.is_zero()) {
      result = poly_divexact(G, content_in(G, v));
      break;
    }
    if (R.deg_in(v) == 0) {
      result = one;
      break;
    }
    F = G;
    Poly divisor = g;
    for (int64_t k = 0; k < delta; ++k) divisor *= h;
    G = poly_divexact(R, divisor);
    g = lead_coeff_in(F, v, F.deg_in(v));
    if (delta > 0) {
      Poly num = g;
      for (int64_t k = 1; k < delta; ++k) num *= g;
      Poly den = one;
      for (int64_t k = 1; k < delta; ++k) den *= h;
      h = poly_divexact(num, den);
    }
  }
  return normalize_primitive(cont * result);
}

}  // namespace crystals::alg
