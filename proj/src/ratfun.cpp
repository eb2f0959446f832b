#include "crystals/ratfun.hpp"

#include <sstream>

#include "crystals/gcd.hpp"

namespace crystals::alg {

RF::RF(Poly n) : num_(std::move(n)), den_(Poly::constant(num_.ctx, 1)) {}

RF::RF(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
  require_same_ctx(num_, den_);
  if (den_.is_zero()) throw std::domain_error("division by zero");
  reduce();
}

void RF::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.ctx, 1);
    return;
  }
  Exp ua = num_.min_exponents();
  Exp ub = den_.min_exponents();
  Poly A = num_.shift(ua.neg());
  Poly B = den_.shift(ub.neg());
  Poly g = poly_gcd(A, B);
  if (!g.is_one()) {
    A = poly_divexact(A, g);
    B = poly_divexact(B, g);
  }
  Rat c = 1;
  {
    Poly Bn = normalize_primitive(B);
    // scale factor that normalize_primitive applied to B
    c = B.leading_coeff() / Bn.leading_coeff();
    B = std::move(Bn);
  }
  num_ = A.shift(Exp::sub(ua, ub)).scale(1 / c);
  den_ = std::move(B);
}

RF RF::operator+(const RF& b) const {
  return RF(num_ * b.den_ + b.num_ * den_, den_ * b.den_);
}

RF RF::operator-(const RF& b) const {
  return RF(num_ * b.den_ - b.num_ * den_, den_ * b.den_);
}

RF RF::operator*(const RF& b) const {
  return RF(num_ * b.num_, den_ * b.den_);
}

RF RF::operator/(const RF& b) const {
  if (b.is_zero()) throw std::domain_error("division by zero");
  return RF(num_ * b.den_, den_ * b.num_);
}

RF RF::operator-() const {
  RF r = *this;
  r.num_ = -r.num_;
  return r;
}

RF RF::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return RF(den_, num_);
}

RF RF::pow(int64_t k) const {
  if (k < 0) return inv().pow(-k);
  return RF(num_.pow(k), den_.pow(k));
}

Rat RF::eval(const std::vector<Rat>& point) const {
  Rat d = den_.eval(point);
  if (d == 0) throw std::domain_error("denominator vanishes at point");
  return num_.eval(point) / d;
}

RF RF::substitute(const std::map<int, RF>& assignment) const {
  auto subst_poly = [&](const Poly& p) -> RF {
    RF acc = RF::zero(p.ctx);
    for (const auto& t : p.terms) {
      RF term = RF::constant(p.ctx, t.second);
      for (size_t i = 0; i < t.first.e.size(); ++i) {
        int64_t k = t.first.e[i];
        if (k == 0) continue;
        auto it = assignment.find(static_cast<int>(i));
        RF base = it != assignment.end()
                      ? it->second
                      : RF::var(p.ctx, static_cast<int>(i));
        term *= base.pow(k);
      }
      acc += term;
    }
    return acc;
  };
  RF dn = subst_poly(den_);
  if (dn.is_zero())
    throw std::domain_error(
        "substitution makes the denominator identically zero");
  return subst_poly(num_) / dn;
}

std::string RF::str() const {
  if (den_.is_one()) return num_.str();
  std::ostringstream os;
  os << "(" << num_.str() << ") / (" << den_.str() << ")";
  return os.str();
}

PosRF certify_positive(const RF& f) {
  if (f.is_zero())
    throw positivity_error("positivity not certified: zero function");
  auto check = [](const Poly& p, const char* which) {
    for (const auto& t : p.terms)
      if (t.second < 0) {
        Poly bad = Poly::monomial(p.ctx, t.first, t.second);
        throw positivity_error(std::string("positivity not certified: ") +
                               which + " has mixed-sign term " + bad.str());
      }
  };
  check(f.num(), "numerator");
  check(f.den(), "denominator");
  return PosRF(f);
}

}  // namespace crystals::alg
