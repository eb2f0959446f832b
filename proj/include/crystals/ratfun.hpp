#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "crystals/laurent.hpp"

namespace crystals::alg {

struct positivity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exact rational function, kept in canonical reduced form: the denominator
// is a genuine polynomial with no monomial factor, integer coprime
// coefficients and positive leading coefficient; gcd(num, den) is a unit.
// The numerator absorbs the Laurent monomial unit and the rational scale,
// so equality is structural.
class RF {
public:
  RF() = default;
  RF(Poly n, Poly d);           // reduces
  explicit RF(Poly n);          // denominator 1

  static RF zero(const CtxPtr& c) { return RF(Poly::zero(c)); }
  static RF constant(const CtxPtr& c, const Rat& q) {
    return RF(Poly::constant(c, q));
  }
  static RF var(const CtxPtr& c, int idx, int64_t exp = 1) {
    return RF(Poly::var(c, idx, exp));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const CtxPtr& ctx() const { return num_.ctx; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  RF operator+(const RF& b) const;
  RF operator-(const RF& b) const;
  RF operator*(const RF& b) const;
  RF operator/(const RF& b) const;
  RF operator-() const;
  RF inv() const;
  RF pow(int64_t k) const;  // any sign
  RF& operator+=(const RF& b) { return *this = *this + b; }
  RF& operator-=(const RF& b) { return *this = *this - b; }
  RF& operator*=(const RF& b) { return *this = *this * b; }
  RF& operator/=(const RF& b) { return *this = *this / b; }
  bool operator==(const RF& b) const {
    return num_ == b.num_ && den_ == b.den_;
  }

  Rat eval(const std::vector<Rat>& point) const;

  // Substitute every variable; assignment indexed by variable index.
  // Unassigned variables must not occur in the function.
  RF substitute(const std::map<int, RF>& assignment) const;

  std::string str() const;

private:
  void reduce();
  Poly num_, den_;
};

// A rational function whose reduced numerator and denominator have
// all-nonnegative coefficients (a subtraction-free witness of positivity
// on the positive octant).
class PosRF {
public:
  const RF& rf() const { return rf_; }
  operator const RF&() const { return rf_; }

private:
  friend PosRF certify_positive(const RF& f);
  explicit PosRF(RF f) : rf_(std::move(f)) {}
  RF rf_;
};

// Throws positivity_error (with the offending terms) if the reduced
// numerator or denominator has a negative coefficient.
PosRF certify_positive(const RF& f);

}  // namespace crystals::alg
