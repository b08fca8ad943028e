#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "lgf/errors.hpp"

namespace lgf {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

// a + b*sqrt(d) + (c + e*sqrt(d))/pi.  The radicand is a runtime tag; it only
// matters once b or e is nonzero.
class RingElem {
 public:
  RingElem() = default;
  RingElem(long v) : a_(v) {}  // NOLINT(implicit)
  RingElem(const Rational& q, int d = 2) : d_(d), a_(q) { a_.canonicalize(); }  // NOLINT

  static RingElem make(int d, Rational a, Rational b, Rational c = 0, Rational e = 0);
  static RingElem sqrt(int d) { return make(d, 0, 1); }
  static RingElem inv_pi(int d = 2) { return make(d, 0, 0, 1, 0); }

  int radicand() const { return d_; }
  const Rational& q() const { return a_; }
  const Rational& sq() const { return b_; }
  const Rational& ipi() const { return c_; }
  const Rational& sqipi() const { return e_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0 && sgn(c_) == 0 && sgn(e_) == 0; }
  bool is_rational() const { return sgn(b_) == 0 && sgn(c_) == 0 && sgn(e_) == 0; }
  bool pi_free() const { return sgn(c_) == 0 && sgn(e_) == 0; }
  int pi_degree() const { return pi_free() ? 0 : 1; }

  // Pure-rational values carry no meaningful radicand; retag freely.
  RingElem with_radicand(int d) const;

  RingElem operator-() const;
  RingElem& operator+=(const RingElem& o);
  RingElem& operator-=(const RingElem& o);
  RingElem& operator*=(const RingElem& o);
  RingElem& operator/=(const RingElem& o);
  friend RingElem operator+(RingElem x, const RingElem& y) { return x += y; }
  friend RingElem operator-(RingElem x, const RingElem& y) { return x -= y; }
  friend RingElem operator*(RingElem x, const RingElem& y) { return x *= y; }
  friend RingElem operator/(RingElem x, const RingElem& y) { return x /= y; }
  friend bool operator==(const RingElem& x, const RingElem& y);
  friend bool operator!=(const RingElem& x, const RingElem& y) { return !(x == y); }

  RingElem inverse() const;
  RingElem pow(unsigned k) const;

  double to_double() const;
  std::string to_decimal(int digits) const;
  // canonical: "p/q + r/s*sqrt(D) + t/u/pi + v/w*sqrt(D)/pi"
  std::string str() const;
  // same terms, no spaces, a positive term leads when one exists: "sqrt(2)-1"
  std::string compact() const;
  static RingElem parse(const std::string& s);

  // {"radicand":D,"q":"p/q","sqrt":"r/s","inv_pi":"t/u","sqrt_inv_pi":"v/w"}
  std::string to_json() const;
  static RingElem from_json(const std::string& text);

 private:
  static int join_radicand(const RingElem& x, const RingElem& y);
  void canon();

  int d_ = 2;
  Rational a_, b_, c_, e_;
};

std::ostream& operator<<(std::ostream& os, const RingElem& x);

// sqrt of a pi-free element when it stays inside Q[sqrt d]
bool try_sqrt(const RingElem& x, RingElem& out);

class ComplexElem {
 public:
  ComplexElem() = default;
  ComplexElem(RingElem re, RingElem im = RingElem()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
  ComplexElem(long v) : re_(v) {}  // NOLINT
  static ComplexElem i() { return {RingElem(0), RingElem(1)}; }

  const RingElem& re() const { return re_; }
  const RingElem& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  ComplexElem conj() const { return {re_, -im_}; }
  ComplexElem operator-() const { return {-re_, -im_}; }
  ComplexElem& operator+=(const ComplexElem& o);
  ComplexElem& operator-=(const ComplexElem& o);
  ComplexElem& operator*=(const ComplexElem& o);
  ComplexElem& operator/=(const ComplexElem& o);
  friend ComplexElem operator+(ComplexElem x, const ComplexElem& y) { return x += y; }
  friend ComplexElem operator-(ComplexElem x, const ComplexElem& y) { return x -= y; }
  friend ComplexElem operator*(ComplexElem x, const ComplexElem& y) { return x *= y; }
  friend ComplexElem operator/(ComplexElem x, const ComplexElem& y) { return x /= y; }
  friend bool operator==(const ComplexElem& x, const ComplexElem& y) {
    return x.re_ == y.re_ && x.im_ == y.im_;
  }
  friend bool operator!=(const ComplexElem& x, const ComplexElem& y) { return !(x == y); }

  std::string str() const;

 private:
  RingElem re_, im_;
};

std::ostream& operator<<(std::ostream& os, const ComplexElem& x);

// Truncated Laurent series: coefficients for exponents lo .. order-1 are
// known; anything at or past order is unknown and reading it throws.
class Series {
 public:
  Series() = default;
  Series(int lo, std::vector<RingElem> coeffs, int order);
  static Series constant(const RingElem& c, int order);
  static Series poly(const std::vector<RingElem>& coeffs, int order);  // exponents from 0

  int lo() const { return lo_; }
  int order() const { return order_; }
  RingElem coeff(int k) const;
  std::vector<RingElem> coeffs() const;  // exponents 0 .. order-1

  Series truncate(int order) const;
  Series operator-() const;
  friend Series operator+(const Series& x, const Series& y);
  friend Series operator-(const Series& x, const Series& y);
  friend Series operator*(const Series& x, const Series& y);
  friend Series operator*(const RingElem& s, const Series& x);
  Series shift(int k) const;  // multiply by z^k
  Series div(const Series& unit) const;
  Series derivative() const;
  Series integrate() const;
  // this(inner(z)); inner must have no constant term
  Series compose(const Series& inner) const;

 private:
  int lo_ = 0;
  int order_ = 0;
  std::vector<RingElem> c_;  // c_[k - lo_]
};

// S with S^2 * base = 1 through order n (or base's own truncation)
Series series_sqrt_inv(const Series& base, int n);
Series series_sqrt(const Series& base, int n);

}  // namespace lgf
