#include "lgf/exact.hpp"

#include <mpfr.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <cctype>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace lgf {

const char* error_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::PiOverflow: return "PiOverflow";
    case ErrorKind::DivisorNotSupported: return "DivisorNotSupported";
    case ErrorKind::DivideByZero: return "DivideByZero";
    case ErrorKind::MixedRadicand: return "MixedRadicand";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::TruncationExceeded: return "TruncationExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::OnSlit: return "OnSlit";
    case ErrorKind::RecursionBudgetExceeded: return "RecursionBudgetExceeded";
    case ErrorKind::NonRealProbability: return "NonRealProbability";
    case ErrorKind::RemovedVertex: return "RemovedVertex";
    case ErrorKind::FillFailure: return "FillFailure";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::ConditioningTooRare: return "ConditioningTooRare";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
    throw Error(ErrorKind::ParseError, "bad rational '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(10); }

// ---------------------------------------------------------------- RingElem

RingElem RingElem::make(int d, Rational a, Rational b, Rational c, Rational e) {
  if (d != 2 && d != 3) throw Error(ErrorKind::InvalidArgument, "radicand must be 2 or 3");
  RingElem r;
  r.d_ = d;
  r.a_ = std::move(a);
  r.b_ = std::move(b);
  r.c_ = std::move(c);
  r.e_ = std::move(e);
  r.canon();
  return r;
}

void RingElem::canon() {
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
  e_.canonicalize();
}

RingElem RingElem::with_radicand(int d) const {
  if (!is_rational() && d != d_) throw Error(ErrorKind::MixedRadicand, "cannot retag " + str());
  RingElem r = *this;
  r.d_ = d;
  return r;
}

int RingElem::join_radicand(const RingElem& x, const RingElem& y) {
  if (x.is_rational()) return y.d_;
  if (y.is_rational()) return x.d_;
  if (x.d_ != y.d_)
    throw Error(ErrorKind::MixedRadicand,
                "sqrt(" + std::to_string(x.d_) + ") meets sqrt(" + std::to_string(y.d_) + ")");
  return x.d_;
}

RingElem RingElem::operator-() const {
  RingElem r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  r.c_ = -r.c_;
  r.e_ = -r.e_;
  return r;
}

RingElem& RingElem::operator+=(const RingElem& o) {
  d_ = join_radicand(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  e_ += o.e_;
  return *this;
}

RingElem& RingElem::operator-=(const RingElem& o) {
  d_ = join_radicand(*this, o);
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  e_ -= o.e_;
  return *this;
}

RingElem& RingElem::operator*=(const RingElem& o) {
  int d = join_radicand(*this, o);
  if (!pi_free() && !o.pi_free()) throw Error(ErrorKind::PiOverflow, "1/pi^2 term");
  // (x0 + x1 s) * (y0 + y1 s) with s^2 = d, applied to whichever side has the pi-part
  auto mul = [d](const Rational& x0, const Rational& x1, const Rational& y0, const Rational& y1,
                 Rational& r0, Rational& r1) {
    r0 = x0 * y0 + d * x1 * y1;
    r1 = x0 * y1 + x1 * y0;
  };
  Rational a, b, c, e;
  mul(a_, b_, o.a_, o.b_, a, b);
  if (!pi_free()) {
    mul(c_, e_, o.a_, o.b_, c, e);
  } else if (!o.pi_free()) {
    mul(a_, b_, o.c_, o.e_, c, e);
  }
  d_ = d;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ = std::move(c);
  e_ = std::move(e);
  return *this;
}

RingElem RingElem::inverse() const {
  if (!pi_free()) throw Error(ErrorKind::DivisorNotSupported, "divisor " + str() + " has a 1/pi part");
  if (is_zero()) throw Error(ErrorKind::DivideByZero, "division by zero");
  Rational n = a_ * a_ - d_ * b_ * b_;
  RingElem r;
  r.d_ = d_;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  r.canon();
  return r;
}

RingElem& RingElem::operator/=(const RingElem& o) {
  if (o.is_rational()) {
    if (sgn(o.a_) == 0) throw Error(ErrorKind::DivideByZero, "division by zero");
    a_ /= o.a_;
    b_ /= o.a_;
    c_ /= o.a_;
    e_ /= o.a_;
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const RingElem& x, const RingElem& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_ || x.c_ != y.c_ || x.e_ != y.e_) return false;
  return x.is_rational() || x.d_ == y.d_;
}

RingElem RingElem::pow(unsigned k) const {
  RingElem r(1L);
  r.d_ = d_;
  RingElem base = *this;
  while (k) {
    if (k & 1u) r *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return r;
}

namespace {

struct Mpfr {
  mpfr_t v;
  explicit Mpfr(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
};

void set_q(mpfr_t out, const Rational& q) { mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN); }

// a + b s + (c + e s)/pi to `keep` significant bits.  The parts can be huge and
// cancel, so the working precision grows until the loss is covered.
void evaluate(mpfr_t out, int d, const Rational& a, const Rational& b, const Rational& c, const Rational& e,
              mpfr_prec_t keep) {
  mpfr_prec_t bits = keep + 64;
  for (const Rational* q : {&a, &b, &c, &e})
    bits = std::max<mpfr_prec_t>(bits, keep + 64 + static_cast<mpfr_prec_t>(mpz_sizeinbase(q->get_num_mpz_t(), 2)));
  for (;;) {
    Mpfr s(bits), pi(bits), t(bits), acc(bits), tail(bits);
    mpfr_sqrt_ui(s.v, static_cast<unsigned long>(d), MPFR_RNDN);
    mpfr_const_pi(pi.v, MPFR_RNDN);
    set_q(acc.v, a);
    set_q(t.v, b);
    mpfr_mul(t.v, t.v, s.v, MPFR_RNDN);
    long top = mpfr_zero_p(acc.v) ? LONG_MIN : mpfr_get_exp(acc.v);
    if (!mpfr_zero_p(t.v)) top = std::max<long>(top, mpfr_get_exp(t.v));
    mpfr_add(acc.v, acc.v, t.v, MPFR_RNDN);
    set_q(tail.v, c);
    set_q(t.v, e);
    mpfr_mul(t.v, t.v, s.v, MPFR_RNDN);
    if (!mpfr_zero_p(tail.v)) top = std::max<long>(top, mpfr_get_exp(tail.v));
    if (!mpfr_zero_p(t.v)) top = std::max<long>(top, mpfr_get_exp(t.v));
    mpfr_add(tail.v, tail.v, t.v, MPFR_RNDN);
    mpfr_div(tail.v, tail.v, pi.v, MPFR_RNDN);
    mpfr_add(acc.v, acc.v, tail.v, MPFR_RNDN);
    const bool exact_zero = sgn(a) == 0 && sgn(b) == 0 && sgn(c) == 0 && sgn(e) == 0;
    if (exact_zero || top == LONG_MIN ||
        (!mpfr_zero_p(acc.v) && top - mpfr_get_exp(acc.v) + keep + 32 < bits)) {
      mpfr_set_prec(out, keep);
      mpfr_set(out, acc.v, MPFR_RNDN);
      return;
    }
    bits *= 2;
  }
}

}  // namespace

double RingElem::to_double() const {
  Mpfr v(64);
  evaluate(v.v, d_, a_, b_, c_, e_, 64);
  return mpfr_get_d(v.v, MPFR_RNDN);
}

std::string RingElem::to_decimal(int digits) const {
  if (digits < 1) digits = 1;
  Mpfr acc(64);
  // enough significant bits for the integer part and the requested digits
  const mpfr_prec_t keep = static_cast<mpfr_prec_t>(digits * 3.33) + 64;
  evaluate(acc.v, d_, a_, b_, c_, e_, keep + 64);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rf", digits, acc.v);
  std::string out(buf);
  mpfr_free_str(buf);
  if (out[0] == '-' && out.find_first_not_of("-0.") == std::string::npos) out.erase(0, 1);
  return out;
}

namespace {

struct Term {
  Rational coef;
  std::string unit;  // "", "sqrt(D)", "/pi", "sqrt(D)/pi"
};

std::vector<Term> terms_of(const RingElem& x) {
  std::vector<Term> t;
  const std::string rt = "sqrt(" + std::to_string(x.radicand()) + ")";
  if (sgn(x.q()) != 0) t.push_back({x.q(), ""});
  if (sgn(x.sq()) != 0) t.push_back({x.sq(), rt});
  if (sgn(x.ipi()) != 0) t.push_back({x.ipi(), "/pi"});
  if (sgn(x.sqipi()) != 0) t.push_back({x.sqipi(), rt + "/pi"});
  return t;
}

// magnitude only; sign handled by the caller
std::string term_body(const Rational& mag, const std::string& unit) {
  if (unit.empty()) return rational_str(mag);
  if (unit == "/pi") return rational_str(mag) + "/pi";
  // unit is sqrt(D) or sqrt(D)/pi
  if (mag == 1) return unit;
  return rational_str(mag) + "*" + unit;
}

std::string render(std::vector<Term> t, bool spaced, bool positive_first) {
  if (t.empty()) return "0";
  if (positive_first && sgn(t[0].coef) < 0) {
    auto it = std::find_if(t.begin(), t.end(), [](const Term& x) { return sgn(x.coef) > 0; });
    if (it != t.end()) std::rotate(t.begin(), it, it + 1);
  }
  std::string out;
  for (size_t i = 0; i < t.size(); ++i) {
    Rational mag = abs(t[i].coef);
    bool neg = sgn(t[i].coef) < 0;
    if (i == 0) {
      if (neg) out += "-";
    } else if (spaced) {
      out += neg ? " - " : " + ";
    } else {
      out += neg ? "-" : "+";
    }
    out += term_body(mag, t[i].unit);
  }
  return out;
}

}  // namespace

std::string RingElem::str() const { return render(terms_of(*this), true, false); }
std::string RingElem::compact() const { return render(terms_of(*this), false, true); }

std::ostream& operator<<(std::ostream& os, const RingElem& x) { return os << x.str(); }

namespace {

// term := factor (('*'|'/') factor)* ; factor := INT | sqrt(INT) | pi
class Parser {
 public:
  explicit Parser(std::string s) {
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  RingElem run() {
    if (s_.empty()) fail("empty");
    Rational a, b, c, e;
    int d = 0;
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected + or -");
      }
      first = false;
      Rational coef = sign;
      int sqrt_pow = 0, pi_pow = 0, rd = 0;
      bool divide = false;
      for (;;) {
        factor(coef, sqrt_pow, pi_pow, rd, divide);
        if (pos_ < s_.size() && (peek() == '*' || peek() == '/')) {
          divide = peek() == '/';
          ++pos_;
          continue;
        }
        break;
      }
      if (pi_pow != 0 && pi_pow != -1) fail("pi must appear once, in a denominator");
      if (sqrt_pow != 0 && sqrt_pow != 1) fail("unreduced sqrt power");
      if (rd) {
        if (d && d != rd) throw Error(ErrorKind::MixedRadicand, "two radicands in '" + s_ + "'");
        d = rd;
      }
      if (sqrt_pow == 0 && pi_pow == 0) a += coef;
      else if (sqrt_pow == 1 && pi_pow == 0) b += coef;
      else if (sqrt_pow == 0) c += coef;
      else e += coef;
    }
    return RingElem::make(d ? d : 2, a, b, c, e);
  }

 private:
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorKind::ParseError, why + " in '" + s_ + "' at " + std::to_string(pos_));
  }

  long integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  Rational big_integer() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return parse_rational(s_.substr(start, pos_ - start));
  }

  void factor(Rational& coef, int& sqrt_pow, int& pi_pow, int& rd, bool divide) {
    if (s_.compare(pos_, 5, "sqrt(") == 0) {
      pos_ += 5;
      long d = integer();
      if (pos_ >= s_.size() || peek() != ')') fail("expected )");
      ++pos_;
      if (d != 2 && d != 3) fail("radicand must be 2 or 3");
      if (rd && rd != d) throw Error(ErrorKind::MixedRadicand, "two radicands in '" + s_ + "'");
      rd = static_cast<int>(d);
      if (divide) {
        // 1/sqrt(d) = sqrt(d)/d
        coef /= d;
      }
      sqrt_pow += 1;
      if (sqrt_pow == 2) {
        coef *= d;
        sqrt_pow = 0;
      }
      return;
    }
    if (s_.compare(pos_, 2, "pi") == 0) {
      pos_ += 2;
      pi_pow += divide ? -1 : 1;
      return;
    }
    Rational v = big_integer();
    if (divide) {
      if (sgn(v) == 0) throw Error(ErrorKind::DivideByZero, "zero denominator in '" + s_ + "'");
      coef /= v;
    } else {
      coef *= v;
    }
  }

  std::string s_;
  size_t pos_ = 0;
};

}  // namespace

RingElem RingElem::parse(const std::string& s) { return Parser(s).run(); }

std::string RingElem::to_json() const {
  nlohmann::json j = {{"radicand", d_},
                      {"q", rational_str(a_)},
                      {"sqrt", rational_str(b_)},
                      {"inv_pi", rational_str(c_)},
                      {"sqrt_inv_pi", rational_str(e_)}};
  return j.dump();
}

RingElem RingElem::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorKind::ParseError, ex.what());
  }
  auto field = [&](const char* k) -> Rational {
    if (!j.contains(k)) return 0;
    return parse_rational(j.at(k).get<std::string>());
  };
  int d = j.value("radicand", 2);
  return make(d, field("q"), field("sqrt"), field("inv_pi"), field("sqrt_inv_pi"));
}

namespace {

bool rational_sqrt(const Rational& q, Rational& out) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num(), d = q.get_den();
  mpz_class rn = sqrt(n), rd = sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  out = Rational(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace

bool try_sqrt(const RingElem& x, RingElem& out) {
  if (!x.pi_free()) return false;
  const int d = x.radicand();
  Rational r;
  if (x.is_rational()) {
    if (rational_sqrt(x.q(), r)) {
      out = RingElem(r, d);
      return true;
    }
    // q = d * s^2  ->  s*sqrt(d)
    for (int dd : {2, 3}) {
      if (rational_sqrt(x.q() / dd, r)) {
        out = RingElem::make(dd, 0, r);
        return true;
      }
    }
    return false;
  }
  // (u + v s)^2 = a + b s  ->  u^2 = (a +- sqrt(a^2 - d b^2)) / 2
  Rational disc = x.q() * x.q() - d * x.sq() * x.sq();
  Rational n;
  if (!rational_sqrt(disc, n)) return false;
  for (int sgn_ : {1, -1}) {
    Rational u2 = (x.q() + sgn_ * n) / 2, u;
    if (sgn(u2) <= 0 || !rational_sqrt(u2, u)) continue;
    Rational v = x.sq() / (2 * u);
    v.canonicalize();
    out = RingElem::make(d, u, v);
    return true;
  }
  return false;
}

// ---------------------------------------------------------------- Complex

ComplexElem& ComplexElem::operator+=(const ComplexElem& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexElem& ComplexElem::operator-=(const ComplexElem& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexElem& ComplexElem::operator*=(const ComplexElem& o) {
  RingElem r = re_ * o.re_ - im_ * o.im_;
  RingElem i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

ComplexElem& ComplexElem::operator/=(const ComplexElem& o) {
  RingElem n = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string ComplexElem::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im = "(" + im_.str() + ")*i";
  if (re_.is_zero()) return im;
  return re_.str() + " + " + im;
}

std::ostream& operator<<(std::ostream& os, const ComplexElem& x) { return os << x.str(); }

// ---------------------------------------------------------------- Series

Series::Series(int lo, std::vector<RingElem> coeffs, int order) : lo_(lo), order_(order) {
  if (order < lo) order_ = lo;
  coeffs.resize(static_cast<size_t>(order_ - lo_));
  c_ = std::move(coeffs);
}

Series Series::constant(const RingElem& c, int order) { return Series(0, {c}, order); }

Series Series::poly(const std::vector<RingElem>& coeffs, int order) { return Series(0, coeffs, order); }

RingElem Series::coeff(int k) const {
  if (k >= order_)
    throw Error(ErrorKind::TruncationExceeded,
                "coefficient " + std::to_string(k) + " at or past order " + std::to_string(order_));
  if (k < lo_) return RingElem();
  return c_[static_cast<size_t>(k - lo_)];
}

std::vector<RingElem> Series::coeffs() const {
  std::vector<RingElem> out;
  for (int k = 0; k < order_; ++k) out.push_back(coeff(k));
  return out;
}

Series Series::truncate(int order) const {
  int n = std::min(order, order_);
  std::vector<RingElem> c;
  for (int k = lo_; k < n; ++k) c.push_back(coeff(k));
  return Series(lo_, c, n);
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

namespace {

Series combine(const Series& x, const Series& y, int sign) {
  int lo = std::min(x.lo(), y.lo());
  int n = std::min(x.order(), y.order());
  std::vector<RingElem> c;
  for (int k = lo; k < n; ++k) {
    RingElem v = k < x.order() ? x.coeff(k) : RingElem();
    RingElem w = k < y.order() ? y.coeff(k) : RingElem();
    c.push_back(sign > 0 ? v + w : v - w);
  }
  return Series(lo, c, n);
}

}  // namespace

Series operator+(const Series& x, const Series& y) { return combine(x, y, 1); }
Series operator-(const Series& x, const Series& y) { return combine(x, y, -1); }

Series operator*(const Series& x, const Series& y) {
  // x = z^lx (known through order ox); first unknown term of the product sits at
  // min(ox + ly, oy + lx)
  int lo = x.lo() + y.lo();
  int n = std::min(x.order() + y.lo(), y.order() + x.lo());
  std::vector<RingElem> c(static_cast<size_t>(std::max(0, n - lo)));
  for (int i = x.lo(); i < x.order(); ++i) {
    const RingElem xi = x.coeff(i);
    if (xi.is_zero()) continue;
    for (int j = y.lo(); j < y.order() && i + j < n; ++j) {
      const RingElem yj = y.coeff(j);
      if (yj.is_zero()) continue;
      c[static_cast<size_t>(i + j - lo)] += xi * yj;
    }
  }
  return Series(lo, c, n);
}

Series operator*(const RingElem& s, const Series& x) {
  Series r = x;
  for (auto& v : r.c_) v = s * v;
  return r;
}

Series Series::shift(int k) const {
  Series r = *this;
  r.lo_ += k;
  r.order_ += k;
  return r;
}

Series Series::div(const Series& unit) const {
  // leading coefficient of the divisor must be invertible
  int ul = unit.lo();
  while (ul < unit.order() && unit.coeff(ul).is_zero()) ++ul;
  if (ul >= unit.order()) throw Error(ErrorKind::DivideByZero, "series divisor vanishes to its order");
  const RingElem inv0 = unit.coeff(ul).inverse();
  int lo = lo_ - ul;
  int n = std::min(order_ - ul, unit.order() - ul + lo);
  std::vector<RingElem> q;
  for (int k = lo; k < n; ++k) {
    RingElem acc = (k + ul < order_) ? coeff(k + ul) : RingElem();
    for (int j = lo; j < k; ++j) {
      int ui = k - j + ul;
      if (ui < unit.order()) acc -= q[static_cast<size_t>(j - lo)] * unit.coeff(ui);
    }
    q.push_back(acc * inv0);
  }
  return Series(lo, q, n);
}

Series Series::derivative() const {
  std::vector<RingElem> c;
  for (int k = lo_; k < order_; ++k) c.push_back(coeff(k) * RingElem(static_cast<long>(k)));
  return Series(lo_ - 1, c, order_ - 1);
}

Series Series::integrate() const {
  std::vector<RingElem> c;
  for (int k = lo_; k < order_; ++k) {
    if (k == -1) {
      if (!coeff(k).is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot integrate z^-1");
      c.push_back(RingElem());
      continue;
    }
    c.push_back(coeff(k) / RingElem(static_cast<long>(k + 1)));
  }
  return Series(lo_ + 1, c, order_ + 1);
}

Series Series::compose(const Series& inner) const {
  if (lo_ < 0) throw Error(ErrorKind::InvalidArgument, "compose needs an outer power series");
  int il = inner.lo();
  while (il < inner.order() && inner.coeff(il).is_zero()) ++il;
  if (il < 1) throw Error(ErrorKind::InvalidArgument, "inner series must have zero constant term");
  // outer terms up to order_-1 are known; an unknown outer term z^order_ lands at il*order_
  int n = inner.order();
  if (il < inner.order()) n = std::min(n, il * order_);
  Series acc(0, {}, n);
  Series power = Series::constant(RingElem(1L), n);
  for (int k = 0; k < order_; ++k) {
    if (k > 0) power = (power * inner).truncate(n);
    if (k * il >= n) break;
    const RingElem ck = coeff(k);
    if (!ck.is_zero()) acc = acc + ck * power;
  }
  return acc.truncate(n);
}

Series series_sqrt_inv(const Series& base, int n) {
  if (base.lo() != 0) throw Error(ErrorKind::BadConstantTerm, "base must start at z^0");
  n = std::min(n, base.order());
  const RingElem b0 = base.coeff(0);
  RingElem r0;
  if (b0.is_zero() || !try_sqrt(b0, r0))
    throw Error(ErrorKind::BadConstantTerm, "no square root of " + b0.str() + " in the ring");
  // 2 b S' + b' S = 0:  s_n = -sum_{k>=1} b_k s_{n-k} (2n - k) / (2 n b0)
  std::vector<RingElem> s{r0.inverse()};
  const RingElem inv_b0 = b0.inverse();
  for (int m = 1; m < n; ++m) {
    RingElem acc;
    for (int k = 1; k <= m; ++k) {
      const RingElem bk = base.coeff(k);
      if (bk.is_zero()) continue;
      acc += bk * s[static_cast<size_t>(m - k)] * RingElem(static_cast<long>(2 * m - k));
    }
    s.push_back(-acc * inv_b0 / RingElem(static_cast<long>(2 * m)));
  }
  return Series(0, s, n);
}

Series series_sqrt(const Series& base, int n) {
  n = std::min(n, base.order());
  return (base * series_sqrt_inv(base, n)).truncate(n);
}

}  // namespace lgf
