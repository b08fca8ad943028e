#include "lgf/detail/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace lgf::detail {

GaussInt operator+(const GaussInt& a, const GaussInt& b) { return {a.re + b.re, a.im + b.im}; }
GaussInt operator-(const GaussInt& a, const GaussInt& b) { return {a.re - b.re, a.im - b.im}; }
GaussInt operator-(const GaussInt& a) { return {-a.re, -a.im}; }
GaussInt operator*(const GaussInt& a, const GaussInt& b) {
  if (sgn(a.im) == 0 && sgn(b.im) == 0) return {a.re * b.re, 0};
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt divexact(const GaussInt& a, const GaussInt& b) {
  if (b.is_zero()) throw Error(ErrorKind::DivideByZero, "gaussian division");
  if (sgn(b.im) == 0) {
    mpz_class r, i;
    mpz_divexact(r.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(i.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return {r, i};
  }
  GaussInt t = a * b.conj();
  mpz_class nrm = b.re * b.re + b.im * b.im;
  mpz_divexact(t.re.get_mpz_t(), t.re.get_mpz_t(), nrm.get_mpz_t());
  mpz_divexact(t.im.get_mpz_t(), t.im.get_mpz_t(), nrm.get_mpz_t());
  return t;
}

ComplexElem to_complex(const GaussInt& num, const GaussInt& den) {
  if (den.is_zero()) throw Error(ErrorKind::DivideByZero, "gaussian quotient");
  GaussInt t = num * den.conj();
  mpz_class nrm = den.re * den.re + den.im * den.im;
  Rational re(t.re, nrm), im(t.im, nrm);
  re.canonicalize();
  im.canonicalize();
  return {RingElem(re), RingElem(im)};
}

namespace {

// forward pass on [A | B]; returns the sign of the row permutation
int bareiss_forward(GaussMatrix& m, size_t n) {
  int sign = 1;
  GaussInt prev(1);
  const size_t width = m.empty() ? 0 : m[0].size();
  for (size_t k = 0; k < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) throw Error(ErrorKind::Singular, "zero pivot in column " + std::to_string(k));
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    const GaussInt& pk = m[k][k];
    for (size_t i = k + 1; i < n; ++i) {
      const GaussInt aik = m[i][k];
      for (size_t j = k + 1; j < width; ++j) {
        GaussInt t = pk * m[i][j];
        if (!aik.is_zero() && !m[k][j].is_zero()) t = t - aik * m[k][j];
        m[i][j] = divexact(t, prev);
      }
      m[i][k] = GaussInt(0);
    }
    prev = pk;
  }
  return sign;
}

}  // namespace

BareissResult bareiss_solve(GaussMatrix a, const std::vector<std::vector<GaussInt>>& rhs_cols) {
  const size_t n = a.size();
  for (size_t i = 0; i < n; ++i)
    for (const auto& col : rhs_cols) a[i].push_back(col[i]);
  const int sign = bareiss_forward(a, n);
  BareissResult out;
  out.d = n ? a[n - 1][n - 1] : GaussInt(1);
  out.det = sign > 0 ? out.d : -out.d;
  for (size_t c = 0; c < rhs_cols.size(); ++c) {
    std::vector<GaussInt> y(n);
    // a'_ii * y_i = d * b'_i - sum_{j>i} a'_ij y_j, exact in Z[i]
    for (size_t ii = n; ii-- > 0;) {
      GaussInt s = out.d * a[ii][n + c];
      for (size_t j = ii + 1; j < n; ++j)
        if (!a[ii][j].is_zero()) s = s - a[ii][j] * y[j];
      y[ii] = divexact(s, a[ii][ii]);
    }
    out.y.push_back(std::move(y));
  }
  return out;
}

GaussInt bareiss_det(GaussMatrix a) {
  const size_t n = a.size();
  if (n == 0) return GaussInt(1);
  try {
    const int sign = bareiss_forward(a, n);
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Singular) return GaussInt(0);
    throw;
  }
}

int SparseSym::bandwidth() const {
  int b = 0;
  for (int i = 0; i < n; ++i)
    for (const auto& [j, v] : rows[i]) b = std::max(b, std::abs(i - j));
  return b;
}

bool rational_reconstruct(const mpz_class& u, const mpz_class& m, const mpz_class& bound, Rational& out) {
  mpz_class r0 = m, r1 = u % m, t0 = 0, t1 = 1, q, tmp;
  if (r1 < 0) r1 += m;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (sgn(t1) == 0 || abs(t1) > bound) return false;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return false;
  out = Rational(r1, t1);
  out.canonicalize();
  return true;
}

namespace {

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline uint32_t mod_of(long v, uint32_t p) {
  long r = v % static_cast<long>(p);
  return static_cast<uint32_t>(r < 0 ? r + p : r);
}

}  // namespace

DixonSolver::DixonSolver(SparseSym a) : a_(std::move(a)) {
  b_ = std::max(1, a_.bandwidth());
  for (const auto& row : a_.rows) {
    double s = 0;
    for (const auto& [j, v] : row) s += static_cast<double>(v) * static_cast<double>(v);
    if (s > 0) log2_hadamard_ += 0.5 * std::log2(s);
  }
  uint32_t p = (1u << 26) - 1;
  for (int tries = 0; tries < 64; ++tries) {
    while (!is_prime(p)) --p;
    if (factor(p)) {
      p_ = p;
      return;
    }
    --p;
  }
  throw Error(ErrorKind::Singular, "no prime gave a nonzero pivot sequence");
}

bool DixonSolver::factor(uint32_t p) {
  const int n = a_.n, b = b_;
  nl_.assign(static_cast<size_t>(n) * b, 0);
  std::vector<uint32_t> w(static_cast<size_t>(n) * b, 0);  // D(j) L(i,j)
  std::vector<uint32_t> d(n);
  inv_d_.assign(n, 0);
  std::vector<uint32_t> arow(b + 1);
  for (int i = 0; i < n; ++i) {
    std::fill(arow.begin(), arow.end(), 0);
    uint32_t diag = 0;
    for (const auto& [j, v] : a_.rows[i]) {
      if (j == i) diag = mod_of(v, p);
      else if (j < i) arow[j - (i - b)] = mod_of(v, p);
    }
    uint32_t* li = &nl_[static_cast<size_t>(i) * b];
    uint32_t* wi = &w[static_cast<size_t>(i) * b];
    const int j0 = std::max(0, i - b);
    for (int j = j0; j < i; ++j) {
      // sum_{k in [j0, j)} L(i,k) W(j,k); li holds p - L, so this accumulates -sum
      uint64_t acc = arow[j - (i - b)];
      const uint32_t* wj = &w[static_cast<size_t>(j) * b];
      for (int k = j0; k < j; ++k) acc += static_cast<uint64_t>(li[k - (i - b)]) * wj[k - (j - b)];
      const uint32_t s = static_cast<uint32_t>(acc % p);
      wi[j - (i - b)] = s;
      const uint32_t l = static_cast<uint32_t>(static_cast<uint64_t>(s) * inv_d_[j] % p);
      li[j - (i - b)] = l ? p - l : 0;
    }
    uint64_t acc = diag;
    for (int k = j0; k < i; ++k) acc += static_cast<uint64_t>(li[k - (i - b)]) * wi[k - (i - b)];
    d[i] = static_cast<uint32_t>(acc % p);
    if (d[i] == 0) return false;
    inv_d_[i] = static_cast<uint32_t>(powmod(d[i], p - 2, p));
  }
  nlt_.assign(static_cast<size_t>(n) * b, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < b; ++k) {
      const int r = i + 1 + k;
      if (r < n) nlt_[static_cast<size_t>(i) * b + k] = nl_[static_cast<size_t>(r) * b + (i - (r - b))];
    }
  return true;
}

void DixonSolver::solve_mod(const std::vector<uint32_t>& r, std::vector<uint32_t>& x) const {
  const int n = a_.n, b = b_;
  const uint64_t p = p_;
  // padded by b zeros on each side
  std::vector<uint32_t> y(static_cast<size_t>(n) + 2 * b, 0);
  for (int i = 0; i < n; ++i) {
    const uint32_t* li = &nl_[static_cast<size_t>(i) * b];
    const uint32_t* yi = &y[i];  // y[i + k] is unknown i - b + k
    uint64_t acc = r[i];
    for (int k = 0; k < b; ++k) acc += static_cast<uint64_t>(li[k]) * yi[k];
    y[i + b] = static_cast<uint32_t>(acc % p);
  }
  for (int i = 0; i < n; ++i) y[i + b] = static_cast<uint32_t>(static_cast<uint64_t>(y[i + b]) * inv_d_[i] % p);
  for (int i = n - 1; i >= 0; --i) {
    const uint32_t* lt = &nlt_[static_cast<size_t>(i) * b];
    const uint32_t* xi = &y[i + b + 1];
    uint64_t acc = y[i + b];
    for (int k = 0; k < b; ++k) acc += static_cast<uint64_t>(lt[k]) * xi[k];
    y[i + b] = static_cast<uint32_t>(acc % p);
  }
  x.assign(y.begin() + b, y.begin() + b + n);
}

std::vector<Rational> DixonSolver::solve(const std::vector<long>& rhs, const std::vector<int>& wanted) const {
  const int n = a_.n;
  double rhs_norm = 0;
  for (long v : rhs) rhs_norm += static_cast<double>(v) * static_cast<double>(v);
  if (rhs_norm == 0) return std::vector<Rational>(wanted.size());
  // |num| <= H |rhs|, |den| <= H; need p^K > 2 |num| |den|
  const double need = 2 * log2_hadamard_ + 0.5 * std::log2(rhs_norm) + 4;
  const int steps = static_cast<int>(std::ceil(need / std::log2(static_cast<double>(p_))));

  std::vector<long> r = rhs;
  std::vector<uint32_t> rm(n), x;
  std::vector<std::vector<uint32_t>> digits(wanted.size(), std::vector<uint32_t>(steps));
  for (int s = 0; s < steps; ++s) {
    for (int i = 0; i < n; ++i) rm[i] = mod_of(r[i], p_);
    solve_mod(rm, x);
    for (size_t k = 0; k < wanted.size(); ++k) digits[k][s] = x[wanted[k]];
    for (int i = 0; i < n; ++i) {
      long acc = r[i];
      for (const auto& [j, v] : a_.rows[i]) acc -= v * static_cast<long>(x[j]);
      r[i] = acc / static_cast<long>(p_);
    }
  }

  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), p_, steps);
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  std::vector<Rational> out(wanted.size());
  mpz_class den = 1;
  for (size_t k = 0; k < wanted.size(); ++k) {
    mpz_class u = 0;
    for (int s = steps - 1; s >= 0; --s) {
      u *= p_;
      u += digits[k][s];
    }
    // reuse the last denominator when it already clears this entry
    mpz_class t = (u * den) % m;
    if (t > half) t -= m;
    if (abs(t) <= bound) {
      out[k] = Rational(t, den);
      out[k].canonicalize();
      continue;
    }
    if (!rational_reconstruct(u, m, bound, out[k]))
      throw Error(ErrorKind::Singular, "rational reconstruction failed");
    den = out[k].get_den();
  }
  return out;
}

}  // namespace lgf::detail
