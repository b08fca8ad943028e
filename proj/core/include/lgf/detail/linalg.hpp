#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

#include "lgf/exact.hpp"

namespace lgf::detail {

struct GaussInt {
  mpz_class re, im;
  GaussInt() = default;
  GaussInt(long r, long i = 0) : re(r), im(i) {}  // NOLINT
  GaussInt(mpz_class r, mpz_class i) : re(std::move(r)), im(std::move(i)) {}
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussInt conj() const { return {re, -im}; }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
};

GaussInt operator+(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a, const GaussInt& b);
GaussInt operator*(const GaussInt& a, const GaussInt& b);
GaussInt operator-(const GaussInt& a);
// exact quotient; the caller guarantees divisibility
GaussInt divexact(const GaussInt& a, const GaussInt& b);

ComplexElem to_complex(const GaussInt& num, const GaussInt& den);

using GaussMatrix = std::vector<std::vector<GaussInt>>;

// Fraction-free elimination.  Returns d and Y with A X = B, X = Y / d, where
// |d| = |det A|; det carries the sign.  Throws Singular.
struct BareissResult {
  GaussInt det;
  GaussInt d;
  std::vector<std::vector<GaussInt>> y;  // y[column][row]
};
BareissResult bareiss_solve(GaussMatrix a, const std::vector<std::vector<GaussInt>>& rhs_cols);
GaussInt bareiss_det(GaussMatrix a);

// Symmetric integer matrix, rows as (column, value) lists.  Ordered so that the
// bandwidth max |i - j| stays small.
struct SparseSym {
  int n = 0;
  std::vector<std::vector<std::pair<int, long>>> rows;
  int bandwidth() const;
};

bool rational_reconstruct(const mpz_class& u, const mpz_class& m, const mpz_class& bound, Rational& out);

// Exact solve of A x = rhs by p-adic lifting from a banded LDL^T factorisation
// mod a 26-bit prime.  The lifting length comes from the Hadamard bound, so the
// result is certified.
class DixonSolver {
 public:
  explicit DixonSolver(SparseSym a);
  std::vector<Rational> solve(const std::vector<long>& rhs, const std::vector<int>& wanted) const;
  int n() const { return a_.n; }
  uint32_t prime() const { return p_; }

 private:
  bool factor(uint32_t p);
  void solve_mod(const std::vector<uint32_t>& r, std::vector<uint32_t>& x) const;

  SparseSym a_;
  int b_ = 0;
  uint32_t p_ = 0;
  double log2_hadamard_ = 0;
  std::vector<uint32_t> nl_;   // p - L(i, i-b+k)
  std::vector<uint32_t> nlt_;  // p - L(i+1+k, i)
  std::vector<uint32_t> inv_d_;
};

}  // namespace lgf::detail
