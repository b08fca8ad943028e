#include "lgf/slit_square.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

namespace lgf {

namespace {

void require_half_plane(Pt p) {
  if (p.y < 0 || ((p.x + p.y) & 1) != 0)
    throw Error(ErrorKind::InvalidArgument, "not a half-plane point " + p.str());
}

// binom(2k,k)/4^k
Rational central(int k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * k), static_cast<unsigned long>(k));
  Rational r(c, 1);
  r /= Rational(mpz_class(1) << (2 * k));
  r.canonicalize();
  return r;
}

const RingElem& root2() {
  static const RingElem r = RingElem::sqrt(2);
  return r;
}

}  // namespace

Series c_series(int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "c_series needs N >= 1");
  Series base = Series::poly({RingElem(1L), RingElem(), RingElem(-1L)}, N + 1);
  return series_sqrt(base, N + 1);
}

Series v_series(int N) {
  std::vector<RingElem> c(static_cast<size_t>(N + 1));
  for (int k = 0; 2 * k <= N; ++k) c[2 * k] = RingElem(central(k));
  return Series::poly(c, N + 1);
}

RingElem GHTable::at(HalfPlanePoint p) {
  require_half_plane(p);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return get(p.x, p.y);
}

RingElem GHTable::get(int x, int y) {
  auto it = memo_.find({x, y});
  if (it != memo_.end()) return it->second;
  RingElem v = compute(x, y);
  memo_.emplace(Pt{x, y}, v);
  return v;
}

RingElem GHTable::compute(int x, int y) {
  if (y == 0) return x >= 0 ? RingElem(central(x / 2)) : RingElem();
  if (x == 0) return root2() * get(y - 2, 0) - get(0, y - 2);  // G(0,y-2) + G(0,y) = sqrt2 G(y-2,0)
  if (x == -1) return get(0, y + 1);
  if (x >= 1) {
    if (y == 1) {
      if (x == 1) return RingElem::make(2, 2, -1);
      return RingElem(2L) * get(x - 1, 0) - get(x - 2, 1);
    }
    return RingElem(4L) * get(x - 1, y - 1) - get(x - 2, y - 2) - get(x - 2, y) - get(x, y - 2);
  }
  // west of the slit end: duality relation marched from x = -1
  return get(x + 1, y + 1) + get(-x - 1, y + 1) - get(-x - 2, y);
}

GHTable& default_gh() {
  static GHTable t;
  return t;
}

RingElem gh(HalfPlanePoint p) { return default_gh().at(p); }

namespace {

// Bivariate power series truncated to exponents < m in each variable.
struct Box {
  int m;
  std::vector<RingElem> c;
  explicit Box(int m_) : m(m_), c(static_cast<size_t>(m_ * m_)) {}
  RingElem& at(int i, int j) { return c[static_cast<size_t>(i * m + j)]; }
  const RingElem& at(int i, int j) const { return c[static_cast<size_t>(i * m + j)]; }
  void add(int i, int j, const RingElem& v) {
    if (i < m && j < m) at(i, j) += v;
  }
};

Box mul(const Box& a, const Box& b) {
  Box r(a.m);
  for (int i = 0; i < a.m; ++i)
    for (int j = 0; j < a.m; ++j) {
      const RingElem& x = a.at(i, j);
      if (x.is_zero()) continue;
      for (int k = 0; k + i < a.m; ++k)
        for (int l = 0; l + j < a.m; ++l) {
          const RingElem& y = b.at(k, l);
          if (!y.is_zero()) r.at(i + k, j + l) += x * y;
        }
    }
  return r;
}

Box inverse(const Box& d) {
  Box r(d.m);
  const RingElem c0 = d.at(0, 0).inverse();
  for (int n = 0; n < d.m; ++n)
    for (int k = 0; k < d.m; ++k) {
      RingElem s = (n == 0 && k == 0) ? RingElem(1L) : RingElem();
      for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= k; ++j) {
          if (i == 0 && j == 0) continue;
          const RingElem& x = d.at(i, j);
          if (!x.is_zero()) s -= x * r.at(n - i, k - j);
        }
      r.at(n, k) = s * c0;
    }
  return r;
}

// -1 + 4zw - z^2 - w^2 - z^2 w^2, the same in (t, w) for the west function
Box denominator(int m) {
  Box d(m);
  d.add(0, 0, RingElem(-1L));
  d.add(1, 1, RingElem(4L));
  d.add(2, 0, RingElem(-1L));
  d.add(0, 2, RingElem(-1L));
  d.add(2, 2, RingElem(-1L));
  return d;
}

Box north_gf(int m) {
  Box n(m);
  for (int k = 0; 2 * k < m + 2; ++k) {
    const RingElem c(central(k));
    // sqrt2 (zw - w^2) / sqrt(1 - w^2)
    n.add(1, 1 + 2 * k, root2() * c);
    n.add(0, 2 + 2 * k, -(root2() * c));
    // (2zw - z^2 - 1) / sqrt(1 - z^2)
    n.add(2 * k + 1, 1, RingElem(2L) * c);
    n.add(2 * k + 2, 0, -c);
    n.add(2 * k, 0, -c);
  }
  return mul(n, inverse(denominator(m)));
}

Box west_gf(int m) {
  Box n(m);
  const Series sq = series_sqrt(Series::poly({RingElem(1L), RingElem(), RingElem(-1L)}, m + 2), m + 2);
  for (int k = 0; 2 * k < m + 2; ++k) {
    const RingElem c(central(k));
    // sqrt2 t w (w t - 1) / sqrt(1 - w^2)
    n.add(2, 2 + 2 * k, root2() * c);
    n.add(1, 1 + 2 * k, -(root2() * c));
    // t w sqrt(1 - t^2)
    n.add(1 + 2 * k, 1, sq.coeff(2 * k));
  }
  return mul(n, inverse(denominator(m)));
}

struct GfCache {
  std::mutex mu;
  std::map<bool, Box> boxes;  // keyed by west?
};

GfCache& gf_cache() {
  static GfCache c;
  return c;
}

}  // namespace

RingElem quadrant_gf_value(HalfPlanePoint p, int order) {
  require_half_plane(p);
  const int need = std::max(std::abs(p.x), p.y) + 1;
  if (order == 0) order = need + 3;
  if (need > order)
    throw Error(ErrorKind::TruncationExceeded,
                p.str() + " lies outside expansion order " + std::to_string(order));
  const bool west = p.x < 0;
  auto& cache = gf_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto it = cache.boxes.find(west);
  if (it == cache.boxes.end() || it->second.m < order) {
    // truncating each variable separately keeps every computed coefficient exact
    Box b = west ? west_gf(order) : north_gf(order);
    it = cache.boxes.insert_or_assign(west, std::move(b)).first;
  }
  return it->second.at(std::abs(p.x), p.y);
}

}  // namespace lgf
