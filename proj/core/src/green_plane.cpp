#include "lgf/green_plane.hpp"

#include <cmath>
#include <cstdlib>

namespace lgf {

RingElem diagonal_potential(int k) {
  if (k < 0) k = -k;
  Rational s = 0;
  for (int j = 1; j <= k; ++j) s += Rational(1, 2 * j - 1);
  s.canonicalize();
  return RingElem::make(2, 0, 0, s, 0);
}

void PotentialTable::fill_through(int n) {
  if (cols_.empty()) {
    cols_.push_back({RingElem()});
    cols_.push_back({RingElem(Rational(1, 4)), diagonal_potential(1)});
  }
  // column m+1 from columns m and m-1, using harmonicity at (m, y)
  while (static_cast<int>(cols_.size()) <= n) {
    const int m = static_cast<int>(cols_.size()) - 1;
    std::vector<RingElem> next(static_cast<size_t>(m + 2));
    next[m + 1] = diagonal_potential(m + 1);
    // at (m,m) the two unknown neighbours coincide by symmetry
    next[m] = RingElem(2L) * oct(m, m) - oct(m, m - 1);
    for (int y = m - 1; y >= 0; --y) {
      const RingElem& west = m - 1 >= y ? oct(m - 1, y) : oct(y, m - 1);
      const RingElem& north = oct(m, y + 1);
      const RingElem& south = y == 0 ? oct(m, 1) : oct(m, y - 1);
      next[y] = RingElem(4L) * oct(m, y) - west - north - south;
    }
    cols_.push_back(std::move(next));
  }
}

RingElem PotentialTable::at(Pt p) {
  int x = std::abs(p.x), y = std::abs(p.y);
  if (x < y) std::swap(x, y);
  if (x > kMaxExactPotential)
    throw Error(ErrorKind::InvalidArgument, p.str() + " is beyond the exact fill range");
  std::lock_guard<std::mutex> lock(mu_);
  fill_through(x);
  return oct(x, y);
}

PotentialTable& default_potential() {
  static PotentialTable t;
  return t;
}

RingElem potential(Pt p) { return default_potential().at(p); }

namespace {

void require_edge(const Edge& e) {
  if (l1(e.second - e.first) != 1)
    throw Error(ErrorKind::NotAnEdge, e.first.str() + "-" + e.second.str());
}

// G(p,q) = -A(q - p)
RingElem green(Pt p, Pt q) { return -potential(q - p); }

}  // namespace

RingElem transfer_impedance(const Edge& e1, const Edge& e2) {
  require_edge(e1);
  require_edge(e2);
  const auto& [v, w] = e1;
  const auto& [x, y] = e2;
  return green(v, x) - green(v, y) - green(w, x) + green(w, y);
}

double potential_numeric(Pt p) {
  if (linf(p) <= kMaxExactPotential) return potential(p).to_double();
  // a(x) = (2/pi) log|x| + (2 gamma + log 8)/pi - cos(4 phi) / (6 pi |x|^2) + O(|x|^-4), A = a/4
  const double x = p.x, y = p.y, r2 = x * x + y * y;
  const double cos4 = (x * x * x * x - 6 * x * x * y * y + y * y * y * y) / (r2 * r2);
  const double gamma = 0.57721566490153286061;
  return (std::log(r2) / M_PI + (2 * gamma + std::log(8.0)) / M_PI - cos4 / (6 * M_PI * r2)) / 4;
}

double transfer_impedance_numeric(const Edge& e1, const Edge& e2) {
  require_edge(e1);
  require_edge(e2);
  const auto& [v, w] = e1;
  const auto& [x, y] = e2;
  return -potential_numeric(x - v) + potential_numeric(y - v) + potential_numeric(x - w) - potential_numeric(y - w);
}

RingElem ust_cylinder_probability(const std::vector<Edge>& edges) {
  const size_t n = edges.size();
  std::vector<std::vector<RingElem>> m(n, std::vector<RingElem>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = transfer_impedance(edges[i], edges[j]);
  return det_exact(std::move(m));
}

double ust_cylinder_probability_numeric(const std::vector<Edge>& edges) {
  const size_t n = edges.size();
  std::vector<std::vector<long double>> m(n, std::vector<long double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = transfer_impedance(edges[i], edges[j]).to_double();
  long double det = 1;
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    for (size_t r = c + 1; r < n; ++r)
      if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
    if (m[piv][c] == 0) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (size_t r = c + 1; r < n; ++r) {
      long double f = m[r][c] / m[c][c];
      for (size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return static_cast<double>(det);
}

}  // namespace lgf
