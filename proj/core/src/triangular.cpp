#include "lgf/triangular.hpp"

#include <algorithm>

namespace lgf {

namespace {

const RingElem& r3() {
  static const RingElem r = RingElem::sqrt(3);
  return r;
}
RingElem q3(const Rational& a, const Rational& b = 0) { return RingElem::make(3, a, b); }

const RingElem& alpha_sq() {  // (2 - sqrt3)^2
  static const RingElem a = q3(7, -4);
  return a;
}

// [t^k] 1/sqrt((1-t)(1-alpha^2 t))
RingElem ray_coeff(int k) {
  static std::mutex mu;
  static std::vector<RingElem> c;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(c.size()) <= k) {
    const int n = 2 * k + 16;
    Series base = Series::poly({RingElem(1L).with_radicand(3), -(RingElem(1L) + alpha_sq()), alpha_sq()}, n);
    c = series_sqrt_inv(base, n).coeffs();
  }
  return c[static_cast<size_t>(k)];
}

// face relation weights 1/2 + 1/sqrt3 and 1/(2 sqrt3)
const RingElem& face_a() {
  static const RingElem a = q3(Rational(1, 2), Rational(1, 3));
  return a;
}
const RingElem& face_b() {
  static const RingElem b = q3(0, Rational(1, 6));
  return b;
}

using Affine = std::map<int, RingElem>;

Affine constant(const RingElem& v) { return v.is_zero() ? Affine{} : Affine{{0, v}}; }

void axpy(Affine& a, const Affine& b, const RingElem& s) {
  for (const auto& [k, v] : b) {
    RingElem& slot = a[k];
    slot += s * v;
    if (slot.is_zero()) a.erase(k);
  }
}

Affine scaled(const Affine& a, const RingElem& s) {
  Affine r;
  axpy(r, a, s);
  return r;
}

int id_c(int j) { return 2 * j; }
int id_u(int x) { return 2 * (-x) + 1; }

}  // namespace

Series tri_slit_voltage(int N) {
  const RingElem alpha = q3(2, -1);
  std::vector<RingElem> c(static_cast<size_t>(N + 1));
  for (int k = 0; 2 * k <= N; ++k) c[2 * k] = alpha * ray_coeff(k);
  return Series::poly(c, N + 1);
}

RingElem tri_ray_value(int k) {
  if (k >= 0) return face_b() * ray_coeff(k);
  return q3(Rational(-1, 2), Rational(1, 3)) * ray_coeff(-k - 1);
}

Series tri_delta_plus(int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "tri_delta_plus needs N >= 1");
  const int n = N + 2;
  const RingElem one = RingElem(1L).with_radicand(3);
  // 1/s with s = sqrt(1 - 14u^2 + u^4)
  Series s_inv = series_sqrt_inv(Series::poly({one, RingElem(), RingElem(-14L), RingElem(), RingElem(1L)}, n), n);
  Series f = r3() * (Series::poly({one, RingElem(), one}, n) * s_inv);
  Series g = -(f.derivative().div(Series::constant(one, n) + f * f)).integrate();
  // delta/u = (pi/6 + g) / (pi s): arccot f = pi/6 + g
  Series body = Rational(1, 6) * s_inv + RingElem::inv_pi(3) * (g * s_inv).truncate(n);
  return body.shift(1).truncate(N + 1);
}

void TriTable::build(int radius) {
  const int Y = 2 * radius + 4;
  const int W = radius + 4;
  const int span = W + 3 * Y + 5;
  const RingElem alpha = face_a(), beta = face_b();
  std::vector<RingElem> row0;
  const RingElem al = q3(2, -1);
  for (int x = 0; x <= span + 1; ++x) row0.push_back(al * ray_coeff(x));
  auto gd0 = [&](int x) { return x >= 0 ? row0[static_cast<size_t>(x)] : RingElem().with_radicand(3); };

  rows_.assign(static_cast<size_t>(Y + 2), {});
  for (int x = -span; x <= span; ++x) rows_[0][x] = constant(gd0(x));

  // row 1: three values from the source and the two rays, then the
  // reflected-boundary relation eastward; west of -1 the values are unknowns
  auto& r1 = rows_[1];
  const RingElem g01 = tri_ray_value(-1) / (alpha - beta);
  const RingElem g11 = (RingElem(6L) * gd0(0) - gd0(1) - RingElem(2L) * g01 - RingElem(1L)) / RingElem(2L);
  r1[0] = constant(g01);
  r1[1] = constant(g11);
  r1[-1] = constant((tri_ray_value(1) - alpha * g11) / beta);
  for (int x = 1; x < span - 1; ++x) {
    Affine a = constant((RingElem(6L) * gd0(x) - gd0(x - 1) - gd0(x + 1)) / RingElem(2L));
    axpy(a, r1[x], RingElem(-1L));
    r1[x + 1] = a;
  }
  for (int x = -2; x > -span + 1; --x) r1[x] = Affine{{id_u(x), RingElem(1L)}};

  std::vector<Affine> eqs;
  for (int j = 2; j <= Y + 1; ++j) {
    const auto& prev = rows_[j - 1];
    const auto& pp = rows_[j - 2];
    const int lo = prev.begin()->first + 1, hi = prev.rbegin()->first - 1;
    auto S = [&](int x) {
      Affine a = scaled(prev.at(x), RingElem(6L));
      axpy(a, prev.at(x - 1), RingElem(-1L));
      axpy(a, prev.at(x + 1), RingElem(-1L));
      axpy(a, pp.at(x), RingElem(-1L));
      axpy(a, pp.at(x - 1), RingElem(-1L));
      return a;
    };
    auto& r = rows_[j];
    r[0] = Affine{{id_c(j), RingElem(1L)}};
    for (int x = 0; x + 1 <= hi - 1 && pp.count(x + 1) && pp.count(x); ++x) {
      Affine a = S(x);
      axpy(a, r[x], RingElem(-1L));
      r[x + 1] = a;
    }
    for (int x = -1; x >= lo && pp.count(x - 1); --x) {
      Affine a = S(x);
      axpy(a, r[x + 1], RingElem(-1L));
      r[x] = a;
    }
    // G~(-j,-j) = alpha G(0,j) - beta G(j-1,j);  G~(j,j) = alpha G(j,j) + beta G(-1,j)
    Affine b = scaled(r.at(0), alpha);
    axpy(b, r.at(j - 1), -beta);
    axpy(b, constant(tri_ray_value(-j)), RingElem(-1L));
    eqs.push_back(b);
    Affine a = scaled(r.at(j), alpha);
    axpy(a, r.at(-1), beta);
    axpy(a, constant(tri_ray_value(j)), RingElem(-1L));
    eqs.push_back(a);
  }

  pivots_.clear();
  for (Affine e : eqs) {
    for (const auto& [k, pv] : pivots_) {
      auto it = e.find(k);
      if (it == e.end()) continue;
      RingElem f = it->second;
      axpy(e, pv, -f);
      e.erase(k);
    }
    auto pit = std::find_if(e.begin(), e.end(), [](const auto& kv) { return kv.first != 0; });
    if (pit == e.end()) {
      if (!e.empty()) throw Error(ErrorKind::FillFailure, "inconsistent row constraints");
      continue;
    }
    const int p = pit->first;
    const RingElem inv = pit->second.inverse();
    Affine ne = scaled(e, inv);
    ne.erase(p);
    for (auto& [k, pv] : pivots_) {
      auto it = pv.find(p);
      if (it == pv.end()) continue;
      RingElem f = it->second;
      pv.erase(it);
      axpy(pv, ne, -f);
    }
    pivots_[p] = ne;
  }
  radius_ = radius;
}

bool TriTable::eval(const Affine& a, RingElem& out) const {
  RingElem t = RingElem().with_radicand(3);
  for (const auto& [k, v] : a) {
    if (k == 0) {
      t += v;
      continue;
    }
    auto it = pivots_.find(k);
    if (it == pivots_.end()) return false;
    for (const auto& [kk, vv] : it->second)
      if (kk != 0) return false;
    auto c = it->second.find(0);
    if (c != it->second.end()) t -= v * c->second;
  }
  out = t;
  return true;
}

RingElem TriTable::slit(TriPoint p) {
  if (p.y < 0) p = {p.x - p.y, -p.y};  // conjugation symmetry of the slit plane
  std::lock_guard<std::mutex> lock(mu_);
  int r = std::max({std::abs(p.x), p.y, 2});
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (r > radius_) build(r);
    if (p.y < static_cast<int>(rows_.size())) {
      auto it = rows_[p.y].find(p.x);
      RingElem out;
      if (it != rows_[p.y].end() && eval(it->second, out)) return out;
    }
    r = 2 * std::max(r, radius_);
  }
  throw Error(ErrorKind::FillFailure, "row fill did not reach " + p.str());
}

TriTable& default_tri() {
  static TriTable t;
  return t;
}

RingElem tri_slit_green(TriPoint v) { return default_tri().slit(v); }

RingElem tri_face_branched(TriPoint v) {
  const RingElem a = face_a() * tri_slit_green(v);
  const RingElem b = face_b() * tri_slit_green({-v.x - 1, -v.y});
  RingElem g = v.y >= 0 ? a + b : a - b;
  // between the 180 and 210 degree rays the sheet flips
  if (v.y < 0 && v.x < 2 * v.y) g = -g;
  return g;
}

bool tri_zipper_crossed(TriPoint a, TriPoint b) {
  for (int o = 0; o < 2; ++o) {
    // vertical-ish edges (-2k-1,-k)-(-2k-1,-k-1), k >= 0
    if (a.x == b.x && a.y == b.y + 1 && a.x == 2 * a.y - 1 && a.y <= 0) return true;
    // three edges out of (-2k,-k), k >= 1
    if (a.x == 2 * a.y && a.y <= -1) {
      Pt d = b - a;
      if (d == Pt{1, 0} || d == Pt{0, -1} || d == Pt{-1, -1}) return true;
    }
    std::swap(a, b);
  }
  return false;
}

RingElem tri_face_residual(TriPoint v) {
  static const Pt nb[6] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
  RingElem s = RingElem(6L) * tri_face_branched(v);
  for (Pt d : nb) {
    const Pt w = v + d;
    RingElem g = tri_face_branched(w);
    if (tri_zipper_crossed(v, w)) s += g;
    else s -= g;
  }
  return s;
}

RingElem tri_runs_constant(int k) {
  if (k < 0 || k > kMaxRunsK) throw Error(ErrorKind::InvalidArgument, "k out of range");
  const RingElem base = q3(2, -1);
  if (tri_slit_voltage(1).coeff(0) != base) throw Error(ErrorKind::FillFailure, "slit voltage at origin");
  return base.pow(static_cast<unsigned>(k));
}

}  // namespace lgf
