#include "lgf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lgf/branched_square.hpp"
#include "lgf/detail/linalg.hpp"
#include "lgf/kasteleyn.hpp"
#include "lgf/slit_square.hpp"
#include "lgf/triangular.hpp"

namespace lgf {

using detail::GaussInt;
using detail::GaussMatrix;

namespace {

constexpr Pt kSquareDirs[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
constexpr Pt kTriDirs[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}};

// dense elimination up to this many unknowns, lifting beyond
constexpr int kDenseLimit = 40;
constexpr size_t kDenseKasteleynLimit = 260;

Edge norm_edge(Pt a, Pt b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool contains_pt(const std::vector<Pt>& v, Pt p) { return std::find(v.begin(), v.end(), p) != v.end(); }

GaussInt to_gauss(const ComplexElem& z) {
  // Kasteleyn weights are Gaussian integers
  return {mpz_class(z.re().q().get_num()), mpz_class(z.im().q().get_num())};
}

}  // namespace

// ---------------------------------------------------------------- problems

std::array<int, 4> FiniteProblem::bounds() const {
  if (box) return *box;
  if (boundary == Boundary::wired_strip) return {-radius, radius, -radius / 2, radius / 2};
  return {-radius, radius, -radius, radius};
}

bool FiniteProblem::in_graph(Pt p) const {
  const auto [x0, x1, y0, y1] = bounds();
  return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1 && !contains_pt(removed, p);
}

bool FiniteProblem::is_unknown(Pt p) const {
  if (!in_graph(p) || contains_pt(slit, p)) return false;
  const auto [x0, x1, y0, y1] = bounds();
  switch (boundary) {
    case Boundary::dirichlet_box:
      return p.x != x0 && p.x != x1 && p.y != y0 && p.y != y1;
    case Boundary::wired_strip:
      return p.x != x0 && p.x != x1;
    case Boundary::free_box:
      return true;
  }
  return true;
}

std::vector<Pt> FiniteProblem::neighbours(Pt p) const {
  std::vector<Pt> out;
  if (lattice == Lattice::square) {
    for (Pt d : kSquareDirs)
      if (in_graph(p + d)) out.push_back(p + d);
  } else {
    for (Pt d : kTriDirs)
      if (in_graph(p + d)) out.push_back(p + d);
  }
  return out;
}

int FiniteProblem::conductance(Pt a, Pt b) const {
  const Edge e = norm_edge(a, b);
  for (const auto& z : zipper)
    if (norm_edge(z.first, z.second) == e) return -1;
  return 1;
}

FiniteProblem slit_square_problem(int radius) {
  FiniteProblem p;
  p.radius = radius;
  for (int k = -1; k > -radius; --k) p.slit.push_back({k, k});
  return p;
}

FiniteProblem zipper_square_problem(int radius) {
  FiniteProblem p;
  p.radius = radius;
  for (int k = -1; k > -radius; --k) {
    p.zipper.push_back({{k, k}, {k + 1, k}});
    p.zipper.push_back({{k, k}, {k, k - 1}});
  }
  return p;
}

FiniteProblem slit_triangular_problem(int radius) {
  FiniteProblem p;
  p.lattice = Lattice::triangular;
  p.radius = radius;
  for (int k = -1; k > -radius; --k) p.slit.push_back({k, 0});
  return p;
}

FiniteProblem zipper_triangular_problem(int radius) {
  FiniteProblem p;
  p.lattice = Lattice::triangular;
  p.radius = radius;
  for (int y = -radius; y <= radius; ++y)
    for (int x = -radius; x <= radius; ++x)
      for (Pt d : {Pt{1, 0}, Pt{0, 1}, Pt{1, 1}})
        if (tri_zipper_crossed({x, y}, Pt{x, y} + d)) p.zipper.push_back({{x, y}, Pt{x, y} + d});
  return p;
}

namespace {

struct Indexed {
  std::vector<Pt> pts;
  std::unordered_map<Pt, int, PtHash> id;
};

// row-major so the bandwidth is one row
Indexed index_unknowns(const FiniteProblem& p) {
  Indexed ix;
  const auto [x0, x1, y0, y1] = p.bounds();
  std::unordered_set<Pt, PtHash> slit(p.slit.begin(), p.slit.end());
  std::unordered_set<Pt, PtHash> removed(p.removed.begin(), p.removed.end());
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      Pt q{x, y};
      if (removed.count(q) || slit.count(q)) continue;
      bool frame = false;
      if (p.boundary == Boundary::dirichlet_box) frame = x == x0 || x == x1 || y == y0 || y == y1;
      if (p.boundary == Boundary::wired_strip) frame = x == x0 || x == x1;
      if (frame) continue;
      ix.id[q] = static_cast<int>(ix.pts.size());
      ix.pts.push_back(q);
    }
  return ix;
}

detail::SparseSym laplacian(const FiniteProblem& p, const Indexed& ix) {
  std::set<Edge> zip;
  for (const auto& z : p.zipper) zip.insert(norm_edge(z.first, z.second));
  detail::SparseSym a;
  a.n = static_cast<int>(ix.pts.size());
  a.rows.resize(a.n);
  for (int i = 0; i < a.n; ++i) {
    const Pt u = ix.pts[i];
    const auto nb = p.neighbours(u);
    a.rows[i].push_back({i, static_cast<long>(nb.size())});
    for (Pt v : nb) {
      auto it = ix.id.find(v);
      if (it == ix.id.end()) continue;
      const long c = zip.count(norm_edge(u, v)) ? -1 : 1;
      a.rows[i].push_back({it->second, -c});
    }
  }
  return a;
}

std::vector<Rational> dense_solve(const detail::SparseSym& a, const std::vector<long>& rhs,
                                  const std::vector<int>& wanted) {
  GaussMatrix m(a.n, std::vector<GaussInt>(a.n, GaussInt(0)));
  for (int i = 0; i < a.n; ++i)
    for (const auto& [j, v] : a.rows[i]) m[i][j] = GaussInt(v);
  std::vector<GaussInt> b(a.n);
  for (int i = 0; i < a.n; ++i) b[i] = GaussInt(rhs[i]);
  auto res = detail::bareiss_solve(std::move(m), {b});
  std::vector<Rational> out;
  for (int k : wanted) {
    Rational q(res.y[0][k].re, res.d.re);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace

int unknown_count(const FiniteProblem& p) { return static_cast<int>(index_unknowns(p).pts.size()); }

std::vector<Rational> exact_green_column(const FiniteProblem& p, Pt u, const std::vector<Pt>& targets) {
  const Indexed ix = index_unknowns(p);
  auto src = ix.id.find(u);
  if (src == ix.id.end()) throw Error(ErrorKind::InvalidArgument, "source " + u.str() + " is not interior");
  std::vector<int> wanted;
  std::vector<size_t> slot;
  for (size_t k = 0; k < targets.size(); ++k) {
    auto it = ix.id.find(targets[k]);
    if (it == ix.id.end()) continue;  // boundary or slit: 0
    wanted.push_back(it->second);
    slot.push_back(k);
  }
  const auto a = laplacian(p, ix);
  std::vector<long> rhs(a.n, 0);
  rhs[src->second] = 1;
  std::vector<Rational> vals;
  if (a.n <= kDenseLimit) vals = dense_solve(a, rhs, wanted);
  else vals = detail::DixonSolver(a).solve(rhs, wanted);
  std::vector<Rational> out(targets.size());
  for (size_t k = 0; k < slot.size(); ++k) out[slot[k]] = vals[k];
  return out;
}

Rational exact_green_solve(const FiniteProblem& p, Pt u, Pt v) {
  if (!p.is_unknown(v)) throw Error(ErrorKind::InvalidArgument, "target " + v.str() + " is not interior");
  return exact_green_column(p, u, {v})[0];
}

// ---------------------------------------------------------------- dimers

bool DimerRegion::contains(Pt p) const {
  return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1 && !contains_pt(removed, p);
}

ComplexElem DimerRegion::weight(Pt w, Pt b) const {
  if (!contains(w) || !contains(b) || !is_white(w) || !is_black(b) || l1(b - w) != 1) return {};
  if (zipper) return k_weight(w, b);
  const Pt d = b - w;
  if (d == Pt{1, 0}) return 1L;
  if (d == Pt{-1, 0}) return -1L;
  if (d == Pt{0, 1}) return ComplexElem::i();
  return -ComplexElem::i();
}

std::vector<Pt> DimerRegion::whites() const {
  std::vector<Pt> out;
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x)
      if (is_white({x, y}) && contains({x, y})) out.push_back({x, y});
  return out;
}

std::vector<Pt> DimerRegion::blacks() const {
  std::vector<Pt> out;
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x)
      if (is_black({x, y}) && contains({x, y})) out.push_back({x, y});
  return out;
}

DimerRegion DimerRegion::monomer(int radius) {
  DimerRegion r{-2 * radius, 2 * radius, -2 * radius, 2 * radius, {Pt{0, 0}}, true};
  return r;
}

DimerRegion DimerRegion::trunk_strip(int a0, int a1, int b0, int b1) {
  if (a0 > -1 || a1 < 0 || b0 > 0 || b1 < 0) throw Error(ErrorKind::InvalidArgument, "strip must contain the trunk edge");
  return DimerRegion{2 * a0, 2 * a1 + 2, 2 * b0, 2 * b1, {Pt{0, 0}}, true};
}

DimerRegion DimerRegion::temperleyan(int radius) {
  DimerRegion r{-2 * radius, 2 * radius, -2 * radius, 2 * radius, {Pt{-2 * radius, -2 * radius}}, false};
  return r;
}

namespace {

constexpr Pt kDimerDirs[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};

struct DenseKasteleyn {
  std::vector<Pt> whites, blacks;
  std::unordered_map<Pt, int, PtHash> wid, bid;
  GaussMatrix k;
};

DenseKasteleyn dense_k(const DimerRegion& r) {
  DenseKasteleyn d;
  d.whites = r.whites();
  d.blacks = r.blacks();
  if (d.whites.size() != d.blacks.size())
    throw Error(ErrorKind::Singular, "unbalanced region: " + std::to_string(d.whites.size()) + " whites, " +
                                         std::to_string(d.blacks.size()) + " blacks");
  for (size_t i = 0; i < d.whites.size(); ++i) d.wid[d.whites[i]] = static_cast<int>(i);
  for (size_t i = 0; i < d.blacks.size(); ++i) d.bid[d.blacks[i]] = static_cast<int>(i);
  const size_t n = d.whites.size();
  d.k.assign(n, std::vector<GaussInt>(n, GaussInt(0)));
  for (size_t i = 0; i < n; ++i)
    for (Pt dd : kDimerDirs) {
      const Pt b = d.whites[i] + dd;
      auto it = d.bid.find(b);
      if (it != d.bid.end()) d.k[i][it->second] = to_gauss(r.weight(d.whites[i], b));
    }
  return d;
}

// K^-1 = (K^* K)^-1 K^*.  K^* K is a real signed Laplacian on each black class,
// solved by lifting one connected block at a time.
class LiftedKasteleyn {
 public:
  explicit LiftedKasteleyn(const DimerRegion& r) : r_(r) {
    const auto whites = r.whites();
    const auto blacks = r.blacks();
    if (whites.size() != blacks.size()) throw Error(ErrorKind::Singular, "unbalanced region");
    // M(b, b') = sum_w conj K(w,b) K(w,b')
    std::unordered_map<Pt, std::map<Pt, GaussInt>, PtHash> m;
    for (Pt w : whites) {
      std::vector<std::pair<Pt, GaussInt>> nb;
      for (Pt d : kDimerDirs)
        if (r.contains(w + d)) nb.push_back({w + d, to_gauss(r.weight(w, w + d))});
      for (const auto& [b1, k1] : nb)
        for (const auto& [b2, k2] : nb) {
          auto& e = m[b1][b2];
          e = e + k1.conj() * k2;
        }
    }
    // blocks by connectivity
    std::unordered_map<Pt, int, PtHash> block;
    for (Pt b : blacks) {
      if (block.count(b)) continue;
      const int id = static_cast<int>(members_.size());
      members_.emplace_back();
      std::queue<Pt> q;
      q.push(b);
      block[b] = id;
      while (!q.empty()) {
        Pt c = q.front();
        q.pop();
        members_[id].push_back(c);
        for (const auto& [o, v] : m[c])
          if (!v.is_zero() && !block.count(o)) {
            block[o] = id;
            q.push(o);
          }
      }
    }
    block_ = block;
    systems_.resize(members_.size());
    for (size_t id = 0; id < members_.size(); ++id) {
      auto& pts = members_[id];
      std::sort(pts.begin(), pts.end(), [](Pt a, Pt b) { return a.y != b.y ? a.y < b.y : a.x < b.x; });
      auto& sys = systems_[id];
      sys.n = static_cast<int>(pts.size());
      sys.rows.resize(sys.n);
      for (int i = 0; i < sys.n; ++i) index_[pts[i]] = i;
      for (int i = 0; i < sys.n; ++i)
        for (const auto& [o, v] : m[pts[i]]) {
          if (v.is_zero()) continue;
          if (sgn(v.im) != 0) throw Error(ErrorKind::InvalidArgument, "K*K is not real on this region");
          sys.rows[i].push_back({index_.at(o), v.re.get_si()});
        }
    }
    solvers_.resize(members_.size());
  }

  std::vector<ComplexElem> column(Pt w, const std::vector<Pt>& blacks) {
    std::vector<ComplexElem> out(blacks.size());
    std::map<int, std::vector<size_t>> by_block;
    for (size_t k = 0; k < blacks.size(); ++k) {
      auto it = block_.find(blacks[k]);
      if (it == block_.end()) throw Error(ErrorKind::RemovedVertex, blacks[k].str());
      by_block[it->second].push_back(k);
    }
    for (const auto& [id, slots] : by_block) {
      std::vector<long> re(systems_[id].n, 0), im(systems_[id].n, 0);
      for (Pt d : kDimerDirs) {
        const Pt b = w + d;
        auto it = block_.find(b);
        if (it == block_.end() || it->second != id) continue;
        const GaussInt c = to_gauss(r_.weight(w, b)).conj();
        re[index_.at(b)] = c.re.get_si();
        im[index_.at(b)] = c.im.get_si();
      }
      std::vector<int> wanted;
      for (size_t k : slots) wanted.push_back(index_.at(blacks[k]));
      if (!solvers_[id]) solvers_[id] = std::make_unique<detail::DixonSolver>(systems_[id]);
      const auto xr = solvers_[id]->solve(re, wanted);
      const auto xi = solvers_[id]->solve(im, wanted);
      for (size_t j = 0; j < slots.size(); ++j) out[slots[j]] = ComplexElem(RingElem(xr[j]), RingElem(xi[j]));
    }
    return out;
  }

 private:
  DimerRegion r_;
  std::vector<std::vector<Pt>> members_;
  std::unordered_map<Pt, int, PtHash> block_, index_;
  std::vector<detail::SparseSym> systems_;
  std::vector<std::unique_ptr<detail::DixonSolver>> solvers_;
};

std::vector<ComplexElem> dense_columns(const DimerRegion& r, const std::vector<Pt>& ws, const std::vector<Pt>& blacks,
                                       GaussInt* det_out = nullptr,
                                       std::vector<std::vector<ComplexElem>>* all = nullptr) {
  auto d = dense_k(r);
  std::vector<std::vector<GaussInt>> rhs;
  for (Pt w : ws) {
    auto it = d.wid.find(w);
    if (it == d.wid.end()) throw Error(ErrorKind::RemovedVertex, "white " + w.str());
    std::vector<GaussInt> e(d.whites.size(), GaussInt(0));
    e[it->second] = GaussInt(1);
    rhs.push_back(std::move(e));
  }
  auto res = detail::bareiss_solve(std::move(d.k), rhs);
  if (det_out) *det_out = res.det;
  std::vector<ComplexElem> out;
  for (size_t c = 0; c < ws.size(); ++c) {
    std::vector<ComplexElem> col;
    for (Pt b : blacks) {
      auto it = d.bid.find(b);
      if (it == d.bid.end()) throw Error(ErrorKind::RemovedVertex, "black " + b.str());
      col.push_back(detail::to_complex(res.y[c][it->second], res.d));
    }
    if (all) all->push_back(col);
    if (c == 0) out = col;
  }
  return out;
}

}  // namespace

std::vector<ComplexElem> exact_kasteleyn_column(const DimerRegion& r, Pt w, const std::vector<Pt>& blacks) {
  if (!r.contains(w) || !is_white(w)) throw Error(ErrorKind::RemovedVertex, "white " + w.str());
  const size_t n = r.whites().size();
  if (n <= kDenseKasteleynLimit) return dense_columns(r, {w}, blacks);
  LiftedKasteleyn lk(r);
  return lk.column(w, blacks);
}

ComplexElem exact_kasteleyn_solve(const DimerRegion& r, Pt b, Pt w) {
  if (!r.contains(b) || !is_black(b)) throw Error(ErrorKind::RemovedVertex, "black " + b.str());
  return exact_kasteleyn_column(r, w, {b})[0];
}

ComplexElem kasteleyn_det(const DimerRegion& r) {
  auto d = dense_k(r);
  if (d.whites.size() > 2 * kDenseKasteleynLimit)
    throw Error(ErrorKind::InvalidArgument, "region too large for a dense determinant");
  return detail::to_complex(detail::bareiss_det(std::move(d.k)), GaussInt(1));
}

std::vector<RingElem> finite_trunk_probabilities(const DimerRegion& r, const std::vector<TreeEdge>& edges) {
  std::map<Pt, std::vector<size_t>> by_white;
  for (size_t k = 0; k < edges.size(); ++k) by_white[edges[k].dimer().white].push_back(k);
  std::unique_ptr<LiftedKasteleyn> lk;
  const bool dense = r.whites().size() <= kDenseKasteleynLimit;
  if (!dense) lk = std::make_unique<LiftedKasteleyn>(r);
  std::vector<RingElem> out(edges.size());
  for (const auto& [w, ks] : by_white) {
    std::vector<Pt> bs;
    for (size_t k : ks) bs.push_back(edges[k].dimer().black);
    for (Pt b : bs)
      if (!r.contains(b)) throw Error(ErrorKind::RemovedVertex, "black " + b.str());
    const auto col = dense ? dense_columns(r, {w}, bs) : lk->column(w, bs);
    for (size_t j = 0; j < ks.size(); ++j) {
      const ComplexElem p = r.weight(w, bs[j]) * col[j];
      if (!p.is_real()) throw Error(ErrorKind::NonRealProbability, p.str());
      out[ks[j]] = p.re();
    }
  }
  return out;
}

mpz_class count_matchings(const DimerRegion& r) {
  const int w = r.x1 - r.x0 + 1;
  if (w > 20) throw Error(ErrorKind::InvalidArgument, "region too wide for the profile count");
  const size_t states = size_t{1} << w;
  std::vector<mpz_class> cur(states), next(states);
  cur[0] = 1;
  for (int y = r.y0; y <= r.y1; ++y)
    for (int k = 0; k < w; ++k) {
      const Pt c{r.x0 + k, y};
      const bool here = r.contains(c);
      const bool below = y < r.y1 && r.contains({c.x, y + 1});
      const bool right = k + 1 < w && r.contains({c.x + 1, y});
      for (auto& v : next) v = 0;
      const size_t bit = size_t{1} << k;
      for (size_t s = 0; s < states; ++s) {
        if (sgn(cur[s]) == 0) continue;
        if (s & bit) {
          next[s & ~bit] += cur[s];
          continue;
        }
        if (!here) {
          next[s] += cur[s];
          continue;
        }
        if (below) next[s | bit] += cur[s];
        if (right && !(s & (bit << 1))) next[s | (bit << 1)] += cur[s];
      }
      std::swap(cur, next);
    }
  return cur[0];
}

ComplexElem temperleyan_green_formula(const DimerRegion& r, Pt b, Pt w) {
  // primal vertices even-even with the removed corner as root; faces odd-odd
  // with the outer face wired
  if (r.zipper || r.removed.size() != 1 || r.x0 % 2 || r.y0 % 2)
    throw Error(ErrorKind::InvalidArgument, "not a standard Temperleyan region");
  const bool primal = (b.x % 2) == 0;
  FiniteProblem g;
  Pt (*to_g)(Pt) = nullptr;
  if (primal) {
    g.boundary = Boundary::free_box;
    g.box = std::array<int, 4>{r.x0 / 2, r.x1 / 2, r.y0 / 2, r.y1 / 2};
    g.slit = {Pt{r.removed[0].x / 2, r.removed[0].y / 2}};
    to_g = [](Pt p) { return Pt{p.x / 2, p.y / 2}; };
  } else {
    // face (2i+1, 2j+1) -> (i, j); the frame is the outer face
    g.boundary = Boundary::dirichlet_box;
    g.box = std::array<int, 4>{r.x0 / 2 - 1, r.x1 / 2, r.y0 / 2 - 1, r.y1 / 2};
    to_g = [](Pt p) { return Pt{(p.x - 1) / 2, (p.y - 1) / 2}; };
  }
  std::vector<Pt> same;
  std::vector<ComplexElem> coef;
  for (Pt d : kDimerDirs) {
    const Pt bp = w + d;
    if (!r.contains(bp) || ((bp.x % 2) == 0) != primal) continue;
    same.push_back(to_g(bp));
    coef.push_back(r.weight(w, bp).conj());
  }
  if (same.empty()) return {};
  const auto col = exact_green_column(g, to_g(b), same);
  ComplexElem tot;
  for (size_t k = 0; k < same.size(); ++k) tot += coef[k] * ComplexElem(RingElem(col[k]));
  return tot;
}

// ---------------------------------------------------------------- tripod

namespace {

ComplexElem det2(const ComplexElem& a, const ComplexElem& b, const ComplexElem& c, const ComplexElem& d) {
  return a * d - b * c;
}

ComplexElem det3(const std::array<std::array<ComplexElem, 3>, 3>& m) {
  return m[0][0] * det2(m[1][1], m[1][2], m[2][1], m[2][2]) - m[0][1] * det2(m[1][0], m[1][2], m[2][0], m[2][2]) +
         m[0][2] * det2(m[1][0], m[1][1], m[2][0], m[2][1]);
}

}  // namespace

TripodFiniteReport tripod_finite_check(int n, Pt vt, const std::vector<std::pair<Pt, Pt>>& pairs, bool count) {
  if (n < 3 || vt.x <= 0 || vt.y <= 0 || vt.x >= n - 1 || vt.y >= n - 1)
    throw Error(ErrorKind::InvalidArgument, "vt must be an interior vertex of the grid");
  const int m = 2 * n - 2;
  const Pt v1{0, 0}, v2{m, 0}, v3{m, m};
  const Pt t{2 * vt.x, 2 * vt.y};
  const Pt w1 = t + Pt{1, 0}, w2 = t + Pt{0, 1};
  DimerRegion full{0, m, 0, m, {v1}, false};
  DimerRegion ne{0, m, 0, m, {v1, v2, v3, w1, w2}, false};

  TripodFiniteReport rep;
  rep.n = n;
  rep.vt = vt;

  std::vector<Pt> ws{w1, w2};
  std::vector<Pt> bs{v2, v3};
  for (const auto& [b, w] : pairs) {
    ws.push_back(w);
    bs.push_back(b);
  }
  GaussInt det_full, det_ne;
  std::vector<std::vector<ComplexElem>> cols;  // cols[k][j] = K^-1(bs[j], ws[k])
  dense_columns(full, ws, bs, &det_full, &cols);
  const auto& p = cols;
  rep.denominator = det2(p[0][0], p[1][0], p[0][1], p[1][1]);

  std::vector<Pt> ne_ws, ne_bs;
  for (const auto& [b, w] : pairs) {
    ne_ws.push_back(w);
    ne_bs.push_back(b);
  }
  std::vector<std::vector<ComplexElem>> ne_cols;
  if (ne_ws.empty()) ne_ws.push_back(full.whites().front() == w1 ? full.whites()[1] : full.whites().front());
  if (ne_bs.empty()) ne_bs.push_back(Pt{1, 1});
  dense_columns(ne, ne_ws, ne_bs, &det_ne, &ne_cols);
  rep.det_ratio = detail::to_complex(det_ne, det_full);

  for (size_t k = 0; k < pairs.size(); ++k) {
    const auto& [b, w] = pairs[k];
    TripodFiniteEntry e{b, w, ne_cols[k][k], {}};
    const size_t jb = 2 + k;  // index of b in bs, of w in ws
    std::array<std::array<ComplexElem, 3>, 3> mm{{
        {p[jb][jb], p[0][jb], p[1][jb]},
        {p[jb][0], p[0][0], p[1][0]},
        {p[jb][1], p[0][1], p[1][1]},
    }};
    e.minors = det3(mm) / rep.denominator;
    rep.entries.push_back(e);
  }
  if (count && m + 1 <= 17) {
    rep.trees = count_matchings(full);
    rep.trees_ne = count_matchings(ne);
  }
  return rep;
}

std::pair<long, long> enumerate_tripod_trees(int n, Pt vt) {
  if (n > 4) throw Error(ErrorKind::InvalidArgument, "enumeration is limited to n <= 4");
  const int nv = n * n;
  auto id = [n](Pt p) { return p.y * n + p.x; };
  std::vector<std::pair<int, int>> edges;
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      if (x + 1 < n) edges.push_back({id({x, y}), id({x + 1, y})});
      if (y + 1 < n) edges.push_back({id({x, y}), id({x, y + 1})});
    }
  const int root = id(vt);
  const int v1 = id({0, 0}), v2 = id({n - 1, 0}), v3 = id({n - 1, n - 1});
  const int east = id(vt + Pt{1, 0}), north = id(vt + Pt{0, 1});

  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int a) { return parent[a] == a ? a : find(parent[a]); };
  std::vector<int> chosen;
  long total = 0, good = 0;

  auto classify = [&]() {
    std::vector<std::vector<int>> adj(nv);
    for (int e : chosen) {
      adj[edges[e].first].push_back(edges[e].second);
      adj[edges[e].second].push_back(edges[e].first);
    }
    std::vector<int> up(nv, -1);
    std::vector<int> stack{root};
    up[root] = root;
    while (!stack.empty()) {
      int a = stack.back();
      stack.pop_back();
      for (int b : adj[a])
        if (up[b] < 0) {
          up[b] = a;
          stack.push_back(b);
        }
    }
    auto first_step = [&](int v) {
      while (up[v] != root) v = up[v];
      return v;
    };
    const int f1 = first_step(v1), f2 = first_step(v2), f3 = first_step(v3);
    if (f1 == f2 || f1 == f3 || f2 == f3) return false;
    const bool has_e = f1 == east || f2 == east || f3 == east;
    const bool has_n = f1 == north || f2 == north || f3 == north;
    return has_e && has_n;
  };

  std::function<void(size_t)> rec = [&](size_t e) {
    if (static_cast<int>(chosen.size()) == nv - 1) {
      ++total;
      if (classify()) ++good;
      return;
    }
    if (e == edges.size() || static_cast<int>(chosen.size() + (edges.size() - e)) < nv - 1) return;
    const int a = find(edges[e].first), b = find(edges[e].second);
    if (a != b) {
      parent[a] = b;
      chosen.push_back(static_cast<int>(e));
      rec(e + 1);
      chosen.pop_back();
      parent[a] = a;
    }
    rec(e + 1);
  };
  rec(0);
  return {good, total};
}

// ---------------------------------------------------------------- Wilson

WilsonResult wilson_sample(const FiniteProblem& g, const WilsonConditioning& cond, uint64_t seed, long samples,
                           const std::vector<TreeEdge>& queries, int streams) {
  std::vector<WilsonEvent> events;
  for (const auto& q : queries) events.push_back({{q}, false});
  return wilson_sample(g, cond, seed, samples, events, streams);
}

WilsonResult wilson_sample(const FiniteProblem& g, const WilsonConditioning& cond, uint64_t seed, long samples,
                           const std::vector<WilsonEvent>& events, int streams) {
  if (samples < 1) throw Error(ErrorKind::InvalidArgument, "need at least one sample");
  if (!g.zipper.empty()) throw Error(ErrorKind::InvalidArgument, "Wilson sampling needs positive conductances");
  if (cond.trunk && g.boundary != Boundary::wired_strip)
    throw Error(ErrorKind::InvalidArgument, "trunk conditioning needs a wired strip");
  const auto [x0, x1, y0, y1] = g.bounds();
  const int w = x1 - x0 + 1, h = y1 - y0 + 1;
  auto id = [&](Pt p) { return (p.y - y0) * w + (p.x - x0); };
  const int nv = w * h;
  // root component per site: -1 for ordinary sites
  std::vector<int> root(nv, -1);
  std::vector<std::vector<int>> nbr(nv);
  for (int y = y0; y <= y1; ++y)
    for (int x = x0; x <= x1; ++x) {
      const Pt p{x, y};
      if (!g.in_graph(p)) continue;
      for (Pt q : g.neighbours(p)) nbr[id(p)].push_back(id(q));
      if (g.boundary == Boundary::wired_strip && (x == x0 || x == x1)) root[id(p)] = x == x0 ? 0 : 1;
      if (g.boundary == Boundary::dirichlet_box && (x == x0 || x == x1 || y == y0 || y == y1)) root[id(p)] = 0;
      if (contains_pt(g.slit, p)) root[id(p)] = 0;
    }
  if (g.boundary == Boundary::free_box && g.slit.empty()) {
    for (int v = 0; v < nv; ++v)
      if (!nbr[v].empty()) {
        root[v] = 0;
        break;
      }
  }
  auto check = [&](Pt p) {
    if (!g.in_graph(p)) throw Error(ErrorKind::InvalidArgument, p.str() + " is outside the graph");
  };
  if (cond.trunk) {
    check(cond.tail);
    check(cond.head);
  }
  for (const auto& ev : events)
    for (const auto& e : ev.edges) {
      check(e.tail);
      check(e.tail + dir_step(e.dir));
    }

  WilsonResult res;
  res.counts.assign(events.size(), 0);
  std::vector<int> next(nv, -1), stamp(nv, 0), comp(nv, -1);
  int epoch = 0;
  const long per = (samples + streams - 1) / streams;
  for (int s = 0; s < streams; ++s) {
    const long want = std::min(per, samples - per * s);
    if (want <= 0) break;
    std::seed_seq ss{static_cast<uint32_t>(seed), static_cast<uint32_t>(seed >> 32), static_cast<uint32_t>(s)};
    std::mt19937_64 rng(ss);
    long got = 0;
    while (got < want) {
      ++res.attempts;
      ++epoch;
      auto in_tree = [&](int v) { return root[v] >= 0 || stamp[v] == epoch; };
      auto component = [&](int v) { return root[v] >= 0 ? root[v] : comp[v]; };
      auto lerw = [&](int start) {
        int u = start;
        while (!in_tree(u)) {
          const auto& nb = nbr[u];
          next[u] = nb[std::uniform_int_distribution<size_t>(0, nb.size() - 1)(rng)];
          u = next[u];
        }
        const int c = component(u);
        for (u = start; !in_tree(u); u = next[u]) {
          stamp[u] = epoch;
          comp[u] = c;
        }
        return component(start);
      };
      bool ok = true;
      if (cond.trunk) ok = lerw(id(cond.tail)) != lerw(id(cond.head));
      if (!ok) {
        if (res.attempts >= 10000 && res.accepted * 10000 < res.attempts)
          throw Error(ErrorKind::ConditioningTooRare, "acceptance below 1e-4");
        continue;
      }
      auto points_to = [&](int a, int b) {
        if (root[a] >= 0) return false;
        lerw(a);
        return next[a] == b;
      };
      for (size_t k = 0; k < events.size(); ++k) {
        bool all = true;
        for (const auto& e : events[k].edges) {
          const int a = id(e.tail), b = id(e.tail + dir_step(e.dir));
          if (!(points_to(a, b) || (events[k].undirected && points_to(b, a)))) {
            all = false;
            break;
          }
        }
        if (all) ++res.counts[k];
      }
      ++got;
      ++res.accepted;
    }
  }
  for (long c : res.counts) {
    const double f = static_cast<double>(c) / static_cast<double>(res.accepted);
    res.frequency.push_back(f);
    res.std_error.push_back(std::sqrt(std::max(f * (1 - f), 1e-12) / static_cast<double>(res.accepted)));
  }
  return res;
}

// ---------------------------------------------------------------- quadrature

double quadrature_green(Lattice lattice, Pt p, double tol) {
  if (!(tol >= 1e-10)) throw Error(ErrorKind::InvalidArgument, "tolerance below 1e-10");
  if (p == Pt{}) return 0;
  // G(x,y) = (1/2pi) int_{-pi}^{pi} [cos(beta t) s^|y| - 1] / sqrt(a^2 - c^2) dt,
  // s = c / (a + sqrt(a^2 - c^2)); the inner angle was integrated exactly
  const double x = p.x, y = std::abs(p.y);
  const bool tri = lattice == Lattice::triangular;
  const double beta = tri ? x - p.y / 2.0 : x;
  auto f = [&](double t) {
    const double a = tri ? 6 - 2 * std::cos(t) : 4 - 2 * std::cos(t);
    const double c = tri ? 4 * std::cos(t / 2) : 2;
    const double r = std::sqrt(std::max(0.0, (a - c) * (a + c)));
    if (r == 0) return 0.0;  // t = 0 only, a null set
    const double s = c / (a + r);
    return (std::cos(beta * t) * std::pow(s, y) - 1) / r;
  };
  double err = 0;
  const double val =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, M_PI, 20, tol / 10, &err);
  if (!(err <= tol)) throw Error(ErrorKind::NoConvergence, "quadrature error estimate " + std::to_string(err));
  return val / M_PI;
}

double quadrature_tri_axis_difference(int x, double tol) {
  if (!(tol >= 1e-14)) throw Error(ErrorKind::InvalidArgument, "tolerance too small");
  auto f = [x](double t) { return std::sin((x + 0.5) * t) / std::sqrt(14 - 2 * std::cos(t)); };
  double err = 0;
  const double val =
      boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, 0.0, 2 * M_PI, 20, tol / 10, &err);
  if (!(err <= tol)) throw Error(ErrorKind::NoConvergence, "quadrature error estimate " + std::to_string(err));
  return val / (2 * M_PI);
}

// ---------------------------------------------------------------- calibration

namespace {

RingElem gh_of(Pt v) {
  // G_D(0, (a,b)) = G_H(a + b, |b - a|) / 2
  return gh({v.x + v.y, std::abs(v.y - v.x)});
}

void track(CalibrationPoint& c, double err, const std::string& where) {
  if (err > c.max_error) {
    c.max_error = err;
    c.worst = where;
  }
}

}  // namespace

CalibrationPoint calibrate_slit(int radius) {
  CalibrationPoint c{"slit", radius, 0, ""};
  const auto prob = slit_square_problem(radius);
  std::vector<Pt> targets;
  for (int y = -4; y <= 4; ++y)
    for (int x = -4; x <= 4; ++x)
      if (prob.is_unknown({x, y})) targets.push_back({x, y});
  const auto col = exact_green_column(prob, {0, 0}, targets);
  for (size_t k = 0; k < targets.size(); ++k) {
    const double exact = gh_of(targets[k]).to_double() / 2;
    track(c, std::fabs(col[k].get_d() - exact), targets[k].str());
  }
  return c;
}

CalibrationPoint calibrate_zipper(int radius) {
  CalibrationPoint c{"zipper", radius, 0, ""};
  const auto prob = zipper_square_problem(radius);
  std::vector<Pt> targets;
  for (int y = -3; y <= 3; ++y)
    for (int x = -3; x <= 3; ++x) targets.push_back({x, y});
  for (Pt u : {Pt{0, 0}, Pt{1, 0}, Pt{0, 1}, Pt{-1, 0}, Pt{0, -1}}) {
    const auto col = exact_green_column(prob, u, targets);
    for (size_t k = 0; k < targets.size(); ++k)
      track(c, std::fabs(col[k].get_d() - gz(u, targets[k]).to_double()), u.str() + "," + targets[k].str());
  }
  return c;
}

CalibrationPoint calibrate_tri_slit(int radius) {
  CalibrationPoint c{"tri-slit", radius, 0, ""};
  const auto prob = slit_triangular_problem(radius);
  std::vector<Pt> targets;
  for (int y = -3; y <= 3; ++y)
    for (int x = -3; x <= 3; ++x)
      if (prob.is_unknown({x, y})) targets.push_back({x, y});
  const auto col = exact_green_column(prob, {0, 0}, targets);
  for (size_t k = 0; k < targets.size(); ++k)
    track(c, std::fabs(col[k].get_d() - tri_slit_green(targets[k]).to_double()), targets[k].str());
  return c;
}

CalibrationPoint calibrate_tri_face(int radius) {
  CalibrationPoint c{"tri-face", radius, 0, ""};
  const auto prob = zipper_triangular_problem(radius);
  std::vector<Pt> targets;
  for (int y = -3; y <= 3; ++y)
    for (int x = -3; x <= 3; ++x) targets.push_back({x, y});
  const auto col = exact_green_column(prob, {0, 0}, targets);
  for (size_t k = 0; k < targets.size(); ++k)
    track(c, std::fabs(col[k].get_d() - tri_face_branched(targets[k]).to_double()), targets[k].str());
  return c;
}

CalibrationPoint calibrate_monomer(int radius) {
  CalibrationPoint c{"monomer", radius, 0, ""};
  const auto region = DimerRegion::monomer(radius);
  const bool dense = region.whites().size() <= kDenseKasteleynLimit;
  std::unique_ptr<LiftedKasteleyn> lk;
  if (!dense) lk = std::make_unique<LiftedKasteleyn>(region);
  for (Pt w : {Pt{1, 0}, Pt{0, 1}, Pt{-1, 0}, Pt{0, -1}}) {
    std::vector<Pt> bs;
    for (Pt d : kDimerDirs)
      if (region.contains(w + d)) bs.push_back(w + d);
    const auto col = dense ? dense_columns(region, {w}, bs) : lk->column(w, bs);
    for (size_t k = 0; k < bs.size(); ++k) {
      const ComplexElem prob = region.weight(w, bs[k]) * col[k];
      const double exact = monomer_dimer_probability(bs[k], w).to_double();
      track(c, std::fabs(prob.re().to_double() - exact) + std::fabs(prob.im().to_double()),
            w.str() + "-" + bs[k].str());
    }
  }
  return c;
}

}  // namespace lgf
