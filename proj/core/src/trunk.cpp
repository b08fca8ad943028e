#include "lgf/trunk.hpp"

namespace lgf {

Pt dir_step(Dir d) {
  switch (d) {
    case Dir::E: return {1, 0};
    case Dir::N: return {0, 1};
    case Dir::W: return {-1, 0};
    case Dir::S: return {0, -1};
  }
  return {};
}

std::string dir_name(Dir d) {
  static const char* names[] = {"E", "N", "W", "S"};
  return names[static_cast<int>(d)];
}

Dir parse_dir(const std::string& s) {
  if (s == "E" || s == "R") return Dir::E;
  if (s == "N" || s == "U") return Dir::N;
  if (s == "W" || s == "L") return Dir::W;
  if (s == "S" || s == "D") return Dir::S;
  throw Error(ErrorKind::ParseError, "direction " + s);
}

Dimer TreeEdge::dimer() const {
  const Pt w{2 * tail.x + 1, 2 * tail.y};
  return {w + dir_step(dir), w};
}

RingElem trunk_cylinder_probability(const EventSpec& ev) { return event_probability(trunk_kernel(), ev); }

RingElem trunk_cylinder_probability(const std::vector<TreeEdge>& edges) {
  EventSpec ev;
  for (const auto& e : edges) ev.dimers.push_back(e.dimer());
  return trunk_cylinder_probability(ev);
}

RingElem trunk_directed_edge_probability(const TreeEdge& e) { return trunk_cylinder_probability({e}); }

std::map<int, RingElem> trunk_degree_distribution() {
  // besides the trunk edge and its outgoing edge, (0,0) has in-edges from
  // these neighbours; degree = 2 + number present
  const std::vector<TreeEdge> in = {{{1, 0}, Dir::W}, {{0, 1}, Dir::S}, {{0, -1}, Dir::N}};
  std::map<int, RingElem> exactly;  // P(exactly j in-edges)
  std::vector<RingElem> at_least(4);  // sum over j-subsets of P(all in subset)
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<TreeEdge> sub;
    for (unsigned i = 0; i < 3; ++i)
      if (mask >> i & 1) sub.push_back(in[i]);
    at_least[sub.size()] += sub.empty() ? RingElem(1L) : trunk_cylinder_probability(sub);
  }
  // P(exactly j) = sum_{m >= j} (-1)^{m-j} C(m,j) S_m
  static const long binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  std::map<int, RingElem> out;
  for (int j = 0; j <= 2; ++j) {
    RingElem p;
    for (int m = j; m <= 3; ++m) {
      RingElem t = RingElem(binom[m][j]) * at_least[m];
      p += (m - j) % 2 ? -t : t;
    }
    out[2 + j] = p;
  }
  return out;
}

RingElem straight_run_determinant(int k) {
  std::vector<TreeEdge> run;
  for (int j = 0; j < k; ++j) run.push_back({{j, 0}, Dir::E});
  return run.empty() ? RingElem(1L) : trunk_cylinder_probability(run);
}

RingElem straight_run_probability(int k, int max_k) {
  if (k < 0 || k > max_k) throw Error(ErrorKind::InvalidArgument, "run length out of range");
  const RingElem closed = (RingElem::sqrt(2) - RingElem(1L)).pow(static_cast<unsigned>(k));
  const RingElem det = straight_run_determinant(k);
  if (closed != det) throw Error(ErrorKind::FillFailure, "run determinant " + det.str() + " != " + closed.str());
  return closed;
}

RingElem monomer_dimer_probability(Pt a, Pt b) {
  if (l1(a - b) != 1) throw Error(ErrorKind::NotAnEdge, a.str() + "-" + b.str());
  const Dimer d = is_black(a) ? Dimer{a, b} : Dimer{b, a};
  return event_probability(trunk_kernel(), EventSpec{{d}});
}

std::vector<std::pair<TreeEdge, RingElem>> trunk_table(const Window& w) {
  std::vector<std::pair<TreeEdge, RingElem>> out;
  for (int y = w.y0; y <= w.y1; ++y)
    for (int x = w.x0; x <= w.x1; ++x)
      for (Dir d : {Dir::E, Dir::N, Dir::W, Dir::S}) {
        TreeEdge e{{x, y}, d};
        if (trunk_kernel().removed(e.dimer().black)) continue;  // the trunk edge itself
        out.emplace_back(e, trunk_directed_edge_probability(e));
      }
  return out;
}

}  // namespace lgf
