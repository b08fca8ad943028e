#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>

namespace lgf {

struct Pt {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Pt&, const Pt&) = default;
  Pt operator+(Pt o) const { return {x + o.x, y + o.y}; }
  Pt operator-(Pt o) const { return {x - o.x, y - o.y}; }
  Pt operator-() const { return {-x, -y}; }
  std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

using PlanePoint = Pt;
using Edge = std::pair<Pt, Pt>;

inline int l1(Pt p) { return (p.x < 0 ? -p.x : p.x) + (p.y < 0 ? -p.y : p.y); }
inline int linf(Pt p) {
  int ax = p.x < 0 ? -p.x : p.x, ay = p.y < 0 ? -p.y : p.y;
  return ax > ay ? ax : ay;
}

struct PtHash {
  size_t operator()(Pt p) const noexcept {
    return std::hash<uint64_t>()((static_cast<uint64_t>(static_cast<uint32_t>(p.x)) << 32) ^
                                 static_cast<uint32_t>(p.y));
  }
};

struct PtPairHash {
  size_t operator()(const std::pair<Pt, Pt>& k) const noexcept {
    return PtHash()(k.first) * 0x9E3779B97F4A7C15ULL ^ PtHash()(k.second);
  }
};

}  // namespace lgf
