#include "bendmin/spirality.hpp"

#include <algorithm>
#include <cstdlib>

namespace bendmin {

std::string format_spirality(Spirality2 value) {
  if ((value & 1) == 0) return std::to_string(value / 2);
  return std::to_string(value) + "/2";
}

std::string SpiralityInterval::str() const {
  return "[" + format_spirality(lo) + ", " + format_spirality(hi) + "]";
}

Spirality2 interval_distance(Spirality2 lo1, Spirality2 hi1, Spirality2 lo2, Spirality2 hi2) {
  if (hi1 < lo2) return lo2 - hi1;
  if (hi2 < lo1) return lo1 - hi2;
  return 0;
}

Spirality2 interval_distance(const SpiralityInterval& a, const SpiralityInterval& b) {
  return interval_distance(a.lo, a.hi, b.lo, b.hi);
}

Spirality2 point_distance(Spirality2 s, const SpiralityInterval& iv) {
  if (s < iv.lo) return iv.lo - s;
  if (s > iv.hi) return s - iv.hi;
  return 0;
}

SpiralityInterval interval_qstar(int length) {
  Spirality2 reach = 2 * static_cast<Spirality2>(length - 1);
  return {-reach, reach};
}

SpiralityInterval interval_series(const SpiralityInterval* children, std::size_t count) {
  SpiralityInterval sum{0, 0};
  for (std::size_t i = 0; i < count; ++i) {
    sum.lo += children[i].lo;
    sum.hi += children[i].hi;
  }
  return sum;
}

std::optional<SpiralityInterval> interval_p3(const SpiralityInterval& left, const SpiralityInterval& center,
                                             const SpiralityInterval& right) {
  Spirality2 lo = std::max({left.lo - 4, center.lo, right.lo + 4});
  Spirality2 hi = std::min({left.hi - 4, center.hi, right.hi + 4});
  if (lo > hi) return std::nullopt;
  return SpiralityInterval{lo, hi};
}

RootWindow root_window(int free_poles) {
  return {{8 - 2 * free_poles, 8 + 2 * free_poles}, free_poles};
}

}  // namespace bendmin

namespace bendmin {

std::string PNodeType::name() const {
  auto side = [](int s) { return s == 0 ? "l" : "r"; };
  switch (family) {
    case PFamily::Pio2:
      return "Pio2(" + std::to_string(lambda) + std::to_string(beta) + ")";
    case PFamily::Pio3:
      return std::string("Pio3") + side(side_d) + "(" + std::to_string(lambda) + std::to_string(beta) + ")";
    case PFamily::Pin3:
      return std::string("Pin3") + side(side_d) + side(side_d2);
  }
  return "?";
}

SpiralityPair p2_pair(const PNodeType& type, const SpiralityInterval& l, const SpiralityInterval& r) {
  const Spirality2 g = type.gamma();
  switch (type.family) {
    case PFamily::Pio2:
      return {std::max(l.lo - 4, r.lo) + g, std::min(l.hi, r.hi + 4) - g};
    case PFamily::Pio3: {
      const Spirality2 phi = side_phi(type.side_d);
      return {std::max(l.lo - 3, r.lo + 2) + (g - phi), std::min(l.hi - 1, r.hi + 4) - (g + phi)};
    }
    case PFamily::Pin3: {
      const Spirality2 phi = side_phi(type.side_d) + side_phi(type.side_d2);
      return {std::max(l.lo - 2, r.lo + 4) - phi, std::min(l.hi - 2, r.hi + 4) - phi};
    }
  }
  return {0, -1};
}

SpiralityInterval p2_difference_window(const PNodeType& type) {
  const Spirality2 g = type.gamma();
  switch (type.family) {
    case PFamily::Pio2:
      return {4, 8 - 2 * g};
    case PFamily::Pio3:
      return {5, 7 - 2 * g};
    case PFamily::Pin3:
      return {6, 6};
  }
  return {0, 0};
}

std::optional<SpiralityInterval> interval_p2(const PNodeType& type, const SpiralityInterval& left,
                                             const SpiralityInterval& right) {
  SpiralityInterval window = p2_difference_window(type);
  if (interval_distance(left.lo - right.hi, left.hi - right.lo, window.lo, window.hi) != 0) return std::nullopt;
  SpiralityPair p = p2_pair(type, left, right);
  if (p.lo > p.hi) return std::nullopt;
  return SpiralityInterval{p.lo, p.hi};
}

}  // namespace bendmin
