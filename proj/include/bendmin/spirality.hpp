#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace bendmin {

/// Twice a spirality value. Spiralities are multiples of 1/2, so doubling keeps
/// all arithmetic in integers.
using Spirality2 = std::int64_t;

std::string format_spirality(Spirality2 value);

/// Closed interval [lo, hi] of spiralities sharing the parity of lo.
/// All members of the interval are lo, lo + 2, ..., hi (doubled units).
struct SpiralityInterval {
  Spirality2 lo = 0;
  Spirality2 hi = 0;

  bool half_integral() const { return (lo & 1) != 0; }
  bool contains(Spirality2 s) const { return s >= lo && s <= hi && ((s - lo) & 1) == 0; }
  SpiralityInterval widened(std::int64_t bends) const { return {lo - 2 * bends, hi + 2 * bends}; }
  SpiralityInterval shifted(Spirality2 by) const { return {lo + by, hi + by}; }
  bool operator==(const SpiralityInterval&) const = default;
  std::string str() const;
};

/// Min/max pair produced by a composition formula. Unlike SpiralityInterval it
/// may be inverted (lo > hi) when the composition has no rectilinear value.
struct SpiralityPair {
  Spirality2 lo = 0;
  Spirality2 hi = 0;
  bool operator==(const SpiralityPair&) const = default;
};

/// Distance between two intervals in doubled units: 0 when they meet,
/// otherwise the gap between the nearest endpoints.
Spirality2 interval_distance(Spirality2 lo1, Spirality2 hi1, Spirality2 lo2, Spirality2 hi2);
Spirality2 interval_distance(const SpiralityInterval& a, const SpiralityInterval& b);

/// Distance from a point to an interval, in doubled units.
Spirality2 point_distance(Spirality2 s, const SpiralityInterval& iv);

/// Range of a chain of `length` edges with no bends.
SpiralityInterval interval_qstar(int length);

SpiralityInterval interval_series(const SpiralityInterval* children, std::size_t count);

/// Three-child parallel composition. Empty when the shifted child ranges do not meet.
std::optional<SpiralityInterval> interval_p3(const SpiralityInterval& left, const SpiralityInterval& center,
                                             const SpiralityInterval& right);

enum class PFamily { Pio2, Pio3, Pin3 };

/// Type of a two-child P-node. Coefficients are doubled (1 means 1/2, 2 means 1).
///
/// `table_k*` hold the row of the parameter table in its canonical pole
/// orientation; `k_*` hold the coefficients for the node's actual source (u)
/// and sink (v). `swapped` is set when the canonical row describes v as u.
struct PNodeType {
  PFamily family = PFamily::Pio2;
  /// Outdegrees of the canonical u and v (Pio2, Pio3).
  int lambda = 1;
  int beta = 1;
  /// Side of the child with indegree 2 at the pole of indegree 3 (Pio3), or the
  /// sides at canonical v and u (Pin3, in that order).
  int side_d = 0;
  int side_d2 = 0;
  bool swapped = false;
  int table_k_ul = 2, table_k_ur = 2, table_k_vl = 2, table_k_vr = 2;
  int k_ul = 2, k_ur = 2, k_vl = 2, k_vr = 2;

  int gamma() const { return family == PFamily::Pin3 ? 0 : lambda + beta - 2; }
  std::string name() const;
};

/// Side indicator: 0 for left, 1 for right.
inline int side_phi(int side) { return side; }

/// Raw Table-style interval of a two-child P-node, possibly inverted.
SpiralityPair p2_pair(const PNodeType& type, const SpiralityInterval& left, const SpiralityInterval& right);

/// Admissible values of sigma_left - sigma_right for the node type.
SpiralityInterval p2_difference_window(const PNodeType& type);

/// Two-child parallel composition: the interval when the type's condition
/// holds, empty otherwise.
std::optional<SpiralityInterval> interval_p2(const PNodeType& type, const SpiralityInterval& left,
                                             const SpiralityInterval& right);

/// Spiralities of the root's inner child that close the root cycle without bends
/// on the reference edge. `free_poles` counts root poles of degree 2, whose
/// angle toward the reference edge can be 90, 180 or 270 degrees.
struct RootWindow {
  SpiralityInterval window;
  int free_poles = 0;
};
RootWindow root_window(int free_poles);

}  // namespace bendmin
