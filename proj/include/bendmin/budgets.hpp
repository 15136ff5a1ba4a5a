#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bendmin/spirality.hpp"
#include "bendmin/spq_tree.hpp"

namespace bendmin {

/// Bends after which one more bend stops raising the maximum (plus) or
/// lowering the minimum (minus) spirality of a component.
struct Breakpoints {
  std::int64_t plus = 0;
  std::int64_t minus = 0;
  bool operator==(const Breakpoints&) const = default;
};

struct NodeAnnotation {
  /// Spiralities reachable with `budget` extra bends at this node.
  SpiralityInterval interval;
  /// Composition pair before any budget (P-nodes); may be inverted.
  SpiralityPair raw;
  std::int64_t budget = 0;
  std::int64_t cumulative = 0;
  std::optional<Breakpoints> breakpoints;
  int exposed = -1;
  std::optional<PNodeType> type;
  std::optional<Spirality2> target;
};

struct BudgetResult {
  std::vector<NodeAnnotation> nodes;
  RootWindow window;
  bool dummy_reference = false;
  std::int64_t root_budget = 0;
  /// Minimum number of bends of any orthogonal representation.
  std::int64_t total = 0;
};

struct P3Budget {
  std::int64_t budget = 0;
  SpiralityInterval interval;
  /// Child indices (0 left, 1 center, 2 right) of the shifted interval with the
  /// largest minimum, the smallest maximum, and the remaining one.
  int z = 0, x = 0, y = 0;
  /// Shifted child intervals: left - 2, center, right + 2.
  SpiralityInterval shifted[3];
};

/// Budget and reachable interval of a three-child P-node whose shifted child
/// intervals do not meet. Ties pick the earlier child in left, center, right order.
P3Budget budget_p3(const SpiralityInterval& left, const SpiralityInterval& center, const SpiralityInterval& right);

/// Breakpoints of a rectilinear Pio2(2,2) node from its child intervals.
Breakpoints flexibility_breakpoints(const SpiralityInterval& left, const SpiralityInterval& right);

/// Breakpoints of a Pio2(2,2) node whose reachable interval is `reached`; equal
/// to the two-argument form when the node needs no bends.
Breakpoints flexibility_breakpoints(const SpiralityInterval& left, const SpiralityInterval& right,
                                    const SpiralityInterval& reached);

struct P2Budget {
  std::int64_t budget = 0;
  SpiralityInterval interval;
};

/// Budget and reachable interval of a two-child P-node whose type condition fails.
/// `bp_left`/`bp_right` are required for a child without exposed edge.
P2Budget budget_p2(const PNodeType& type, const SpiralityInterval& left, const SpiralityInterval& right,
                   bool exposed_left, bool exposed_right, std::optional<Breakpoints> bp_left,
                   std::optional<Breakpoints> bp_right);

std::int64_t budget_root(const SpiralityInterval& inner, const RootWindow& window, bool dummy_reference);

/// Annotates every node with interval, budget and cumulative budget.
BudgetResult bottom_up(const SpqTree& tree);

/// True when the graph of the tree admits a representation without bends. The
/// root condition is skipped when the reference edge is a dummy.
bool rectilinear_test(const SpqTree& tree, std::vector<std::optional<SpiralityInterval>>* intervals = nullptr);

}  // namespace bendmin
