#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "bendmin/budgets.hpp"
#include "bendmin/plane_graph.hpp"
#include "bendmin/spq_tree.hpp"

namespace bendmin {

/// Angles are in units of 90 degrees: angles[v][i] is the corner between
/// rotation[v][i] and rotation[v][i+1] clockwise. turns[e] lists the bends of
/// edge e met while walking from its stored u to v ('R' right, 'L' left).
struct OrthogonalRepresentation {
  std::shared_ptr<const PlaneGraph> graph;
  std::vector<std::vector<int>> angles;
  std::vector<std::string> turns;

  std::int64_t bend_count() const;
};

/// Bends of edge e seen walking along `dart`.
std::string turns_along(const OrthogonalRepresentation& h, int dart);

/// Right turns minus left turns when entering `via` through `in_edge` and
/// leaving through `out_edge`.
int vertex_turn(const OrthogonalRepresentation& h, int via, int in_edge, int out_edge);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks angle sums at vertices and the turn balance of every face.
CheckReport check_representation(const OrthogonalRepresentation& h);
/// Same checks with vertices and faces split across OpenMP threads.
CheckReport check_representation_parallel(const OrthogonalRepresentation& h);

nlohmann::json to_json(const OrthogonalRepresentation& h);

/// Angles chosen at the poles of a two-child P-node: 1 when the outside corner
/// next to the child is 90 degrees, 0 when it is 180 degrees.
struct AngleChoice {
  int ul = 1, ur = 1, vl = 1, vr = 1;
};

struct RootChoice {
  Spirality2 inner = 0;
  /// Angle offsets at the root poles in {-1, 0, 1}; 1 means 90 degrees inside.
  int alpha_source = 0;
  int alpha_sink = 0;
  /// Spirality of the reference edge from source to sink (doubled).
  Spirality2 reference = 0;
  std::int64_t reference_bends = 0;
};

/// Picks the inner spirality (closest to 4 inside the root window, ties to the
/// smaller value) and the pole angles; bends left over go on the reference edge.
RootChoice choose_root_spirality(const SpiralityInterval& inner, const RootWindow& window, int free_source,
                                 int free_sink, bool dummy_reference);

/// Splits a series target among children: start at the maxima and lower
/// children in order until the sum matches.
std::vector<Spirality2> distribute_series(Spirality2 target, const std::vector<SpiralityInterval>& children);

struct P3Split {
  Spirality2 child[3];
  std::int64_t bends[3];
};
P3Split distribute_p3(Spirality2 target, const SpiralityInterval& left, const SpiralityInterval& center,
                      const SpiralityInterval& right);

/// How a child can absorb extra bends: along an exposed edge at unit cost in
/// both directions, or within its breakpoints when it has no exposed edge.
struct ChildCapacity {
  SpiralityInterval interval;
  bool exposed = true;
  Breakpoints breakpoints;
};

struct P2Split {
  AngleChoice alpha;
  Spirality2 left = 0, right = 0;
  std::int64_t bends_left = 0, bends_right = 0;
};

/// Chooses the first admissible angle combination (in the order ul, ur, vl, vr)
/// whose child bend costs add up to `allowance`.
P2Split distribute_p2(Spirality2 target, const PNodeType& type, const SpqNode& node, const PlaneGraph& g,
                      const ChildCapacity& left, const ChildCapacity& right, std::int64_t allowance,
                      std::mt19937_64* rng = nullptr);

struct Construction {
  OrthogonalRepresentation rep;
  std::vector<Spirality2> target;
  /// Bends placed inside each component beyond its own cumulative budget.
  std::vector<std::int64_t> extra;
  std::vector<AngleChoice> alpha;
  RootChoice root;
  /// Bends of the representation excluding the dummy reference edge.
  std::int64_t bends = 0;
};

/// Assigns target spiralities top-down and emits the representation of the
/// tree's graph. With `rng`, ties among valid choices are broken at random.
Construction assemble(const SpqTree& tree, const BudgetResult& budgets, std::mt19937_64* rng = nullptr);

/// Spirality of the component of `node`, measured on the representation along
/// the leftmost (or rightmost) source-to-sink path.
Spirality2 measure_spirality(const OrthogonalRepresentation& h, const SpqTree& tree, int node,
                             bool rightmost_path = false);

/// Replaces the component of `node` in `h` by its counterpart in `other`.
/// Throws Error(InvalidInput) when the two components differ in spirality.
OrthogonalRepresentation substitute(const OrthogonalRepresentation& h, const SpqTree& tree, int node,
                                    const OrthogonalRepresentation& other);

/// Representation of the graph without its dummy edge. The two corners next to
/// the dummy merge at each endpoint.
OrthogonalRepresentation drop_dummy_edge(const OrthogonalRepresentation& h,
                                         std::shared_ptr<const PlaneGraph> original);

}  // namespace bendmin
