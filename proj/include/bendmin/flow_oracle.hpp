#pragma once

#include <cstdint>
#include <memory>

#include "bendmin/plane_graph.hpp"
#include "bendmin/representation.hpp"

namespace bendmin {

/// Minimum number of bends over all orthogonal representations that keep the
/// embedding of g, computed with a min-cost flow (successive shortest paths).
std::int64_t flow_min_bends(const PlaneGraph& g);

/// An optimal representation read off the flow solution.
OrthogonalRepresentation flow_representation(std::shared_ptr<const PlaneGraph> g);

struct GeneratorSpec {
  int vertices = 10;
  /// Probability that a component with room for it becomes a parallel composition.
  double parallel_bias = 0.35;
  /// Probability that a parallel composition gets three children when degrees allow.
  double three_way = 0.25;
  /// Probability of adding one more child to a series composition.
  double chain_continue = 0.4;
  bool allow_multi_edges = false;
  std::uint64_t seed = 1;
};

/// Random biconnected series-parallel plane graph of maximum degree 4 with the
/// requested number of vertices. The reference edge joins the two terminals and
/// borders the external face. Deterministic for a given spec.
/// Throws Error(InvalidInput) when the spec cannot be met.
PlaneGraph generate_sp(const GeneratorSpec& spec);

}  // namespace bendmin
