#pragma once

#include <string>
#include <vector>

#include "bendmin/plane_graph.hpp"
#include "bendmin/spirality.hpp"

namespace bendmin {

enum class NodeKind { Chain, Series, Parallel, Root };

/// Node of the SPQ*-tree. Children of Series nodes are listed from source to
/// sink; children of Parallel and Root nodes from left to right, where left is
/// the clockwise-first side at the source.
struct SpqNode {
  NodeKind kind = NodeKind::Chain;
  int source = -1;
  int sink = -1;
  int parent = -1;
  std::vector<int> children;

  /// Chain nodes: edges from source to sink and the vertices between them
  /// (vertices.size() == edges.size() + 1).
  std::vector<int> chain_edges;
  std::vector<int> chain_vertices;

  /// Number of edges of the component incident to each pole.
  int indeg_source = 0;
  int indeg_sink = 0;
  int outdeg_source = 0;
  int outdeg_sink = 0;

  /// Leftmost and rightmost component edges at each pole.
  int left_edge_source = -1;
  int right_edge_source = -1;
  int left_edge_sink = -1;
  int right_edge_sink = -1;

  int chain_length() const { return static_cast<int>(chain_edges.size()); }
};

struct SpqTree {
  const PlaneGraph* graph = nullptr;
  std::vector<SpqNode> nodes;
  int root = -1;
  /// Child of the root containing everything but the reference edge.
  int inner = -1;
  /// Chain node of the reference edge.
  int reference_chain = -1;
  /// Children before parents.
  std::vector<int> postorder;

  const SpqNode& operator[](int i) const { return nodes[i]; }
  int size() const { return static_cast<int>(nodes.size()); }
  int count(NodeKind kind) const;
};

/// Builds the SPQ*-tree of a biconnected series-parallel plane graph rooted at
/// its reference edge. Runs in linear time without recursion.
/// Throws Error(NotSeriesParallel) when the embedded graph is not series-parallel
/// with respect to the reference edge's endpoints.
SpqTree build_spq_tree(const PlaneGraph& g);

/// Type and angle coefficients of a two-child non-root P-node.
PNodeType classify_p_node(const SpqTree& tree, int node);

/// Number of root poles whose angle toward the reference edge is free
/// (poles where the inner child has a single edge).
int root_free_poles(const SpqTree& tree);

/// Edge whose subdivision vertices can absorb bends for the component: the
/// first edge of a chain child. Returns -1 when the component has none.
int exposed_edge(const SpqTree& tree, int node);

/// Indented description of the tree, one node per line, children in
/// left-to-right order.
std::string dump_tree(const SpqTree& tree);

/// Node kinds, poles and ordered children.
nlohmann::json tree_to_json(const SpqTree& tree);

}  // namespace bendmin
