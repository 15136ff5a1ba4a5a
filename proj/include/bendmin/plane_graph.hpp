#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace bendmin {

enum class ErrorKind { InvalidInput, NotSeriesParallel, Internal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct Edge {
  std::string id;
  int u = -1;
  int v = -1;
  bool dummy = false;
};

/// A connected plane graph of maximum degree 4 given by a clockwise rotation
/// system and a named external face.
///
/// Darts: dart 2e runs u->v along edge e, dart 2e+1 runs v->u. Every dart has
/// exactly one face on its left; faces are traced with the face on the left.
/// Angle slot i at vertex v is the corner between rotation[v][i] and
/// rotation[v][i+1] in clockwise order.
class PlaneGraph {
 public:
  std::vector<std::string> vertex_ids;
  std::vector<Edge> edges;
  std::vector<std::vector<int>> rotation;
  int external_dart = -1;
  int reference_edge = -1;

  std::vector<std::vector<int>> faces;
  std::vector<int> dart_face;
  int external_face = -1;

  int vertex_count() const { return static_cast<int>(vertex_ids.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int degree(int v) const { return static_cast<int>(rotation[v].size()); }

  static int dart_of(int edge, bool reversed) { return 2 * edge + (reversed ? 1 : 0); }
  static int edge_of(int dart) { return dart >> 1; }
  int tail(int dart) const { return (dart & 1) ? edges[dart >> 1].v : edges[dart >> 1].u; }
  int head(int dart) const { return (dart & 1) ? edges[dart >> 1].u : edges[dart >> 1].v; }
  /// Dart of `edge` leaving `from`.
  int dart_from(int edge, int from) const { return edges[edge].u == from ? 2 * edge : 2 * edge + 1; }
  int other_end(int edge, int v) const { return edges[edge].u == v ? edges[edge].v : edges[edge].u; }

  /// Position of `edge` in the rotation of its endpoint `v`.
  int position(int v, int edge) const { return edges[edge].u == v ? end_pos_[2 * edge] : end_pos_[2 * edge + 1]; }
  /// Next dart of the face on the left of `dart`.
  int next_in_face(int dart) const;
  /// Angle slot at head(dart) that lies in the face on the left of `dart`.
  int corner_slot(int dart) const { return position(head(dart), edge_of(dart)); }

  int find_vertex(const std::string& id) const;
  int find_edge(const std::string& id) const;

  /// Recomputes positions and faces and validates the embedding.
  /// Throws Error(InvalidInput) on any inconsistency.
  void finalize();

  /// Reference edge oriented so that the external face lies to its right:
  /// returns (source, sink).
  std::pair<int, int> reference_poles() const;

 private:
  std::vector<int> end_pos_;
};

PlaneGraph parse_plane_graph(const nlohmann::json& doc);
PlaneGraph parse_plane_graph_text(const std::string& text);
/// Reads a file, or standard input when `path` is "-".
PlaneGraph load_plane_graph(const std::string& path);
nlohmann::json to_json(const PlaneGraph& g);

/// True when the graph has a single block containing a cycle.
bool is_biconnected(const PlaneGraph& g);

/// Ways to close a two-terminal graph into a biconnected one with an extra edge
/// routed through the external face. Each candidate is a pair of external
/// corners (vertex, slot). Empty when the graph is already biconnected.
/// Throws when the block structure is not a path of blocks.
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> augmentation_candidates(const PlaneGraph& g);

/// Copy of `g` with a dummy edge joining the two corners; the dummy becomes the
/// reference edge and the external face lies to its right.
PlaneGraph add_dummy_edge(const PlaneGraph& g, std::pair<int, int> first, std::pair<int, int> second);

/// Returns `g` itself when it is biconnected, otherwise the first augmentation candidate.
PlaneGraph biconnect_augment(const PlaneGraph& g);

}  // namespace bendmin
