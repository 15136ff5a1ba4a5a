#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bendmin/representation.hpp"

namespace bendmin {

struct Point {
  std::int64_t x = 0;
  std::int64_t y = 0;
  bool operator==(const Point&) const = default;
};

/// Grid coordinates with y growing downward. polylines[e] runs from the edge's
/// stored u to v; interior points are the bends.
struct GridDrawing {
  std::shared_ptr<const PlaneGraph> graph;
  std::vector<Point> vertices;
  std::vector<std::vector<Point>> polylines;

  std::int64_t bend_count() const;
};

/// Rectangular refinement followed by longest-path coordinates on maximal
/// segments. Throws Error(Internal) when `h` fails the H1/H2 check.
GridDrawing compact(const OrthogonalRepresentation& h);

/// Problems with the drawing: diagonal segments, shared vertex points, vertices
/// on foreign segments, and crossings. Empty for a valid planar drawing.
std::vector<std::string> drawing_violations(const GridDrawing& d);

/// Turn strings read back from the polylines (same format as the representation).
std::vector<std::string> drawing_turns(const GridDrawing& d);

struct SvgStyle {
  int cell = 40;
  int margin = 30;
  bool labels = true;
};

std::string emit_svg(const GridDrawing& d, const SvgStyle& style = {});
nlohmann::json to_json(const GridDrawing& d);

}  // namespace bendmin
