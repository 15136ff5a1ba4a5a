#include "bendmin/compaction.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace bendmin {

namespace {

// Directions in clockwise order on screen (y grows downward).
constexpr int kEast = 0, kSouth = 1, kWest = 2, kNorth = 3;

int rot(int d, int k) { return ((d + k) % 4 + 4) % 4; }

[[noreturn]] void internal(const std::string& msg) { throw Error(ErrorKind::Internal, "compaction: " + msg); }

enum class PointKind { Vertex, Bend, Split, Frame };

struct Node {
  int port[4] = {-1, -1, -1, -1};
  PointKind kind = PointKind::Vertex;
  int turn = 0;  // bends: +1 right, -1 left, walking the edge from u to v
};

struct Piece {
  int a, b, dir;  // runs from a to b heading dir
  bool frame = false;
};

// Bends expanded to nodes; every incidence has a compass direction.
class Ortho {
 public:
  std::vector<Node> nodes;
  std::vector<Piece> pieces;

  int add_node(PointKind kind) {
    nodes.push_back(Node{});
    nodes.back().kind = kind;
    return static_cast<int>(nodes.size()) - 1;
  }

  int add_piece(int a, int b, int dir, bool frame = false) {
    int p = static_cast<int>(pieces.size());
    pieces.push_back({a, b, dir, frame});
    attach(a, dir, p);
    attach(b, rot(dir, 2), p);
    return p;
  }

  int head(int dart) const { return (dart & 1) ? pieces[dart >> 1].a : pieces[dart >> 1].b; }
  int dir(int dart) const { return (dart & 1) ? rot(pieces[dart >> 1].dir, 2) : pieces[dart >> 1].dir; }
  int dart_leaving(int node, int d) const {
    int p = nodes[node].port[d];
    return pieces[p].a == node && pieces[p].dir == d ? 2 * p : 2 * p + 1;
  }

  /// Corner size at the head of `dart` (in quarter turns) and the next dart of its face.
  std::pair<int, int> corner(int dart) const {
    const int h = head(dart);
    const int in = rot(dir(dart), 2);
    for (int k = 1; k <= 4; ++k) {
      int p = rot(in, k);
      if (nodes[h].port[p] != -1) return {k, dart_leaving(h, p)};
    }
    internal("isolated node");
  }

  /// Splits piece p at a new node and returns it.
  int split(int p, PointKind kind) {
    const int z = add_node(kind);
    Piece old = pieces[p];
    pieces[p].b = z;
    nodes[old.b].port[rot(old.dir, 2)] = -1;
    nodes[z].port[rot(old.dir, 2)] = p;
    int q = static_cast<int>(pieces.size());
    pieces.push_back({z, old.b, old.dir, old.frame});
    nodes[z].port[old.dir] = q;
    nodes[old.b].port[rot(old.dir, 2)] = q;
    return z;
  }

 private:
  void attach(int node, int d, int p) {
    if (nodes[node].port[d] != -1) internal("port used twice");
    nodes[node].port[d] = p;
  }
};

}  // namespace

std::int64_t GridDrawing::bend_count() const {
  std::int64_t total = 0;
  for (const auto& pl : polylines) total += static_cast<std::int64_t>(pl.size()) - 2;
  return total;
}

GridDrawing compact(const OrthogonalRepresentation& h) {
  CheckReport report = check_representation(h);
  if (!report.ok) internal("representation is not valid: " + report.violations.front());
  const PlaneGraph& g = *h.graph;
  const int n = g.vertex_count();
  const int m = g.edge_count();

  // Direction of every incidence, propagated around vertices and along edges.
  std::vector<std::vector<int>> inc_dir(n);
  for (int v = 0; v < n; ++v) inc_dir[v].assign(g.degree(v), -1);
  std::vector<int> queue{0};
  inc_dir[0][0] = kEast;
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const int v = queue[qi];
    const int deg = g.degree(v);
    int start = 0;
    while (inc_dir[v][start] < 0) ++start;
    for (int k = 1; k < deg; ++k) {
      int i = (start + k) % deg, prev = (start + k - 1) % deg;
      int d = rot(inc_dir[v][prev], h.angles[v][prev]);
      if (inc_dir[v][i] >= 0 && inc_dir[v][i] != d) internal("inconsistent directions");
      inc_dir[v][i] = d;
    }
    for (int i = 0; i < deg; ++i) {
      const int e = g.rotation[v][i];
      int d = inc_dir[v][i];
      for (char c : turns_along(h, g.dart_from(e, v))) d = rot(d, c == 'R' ? 1 : -1);
      const int w = g.other_end(e, v);
      const int slot = g.position(w, e);
      const int back = rot(d, 2);
      if (inc_dir[w][slot] >= 0 && inc_dir[w][slot] != back) internal("inconsistent directions");
      inc_dir[w][slot] = back;
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
    }
  }

  Ortho o;
  for (int v = 0; v < n; ++v) o.add_node(PointKind::Vertex);
  std::vector<int> first_piece(m);
  for (int e = 0; e < m; ++e) {
    const int u = g.edges[e].u, v = g.edges[e].v;
    int d = inc_dir[u][g.position(u, e)];
    int at = u;
    first_piece[e] = -1;
    for (char c : h.turns[e]) {
      int b = o.add_node(PointKind::Bend);
      o.nodes[b].turn = c == 'R' ? 1 : -1;
      int p = o.add_piece(at, b, d);
      if (first_piece[e] < 0) first_piece[e] = p;
      d = rot(d, o.nodes[b].turn);
      at = b;
    }
    int p = o.add_piece(at, v, d);
    if (first_piece[e] < 0) first_piece[e] = p;
  }

  // Frame around the drawing, joined to a free direction of an external corner.
  {
    const int ext = g.external_dart;
    const int e = PlaneGraph::edge_of(ext);
    int dart = 2 * first_piece[e];
    if (ext & 1) {
      // Last piece of the edge, walked backward.
      int node = g.edges[e].v;
      dart = o.dart_leaving(node, inc_dir[node][g.position(node, e)]);
    }
    int x = -1, free_dir = -1;
    for (int cur = dart, guard = 0; guard <= static_cast<int>(o.pieces.size()) * 2; ++guard) {
      auto [k, next] = o.corner(cur);
      if (k > 1) {
        x = o.head(cur);
        free_dir = rot(o.dir(cur), 2 + 1);
        break;
      }
      cur = next;
      if (cur == dart) break;
    }
    if (x < 0) internal("external face has no free corner");
    const int tl = o.add_node(PointKind::Frame), tr = o.add_node(PointKind::Frame);
    const int br = o.add_node(PointKind::Frame), bl = o.add_node(PointKind::Frame);
    const int side[4] = {o.add_piece(tr, br, kSouth, true), o.add_piece(br, bl, kWest, true),
                         o.add_piece(bl, tl, kNorth, true), o.add_piece(tl, tr, kEast, true)};
    // side[d] is the frame side met when heading in direction d (east side first).
    const int z = o.split(side[free_dir], PointKind::Split);
    o.add_piece(x, z, free_dir);
  }

  // Rectangular refinement: extend each reflex corner until it hits its front edge.
  for (bool changed = true; changed;) {
    changed = false;
    for (int d = 0; d < 2 * static_cast<int>(o.pieces.size()); ++d) {
      if ((d & 1) == 0 && o.pieces[d >> 1].frame) continue;  // outer side of the frame
      auto [k, next] = o.corner(d);
      if (k < 3) continue;
      int sum = 2 - k;
      int cur = next;
      const int limit = 2 * static_cast<int>(o.pieces.size()) + 4;
      int steps = 0;
      while (sum != 1) {
        auto [kc, nc] = o.corner(cur);
        sum += 2 - kc;
        cur = nc;
        if (++steps > limit) internal("face without front edge");
      }
      const int heading = o.dir(d);
      const int x = o.head(d);
      const int z = o.split(cur >> 1, PointKind::Split);
      o.add_piece(x, z, heading);
      changed = true;
    }
  }

  // Coordinates: longest paths over maximal vertical (x) and horizontal (y) segments.
  const int total = static_cast<int>(o.nodes.size());
  std::vector<int> xs(total), ys(total);
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 0);
  auto find = [](std::vector<int>& uf, int a) {
    while (uf[a] != a) a = uf[a] = uf[uf[a]];
    return a;
  };
  for (const Piece& p : o.pieces) {
    auto& uf = (p.dir == kEast || p.dir == kWest) ? ys : xs;
    uf[find(uf, p.a)] = find(uf, p.b);
  }
  auto longest = [&](std::vector<int>& uf, bool horizontal) {
    std::vector<std::vector<int>> out(total);
    std::vector<int> indeg(total, 0);
    for (const Piece& p : o.pieces) {
      const bool h_piece = p.dir == kEast || p.dir == kWest;
      if (h_piece != horizontal) continue;
      int a = find(uf, p.a), b = find(uf, p.b);
      if (p.dir == kWest || p.dir == kNorth) std::swap(a, b);
      out[a].push_back(b);
      ++indeg[b];
    }
    std::vector<std::int64_t> coord(total, 0);
    std::vector<int> ready;
    for (int i = 0; i < total; ++i)
      if (find(uf, i) == i && indeg[i] == 0) ready.push_back(i);
    int done = 0;
    while (!ready.empty()) {
      int a = ready.back();
      ready.pop_back();
      ++done;
      for (int b : out[a]) {
        coord[b] = std::max(coord[b], coord[a] + 1);
        if (--indeg[b] == 0) ready.push_back(b);
      }
    }
    int groups = 0;
    for (int i = 0; i < total; ++i) groups += find(uf, i) == i;
    if (done != groups) internal("cyclic segment constraints");
    std::vector<std::int64_t> at(total);
    for (int i = 0; i < total; ++i) at[i] = coord[find(uf, i)];
    return at;
  };
  std::vector<std::int64_t> X = longest(xs, true);
  std::vector<std::int64_t> Y = longest(ys, false);

  GridDrawing out;
  out.graph = h.graph;
  out.vertices.resize(n);
  for (int v = 0; v < n; ++v) out.vertices[v] = {X[v], Y[v]};
  out.polylines.resize(m);
  for (int e = 0; e < m; ++e) {
    const int u = g.edges[e].u;
    int d = inc_dir[u][g.position(u, e)];
    int at = u;
    auto& pl = out.polylines[e];
    pl.push_back({X[u], Y[u]});
    while (true) {
      const Piece& p = o.pieces[o.nodes[at].port[d]];
      at = p.a == at ? p.b : p.a;
      const Node& nd = o.nodes[at];
      if (nd.kind == PointKind::Vertex) break;
      if (nd.kind == PointKind::Bend) {
        pl.push_back({X[at], Y[at]});
        d = rot(d, nd.turn);
      }
    }
    pl.push_back({X[at], Y[at]});
    if (at != g.edges[e].v) internal("edge walk ended at the wrong vertex");
  }
  return out;
}

namespace {

struct Segment {
  Point a, b;
  int edge, index;
};

bool horizontal(const Segment& s) { return s.a.y == s.b.y; }

// Intersection of two axis-parallel segments as a bounding box, if any.
bool intersect(const Segment& s, const Segment& t, Point& lo, Point& hi) {
  lo = {std::max(std::min(s.a.x, s.b.x), std::min(t.a.x, t.b.x)),
        std::max(std::min(s.a.y, s.b.y), std::min(t.a.y, t.b.y))};
  hi = {std::min(std::max(s.a.x, s.b.x), std::max(t.a.x, t.b.x)),
        std::min(std::max(s.a.y, s.b.y), std::max(t.a.y, t.b.y))};
  return lo.x <= hi.x && lo.y <= hi.y;
}

std::string show(const Point& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

}  // namespace

std::vector<std::string> drawing_violations(const GridDrawing& d) {
  const PlaneGraph& g = *d.graph;
  std::vector<std::string> out;
  std::map<std::pair<std::int64_t, std::int64_t>, int> at;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto [it, fresh] = at.emplace(std::make_pair(d.vertices[v].x, d.vertices[v].y), v);
    if (!fresh) out.push_back("vertices " + g.vertex_ids[it->second] + " and " + g.vertex_ids[v] + " share a point");
  }
  std::vector<Segment> segs;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& pl = d.polylines[e];
    if (pl.size() < 2 || !(pl.front() == d.vertices[g.edges[e].u]) || !(pl.back() == d.vertices[g.edges[e].v]))
      out.push_back("edge " + g.edges[e].id + " does not join its endpoints");
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
      Segment s{pl[i], pl[i + 1], e, static_cast<int>(i)};
      if ((s.a.x != s.b.x && s.a.y != s.b.y) || s.a == s.b)
        out.push_back("edge " + g.edges[e].id + " has a degenerate or diagonal segment");
      segs.push_back(s);
    }
  }
  if (!out.empty()) return out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment& s = segs[i];
      const Segment& t = segs[j];
      Point lo, hi;
      if (!intersect(s, t, lo, hi)) continue;
      bool ok = false;
      if (lo == hi) {
        const Point p = lo;
        const bool s_end = p == s.a || p == s.b;
        const bool t_end = p == t.a || p == t.b;
        if (s.edge == t.edge) {
          ok = std::abs(s.index - t.index) == 1 && s_end && t_end;
        } else if (s_end && t_end) {
          auto v = at.find({p.x, p.y});
          ok = v != at.end();
          if (ok) {
            const Edge& es = g.edges[s.edge];
            const Edge& et = g.edges[t.edge];
            const int w = v->second;
            ok = (es.u == w || es.v == w) && (et.u == w || et.v == w);
          }
        }
      }
      if (!ok)
        out.push_back("edges " + g.edges[s.edge].id + " and " + g.edges[t.edge].id + " meet at " + show(lo));
    }
  }
  // A vertex inside a segment of an edge that does not end there.
  for (const Segment& s : segs) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      const Point& p = d.vertices[v];
      const bool on = horizontal(s) ? (p.y == s.a.y && std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x))
                                    : (p.x == s.a.x && std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y));
      if (!on) continue;
      const Edge& e = g.edges[s.edge];
      if ((e.u == v || e.v == v) && (p == s.a || p == s.b)) continue;
      out.push_back("vertex " + g.vertex_ids[v] + " lies on edge " + e.id);
    }
  }
  return out;
}

std::vector<std::string> drawing_turns(const GridDrawing& d) {
  std::vector<std::string> out(d.polylines.size());
  for (std::size_t e = 0; e < d.polylines.size(); ++e) {
    const auto& pl = d.polylines[e];
    for (std::size_t i = 1; i + 1 < pl.size(); ++i) {
      std::int64_t dx1 = pl[i].x - pl[i - 1].x, dy1 = pl[i].y - pl[i - 1].y;
      std::int64_t dx2 = pl[i + 1].x - pl[i].x, dy2 = pl[i + 1].y - pl[i].y;
      std::int64_t cross = dx1 * dy2 - dy1 * dx2;
      if (cross != 0) out[e] += cross > 0 ? 'R' : 'L';
    }
  }
  return out;
}

std::string emit_svg(const GridDrawing& d, const SvgStyle& style) {
  const PlaneGraph& g = *d.graph;
  std::int64_t max_x = 0, max_y = 0;
  for (const auto& p : d.vertices) max_x = std::max(max_x, p.x), max_y = std::max(max_y, p.y);
  for (const auto& pl : d.polylines)
    for (const auto& p : pl) max_x = std::max(max_x, p.x), max_y = std::max(max_y, p.y);
  const std::int64_t width = 2 * style.margin + max_x * style.cell;
  const std::int64_t height = 2 * style.margin + max_y * style.cell;
  auto px = [&](std::int64_t x) { return style.margin + x * style.cell; };
  const int r = std::max(3, style.cell / 6);
  const int c = std::max(2, style.cell / 8);
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
    << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  s << "<g stroke=\"black\" stroke-width=\"2\" fill=\"none\">\n";
  for (int e = 0; e < g.edge_count(); ++e) {
    s << "<polyline points=\"";
    for (std::size_t i = 0; i < d.polylines[e].size(); ++i)
      s << (i ? " " : "") << px(d.polylines[e][i].x) << ',' << px(d.polylines[e][i].y);
    s << "\"/>\n";
  }
  s << "</g>\n<g stroke=\"crimson\" stroke-width=\"2\">\n";
  for (const auto& pl : d.polylines)
    for (std::size_t i = 1; i + 1 < pl.size(); ++i) {
      const std::int64_t x = px(pl[i].x), y = px(pl[i].y);
      s << "<line x1=\"" << x - c << "\" y1=\"" << y - c << "\" x2=\"" << x + c << "\" y2=\"" << y + c << "\"/>";
      s << "<line x1=\"" << x - c << "\" y1=\"" << y + c << "\" x2=\"" << x + c << "\" y2=\"" << y - c << "\"/>\n";
    }
  s << "</g>\n<g fill=\"white\" stroke=\"black\" stroke-width=\"2\">\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    s << "<circle cx=\"" << px(d.vertices[v].x) << "\" cy=\"" << px(d.vertices[v].y) << "\" r=\"" << r << "\"/>\n";
  s << "</g>\n";
  if (style.labels) {
    s << "<g font-family=\"sans-serif\" font-size=\"" << std::max(8, style.cell / 4) << "\">\n";
    for (int v = 0; v < g.vertex_count(); ++v)
      s << "<text x=\"" << px(d.vertices[v].x) + r + 2 << "\" y=\"" << px(d.vertices[v].y) - r - 2 << "\">"
        << g.vertex_ids[v] << "</text>\n";
    s << "</g>\n";
  }
  s << "</svg>\n";
  return s.str();
}

nlohmann::json to_json(const GridDrawing& d) {
  const PlaneGraph& g = *d.graph;
  nlohmann::json verts = nlohmann::json::object(), edges = nlohmann::json::object();
  for (int v = 0; v < g.vertex_count(); ++v) verts[g.vertex_ids[v]] = {d.vertices[v].x, d.vertices[v].y};
  for (int e = 0; e < g.edge_count(); ++e) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : d.polylines[e]) pts.push_back({p.x, p.y});
    edges[g.edges[e].id] = {{"u", g.vertex_ids[g.edges[e].u]},
                            {"v", g.vertex_ids[g.edges[e].v]},
                            {"points", pts},
                            {"bends", d.polylines[e].size() - 2}};
  }
  return {{"vertices", verts}, {"edges", edges}, {"bends", d.bend_count()}};
}

}  // namespace bendmin
