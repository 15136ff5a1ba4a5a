#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace testsupport {

using bendmin::NodeKind;

std::int64_t CostCurves::at(int node, std::int64_t sigma2) const {
  if (sigma2 < -range || sigma2 > range) return kInf;
  return cost[node][sigma2 + range];
}

std::vector<std::int64_t> CostCurves::reachable(int node, std::int64_t bends) const {
  std::vector<std::int64_t> out;
  for (std::int64_t s = -range; s <= range; ++s)
    if (at(node, s) <= bends) out.push_back(s);
  return out;
}

std::vector<std::vector<int>> component_edges(const SpqTree& tree) {
  std::vector<std::vector<int>> edges(tree.size());
  for (int id : tree.postorder) {
    const auto& nd = tree[id];
    if (nd.kind == NodeKind::Chain) {
      edges[id] = nd.chain_edges;
      continue;
    }
    for (int c : nd.children) edges[id].insert(edges[id].end(), edges[c].begin(), edges[c].end());
  }
  return edges;
}

namespace {

int incidences(const PlaneGraph& g, const std::vector<int>& edges, int w) {
  int n = 0;
  for (int e : edges) n += (g.edges[e].u == w) + (g.edges[e].v == w);
  return n;
}

std::int64_t add(std::int64_t a, std::int64_t b) { return (a >= kInf || b >= kInf) ? kInf : a + b; }

}  // namespace

CostCurves cost_curves(const SpqTree& tree, const std::vector<int>& extra_length) {
  const PlaneGraph& g = *tree.graph;
  int extra_total = 0;
  for (int x : extra_length) extra_total += x;
  CostCurves cc;
  cc.range = 4 * (g.edge_count() + extra_total) + 16;
  const std::int64_t width = 2 * cc.range + 1;
  cc.cost.assign(tree.size(), std::vector<std::int64_t>(width, kInf));
  auto edges = component_edges(tree);
  auto get = [&](int node, std::int64_t s) { return cc.at(node, s); };

  for (int id : tree.postorder) {
    const auto& nd = tree[id];
    auto& out = cc.cost[id];
    if (nd.kind == NodeKind::Root) continue;
    if (nd.kind == NodeKind::Chain) {
      std::int64_t interior = nd.chain_length() - 1 + (id < static_cast<int>(extra_length.size()) ? extra_length[id] : 0);
      for (std::int64_t s = -cc.range; s <= cc.range; s += 1) {
        if (s % 2 != 0) continue;
        out[s + cc.range] = std::max<std::int64_t>(0, std::abs(s) / 2 - interior);
      }
      continue;
    }
    if (nd.kind == NodeKind::Series) {
      std::vector<std::int64_t> acc = cc.cost[nd.children[0]];
      for (std::size_t i = 1; i < nd.children.size(); ++i) {
        const auto& next = cc.cost[nd.children[i]];
        std::vector<std::int64_t> sum(width, kInf);
        for (std::int64_t a = 0; a < width; ++a) {
          if (acc[a] >= kInf) continue;
          for (std::int64_t b = 0; b < width; ++b) {
            if (next[b] >= kInf) continue;
            std::int64_t idx = a + b - cc.range;
            if (idx < 0 || idx >= width) continue;
            sum[idx] = std::min(sum[idx], acc[a] + next[b]);
          }
        }
        acc = std::move(sum);
      }
      out = std::move(acc);
      continue;
    }
    // Parallel node.
    if (nd.children.size() == 3) {
      for (std::int64_t s = -cc.range; s <= cc.range; ++s)
        out[s + cc.range] =
            add(add(get(nd.children[0], s + 4), get(nd.children[1], s)), get(nd.children[2], s - 4));
      continue;
    }
    const int l = nd.children[0], r = nd.children[1];
    const int poles[2] = {nd.source, nd.sink};
    int kl[2], kr[2];
    bool fixed[2];
    for (int p = 0; p < 2; ++p) {
      int w = poles[p];
      int outside = g.degree(w) - incidences(g, edges[id], w);
      kl[p] = (incidences(g, edges[l], w) == 1 && outside == 1) ? 2 : 1;
      kr[p] = (incidences(g, edges[r], w) == 1 && outside == 1) ? 2 : 1;
      fixed[p] = g.degree(w) == 4;
    }
    static const int kChoices[3][2] = {{1, 1}, {0, 1}, {1, 0}};
    for (std::int64_t s = -cc.range; s <= cc.range; ++s) {
      std::int64_t best = kInf;
      for (int cu = 0; cu < (fixed[0] ? 1 : 3); ++cu) {
        for (int cv = 0; cv < (fixed[1] ? 1 : 3); ++cv) {
          std::int64_t sl = s + kl[0] * kChoices[cu][0] + kl[1] * kChoices[cv][0];
          std::int64_t sr = s - kr[0] * kChoices[cu][1] - kr[1] * kChoices[cv][1];
          best = std::min(best, add(get(l, sl), get(r, sr)));
        }
      }
      out[s + cc.range] = best;
    }
  }

  const auto& root = tree[tree.root];
  const int inner = tree.inner;
  const int ref = tree.reference_chain;
  if (g.edges[tree[ref].chain_edges.front()].dummy) {
    cc.total = *std::min_element(cc.cost[inner].begin(), cc.cost[inner].end());
    return cc;
  }
  std::int64_t interior = tree[ref].chain_length() - 1 + (ref < static_cast<int>(extra_length.size()) ? extra_length[ref] : 0);
  int span[2];
  const int root_poles[2] = {root.source, root.sink};
  for (int p = 0; p < 2; ++p) span[p] = incidences(g, edges[inner], root_poles[p]) == 1 ? 1 : 0;
  for (std::int64_t s = -cc.range; s <= cc.range; ++s) {
    std::int64_t c = get(inner, s);
    if (c >= kInf) continue;
    for (int as = -span[0]; as <= span[0]; ++as) {
      for (int at = -span[1]; at <= span[1]; ++at) {
        std::int64_t rest = 8 - s - 2 * as - 2 * at;
        if (rest % 2 != 0) continue;
        std::int64_t turns = std::abs(rest / 2);
        cc.total = std::min(cc.total, c + std::max<std::int64_t>(0, turns - interior));
      }
    }
  }
  return cc;
}

PlaneGraph subdivide_edge(const PlaneGraph& g, int edge, int count) {
  PlaneGraph out = g;
  const int v = g.edges[edge].v;
  int prev = edge;
  int prev_vertex = -1;
  for (int i = 1; i <= count; ++i) {
    int w = out.vertex_count();
    out.vertex_ids.push_back(g.edges[edge].id + "@" + std::to_string(i));
    out.rotation.emplace_back();
    if (i == 1) {
      out.edges[edge].v = w;
    } else {
      out.edges.push_back({g.edges[edge].id + "#" + std::to_string(i - 1), prev_vertex, w, false});
      prev = out.edge_count() - 1;
      out.rotation[prev_vertex].push_back(prev);
    }
    out.rotation[w].push_back(prev);
    prev_vertex = w;
  }
  out.edges.push_back({g.edges[edge].id + "#" + std::to_string(count), prev_vertex, v, false});
  int last = out.edge_count() - 1;
  out.rotation[prev_vertex].push_back(last);
  for (int& e : out.rotation[v])
    if (e == edge) e = last;
  out.finalize();
  return out;
}

namespace {

int position_in(const PlaneGraph& g, int vertex, int edge, bool second_end) {
  const auto& rot = g.rotation[vertex];
  int seen = 0;
  for (std::size_t i = 0; i < rot.size(); ++i) {
    if (rot[i] != edge) continue;
    if (seen == (second_end ? 1 : 0)) return static_cast<int>(i);
    ++seen;
  }
  return -1;
}

}  // namespace

std::vector<std::string> validate_representation(const OrthogonalRepresentation& h) {
  const PlaneGraph& g = *h.graph;
  std::vector<std::string> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    int sum = 0;
    for (int a : h.angles[v]) {
      if (a < 1 || a > 4) out.push_back("vertex " + g.vertex_ids[v] + " has angle " + std::to_string(a));
      sum += a;
    }
    if (sum != 4) out.push_back("angles at vertex " + g.vertex_ids[v] + " sum to " + std::to_string(sum));
  }
  for (int e = 0; e < g.edge_count(); ++e)
    for (char c : h.turns[e])
      if (c != 'L' && c != 'R') out.push_back("edge " + g.edges[e].id + " has an invalid bend symbol");

  // Darts are (edge, reversed); the face on the left continues with the
  // clockwise-next edge at the head.
  const int m = g.edge_count();
  std::vector<char> used(2 * m, 0);
  int faces = 0;
  for (int start = 0; start < 2 * m; ++start) {
    if (used[start]) continue;
    ++faces;
    std::int64_t balance = 0;
    bool external = false;
    int d = start;
    while (!used[d]) {
      used[d] = 1;
      if (d == g.external_dart) external = true;
      int e = d / 2;
      bool reversed = d % 2 == 1;
      int head = reversed ? g.edges[e].u : g.edges[e].v;
      for (char c : h.turns[e]) balance += ((c == 'L') != reversed) ? 1 : -1;
      // For a self-loop-free graph each edge appears once in the rotation.
      int pos = position_in(g, head, e, false);
      balance += 2 - h.angles[head][pos];
      int next_edge = g.rotation[head][(pos + 1) % g.rotation[head].size()];
      d = 2 * next_edge + (g.edges[next_edge].u == head ? 0 : 1);
    }
    std::int64_t want = external ? -4 : 4;
    if (balance != want)
      out.push_back("face through dart " + std::to_string(start) + " has balance " + std::to_string(balance) +
                    " instead of " + std::to_string(want));
  }
  if (faces != m - g.vertex_count() + 2) out.push_back("face count does not match Euler's formula");
  return out;
}

namespace {

struct Segment {
  bendmin::Point a, b;
  int edge = 0;
  int index = 0;
};

bool on_segment(const Segment& s, const bendmin::Point& p) {
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) && std::min(s.a.y, s.b.y) <= p.y &&
         p.y <= std::max(s.a.y, s.b.y);
}

}  // namespace

std::vector<std::string> validate_drawing(const bendmin::GridDrawing& d, const OrthogonalRepresentation& h) {
  const PlaneGraph& g = *h.graph;
  std::vector<std::string> out;
  std::set<std::pair<std::int64_t, std::int64_t>> points;
  for (const auto& p : d.vertices)
    if (!points.insert({p.x, p.y}).second) out.push_back("two vertices share a grid point");

  std::vector<Segment> segs;
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& pl = d.polylines[e];
    if (pl.size() < 2 || !(pl.front() == d.vertices[g.edges[e].u]) || !(pl.back() == d.vertices[g.edges[e].v])) {
      out.push_back("edge " + g.edges[e].id + " does not join its endpoints");
      continue;
    }
    std::string turns;
    for (std::size_t i = 0; i + 1 < pl.size(); ++i) {
      if (pl[i].x != pl[i + 1].x && pl[i].y != pl[i + 1].y) out.push_back("edge " + g.edges[e].id + " is not axis-parallel");
      if (pl[i] == pl[i + 1]) out.push_back("edge " + g.edges[e].id + " has an empty segment");
      segs.push_back({pl[i], pl[i + 1], e, static_cast<int>(i)});
      if (i + 2 < pl.size()) {
        std::int64_t ax = pl[i + 1].x - pl[i].x, ay = pl[i + 1].y - pl[i].y;
        std::int64_t bx = pl[i + 2].x - pl[i + 1].x, by = pl[i + 2].y - pl[i + 1].y;
        std::int64_t cross = ax * by - ay * bx;
        // y grows downward, so a positive cross product is a clockwise (right) turn.
        if (cross > 0) turns += 'R';
        else if (cross < 0) turns += 'L';
        else out.push_back("edge " + g.edges[e].id + " has a straight bend point");
      }
    }
    if (turns != h.turns[e]) out.push_back("edge " + g.edges[e].id + " bends " + turns + " instead of " + h.turns[e]);
  }

  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      const Segment& s = segs[i];
      const Segment& t = segs[j];
      std::int64_t x0 = std::max(std::min(s.a.x, s.b.x), std::min(t.a.x, t.b.x));
      std::int64_t x1 = std::min(std::max(s.a.x, s.b.x), std::max(t.a.x, t.b.x));
      std::int64_t y0 = std::max(std::min(s.a.y, s.b.y), std::min(t.a.y, t.b.y));
      std::int64_t y1 = std::min(std::max(s.a.y, s.b.y), std::max(t.a.y, t.b.y));
      if (x0 > x1 || y0 > y1) continue;
      bool single = x0 == x1 && y0 == y1;
      bendmin::Point p{x0, y0};
      bool allowed = false;
      if (single && s.edge == t.edge) {
        allowed = std::abs(s.index - t.index) == 1;
      } else if (single) {
        for (int w : {g.edges[s.edge].u, g.edges[s.edge].v})
          if ((w == g.edges[t.edge].u || w == g.edges[t.edge].v) && d.vertices[w] == p) allowed = true;
      }
      if (!allowed) out.push_back("edges " + g.edges[s.edge].id + " and " + g.edges[t.edge].id + " meet illegally");
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    for (const Segment& s : segs)
      if (g.edges[s.edge].u != v && g.edges[s.edge].v != v && on_segment(s, d.vertices[v]))
        out.push_back("vertex " + g.vertex_ids[v] + " lies on edge " + g.edges[s.edge].id);
  return out;
}

std::string data_path(const std::string& name) { return std::string(BENDMIN_DATA_DIR) + "/" + name; }

}  // namespace testsupport
