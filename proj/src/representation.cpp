#include "bendmin/representation.hpp"

#include <algorithm>
#include <cstdlib>

namespace bendmin {

namespace {

[[noreturn]] void internal(const std::string& msg) { throw Error(ErrorKind::Internal, msg); }

char flip(char c) { return c == 'R' ? 'L' : 'R'; }

// Stores `count` bends of direction `dir` seen walking `dart`.
void put_bends(OrthogonalRepresentation& h, int dart, std::int64_t count, char dir) {
  std::string& t = h.turns[PlaneGraph::edge_of(dart)];
  t.assign(static_cast<std::size_t>(count), (dart & 1) ? flip(dir) : dir);
}

int wrap(int i, int n) { return ((i % n) + n) % n; }

}  // namespace

std::int64_t OrthogonalRepresentation::bend_count() const {
  std::int64_t total = 0;
  for (const auto& t : turns) total += static_cast<std::int64_t>(t.size());
  return total;
}

std::string turns_along(const OrthogonalRepresentation& h, int dart) {
  const std::string& t = h.turns[PlaneGraph::edge_of(dart)];
  if ((dart & 1) == 0) return t;
  std::string r(t.rbegin(), t.rend());
  for (char& c : r) c = flip(c);
  return r;
}

int vertex_turn(const OrthogonalRepresentation& h, int via, int in_edge, int out_edge) {
  const PlaneGraph& g = *h.graph;
  const int deg = g.degree(via);
  int i = g.position(via, out_edge);
  const int stop = g.position(via, in_edge);
  int units = 0;
  do {
    units += h.angles[via][i];
    i = (i + 1) % deg;
  } while (i != stop);
  return 2 - units;
}

namespace {

int bend_value(char c) { return c == 'R' ? 1 : -1; }

std::string check_vertex(const OrthogonalRepresentation& h, int v) {
  const PlaneGraph& g = *h.graph;
  if (static_cast<int>(h.angles[v].size()) != g.degree(v)) return "vertex " + g.vertex_ids[v] + ": wrong angle count";
  int sum = 0;
  for (int a : h.angles[v]) {
    if (a < 1 || a > 4) return "vertex " + g.vertex_ids[v] + ": angle " + std::to_string(90 * a) + " out of range";
    sum += a;
  }
  if (sum != 4) return "vertex " + g.vertex_ids[v] + ": angles sum to " + std::to_string(90 * sum) + " degrees";
  return {};
}

std::string check_face(const OrthogonalRepresentation& h, int f) {
  const PlaneGraph& g = *h.graph;
  int balance = 0;
  for (int d : g.faces[f]) {
    const std::string& t = h.turns[PlaneGraph::edge_of(d)];
    for (char c : t) {
      if (c != 'L' && c != 'R') return "edge " + g.edges[PlaneGraph::edge_of(d)].id + ": bad bend symbol";
      // With the face on the left, a left bend leaves a 90-degree corner inside.
      balance -= (d & 1) ? -bend_value(c) : bend_value(c);
    }
    balance += 2 - h.angles[g.head(d)][g.corner_slot(d)];
  }
  const int expected = f == g.external_face ? -4 : 4;
  if (balance != expected)
    return "face " + std::to_string(f) + ": turn balance " + std::to_string(balance) + ", expected " +
           std::to_string(expected);
  return {};
}

}  // namespace

CheckReport check_representation(const OrthogonalRepresentation& h) {
  CheckReport r;
  const PlaneGraph& g = *h.graph;
  if (static_cast<int>(h.angles.size()) != g.vertex_count() || static_cast<int>(h.turns.size()) != g.edge_count()) {
    r.ok = false;
    r.violations.push_back("representation does not match the graph");
    return r;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (auto s = check_vertex(h, v); !s.empty()) r.violations.push_back(s);
  if (r.violations.empty())
    for (int f = 0; f < static_cast<int>(g.faces.size()); ++f)
      if (auto s = check_face(h, f); !s.empty()) r.violations.push_back(s);
  r.ok = r.violations.empty();
  return r;
}

CheckReport check_representation_parallel(const OrthogonalRepresentation& h) {
  CheckReport r;
  const PlaneGraph& g = *h.graph;
  if (static_cast<int>(h.angles.size()) != g.vertex_count() || static_cast<int>(h.turns.size()) != g.edge_count()) {
    r.ok = false;
    r.violations.push_back("representation does not match the graph");
    return r;
  }
  const int n = g.vertex_count();
  const int nf = static_cast<int>(g.faces.size());
  std::vector<std::string> vmsg(n), fmsg(nf);
  bool vertices_ok = true;
#pragma omp parallel for schedule(static) reduction(&& : vertices_ok)
  for (int v = 0; v < n; ++v) {
    vmsg[v] = check_vertex(h, v);
    vertices_ok = vertices_ok && vmsg[v].empty();
  }
  if (vertices_ok) {
#pragma omp parallel for schedule(dynamic, 64)
    for (int f = 0; f < nf; ++f) fmsg[f] = check_face(h, f);
  }
  for (auto& s : vmsg)
    if (!s.empty()) r.violations.push_back(std::move(s));
  for (auto& s : fmsg)
    if (!s.empty()) r.violations.push_back(std::move(s));
  r.ok = r.violations.empty();
  return r;
}

nlohmann::json to_json(const OrthogonalRepresentation& h) {
  const PlaneGraph& g = *h.graph;
  nlohmann::json doc;
  nlohmann::json verts = nlohmann::json::object();
  for (int v = 0; v < g.vertex_count(); ++v) {
    nlohmann::json list = nlohmann::json::array();
    const int deg = g.degree(v);
    for (int i = 0; i < deg; ++i)
      list.push_back({{"edge", g.edges[g.rotation[v][i]].id},
                      {"next", g.edges[g.rotation[v][(i + 1) % deg]].id},
                      {"angle", 90 * h.angles[v][i]}});
    verts[g.vertex_ids[v]] = list;
  }
  nlohmann::json edges = nlohmann::json::object();
  for (int e = 0; e < g.edge_count(); ++e)
    edges[g.edges[e].id] = {{"u", g.vertex_ids[g.edges[e].u]},
                            {"v", g.vertex_ids[g.edges[e].v]},
                            {"turns", h.turns[e]},
                            {"bends", h.turns[e].size()}};
  doc["vertices"] = verts;
  doc["edges"] = edges;
  doc["bends"] = h.bend_count();
  return doc;
}

RootChoice choose_root_spirality(const SpiralityInterval& inner, const RootWindow& window, int free_source,
                                 int free_sink, bool dummy_reference) {
  auto closest_to_four = [](Spirality2 lo, Spirality2 hi) {
    if (8 <= lo) return lo;
    if (8 >= hi) return hi;
    Spirality2 k = lo + 2 * ((8 - lo) / 2);
    return k;  // equals 8, or the smaller of two equally close values
  };
  RootChoice c;
  const Spirality2 lo = std::max(inner.lo, window.window.lo);
  const Spirality2 hi = std::min(inner.hi, window.window.hi);
  int want;  // desired alpha_source + alpha_sink
  if (dummy_reference) {
    c.inner = closest_to_four(inner.lo, inner.hi);
    want = static_cast<int>((8 - c.inner) / 2);
  } else if (lo <= hi) {
    c.inner = closest_to_four(lo, hi);
    want = static_cast<int>((8 - c.inner) / 2);
  } else if (inner.hi < window.window.lo) {
    c.inner = inner.hi;
    want = free_source + free_sink;
  } else {
    c.inner = inner.lo;
    want = -(free_source + free_sink);
  }
  c.alpha_source = std::clamp(want, -free_source, free_source);
  c.alpha_sink = std::clamp(want - c.alpha_source, -free_sink, free_sink);
  c.reference = c.inner + 2 * (c.alpha_source + c.alpha_sink) - 8;
  c.reference_bends = std::abs(c.reference) / 2;
  return c;
}

std::vector<Spirality2> distribute_series(Spirality2 target, const std::vector<SpiralityInterval>& children) {
  std::vector<Spirality2> out(children.size());
  Spirality2 slack = -target;
  for (std::size_t i = 0; i < children.size(); ++i) {
    out[i] = children[i].hi;
    slack += children[i].hi;
  }
  if (slack < 0) internal("series target above the sum of maxima");
  for (std::size_t i = 0; i < children.size() && slack > 0; ++i) {
    Spirality2 d = std::min(slack, children[i].hi - children[i].lo);
    out[i] -= d;
    slack -= d;
  }
  if (slack != 0) internal("series target below the sum of minima");
  return out;
}

P3Split distribute_p3(Spirality2 target, const SpiralityInterval& left, const SpiralityInterval& center,
                      const SpiralityInterval& right) {
  P3Split s;
  s.child[0] = target + 4;
  s.child[1] = target;
  s.child[2] = target - 4;
  const SpiralityInterval* iv[3] = {&left, &center, &right};
  for (int i = 0; i < 3; ++i) s.bends[i] = point_distance(s.child[i], *iv[i]) / 2;
  return s;
}

namespace {

// Bends a child needs to reach `value`, or -1 when it cannot.
std::int64_t child_cost(const ChildCapacity& c, Spirality2 value) {
  if (((value - c.interval.lo) & 1) != 0) return -1;
  if (c.exposed) return point_distance(value, c.interval) / 2;
  if (value > c.interval.hi) {
    std::int64_t d = (value - c.interval.hi) / 2;
    return d <= c.breakpoints.plus ? d : -1;
  }
  if (value < c.interval.lo) {
    std::int64_t d = (c.interval.lo - value) / 2;
    return d <= c.breakpoints.minus ? d : -1;
  }
  return 0;
}

// Pole where the P-node owns a free 90/180 choice on each side.
bool free_pole(const PlaneGraph& g, int w, int indeg) { return indeg == 2 && g.degree(w) == 3; }

}  // namespace

P2Split distribute_p2(Spirality2 target, const PNodeType& type, const SpqNode& node, const PlaneGraph& g,
                      const ChildCapacity& left, const ChildCapacity& right, std::int64_t allowance,
                      std::mt19937_64* rng) {
  const bool free_u = free_pole(g, node.source, node.indeg_source);
  const bool free_v = free_pole(g, node.sink, node.indeg_sink);
  std::vector<P2Split> accepted;
  for (int mask = 0; mask < 16; ++mask) {
    AngleChoice a{(mask >> 3) & 1, (mask >> 2) & 1, (mask >> 1) & 1, mask & 1};
    if (free_u ? a.ul + a.ur < 1 : (a.ul != 1 || a.ur != 1)) continue;
    if (free_v ? a.vl + a.vr < 1 : (a.vl != 1 || a.vr != 1)) continue;
    P2Split s;
    s.alpha = a;
    s.left = target + type.k_ul * a.ul + type.k_vl * a.vl;
    s.right = target - type.k_ur * a.ur - type.k_vr * a.vr;
    s.bends_left = child_cost(left, s.left);
    s.bends_right = child_cost(right, s.right);
    if (s.bends_left < 0 || s.bends_right < 0 || s.bends_left + s.bends_right != allowance) continue;
    if (!rng) return s;
    accepted.push_back(s);
  }
  if (accepted.empty()) internal("no admissible angle choice at a " + type.name() + " node");
  return accepted[std::uniform_int_distribution<std::size_t>(0, accepted.size() - 1)(*rng)];
}

Construction assemble(const SpqTree& tree, const BudgetResult& budgets, std::mt19937_64* rng) {
  const PlaneGraph& g = *tree.graph;
  const auto& ann = budgets.nodes;
  Construction out;
  out.rep.graph = std::shared_ptr<const PlaneGraph>(&g, [](const PlaneGraph*) {});
  out.rep.angles.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    out.rep.angles[v].assign(g.degree(v), g.degree(v) == 4 ? 1 : 0);
  out.rep.turns.assign(g.edge_count(), std::string());
  out.target.assign(tree.size(), 0);
  out.extra.assign(tree.size(), 0);
  out.alpha.assign(tree.size(), AngleChoice{});
  auto& angles = out.rep.angles;
  auto slot = [&](int v, int edge, int offset) { return wrap(g.position(v, edge) + offset, g.degree(v)); };

  // Root.
  const SpqNode& root = tree[tree.root];
  const SpqNode& inner = tree[tree.inner];
  const int s = root.source, t = root.sink;
  const int ref = g.reference_edge;
  const int free_s = inner.indeg_source == 1 ? 1 : 0;
  const int free_t = inner.indeg_sink == 1 ? 1 : 0;
  RootChoice rc = choose_root_spirality(ann[tree.inner].interval, budgets.window, free_s, free_t,
                                        budgets.dummy_reference);
  if (rng && !budgets.dummy_reference && rc.reference_bends == 0) {
    // Any value of the window intersection works; pick one and re-derive the angles.
    const auto& iv = ann[tree.inner].interval;
    Spirality2 lo = std::max(iv.lo, budgets.window.window.lo), hi = std::min(iv.hi, budgets.window.window.hi);
    Spirality2 pick = lo + 2 * std::uniform_int_distribution<Spirality2>(0, (hi - lo) / 2)(*rng);
    rc.inner = pick;
    int want = static_cast<int>((8 - pick) / 2);
    std::vector<std::pair<int, int>> options;
    for (int as = -free_s; as <= free_s; ++as)
      for (int at = -free_t; at <= free_t; ++at)
        if (as + at == want) options.push_back({as, at});
    auto [as, at] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(*rng)];
    rc.alpha_source = as;
    rc.alpha_sink = at;
    rc.reference = 0;
  }
  out.root = rc;
  out.target[tree.inner] = rc.inner;
  if (free_s) {
    angles[s][slot(s, inner.right_edge_source, 0)] = 2 - rc.alpha_source;
    angles[s][slot(s, ref, 0)] = 2 + rc.alpha_source;
  }
  if (free_t) {
    angles[t][slot(t, ref, 0)] = 2 - rc.alpha_sink;
    angles[t][slot(t, inner.right_edge_sink, 0)] = 2 + rc.alpha_sink;
  }
  if (rc.reference != 0)
    put_bends(out.rep, g.dart_from(ref, s), rc.reference_bends, rc.reference > 0 ? 'R' : 'L');

  std::vector<int> order(tree.postorder.rbegin(), tree.postorder.rend());
  for (int id : order) {
    const SpqNode& nd = tree[id];
    if (id == tree.root || id == tree.reference_chain) continue;
    const Spirality2 sigma = out.target[id];
    const std::int64_t extra = out.extra[id];
    switch (nd.kind) {
      case NodeKind::Chain: {
        const std::int64_t k = std::abs(sigma) / 2;
        const char dir = sigma > 0 ? 'R' : 'L';
        const std::int64_t on_edge = std::min(k, extra);
        const std::int64_t interior = k - on_edge;
        if (interior > nd.chain_length() - 1) internal("chain cannot reach its target spirality");
        if (on_edge > 0) put_bends(out.rep, g.dart_from(nd.chain_edges[0], nd.chain_vertices[0]), on_edge, dir);
        for (int i = 1; i < nd.chain_length(); ++i) {
          const int x = nd.chain_vertices[i];
          const int turn = i <= interior ? (sigma > 0 ? 1 : -1) : 0;
          const int out_slot = g.position(x, nd.chain_edges[i]);
          angles[x][out_slot] = 2 - turn;
          angles[x][1 - out_slot] = 2 + turn;
        }
        break;
      }
      case NodeKind::Series: {
        const std::size_t h = nd.children.size();
        std::vector<SpiralityInterval> iv(h);
        for (std::size_t i = 0; i < h; ++i) iv[i] = ann[nd.children[i]].interval;
        std::vector<Spirality2> values;
        if (extra > 0) {
          int exposed_child = -1;
          for (std::size_t i = 0; i < h; ++i)
            if (tree[nd.children[i]].kind == NodeKind::Chain) {
              exposed_child = static_cast<int>(i);
              break;
            }
          if (exposed_child >= 0) {
            iv[exposed_child] = iv[exposed_child].widened(extra);
            values = distribute_series(sigma, iv);
            out.extra[nd.children[exposed_child]] =
                point_distance(values[exposed_child], ann[nd.children[exposed_child]].interval) / 2;
          } else {
            values.resize(h);
            Spirality2 sum_lo = 0, sum_hi = 0;
            for (auto& x : iv) sum_lo += x.lo, sum_hi += x.hi;
            const bool up = sigma > sum_hi;
            std::int64_t remaining = (up ? sigma - sum_hi : sum_lo - sigma) / 2;
            for (std::size_t i = 0; i < h; ++i) {
              const auto& bp = ann[nd.children[i]].breakpoints;
              if (!bp) internal("missing breakpoints below a series node without exposed edge");
              std::int64_t e = std::min(remaining, up ? bp->plus : bp->minus);
              remaining -= e;
              values[i] = up ? iv[i].hi + 2 * e : iv[i].lo - 2 * e;
              out.extra[nd.children[i]] = e;
            }
            if (remaining != 0) internal("breakpoints cannot absorb the bends of a series node");
          }
        } else if (rng) {
          values.resize(h);
          Spirality2 rest_lo = 0, rest_hi = 0, left = sigma;
          for (auto& x : iv) rest_lo += x.lo, rest_hi += x.hi;
          for (std::size_t i = 0; i < h; ++i) {
            rest_lo -= iv[i].lo;
            rest_hi -= iv[i].hi;
            Spirality2 lo = std::max(iv[i].lo, left - rest_hi), hi = std::min(iv[i].hi, left - rest_lo);
            values[i] = lo + 2 * std::uniform_int_distribution<Spirality2>(0, (hi - lo) / 2)(*rng);
            left -= values[i];
          }
        } else {
          values = distribute_series(sigma, iv);
        }
        for (std::size_t i = 0; i < h; ++i) out.target[nd.children[i]] = values[i];
        break;
      }
      case NodeKind::Parallel: {
        if (nd.children.size() == 3) {
          P3Split sp = distribute_p3(sigma, ann[nd.children[0]].interval, ann[nd.children[1]].interval,
                                     ann[nd.children[2]].interval);
          if (sp.bends[0] + sp.bends[1] + sp.bends[2] != ann[id].budget + extra)
            internal("three-child split does not match the budget");
          for (int i = 0; i < 3; ++i) {
            out.target[nd.children[i]] = sp.child[i];
            out.extra[nd.children[i]] = sp.bends[i];
          }
          break;
        }
        const int lc = nd.children[0], rc2 = nd.children[1];
        auto capacity = [&](int c) {
          ChildCapacity cap;
          cap.interval = ann[c].interval;
          cap.exposed = ann[c].exposed >= 0;
          if (!cap.exposed) cap.breakpoints = ann[c].breakpoints.value_or(Breakpoints{});
          return cap;
        };
        P2Split sp = distribute_p2(sigma, *ann[id].type, nd, g, capacity(lc), capacity(rc2), ann[id].budget + extra,
                                   rng);
        out.alpha[id] = sp.alpha;
        out.target[lc] = sp.left;
        out.target[rc2] = sp.right;
        out.extra[lc] = sp.bends_left;
        out.extra[rc2] = sp.bends_right;
        const SpqNode& L = tree[lc];
        const SpqNode& R = tree[rc2];
        if (free_pole(g, nd.source, nd.indeg_source)) {
          const int u = nd.source;
          angles[u][slot(u, L.left_edge_source, -1)] = 2 - sp.alpha.ul;
          angles[u][slot(u, R.right_edge_source, 0)] = 2 - sp.alpha.ur;
          angles[u][slot(u, L.right_edge_source, 0)] = sp.alpha.ul + sp.alpha.ur;
        }
        if (free_pole(g, nd.sink, nd.indeg_sink)) {
          const int v = nd.sink;
          angles[v][slot(v, L.left_edge_sink, 0)] = 2 - sp.alpha.vl;
          angles[v][slot(v, R.right_edge_sink, -1)] = 2 - sp.alpha.vr;
          angles[v][slot(v, R.left_edge_sink, 0)] = sp.alpha.vl + sp.alpha.vr;
        }
        break;
      }
      case NodeKind::Root:
        break;
    }
  }
  for (int e = 0; e < g.edge_count(); ++e)
    if (!g.edges[e].dummy) out.bends += static_cast<std::int64_t>(out.rep.turns[e].size());
  return out;
}

Spirality2 measure_spirality(const OrthogonalRepresentation& h, const SpqTree& tree, int node, bool rightmost_path) {
  const PlaneGraph& g = *h.graph;
  const SpqNode& nd = tree[node];
  std::vector<std::pair<int, int>> path;  // (edge, from)
  std::vector<int> stack{node};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const SpqNode& x = tree[id];
    if (x.kind == NodeKind::Chain) {
      for (int i = 0; i < x.chain_length(); ++i) path.push_back({x.chain_edges[i], x.chain_vertices[i]});
    } else if (x.kind == NodeKind::Series) {
      for (auto it = x.children.rbegin(); it != x.children.rend(); ++it) stack.push_back(*it);
    } else {
      stack.push_back(rightmost_path ? x.children.back() : x.children.front());
    }
  }
  Spirality2 n = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    for (char c : turns_along(h, g.dart_from(path[i].first, path[i].second))) n += bend_value(c);
    if (i + 1 < path.size()) n += vertex_turn(h, path[i + 1].second, path[i].first, path[i + 1].first);
  }
  const int u = nd.source, v = nd.sink;
  const int first = path.front().first, last = path.back().first;
  Spirality2 total = 2 * n;
  if (nd.indeg_source > 1) {
    const int du = g.degree(u);
    const int out_left = g.rotation[u][wrap(g.position(u, nd.left_edge_source) - 1, du)];
    const int out_right = g.rotation[u][wrap(g.position(u, nd.right_edge_source) + 1, du)];
    total += vertex_turn(h, u, out_left, first) + vertex_turn(h, u, out_right, first);
  }
  if (nd.indeg_sink > 1) {
    const int dv = g.degree(v);
    const int out_left = g.rotation[v][wrap(g.position(v, nd.left_edge_sink) + 1, dv)];
    const int out_right = g.rotation[v][wrap(g.position(v, nd.right_edge_sink) - 1, dv)];
    total += vertex_turn(h, v, last, out_left) + vertex_turn(h, v, last, out_right);
  }
  return total;
}

OrthogonalRepresentation substitute(const OrthogonalRepresentation& h, const SpqTree& tree, int node,
                                    const OrthogonalRepresentation& other) {
  if (measure_spirality(h, tree, node) != measure_spirality(other, tree, node))
    throw Error(ErrorKind::InvalidInput, "substitution needs components of equal spirality");
  OrthogonalRepresentation out = h;
  const SpqNode& nd = tree[node];
  std::vector<int> stack{node};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    const SpqNode& x = tree[id];
    if (x.kind == NodeKind::Chain) {
      for (int e : x.chain_edges) out.turns[e] = other.turns[e];
      for (int i = 1; i < x.chain_length(); ++i) out.angles[x.chain_vertices[i]] = other.angles[x.chain_vertices[i]];
    } else {
      for (int c : x.children) stack.push_back(c);
      if (x.kind == NodeKind::Series)
        for (std::size_t i = 0; i + 1 < x.children.size(); ++i) {
          int w = tree[x.children[i]].sink;
          out.angles[w] = other.angles[w];
        }
    }
  }
  if (nd.indeg_source > 1) out.angles[nd.source] = other.angles[nd.source];
  if (nd.indeg_sink > 1) out.angles[nd.sink] = other.angles[nd.sink];
  return out;
}

OrthogonalRepresentation drop_dummy_edge(const OrthogonalRepresentation& h,
                                         std::shared_ptr<const PlaneGraph> original) {
  const PlaneGraph& aug = *h.graph;
  OrthogonalRepresentation out;
  out.graph = original;
  out.angles.resize(original->vertex_count());
  out.turns.assign(h.turns.begin(), h.turns.begin() + original->edge_count());
  for (int v = 0; v < original->vertex_count(); ++v) {
    const auto& a = h.angles[v];
    const int deg = aug.degree(v);
    int dummy_pos = -1;
    for (int i = 0; i < deg; ++i)
      if (aug.edges[aug.rotation[v][i]].dummy) dummy_pos = i;
    if (dummy_pos < 0) {
      out.angles[v] = a;
      continue;
    }
    // Augmented rotation is the original with the dummy inserted after slot dummy_pos - 1.
    std::vector<int> merged;
    for (int i = 0; i < deg; ++i) {
      if (i == dummy_pos) continue;
      merged.push_back(a[i]);
    }
    const int prev = wrap(dummy_pos - 1, deg);
    int target = prev < dummy_pos ? prev : static_cast<int>(merged.size()) - 1;
    merged[target] += a[dummy_pos];
    out.angles[v] = merged;
  }
  return out;
}

}  // namespace bendmin
