#include "bendmin/spq_tree.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace bendmin {

namespace {

[[noreturn]] void not_sp(const std::string& msg) { throw Error(ErrorKind::NotSeriesParallel, msg); }
[[noreturn]] void internal(const std::string& msg) { throw Error(ErrorKind::Internal, msg); }

enum class BinKind : unsigned char { Leaf, Series, Parallel };

// Node of the binary decomposition produced by the reduction. A Series node
// joins child1 (ends a, pivot) and child2 (ends pivot, b). A Parallel node
// records that child1 precedes child2 clockwise around `pivot`.
struct BinNode {
  BinKind kind;
  int a, b;
  int child1 = -1, child2 = -1;
  int pivot = -1;
  int edge = -1;
};

// Reduces the graph to the reference edge plus one virtual edge by series and
// parallel reductions on an embedded multigraph. Slots form one circular
// clockwise list per vertex.
class Reducer {
 public:
  explicit Reducer(const PlaneGraph& g) : g_(g) {}

  int run(int s, int t, int ref, std::vector<BinNode>& bins) {
    const int n = g_.vertex_count();
    const int m = g_.edge_count();
    slot_ve_.reserve(2 * m);
    slot_prev_.reserve(2 * m);
    slot_next_.reserve(2 * m);
    deg_.assign(n, 0);
    // Every reduction adds one virtual edge, so 2m bounds all edge arrays.
    ve_end_.reserve(2 * m);
    ve_slot_.reserve(2 * m);
    ve_bin_.reserve(2 * m);
    alive_.reserve(2 * m);
    ve_end_.resize(m);
    ve_slot_.resize(m);
    ve_bin_.resize(m);
    alive_.assign(m, 1);
    series_queue_.reserve(n);
    parallel_queue_.reserve(4 * m);
    bins.reserve(2 * m);
    for (int e = 0; e < m; ++e) {
      ve_end_[e] = {g_.edges[e].u, g_.edges[e].v};
      ve_bin_[e] = static_cast<int>(bins.size());
      bins.push_back({BinKind::Leaf, g_.edges[e].u, g_.edges[e].v, -1, -1, -1, e});
    }
    for (int v = 0; v < n; ++v) {
      const auto& rot = g_.rotation[v];
      int first = static_cast<int>(slot_ve_.size());
      int d = static_cast<int>(rot.size());
      for (int i = 0; i < d; ++i) {
        int id = first + i;
        slot_ve_.push_back(rot[i]);
        slot_prev_.push_back(first + (i + d - 1) % d);
        slot_next_.push_back(first + (i + 1) % d);
        int e = rot[i];
        ve_slot_[e][g_.edges[e].u == v ? 0 : 1] = id;
      }
      deg_[v] = d;
    }
    init_heads();
    s_ = s;
    t_ = t;
    ref_ = ref;
    for (int v = 0; v < n; ++v) {
      if (deg_[v] == 2) series_queue_.push_back(v);
    }
    for (int sl = 0; sl < static_cast<int>(slot_ve_.size()); ++sl) parallel_queue_.push_back(sl);
    int alive_count = m;
    while (!series_queue_.empty() || !parallel_queue_.empty()) {
      if (!parallel_queue_.empty()) {
        int sl = parallel_queue_.back();
        parallel_queue_.pop_back();
        if (try_parallel(sl, bins)) --alive_count;
      } else {
        int w = series_queue_.back();
        series_queue_.pop_back();
        if (try_series(w, bins)) --alive_count;
      }
    }
    if (alive_count != 2) not_sp("graph is not series-parallel with respect to the reference edge");
    for (int x = 0; x < static_cast<int>(alive_.size()); ++x) {
      if (!alive_[x] || x == ref_) continue;
      bool spans = (ve_end_[x][0] == s && ve_end_[x][1] == t) || (ve_end_[x][0] == t && ve_end_[x][1] == s);
      if (!spans) not_sp("graph is not series-parallel with respect to the reference edge");
      return ve_bin_[x];
    }
    not_sp("graph is not series-parallel with respect to the reference edge");
  }

 private:
  int other(int ve, int v) const { return ve_end_[ve][0] == v ? ve_end_[ve][1] : ve_end_[ve][0]; }
  int slot_at(int ve, int v) const { return ve_end_[ve][0] == v ? ve_slot_[ve][0] : ve_slot_[ve][1]; }
  int slot_vertex(int sl) const {
    int ve = slot_ve_[sl];
    return ve_slot_[ve][0] == sl ? ve_end_[ve][0] : ve_end_[ve][1];
  }

  void unlink(int sl, int v) {
    int p = slot_prev_[sl], q = slot_next_[sl];
    slot_next_[p] = q;
    slot_prev_[q] = p;
    --deg_[v];
  }

  void enqueue_around(int sl) {
    parallel_queue_.push_back(sl);
    parallel_queue_.push_back(slot_prev_[sl]);
  }

  bool try_series(int w, std::vector<BinNode>& bins) {
    if (w == s_ || w == t_ || deg_[w] != 2) return false;
    int sl1 = head_[w];
    if (sl1 < 0) return false;
    int sl2 = slot_next_[sl1];
    int x = slot_ve_[sl1], y = slot_ve_[sl2];
    if (x == y) return false;
    int a = other(x, w), b = other(y, w);
    if (a == b) return false;
    int z = static_cast<int>(ve_end_.size());
    int sa = slot_at(x, a), sb = slot_at(y, b);
    ve_end_.push_back({a, b});
    ve_slot_.push_back({sa, sb});
    ve_bin_.push_back(static_cast<int>(bins.size()));
    alive_.push_back(1);
    bins.push_back({BinKind::Series, a, b, ve_bin_[x], ve_bin_[y], w, -1});
    slot_ve_[sa] = z;
    slot_ve_[sb] = z;
    alive_[x] = alive_[y] = 0;
    deg_[w] = 0;
    head_[w] = -1;
    enqueue_around(sa);
    enqueue_around(sb);
    return true;
  }

  bool try_parallel(int sl, std::vector<BinNode>& bins) {
    int x = slot_ve_[sl];
    if (!alive_[x]) return false;
    int v = slot_vertex(sl);
    if (slot_at(x, v) != sl) return false;
    int nx = slot_next_[sl];
    if (nx == sl) return false;
    int y = slot_ve_[nx];
    if (x == y || !alive_[y] || x == ref_ || y == ref_) return false;
    int w = other(x, v);
    if (other(y, v) != w) return false;
    // At the other end the two must also be consecutive, in reverse order.
    int yw = slot_at(y, w), xw = slot_at(x, w);
    if (slot_next_[yw] != xw) return false;
    unlink(nx, v);
    unlink(yw, w);
    if (head_[v] == nx) head_[v] = sl;
    if (head_[w] == yw) head_[w] = xw;
    int z = static_cast<int>(ve_end_.size());
    ve_end_.push_back({v, w});
    ve_slot_.push_back({sl, xw});
    ve_bin_.push_back(static_cast<int>(bins.size()));
    alive_.push_back(1);
    bins.push_back({BinKind::Parallel, v, w, ve_bin_[x], ve_bin_[y], v, -1});
    slot_ve_[sl] = z;
    slot_ve_[xw] = z;
    alive_[x] = alive_[y] = 0;
    enqueue_around(sl);
    enqueue_around(xw);
    if (deg_[v] == 2) series_queue_.push_back(v);
    if (deg_[w] == 2) series_queue_.push_back(w);
    return true;
  }

  void init_heads() {
    head_.assign(g_.vertex_count(), -1);
    for (int sl = 0; sl < static_cast<int>(slot_ve_.size()); ++sl) {
      int v = slot_vertex(sl);
      if (head_[v] == -1) head_[v] = sl;
    }
  }
  const PlaneGraph& g_;
  int s_ = -1, t_ = -1, ref_ = -1;
  std::vector<int> slot_ve_, slot_prev_, slot_next_;
  std::vector<int> deg_;
  std::vector<std::array<int, 2>> ve_end_, ve_slot_;
  std::vector<int> ve_bin_;
  std::vector<char> alive_;
  std::vector<int> head_;
  std::vector<int> series_queue_, parallel_queue_;
};

}  // namespace

int SpqTree::count(NodeKind kind) const {
  int c = 0;
  for (const auto& n : nodes) c += n.kind == kind ? 1 : 0;
  return c;
}

SpqTree build_spq_tree(const PlaneGraph& g) {
  SpqTree tree;
  tree.graph = &g;
  auto [s, t] = g.reference_poles();
  const int ref = g.reference_edge;
  std::vector<BinNode> bins;
  int eta_bin;
  {
    Reducer reducer(g);
    eta_bin = reducer.run(s, t, ref, bins);
  }

  auto& nodes = tree.nodes;
  nodes.reserve(2 * g.edge_count() + 2);
  nodes.push_back({});
  nodes[0].kind = NodeKind::Root;
  nodes[0].source = s;
  nodes[0].sink = t;
  tree.root = 0;
  nodes.push_back({});
  nodes.push_back({});
  tree.inner = 1;
  tree.reference_chain = 2;
  nodes[0].children = {1, 2};
  nodes[1].parent = nodes[2].parent = 0;
  nodes[2].kind = NodeKind::Chain;
  nodes[2].source = s;
  nodes[2].sink = t;
  nodes[2].chain_edges = {ref};
  nodes[2].chain_vertices = {s, t};

  struct Work {
    int bin, source, node;
  };
  std::vector<Work> work{{eta_bin, s, 1}};
  std::vector<std::pair<int, int>> expand, items;
  while (!work.empty()) {
    Work w = work.back();
    work.pop_back();
    items.clear();
    expand.clear();
    expand.push_back({w.bin, w.source});
    const bool parallel = bins[w.bin].kind == BinKind::Parallel;
    while (!expand.empty()) {
      auto [b, src] = expand.back();
      expand.pop_back();
      const BinNode& bn = bins[b];
      if (parallel && bn.kind == BinKind::Parallel) {
        bool forward = src == bn.pivot;
        expand.push_back({forward ? bn.child2 : bn.child1, src});
        expand.push_back({forward ? bn.child1 : bn.child2, src});
      } else if (!parallel && bn.kind == BinKind::Series) {
        if (src == bn.a) {
          expand.push_back({bn.child2, bn.pivot});
          expand.push_back({bn.child1, src});
        } else {
          expand.push_back({bn.child1, bn.pivot});
          expand.push_back({bn.child2, src});
        }
      } else {
        items.push_back({b, src});
      }
    }
    auto sink_of = [&](int b, int src) { return bins[b].a == src ? bins[b].b : bins[b].a; };
    if (parallel) {
      int id = w.node;
      nodes[id].kind = NodeKind::Parallel;
      nodes[id].source = w.source;
      nodes[id].sink = sink_of(w.bin, w.source);
      for (auto [b, src] : items) {
        int c = static_cast<int>(nodes.size());
        nodes.push_back({});
        nodes[c].parent = id;
        nodes[id].children.push_back(c);
        work.push_back({b, src, c});
      }
      continue;
    }
    // Series sequence: merge runs of consecutive edges into chains.
    std::vector<std::pair<int, int>> parts;  // (node id, bin for parallel parts or -1)
    std::vector<int> chain_nodes;
    int current_chain = -1;
    const bool single_chain = [&] {
      for (auto [b, src] : items)
        if (bins[b].kind != BinKind::Leaf) return false;
      return true;
    }();
    int id = w.node;
    nodes[id].source = w.source;
    nodes[id].sink = sink_of(w.bin, w.source);
    if (single_chain) {
      nodes[id].kind = NodeKind::Chain;
      nodes[id].chain_vertices.push_back(w.source);
      for (auto [b, src] : items) {
        nodes[id].chain_edges.push_back(bins[b].edge);
        nodes[id].chain_vertices.push_back(sink_of(b, src));
      }
      continue;
    }
    nodes[id].kind = NodeKind::Series;
    for (auto [b, src] : items) {
      if (bins[b].kind == BinKind::Leaf) {
        if (current_chain == -1) {
          current_chain = static_cast<int>(nodes.size());
          nodes.push_back({});
          nodes[current_chain].kind = NodeKind::Chain;
          nodes[current_chain].parent = id;
          nodes[current_chain].source = src;
          nodes[current_chain].chain_vertices.push_back(src);
          nodes[id].children.push_back(current_chain);
        }
        int snk = sink_of(b, src);
        nodes[current_chain].chain_edges.push_back(bins[b].edge);
        nodes[current_chain].chain_vertices.push_back(snk);
        nodes[current_chain].sink = snk;
      } else {
        current_chain = -1;
        int c = static_cast<int>(nodes.size());
        nodes.push_back({});
        nodes[c].parent = id;
        nodes[id].children.push_back(c);
        work.push_back({b, src, c});
      }
    }
  }

  // Postorder by explicit stack.
  tree.postorder.reserve(nodes.size());
  {
    std::vector<std::pair<int, std::size_t>> st{{tree.root, 0}};
    while (!st.empty()) {
      auto& [v, i] = st.back();
      if (i < nodes[v].children.size()) {
        int c = nodes[v].children[i++];
        st.push_back({c, 0});
      } else {
        tree.postorder.push_back(v);
        st.pop_back();
      }
    }
  }

  for (int id : tree.postorder) {
    SpqNode& nd = nodes[id];
    switch (nd.kind) {
      case NodeKind::Chain:
        nd.indeg_source = nd.indeg_sink = 1;
        nd.left_edge_source = nd.right_edge_source = nd.chain_edges.front();
        nd.left_edge_sink = nd.right_edge_sink = nd.chain_edges.back();
        break;
      case NodeKind::Series: {
        const SpqNode& f = nodes[nd.children.front()];
        const SpqNode& l = nodes[nd.children.back()];
        nd.indeg_source = f.indeg_source;
        nd.left_edge_source = f.left_edge_source;
        nd.right_edge_source = f.right_edge_source;
        nd.indeg_sink = l.indeg_sink;
        nd.left_edge_sink = l.left_edge_sink;
        nd.right_edge_sink = l.right_edge_sink;
        for (std::size_t i = 0; i + 1 < nd.children.size(); ++i)
          if (nodes[nd.children[i]].sink != nodes[nd.children[i + 1]].source) internal("series children do not chain");
        break;
      }
      case NodeKind::Parallel:
      case NodeKind::Root: {
        nd.indeg_source = nd.indeg_sink = 0;
        for (int c : nd.children) {
          nd.indeg_source += nodes[c].indeg_source;
          nd.indeg_sink += nodes[c].indeg_sink;
        }
        const SpqNode& f = nodes[nd.children.front()];
        const SpqNode& l = nodes[nd.children.back()];
        nd.left_edge_source = f.left_edge_source;
        nd.left_edge_sink = f.left_edge_sink;
        nd.right_edge_source = l.right_edge_source;
        nd.right_edge_sink = l.right_edge_sink;
        // Left to right is clockwise at the source and counterclockwise at the sink.
        for (std::size_t i = 0; i + 1 < nd.children.size(); ++i) {
          const SpqNode& a = nodes[nd.children[i]];
          const SpqNode& b = nodes[nd.children[i + 1]];
          int du = g.degree(nd.source), dv = g.degree(nd.sink);
          if ((g.position(nd.source, a.right_edge_source) + 1) % du != g.position(nd.source, b.left_edge_source) ||
              (g.position(nd.sink, b.left_edge_sink) + 1) % dv != g.position(nd.sink, a.right_edge_sink))
            internal("parallel children are not contiguous in the rotation");
        }
        break;
      }
    }
    nd.outdeg_source = g.degree(nd.source) - nd.indeg_source;
    nd.outdeg_sink = g.degree(nd.sink) - nd.indeg_sink;
  }
  return tree;
}

namespace {

struct TableRow {
  PFamily family;
  int lambda, beta, side_d, side_d2;
  int k_ul, k_ur, k_vl, k_vr;
};

// Parameter table in its canonical pole orientation; coefficients doubled.
constexpr TableRow kTable[] = {
    {PFamily::Pio2, 1, 1, 0, 0, 2, 2, 2, 2}, {PFamily::Pio2, 1, 2, 0, 0, 2, 2, 1, 1},
    {PFamily::Pio2, 2, 1, 0, 0, 1, 1, 2, 2}, {PFamily::Pio2, 2, 2, 0, 0, 1, 1, 1, 1},
    {PFamily::Pio3, 1, 1, 0, 0, 2, 2, 1, 2}, {PFamily::Pio3, 1, 1, 1, 0, 2, 2, 2, 1},
    {PFamily::Pio3, 1, 2, 0, 0, 1, 1, 1, 2}, {PFamily::Pio3, 1, 2, 1, 0, 1, 1, 2, 1},
    {PFamily::Pin3, 1, 1, 0, 0, 1, 2, 1, 2}, {PFamily::Pin3, 1, 1, 0, 1, 2, 1, 1, 2},
    {PFamily::Pin3, 1, 1, 1, 1, 2, 1, 2, 1},
};

}  // namespace

PNodeType classify_p_node(const SpqTree& tree, int node) {
  const SpqNode& nd = tree[node];
  if (nd.kind != NodeKind::Parallel || nd.children.size() != 2) internal("classify_p_node needs a two-child P-node");
  const SpqNode& left = tree[nd.children[0]];
  const SpqNode& right = tree[nd.children[1]];
  auto coeff = [](int child_indeg, int outdeg) { return child_indeg == 1 && outdeg == 1 ? 2 : 1; };
  PNodeType t;
  t.k_ul = coeff(left.indeg_source, nd.outdeg_source);
  t.k_ur = coeff(right.indeg_source, nd.outdeg_source);
  t.k_vl = coeff(left.indeg_sink, nd.outdeg_sink);
  t.k_vr = coeff(right.indeg_sink, nd.outdeg_sink);
  // Side of the child with two edges at a pole of indegree 3.
  auto heavy_side = [&](bool at_source) {
    return (at_source ? left.indeg_source : left.indeg_sink) == 2 ? 0 : 1;
  };
  int lambda, beta, d = 0, d2 = 0;
  if (nd.indeg_source == 2 && nd.indeg_sink == 2) {
    t.family = PFamily::Pio2;
    lambda = nd.outdeg_source;
    beta = nd.outdeg_sink;
  } else if (nd.indeg_source == 3 && nd.indeg_sink == 3) {
    t.family = PFamily::Pin3;
    lambda = beta = 1;
    int su = heavy_side(true), sv = heavy_side(false);
    t.swapped = su == 0 && sv == 1;
    d = t.swapped ? su : sv;
    d2 = t.swapped ? sv : su;
  } else {
    t.family = PFamily::Pio3;
    t.swapped = nd.indeg_source == 3;
    int light_outdeg = t.swapped ? nd.outdeg_sink : nd.outdeg_source;
    lambda = 1;
    beta = light_outdeg;
    d = heavy_side(t.swapped);
  }
  t.lambda = lambda;
  t.beta = beta;
  t.side_d = d;
  t.side_d2 = d2;
  for (const TableRow& row : kTable) {
    if (row.family == t.family && row.lambda == lambda && row.beta == beta && row.side_d == d && row.side_d2 == d2) {
      t.table_k_ul = row.k_ul;
      t.table_k_ur = row.k_ur;
      t.table_k_vl = row.k_vl;
      t.table_k_vr = row.k_vr;
      if (t.family == PFamily::Pio2) {
        t.lambda = std::min(lambda, beta);
        t.beta = std::max(lambda, beta);
      }
      return t;
    }
  }
  internal("P-node degrees match no known type");
}

int root_free_poles(const SpqTree& tree) {
  const SpqNode& inner = tree[tree.inner];
  return (inner.indeg_source == 1 ? 1 : 0) + (inner.indeg_sink == 1 ? 1 : 0);
}

int exposed_edge(const SpqTree& tree, int node) {
  const SpqNode& nd = tree[node];
  if (nd.kind == NodeKind::Chain) return nd.chain_edges.front();
  if (nd.kind == NodeKind::Series)
    for (int c : nd.children)
      if (tree[c].kind == NodeKind::Chain) return tree[c].chain_edges.front();
  return -1;
}

namespace {

const char* kind_name(NodeKind k) {
  static const char* names[] = {"Q*", "S", "P", "root"};
  return names[static_cast<int>(k)];
}

}  // namespace

std::string dump_tree(const SpqTree& tree) {
  std::ostringstream out;
  const PlaneGraph& g = *tree.graph;
  std::vector<std::pair<int, int>> stack = {{tree.root, 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    const SpqNode& nd = tree[id];
    out << std::string(2 * depth, ' ') << id << " " << kind_name(nd.kind) << " " << g.vertex_ids[nd.source] << "->"
        << g.vertex_ids[nd.sink];
    if (nd.kind == NodeKind::Chain) {
      out << " [";
      for (std::size_t i = 0; i < nd.chain_edges.size(); ++i) out << (i ? " " : "") << g.edges[nd.chain_edges[i]].id;
      out << "]";
    }
    out << "\n";
    for (auto it = nd.children.rbegin(); it != nd.children.rend(); ++it) stack.push_back({*it, depth + 1});
  }
  return out.str();
}

nlohmann::json tree_to_json(const SpqTree& tree) {
  const PlaneGraph& g = *tree.graph;
  nlohmann::json nodes = nlohmann::json::array();
  for (int id = 0; id < tree.size(); ++id) {
    const SpqNode& nd = tree[id];
    nlohmann::json j = {{"id", id},
                        {"kind", kind_name(nd.kind)},
                        {"source", g.vertex_ids[nd.source]},
                        {"sink", g.vertex_ids[nd.sink]},
                        {"parent", nd.parent},
                        {"children", nd.children}};
    if (nd.kind == NodeKind::Chain) {
      nlohmann::json edges = nlohmann::json::array();
      for (int e : nd.chain_edges) edges.push_back(g.edges[e].id);
      j["edges"] = edges;
    }
    nodes.push_back(std::move(j));
  }
  return {{"root", tree.root}, {"nodes", nodes}};
}

}  // namespace bendmin
