#include "bendmin/flow_oracle.hpp"

#include <limits>
#include <queue>

namespace bendmin {

namespace {

class MinCostFlow {
 public:
  explicit MinCostFlow(int n) : head_(n, -1) {}

  int add_arc(int from, int to, std::int64_t cap, std::int64_t cost) {
    int id = static_cast<int>(to_.size());
    push(from, to, cap, cost);
    push(to, from, 0, -cost);
    return id;
  }

  std::int64_t flow(int arc) const { return cap_[arc ^ 1]; }

  /// Sends as much flow as possible from s to t at minimum cost; returns (flow, cost).
  std::pair<std::int64_t, std::int64_t> run(int s, int t) {
    const int n = static_cast<int>(head_.size());
    const std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> pot(n, 0), dist(n);
    std::vector<int> via(n);
    std::int64_t total_flow = 0, total_cost = 0;
    using Item = std::pair<std::int64_t, int>;
    while (true) {
      std::fill(dist.begin(), dist.end(), inf);
      std::fill(via.begin(), via.end(), -1);
      std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
      dist[s] = 0;
      pq.push({0, s});
      while (!pq.empty()) {
        auto [d, x] = pq.top();
        pq.pop();
        if (d != dist[x]) continue;
        for (int a = head_[x]; a != -1; a = next_[a]) {
          if (cap_[a] == 0) continue;
          int y = to_[a];
          std::int64_t nd = d + cost_[a] + pot[x] - pot[y];
          if (nd < dist[y]) {
            dist[y] = nd;
            via[y] = a;
            pq.push({nd, y});
          }
        }
      }
      if (dist[t] == inf) break;
      for (int x = 0; x < n; ++x)
        if (dist[x] < inf) pot[x] += dist[x];
      std::int64_t push_amount = inf;
      for (int x = t; x != s; x = to_[via[x] ^ 1]) push_amount = std::min(push_amount, cap_[via[x]]);
      for (int x = t; x != s; x = to_[via[x] ^ 1]) {
        cap_[via[x]] -= push_amount;
        cap_[via[x] ^ 1] += push_amount;
        total_cost += push_amount * cost_[via[x]];
      }
      total_flow += push_amount;
    }
    return {total_flow, total_cost};
  }

 private:
  void push(int from, int to, std::int64_t cap, std::int64_t cost) {
    to_.push_back(to);
    cap_.push_back(cap);
    cost_.push_back(cost);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_, to_, next_;
  std::vector<std::int64_t> cap_, cost_;
};

struct Solved {
  std::int64_t cost = 0;
  std::vector<int> corner_arc;  // per dart: arc into the face on its left
  std::vector<int> left_to_right, right_to_left;  // per edge, -1 for edges inside one face
  MinCostFlow net{0};
};

// Vertices own 4 - deg spare angle units; a face of d corners needs d - 4 of them
// beyond the minimum (d + 4 for the external face). Bend units move between faces.
Solved solve(const PlaneGraph& g) {
  const int n = g.vertex_count();
  const int nf = static_cast<int>(g.faces.size());
  const int m = g.edge_count();
  Solved s;
  s.net = MinCostFlow(n + nf + 2);
  const int src = n + nf, dst = n + nf + 1;
  const std::int64_t unbounded = 4LL * (n + 2 * m + 8);
  std::int64_t demand = 0;
  auto balance = [&](int node, std::int64_t b) {
    if (b > 0) {
      s.net.add_arc(src, node, b, 0);
      demand += b;
    } else if (b < 0) {
      s.net.add_arc(node, dst, -b, 0);
    }
  };
  for (int v = 0; v < n; ++v) balance(v, 4 - g.degree(v));
  for (int f = 0; f < nf; ++f) {
    const std::int64_t d = static_cast<std::int64_t>(g.faces[f].size());
    balance(n + f, -(f == g.external_face ? d + 4 : d - 4));
  }
  s.corner_arc.assign(2 * m, -1);
  for (int d = 0; d < 2 * m; ++d) s.corner_arc[d] = s.net.add_arc(g.head(d), n + g.dart_face[d], 3, 0);
  s.left_to_right.assign(m, -1);
  s.right_to_left.assign(m, -1);
  for (int e = 0; e < m; ++e) {
    const int l = g.dart_face[2 * e], r = g.dart_face[2 * e + 1];
    if (l == r) continue;
    s.left_to_right[e] = s.net.add_arc(n + l, n + r, unbounded, 1);
    s.right_to_left[e] = s.net.add_arc(n + r, n + l, unbounded, 1);
  }
  auto [flow, cost] = s.net.run(src, dst);
  if (flow != demand) throw Error(ErrorKind::InvalidInput, "flow network is infeasible");
  s.cost = cost;
  return s;
}

}  // namespace

std::int64_t flow_min_bends(const PlaneGraph& g) { return solve(g).cost; }

OrthogonalRepresentation flow_representation(std::shared_ptr<const PlaneGraph> graph) {
  const PlaneGraph& g = *graph;
  Solved s = solve(g);
  OrthogonalRepresentation h;
  h.graph = graph;
  h.angles.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) h.angles[v].assign(g.degree(v), 1);
  for (int d = 0; d < 2 * g.edge_count(); ++d)
    h.angles[g.head(d)][g.corner_slot(d)] += static_cast<int>(s.net.flow(s.corner_arc[d]));
  h.turns.assign(g.edge_count(), std::string());
  for (int e = 0; e < g.edge_count(); ++e) {
    if (s.left_to_right[e] < 0) continue;
    // A unit from the left face to the right face leaves the 90-degree corner on the left.
    std::int64_t left = s.net.flow(s.left_to_right[e]);
    std::int64_t right = s.net.flow(s.right_to_left[e]);
    std::int64_t common = std::min(left, right);
    h.turns[e] = std::string(static_cast<std::size_t>(right - common), 'R') +
                 std::string(static_cast<std::size_t>(left - common), 'L');
  }
  return h;
}

}  // namespace bendmin
