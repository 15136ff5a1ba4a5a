#include <algorithm>
#include <random>

#include "bendmin/flow_oracle.hpp"

namespace bendmin {

namespace {

// Bounded sampling on raw engine output so that sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
  }
  std::int64_t between(std::int64_t lo, std::int64_t hi) { return lo + static_cast<std::int64_t>(below(hi - lo + 1)); }
  bool chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

 private:
  std::mt19937_64 engine_;
};

// Circular per-vertex lists of rotation tokens. A token is an edge or a
// placeholder that a pending component later replaces by its own edges.
class Rotations {
 public:
  int add_vertex() {
    head_.push_back(-1);
    return static_cast<int>(head_.size()) - 1;
  }

  /// New placeholder token in the rotation of v, after `after` (or alone).
  int add_token(int v, int after) {
    int t = static_cast<int>(edge_.size());
    edge_.push_back(-1);
    owner_.push_back(v);
    if (after < 0) {
      next_.push_back(t);
      prev_.push_back(t);
      head_[v] = t;
    } else {
      next_.push_back(next_[after]);
      prev_.push_back(after);
      prev_[next_[after]] = t;
      next_[after] = t;
    }
    return t;
  }

  void set_edge(int token, int e) { edge_[token] = e; }

  /// Replaces placeholder `token` by `count` fresh placeholders, returned in clockwise order.
  std::vector<int> split(int token, int count) {
    std::vector<int> out;
    int at = token;
    for (int i = 0; i < count; ++i) out.push_back(at = add_token(owner_[token], at));
    next_[prev_[token]] = next_[token];
    prev_[next_[token]] = prev_[token];
    if (head_[owner_[token]] == token) head_[owner_[token]] = out.front();
    return out;
  }

  std::vector<int> rotation(int v) const {
    std::vector<int> r;
    int t = head_[v];
    do {
      r.push_back(edge_[t]);
      t = next_[t];
    } while (t != head_[v]);
    return r;
  }

 private:
  std::vector<int> head_, next_, prev_, edge_, owner_;
};

struct Task {
  int internal;  // vertices strictly inside the component
  int cap_u, cap_v;  // edges the component may use at each pole
  int u, v, tok_u, tok_v;
};

// Splits `total` into `parts` non-negative random summands.
std::vector<int> random_composition(Rng& rng, int total, int parts) {
  std::vector<int> cuts(parts - 1);
  for (int& c : cuts) c = static_cast<int>(rng.between(0, total));
  std::sort(cuts.begin(), cuts.end());
  std::vector<int> out(parts);
  int prev = 0;
  for (int i = 0; i < parts - 1; ++i) {
    out[i] = cuts[i] - prev;
    prev = cuts[i];
  }
  out[parts - 1] = total - prev;
  return out;
}

}  // namespace

PlaneGraph generate_sp(const GeneratorSpec& spec) {
  const int min_vertices = spec.allow_multi_edges ? 2 : 3;
  if (spec.vertices < min_vertices)
    throw Error(ErrorKind::InvalidInput, "generator needs at least " + std::to_string(min_vertices) + " vertices");
  Rng rng(spec.seed);
  Rotations rot;
  std::vector<std::pair<int, int>> edges;
  auto new_edge = [&](int a, int b) {
    edges.push_back({a, b});
    return static_cast<int>(edges.size()) - 1;
  };

  const int s = rot.add_vertex(), t = rot.add_vertex();
  const int ref = new_edge(s, t);
  const int s_inner = rot.add_token(s, -1);
  rot.set_edge(rot.add_token(s, s_inner), ref);
  const int t_ref = rot.add_token(t, -1);
  rot.set_edge(t_ref, ref);
  const int t_inner = rot.add_token(t, t_ref);

  std::vector<Task> stack{{spec.vertices - 2, 3, 3, s, t, s_inner, t_inner}};
  while (!stack.empty()) {
    Task task = stack.back();
    stack.pop_back();
    if (task.internal == 0) {
      int e = new_edge(task.u, task.v);
      rot.set_edge(task.tok_u, e);
      rot.set_edge(task.tok_v, e);
      continue;
    }
    const bool can_parallel = task.cap_u >= 2 && task.cap_v >= 2;
    if (can_parallel && rng.chance(spec.parallel_bias)) {
      int width = 2;
      const int max_width = std::min({task.cap_u, task.cap_v, spec.allow_multi_edges ? 3 : task.internal + 1});
      if (max_width >= 3 && rng.chance(spec.three_way)) width = 3;
      // Without multi-edges at most one child may be a bare edge.
      std::vector<int> base(width, spec.allow_multi_edges ? 0 : 1);
      if (!spec.allow_multi_edges) base[rng.below(width)] = 0;
      int reserved = 0;
      for (int b : base) reserved += b;
      std::vector<int> share = random_composition(rng, task.internal - reserved, width);
      std::vector<int> cu(width, 1), cv(width, 1);
      for (int i = width; i < task.cap_u; ++i) ++cu[rng.below(width)];
      for (int i = width; i < task.cap_v; ++i) ++cv[rng.below(width)];
      std::vector<int> tu = rot.split(task.tok_u, width);
      std::vector<int> tv = rot.split(task.tok_v, width);
      for (int i = 0; i < width; ++i)
        stack.push_back({base[i] + share[i], cu[i], cv[i], task.u, task.v, tu[i], tv[width - 1 - i]});
      continue;
    }
    int parts = 2;
    while (parts - 1 < task.internal && rng.chance(spec.chain_continue)) ++parts;
    std::vector<int> share = random_composition(rng, task.internal - (parts - 1), parts);
    int prev = task.u, prev_tok = task.tok_u, prev_cap = task.cap_u;
    for (int i = 0; i < parts; ++i) {
      int next, next_tok, next_cap, after_cap = 0, after_tok = -1;
      if (i + 1 < parts) {
        next = rot.add_vertex();
        const int first = rot.add_token(next, -1);
        after_tok = first;
        next_tok = rot.add_token(next, first);
        next_cap = static_cast<int>(rng.between(1, 3));
        after_cap = 4 - next_cap;
      } else {
        next = task.v;
        next_tok = task.tok_v;
        next_cap = task.cap_v;
      }
      stack.push_back({share[i], prev_cap, next_cap, prev, next, prev_tok, next_tok});
      prev = next;
      prev_tok = after_tok;
      prev_cap = std::min(after_cap, 3);
    }
  }

  PlaneGraph g;
  const int n = static_cast<int>(spec.vertices);
  g.vertex_ids.resize(n);
  g.rotation.resize(n);
  for (int v = 0; v < n; ++v) {
    g.vertex_ids[v] = std::to_string(v);
    g.rotation[v] = rot.rotation(v);
  }
  g.edges.resize(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) g.edges[e] = {"e" + std::to_string(e), edges[e].first, edges[e].second};
  g.reference_edge = ref;
  g.external_dart = PlaneGraph::dart_of(ref, true);
  g.finalize();
  return g;
}

}  // namespace bendmin
