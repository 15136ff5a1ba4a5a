#include "bendmin/budgets.hpp"

#include <algorithm>

namespace bendmin {

namespace {

[[noreturn]] void internal(const std::string& msg) { throw Error(ErrorKind::Internal, msg); }

bool is_pio2_22(const PNodeType& t) { return t.family == PFamily::Pio2 && t.lambda == 2 && t.beta == 2; }

}  // namespace

P3Budget budget_p3(const SpiralityInterval& left, const SpiralityInterval& center, const SpiralityInterval& right) {
  P3Budget r;
  r.shifted[0] = left.shifted(-4);
  r.shifted[1] = center;
  r.shifted[2] = right.shifted(4);
  for (int i = 1; i < 3; ++i) {
    if (r.shifted[i].lo > r.shifted[r.z].lo) r.z = i;
    if (r.shifted[i].hi < r.shifted[r.x].hi) r.x = i;
  }
  if (r.z == r.x) internal("budget_p3 called on intersecting intervals");
  r.y = 3 - r.z - r.x;
  const SpiralityInterval& z = r.shifted[r.z];
  const SpiralityInterval& x = r.shifted[r.x];
  const SpiralityInterval& y = r.shifted[r.y];
  Spirality2 gap = z.lo - x.hi;
  if (gap <= 0) internal("budget_p3 called on intersecting intervals");
  r.budget = gap / 2;
  r.interval = {std::max(x.hi, y.lo), std::min(z.lo, y.hi)};
  return r;
}

Breakpoints flexibility_breakpoints(const SpiralityInterval& left, const SpiralityInterval& right) {
  auto abs_half = [](Spirality2 v) { return (v < 0 ? -v : v) / 2; };
  return {abs_half(right.hi + 4 - left.hi), abs_half(left.lo - 4 - right.lo)};
}

Breakpoints flexibility_breakpoints(const SpiralityInterval& left, const SpiralityInterval& right,
                                    const SpiralityInterval& reached) {
  Spirality2 top = std::max(left.hi - 2, right.hi + 2);
  Spirality2 bottom = std::min(left.lo - 2, right.lo + 2);
  return {(top - reached.hi) / 2, (reached.lo - bottom) / 2};
}

P2Budget budget_p2(const PNodeType& type, const SpiralityInterval& left, const SpiralityInterval& right,
                   bool exposed_left, bool exposed_right, std::optional<Breakpoints> bp_left,
                   std::optional<Breakpoints> bp_right) {
  if (!exposed_left && !exposed_right) internal("two-child P-node without any exposed edge");
  const SpiralityInterval window = p2_difference_window(type);
  const Spirality2 dlo = left.lo - right.hi;
  const Spirality2 dhi = left.hi - right.lo;
  const Spirality2 gap = interval_distance(dlo, dhi, window.lo, window.hi);
  const SpiralityPair p = p2_pair(type, left, right);
  P2Budget out;
  out.budget = gap / 2;
  const std::int64_t b = out.budget;
  if (exposed_left && exposed_right) {
    out.interval = {p.lo - gap, p.hi + gap};
    return out;
  }
  if (type.family != PFamily::Pin3) internal("child without exposed edge under a " + type.name() + " node");
  const bool left_side = !exposed_left;
  const std::optional<Breakpoints>& bp = left_side ? bp_left : bp_right;
  if (!bp) internal("missing breakpoints for a child without exposed edge");
  // The unexposed child can move only within its breakpoints at unit cost.
  const bool difference_low = dhi < window.lo;
  const bool clip_top = left_side ? difference_low : !difference_low;
  if (clip_top)
    out.interval = {p.lo - gap, p.hi + 2 * std::min(bp->plus, b)};
  else
    out.interval = {p.lo - 2 * std::min(bp->minus, b), p.hi + gap};
  return out;
}

std::int64_t budget_root(const SpiralityInterval& inner, const RootWindow& window, bool dummy_reference) {
  if (dummy_reference) return 0;
  return interval_distance(inner, window.window) / 2;
}

BudgetResult bottom_up(const SpqTree& tree) {
  BudgetResult res;
  res.nodes.resize(tree.size());
  auto& ann = res.nodes;
  for (int id : tree.postorder) {
    const SpqNode& nd = tree[id];
    NodeAnnotation& a = ann[id];
    switch (nd.kind) {
      case NodeKind::Chain:
        a.interval = interval_qstar(nd.chain_length());
        a.exposed = nd.chain_edges.front();
        break;
      case NodeKind::Series: {
        a.interval = {0, 0};
        for (int c : nd.children) {
          a.interval.lo += ann[c].interval.lo;
          a.interval.hi += ann[c].interval.hi;
        }
        a.exposed = exposed_edge(tree, id);
        break;
      }
      case NodeKind::Parallel: {
        if (nd.children.size() == 3) {
          const auto& l = ann[nd.children[0]].interval;
          const auto& c = ann[nd.children[1]].interval;
          const auto& r = ann[nd.children[2]].interval;
          a.raw = {std::max({l.lo - 4, c.lo, r.lo + 4}), std::min({l.hi - 4, c.hi, r.hi + 4})};
          if (auto iv = interval_p3(l, c, r)) {
            a.interval = *iv;
          } else {
            P3Budget pb = budget_p3(l, c, r);
            a.budget = pb.budget;
            a.interval = pb.interval;
          }
          break;
        }
        const int lc = nd.children[0], rc = nd.children[1];
        PNodeType type = classify_p_node(tree, id);
        a.type = type;
        const auto& l = ann[lc].interval;
        const auto& r = ann[rc].interval;
        a.raw = p2_pair(type, l, r);
        if (auto iv = interval_p2(type, l, r)) {
          a.interval = *iv;
        } else {
          const bool el = ann[lc].exposed >= 0, er = ann[rc].exposed >= 0;
          // Breakpoints of an S-child without exposed edge: sum over its Pio2(2,2) children.
          auto series_breakpoints = [&](int s) {
            Breakpoints sum;
            for (int c : tree[s].children) {
              const auto& bp = ann[c].breakpoints;
              if (!ann[c].type || !is_pio2_22(*ann[c].type) || !bp)
                internal("series child without exposed edge has a non-Pio2(2,2) child");
              sum.plus += bp->plus;
              sum.minus += bp->minus;
            }
            ann[s].breakpoints = sum;
            return sum;
          };
          std::optional<Breakpoints> bl, br;
          if (!el) bl = series_breakpoints(lc);
          if (!er) br = series_breakpoints(rc);
          P2Budget pb = budget_p2(type, l, r, el, er, bl, br);
          a.budget = pb.budget;
          a.interval = pb.interval;
        }
        if (is_pio2_22(type)) a.breakpoints = flexibility_breakpoints(l, r, a.interval);
        break;
      }
      case NodeKind::Root:
        break;
    }
    a.cumulative = a.budget;
    for (int c : nd.children) a.cumulative += ann[c].cumulative;
  }
  const SpqNode& root = tree[tree.root];
  (void)root;
  res.window = root_window(root_free_poles(tree));
  res.dummy_reference = tree.graph->edges[tree.graph->reference_edge].dummy;
  res.root_budget = budget_root(ann[tree.inner].interval, res.window, res.dummy_reference);
  ann[tree.root].budget = res.root_budget;
  ann[tree.root].cumulative = res.root_budget + ann[tree.inner].cumulative;
  ann[tree.root].interval = res.window.window;
  res.total = ann[tree.root].cumulative;
  return res;
}

bool rectilinear_test(const SpqTree& tree, std::vector<std::optional<SpiralityInterval>>* intervals) {
  std::vector<std::optional<SpiralityInterval>> iv(tree.size());
  bool ok = true;
  for (int id : tree.postorder) {
    const SpqNode& nd = tree[id];
    bool children_ok = true;
    for (int c : nd.children) children_ok = children_ok && iv[c].has_value();
    if (!children_ok) {
      ok = false;
      continue;
    }
    switch (nd.kind) {
      case NodeKind::Chain:
        iv[id] = interval_qstar(nd.chain_length());
        break;
      case NodeKind::Series: {
        SpiralityInterval sum{0, 0};
        for (int c : nd.children) {
          sum.lo += iv[c]->lo;
          sum.hi += iv[c]->hi;
        }
        iv[id] = sum;
        break;
      }
      case NodeKind::Parallel:
        if (nd.children.size() == 3)
          iv[id] = interval_p3(*iv[nd.children[0]], *iv[nd.children[1]], *iv[nd.children[2]]);
        else
          iv[id] = interval_p2(classify_p_node(tree, id), *iv[nd.children[0]], *iv[nd.children[1]]);
        break;
      case NodeKind::Root: {
        bool dummy = tree.graph->edges[tree.graph->reference_edge].dummy;
        SpiralityInterval window = root_window(root_free_poles(tree)).window;
        if (dummy || interval_distance(*iv[tree.inner], window) == 0) iv[id] = window;
        break;
      }
    }
    if (!iv[id]) ok = false;
  }
  if (intervals) *intervals = std::move(iv);
  return ok;
}

}  // namespace bendmin
