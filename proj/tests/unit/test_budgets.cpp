#include <doctest.h>

#include "bendmin/budgets.hpp"
#include "bendmin/pipeline.hpp"
#include "oracles.hpp"

using namespace bendmin;

namespace {

SpiralityInterval iv(int lo, int hi) { return {2 * lo, 2 * hi}; }

PNodeType pio2_11() {
  PNodeType t;
  t.family = PFamily::Pio2;
  return t;
}

}  // namespace

TEST_CASE("two-child budget with both children exposed") {
  P2Budget b = budget_p2(pio2_11(), iv(0, 0), iv(1, 1), true, true, std::nullopt, std::nullopt);
  CHECK(b.budget == 3);
  CHECK(b.interval == iv(-2, 3));
}

TEST_CASE("two-child budget needs an exposed child") {
  CHECK_THROWS_AS(budget_p2(pio2_11(), iv(0, 0), iv(1, 1), false, false, std::nullopt, std::nullopt), Error);
}

TEST_CASE("three-child budget closes the gap between shifted children") {
  // Shifted children: left - 2 = [-4,0], center [-3,3], right + 2 = [2,2].
  P3Budget b = budget_p3(iv(-2, 2), iv(-3, 3), iv(0, 0));
  CHECK(b.budget == 2);
  CHECK(b.interval == iv(0, 2));
  CHECK(b.z == 2);
  CHECK(b.x == 0);
  CHECK(b.y == 1);
  CHECK_THROWS_AS(budget_p3(iv(-5, 5), iv(-3, 3), iv(-1, 1)), Error);
}

TEST_CASE("root budget is the distance to the root window") {
  CHECK(budget_root(iv(-1, -1), root_window(2), false) == 3);
  CHECK(budget_root(iv(-1, -1), root_window(1), false) == 4);
  CHECK(budget_root(iv(-1, -1), root_window(0), false) == 5);
  CHECK(budget_root(iv(4, 4), root_window(0), false) == 0);
  CHECK(budget_root(iv(-1, -1), root_window(0), true) == 0);
}

TEST_CASE("flexibility breakpoints") {
  Breakpoints bp = flexibility_breakpoints(iv(-3, 3), iv(-2, -2));
  CHECK(bp.plus == 3);
  CHECK(bp.minus == 3);
  CHECK(flexibility_breakpoints(iv(1, 4), iv(-1, 2)) == Breakpoints{0, 0});
  // With no budget the three-argument form agrees with the two-argument one.
  CHECK(flexibility_breakpoints(iv(-3, 3), iv(-2, -2), iv(-1, -1)) == bp);
}

TEST_CASE("budgets of the example graph") {
  PlaneGraph g = load_plane_graph(testsupport::data_path("fig1.json"));
  SpqTree tree = build_spq_tree(g);
  BudgetResult r = bottom_up(tree);
  CHECK(r.total == 5);
  CHECK(r.root_budget == 2);
  CHECK_FALSE(rectilinear_test(tree));
  int positive = 0;
  for (int id = 0; id < tree.size(); ++id) {
    const SpqNode& nd = tree[id];
    const NodeAnnotation& a = r.nodes[id];
    if (nd.kind == NodeKind::Chain || nd.kind == NodeKind::Series) CHECK(a.budget == 0);
    std::int64_t sum = a.budget;
    for (int c : nd.children) sum += r.nodes[c].cumulative;
    CHECK(a.cumulative == sum);
    if (a.budget > 0 && id != tree.root) {
      ++positive;
      CHECK(g.vertex_ids[nd.source] == "2");
      CHECK(g.vertex_ids[nd.sink] == "11");
      CHECK(a.budget == 3);
    }
  }
  CHECK(positive == 1);
}

TEST_CASE("a rectilinear graph needs no budget") {
  PlaneGraph g = load_plane_graph(testsupport::data_path("square.json"));
  SpqTree tree = build_spq_tree(g);
  std::vector<std::optional<SpiralityInterval>> intervals;
  CHECK(rectilinear_test(tree, &intervals));
  CHECK(bottom_up(tree).total == 0);
  REQUIRE(intervals[tree.inner].has_value());
  CHECK(*intervals[tree.inner] == iv(-2, 2));
}
