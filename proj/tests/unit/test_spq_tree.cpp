#include <algorithm>
#include <set>

#include <doctest.h>

#include "bendmin/budgets.hpp"
#include "bendmin/flow_oracle.hpp"
#include "bendmin/pipeline.hpp"
#include "oracles.hpp"

using namespace bendmin;
using nlohmann::json;

namespace {

// Three 2-edge paths between s and t plus the edge st drawn below them.
PlaneGraph theta_graph() {
  return parse_plane_graph(json::parse(R"({
    "vertices": ["s", "t", "x", "y", "z"],
    "edges": [{"id": "st", "u": "s", "v": "t"},
              {"id": "sx", "u": "s", "v": "x"}, {"id": "xt", "u": "x", "v": "t"},
              {"id": "sy", "u": "s", "v": "y"}, {"id": "yt", "u": "y", "v": "t"},
              {"id": "sz", "u": "s", "v": "z"}, {"id": "zt", "u": "z", "v": "t"}],
    "rotation": {"s": ["sx", "sy", "sz", "st"], "t": ["st", "zt", "yt", "xt"],
                 "x": ["sx", "xt"], "y": ["sy", "yt"], "z": ["sz", "zt"]},
    "external_face_edge": {"edge": "st", "side": "right"},
    "reference_edge": "st"})"));
}

int find_p_node(const SpqTree& tree, const std::string& a, const std::string& b) {
  const PlaneGraph& g = *tree.graph;
  for (int id = 0; id < tree.size(); ++id) {
    const SpqNode& nd = tree[id];
    if (nd.kind != NodeKind::Parallel) continue;
    std::set<std::string> poles = {g.vertex_ids[nd.source], g.vertex_ids[nd.sink]};
    if (poles == std::set<std::string>{a, b}) return id;
  }
  return -1;
}

}  // namespace

TEST_CASE("a 4-cycle is the reference edge plus one chain") {
  PlaneGraph g = load_plane_graph(testsupport::data_path("square.json"));
  SpqTree tree = build_spq_tree(g);
  CHECK(tree.size() == 3);
  CHECK(tree[tree.root].kind == NodeKind::Root);
  CHECK(tree[tree.inner].kind == NodeKind::Chain);
  CHECK(tree[tree.inner].chain_length() == 3);
  CHECK(tree[tree.reference_chain].chain_length() == 1);
  CHECK(exposed_edge(tree, tree.inner) == tree[tree.inner].chain_edges.front());
  CHECK(root_free_poles(tree) == 2);
}

TEST_CASE("tree dumps of the 4-cycle") {
  PlaneGraph g = load_plane_graph(testsupport::data_path("square.json"));
  SpqTree tree = build_spq_tree(g);
  CHECK(dump_tree(tree) == "0 root a->b\n  1 Q* a->b [da cd bc]\n  2 Q* a->b [ab]\n");
  json j = tree_to_json(tree);
  CHECK(j["root"] == 0);
  REQUIRE(j["nodes"].size() == 3);
  CHECK(j["nodes"][0]["children"] == json::array({1, 2}));
  CHECK(j["nodes"][1]["edges"] == json::array({"da", "cd", "bc"}));
  CHECK(j["nodes"][2]["kind"] == "Q*");
  CHECK(j["nodes"][2]["parent"] == 0);
}

TEST_CASE("three parallel paths form one three-child P-node") {
  PlaneGraph g = theta_graph();
  SpqTree tree = build_spq_tree(g);
  CHECK(tree.count(NodeKind::Parallel) == 1);
  const SpqNode& p = tree[tree.inner];
  REQUIRE(p.kind == NodeKind::Parallel);
  REQUIRE(p.children.size() == 3);
  // The leftmost child holds the edge clockwise after st at s.
  CHECK(g.edges[tree[p.children[0]].chain_edges.front()].id == "sx");
  CHECK(g.edges[tree[p.children[1]].chain_edges.front()].id == "sy");
  CHECK(g.edges[tree[p.children[2]].chain_edges.front()].id == "sz");
  CHECK(root_free_poles(tree) == 0);
  CHECK(exposed_edge(tree, tree.inner) == -1);
  // Chain intervals [-1,1] shifted by +-2 never meet.
  CHECK_FALSE(rectilinear_test(tree));
  CHECK(flow_min_bends(g) > 0);
}

TEST_CASE("the example graph has the documented P-nodes") {
  PlaneGraph g = load_plane_graph(testsupport::data_path("fig1.json"));
  SpqTree tree = build_spq_tree(g);
  CHECK(tree.count(NodeKind::Parallel) == 4);
  int nu3 = find_p_node(tree, "2", "11");
  int nu5 = find_p_node(tree, "1", "11");
  REQUIRE(nu3 >= 0);
  REQUIRE(nu5 >= 0);
  PNodeType t3 = classify_p_node(tree, nu3);
  PNodeType t5 = classify_p_node(tree, nu5);
  // Poles are oriented from the reference edge's source, so u is 2 (or 1) and v is 11.
  CHECK(g.vertex_ids[tree[nu3].source] == "2");
  CHECK(t3.k_ul == 2);
  CHECK(t3.k_ur == 2);
  CHECK(t3.k_vl == 1);
  CHECK(t3.k_vr == 1);
  CHECK(t3.name() == "Pio2(12)");
  CHECK(t5.k_ul == 2);
  CHECK(t5.k_ur == 2);
  CHECK(t5.k_vl == 1);
  CHECK(t5.k_vr == 2);
  CHECK(t5.family == PFamily::Pio3);
  CHECK_FALSE(dump_tree(tree).empty());
}

TEST_CASE("exposed edges of series nodes come from chain children") {
  PlaneGraph g = load_plane_graph(testsupport::data_path("fig1.json"));
  SpqTree tree = build_spq_tree(g);
  int series_with_chain = 0;
  for (int id = 0; id < tree.size(); ++id) {
    const SpqNode& nd = tree[id];
    if (nd.kind != NodeKind::Series) continue;
    bool has_chain = std::any_of(nd.children.begin(), nd.children.end(),
                                 [&](int c) { return tree[c].kind == NodeKind::Chain; });
    int e = exposed_edge(tree, id);
    CHECK((e >= 0) == has_chain);
    if (e >= 0) {
      ++series_with_chain;
      bool in_chain_child = false;
      for (int c : nd.children)
        if (tree[c].kind == NodeKind::Chain && std::count(tree[c].chain_edges.begin(), tree[c].chain_edges.end(), e))
          in_chain_child = true;
      CHECK(in_chain_child);
    }
  }
  CHECK(series_with_chain > 0);
}

TEST_CASE("generated trees partition the edges and respect the size bound") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    GeneratorSpec spec;
    spec.vertices = 4 + static_cast<int>(seed % 40);
    spec.seed = seed;
    spec.parallel_bias = 0.5;
    PlaneGraph g = generate_sp(spec);
    SpqTree tree = build_spq_tree(g);
    CHECK(tree.size() <= 2 * g.edge_count());
    auto edges = testsupport::component_edges(tree);
    std::vector<int> cover(g.edge_count(), 0);
    for (int id = 0; id < tree.size(); ++id)
      if (tree[id].kind == NodeKind::Chain)
        for (int e : tree[id].chain_edges) ++cover[e];
    CHECK(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }));
    CHECK(edges[tree.root].size() == static_cast<std::size_t>(g.edge_count()));
    for (int id = 0; id < tree.size(); ++id) {
      const SpqNode& nd = tree[id];
      if (nd.kind != NodeKind::Parallel || nd.children.size() != 2) continue;
      // Coefficients follow from the degrees at the poles.
      PNodeType t = classify_p_node(tree, id);
      auto count_at = [&](int node, int w) {
        int n = 0;
        for (int e : edges[node]) n += (g.edges[e].u == w) + (g.edges[e].v == w);
        return n;
      };
      auto coeff = [&](int child, int w) {
        int outside = g.degree(w) - count_at(id, w);
        return count_at(child, w) == 1 && outside == 1 ? 2 : 1;
      };
      CHECK(t.k_ul == coeff(nd.children[0], nd.source));
      CHECK(t.k_ur == coeff(nd.children[1], nd.source));
      CHECK(t.k_vl == coeff(nd.children[0], nd.sink));
      CHECK(t.k_vr == coeff(nd.children[1], nd.sink));
      // At least one child of a non-root P-node carries an exposed edge.
      CHECK((exposed_edge(tree, nd.children[0]) >= 0 || exposed_edge(tree, nd.children[1]) >= 0));
    }
  }
}

TEST_CASE("graphs that are not series-parallel are rejected") {
  // K4 is the smallest biconnected graph that is not series-parallel.
  PlaneGraph k4 = parse_plane_graph(json::parse(R"({"vertices": ["1", "2", "3", "4"],
    "edges": [{"id": "a", "u": "1", "v": "2"}, {"id": "b", "u": "2", "v": "3"}, {"id": "c", "u": "3", "v": "1"},
              {"id": "d", "u": "1", "v": "4"}, {"id": "e", "u": "2", "v": "4"}, {"id": "f", "u": "3", "v": "4"}],
    "rotation": {"1": ["a", "c", "d"], "2": ["a", "e", "b"], "3": ["b", "f", "c"], "4": ["e", "d", "f"]},
    "external_face_edge": {"edge": "a", "side": "right"}, "reference_edge": "a"})"));
  try {
    build_spq_tree(k4);
    FAIL("K4 accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotSeriesParallel);
  }
}
