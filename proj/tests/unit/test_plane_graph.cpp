#include <set>

#include <doctest.h>

#include "bendmin/plane_graph.hpp"
#include "oracles.hpp"

using namespace bendmin;
using nlohmann::json;

namespace {

json square_doc() {
  return json::parse(R"({
    "vertices": ["a", "b", "c", "d"],
    "edges": [{"id": "ab", "u": "a", "v": "b"}, {"id": "bc", "u": "b", "v": "c"},
              {"id": "cd", "u": "c", "v": "d"}, {"id": "da", "u": "d", "v": "a"}],
    "rotation": {"a": ["ab", "da"], "b": ["bc", "ab"], "c": ["cd", "bc"], "d": ["da", "cd"]},
    "external_face_edge": {"edge": "ab", "side": "right"},
    "reference_edge": "ab"})");
}

ErrorKind kind_of(const json& doc) {
  try {
    parse_plane_graph(doc);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Internal;
}

// Triangles (c, a_i, b_i) glued at c, listed clockwise around c.
json triangle_fan(int count) {
  json doc;
  doc["vertices"] = json::array({"c"});
  doc["edges"] = json::array();
  json rot_c = json::array();
  for (int i = 0; i < count; ++i) {
    std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    doc["vertices"].push_back(a);
    doc["vertices"].push_back(b);
    doc["edges"].push_back({{"id", "c" + a}, {"u", "c"}, {"v", a}});
    doc["edges"].push_back({{"id", a + b}, {"u", a}, {"v", b}});
    doc["edges"].push_back({{"id", b + "c"}, {"u", b}, {"v", "c"}});
    rot_c.push_back("c" + a);
    rot_c.push_back(b + "c");
    doc["rotation"][a] = {a + b, "c" + a};
    doc["rotation"][b] = {b + "c", a + b};
  }
  doc["rotation"]["c"] = rot_c;
  doc["external_face_edge"] = {{"edge", "a0b0"}, {"side", "left"}};
  doc["reference_edge"] = "a0b0";
  return doc;
}

}  // namespace

TEST_CASE("a 4-cycle has two faces") {
  PlaneGraph g = parse_plane_graph(square_doc());
  CHECK(g.vertex_count() == 4);
  CHECK(g.faces.size() == 2);
  CHECK(g.faces[g.external_face].size() == 4);
  CHECK(g.dart_face[g.external_dart] == g.external_face);
  CHECK(is_biconnected(g));
  auto [s, t] = g.reference_poles();
  CHECK(g.vertex_ids[s] == "a");
  CHECK(g.vertex_ids[t] == "b");
}

TEST_CASE("a single edge has one face") {
  json doc = json::parse(R"({"vertices": ["x", "y"], "edges": [{"id": "e", "u": "x", "v": "y"}],
    "rotation": {"x": ["e"], "y": ["e"]}, "external_face_edge": {"edge": "e"}, "reference_edge": "e"})");
  PlaneGraph g = parse_plane_graph(doc);
  CHECK(g.faces.size() == 1);
  CHECK(g.faces[0].size() == 2);
  CHECK_FALSE(is_biconnected(g));
}

TEST_CASE("faces walk the left side of each dart") {
  PlaneGraph g = parse_plane_graph(square_doc());
  for (int d = 0; d < 2 * g.edge_count(); ++d) {
    int next = g.next_in_face(d);
    CHECK(g.tail(next) == g.head(d));
    CHECK(g.dart_face[next] == g.dart_face[d]);
  }
}

TEST_CASE("invalid inputs are rejected") {
  json deg5 = json::parse(R"({"vertices": ["c", "1", "2", "3", "4", "5"],
    "edges": [{"id": "c1", "u": "c", "v": "1"}, {"id": "c2", "u": "c", "v": "2"}, {"id": "c3", "u": "c", "v": "3"},
              {"id": "c4", "u": "c", "v": "4"}, {"id": "c5", "u": "c", "v": "5"}],
    "rotation": {"c": ["c1", "c2", "c3", "c4", "c5"], "1": ["c1"], "2": ["c2"], "3": ["c3"], "4": ["c4"], "5": ["c5"]},
    "external_face_edge": {"edge": "c1"}})");
  CHECK(kind_of(deg5) == ErrorKind::InvalidInput);

  json bad_rotation = square_doc();
  bad_rotation["rotation"]["a"] = {"ab", "bc"};
  CHECK(kind_of(bad_rotation) == ErrorKind::InvalidInput);

  json no_face = square_doc();
  no_face.erase("external_face_edge");
  CHECK(kind_of(no_face) == ErrorKind::InvalidInput);

  json missing_vertex = square_doc();
  missing_vertex["edges"][0]["v"] = "z";
  CHECK(kind_of(missing_vertex) == ErrorKind::InvalidInput);

  CHECK_THROWS_AS(parse_plane_graph_text("{ not json"), Error);
}

TEST_CASE("a non-planar rotation fails Euler's formula") {
  // K4 with one rotation reversed so that the traced faces are too few.
  json doc = json::parse(R"({"vertices": ["1", "2", "3", "4"],
    "edges": [{"id": "a", "u": "1", "v": "2"}, {"id": "b", "u": "2", "v": "3"}, {"id": "c", "u": "3", "v": "1"},
              {"id": "d", "u": "1", "v": "4"}, {"id": "e", "u": "2", "v": "4"}, {"id": "f", "u": "3", "v": "4"}],
    "rotation": {"1": ["a", "c", "d"], "2": ["a", "e", "b"], "3": ["b", "f", "c"], "4": ["e", "f", "d"]},
    "external_face_edge": {"edge": "a"}})");
  CHECK(kind_of(doc) == ErrorKind::InvalidInput);
}

TEST_CASE("json round trip keeps the embedding") {
  PlaneGraph g = load_plane_graph(testsupport::data_path("fig1.json"));
  PlaneGraph back = parse_plane_graph(to_json(g));
  CHECK(back.vertex_ids == g.vertex_ids);
  CHECK(back.rotation == g.rotation);
  CHECK(back.external_dart == g.external_dart);
  CHECK(back.reference_edge == g.reference_edge);
  CHECK(back.faces.size() == g.faces.size());
  CHECK(g.faces.size() == 6);
}

TEST_CASE("a path is closed by a dummy edge between its ends") {
  json doc = json::parse(R"({"vertices": ["p", "q", "r", "s"],
    "edges": [{"id": "pq", "u": "p", "v": "q"}, {"id": "qr", "u": "q", "v": "r"}, {"id": "rs", "u": "r", "v": "s"}],
    "rotation": {"p": ["pq"], "q": ["qr", "pq"], "r": ["rs", "qr"], "s": ["rs"]},
    "external_face_edge": {"edge": "pq"}})");
  PlaneGraph g = parse_plane_graph(doc);
  CHECK_FALSE(is_biconnected(g));
  PlaneGraph aug = biconnect_augment(g);
  CHECK(is_biconnected(aug));
  CHECK(aug.edge_count() == 4);
  const Edge& dummy = aug.edges[aug.reference_edge];
  CHECK(dummy.dummy);
  std::set<std::string> ends = {aug.vertex_ids[dummy.u], aug.vertex_ids[dummy.v]};
  CHECK(ends == std::set<std::string>{"p", "s"});
}

TEST_CASE("two triangles sharing a vertex close into one block") {
  PlaneGraph g = parse_plane_graph(triangle_fan(2));
  CHECK_FALSE(is_biconnected(g));
  CHECK_FALSE(augmentation_candidates(g).empty());
  CHECK(is_biconnected(biconnect_augment(g)));
}

TEST_CASE("a block tree that is not a path cannot be closed by one edge") {
  // A triangle with a pendant edge at each corner.
  json doc = triangle_fan(1);
  doc["vertices"].push_back("x");
  doc["vertices"].push_back("y");
  doc["edges"].push_back({{"id", "a0x"}, {"u", "a0"}, {"v", "x"}});
  doc["edges"].push_back({{"id", "b0y"}, {"u", "b0"}, {"v", "y"}});
  doc["edges"].push_back({{"id", "cz"}, {"u", "c"}, {"v", "z"}});
  doc["vertices"].push_back("z");
  doc["rotation"]["a0"] = {"a0b0", "ca0", "a0x"};
  doc["rotation"]["b0"] = {"b0c", "a0b0", "b0y"};
  doc["rotation"]["c"] = {"ca0", "b0c", "cz"};
  doc["rotation"]["x"] = {"a0x"};
  doc["rotation"]["y"] = {"b0y"};
  doc["rotation"]["z"] = {"cz"};
  PlaneGraph g = parse_plane_graph(doc);
  CHECK_FALSE(is_biconnected(g));
  CHECK_THROWS_AS(biconnect_augment(g), Error);
}
