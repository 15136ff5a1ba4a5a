#include <algorithm>

#include <doctest.h>

#include "bendmin/flow_oracle.hpp"
#include "bendmin/pipeline.hpp"
#include "oracles.hpp"

using namespace bendmin;

namespace {

PlaneGraph cycle(int k) {
  nlohmann::json doc;
  for (int i = 0; i < k; ++i) {
    doc["vertices"].push_back(std::to_string(i));
    doc["edges"].push_back({{"id", "e" + std::to_string(i)}, {"u", std::to_string(i)}, {"v", std::to_string((i + 1) % k)}});
    doc["rotation"][std::to_string(i)] = {"e" + std::to_string(i), "e" + std::to_string((i + k - 1) % k)};
  }
  doc["external_face_edge"] = {{"edge", "e0"}, {"side", "right"}};
  doc["reference_edge"] = "e0";
  return parse_plane_graph(doc);
}

}  // namespace

TEST_CASE("cycles") {
  CHECK(flow_min_bends(cycle(3)) == 1);
  for (int k = 4; k <= 9; ++k) CHECK(flow_min_bends(cycle(k)) == 0);
}

TEST_CASE("the example graph needs five bends") {
  PlaneGraph g = load_plane_graph(testsupport::data_path("fig1.json"));
  CHECK(flow_min_bends(g) == 5);
}

TEST_CASE("flow representations are valid and optimal") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GeneratorSpec spec;
    spec.seed = seed;
    spec.vertices = 5 + static_cast<int>(seed % 25);
    auto g = std::make_shared<const PlaneGraph>(generate_sp(spec));
    OrthogonalRepresentation h = flow_representation(g);
    CHECK(testsupport::validate_representation(h).empty());
    CHECK(h.bend_count() == flow_min_bends(*g));
  }
}

TEST_CASE("the generator is deterministic") {
  GeneratorSpec spec;
  spec.vertices = 40;
  spec.seed = 99;
  CHECK(to_json(generate_sp(spec)) == to_json(generate_sp(spec)));
  GeneratorSpec other = spec;
  other.seed = 100;
  CHECK(to_json(generate_sp(spec)) != to_json(generate_sp(other)));
}

TEST_CASE("generated graphs meet their spec") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    GeneratorSpec spec;
    spec.seed = seed;
    spec.vertices = 3 + static_cast<int>(seed % 60);
    spec.parallel_bias = (seed % 5) / 5.0;
    PlaneGraph g = generate_sp(spec);
    CHECK(g.vertex_count() == spec.vertices);
    CHECK(is_biconnected(g));
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) <= 4);
    CHECK_NOTHROW(build_spq_tree(g));
  }
  GeneratorSpec tiny;
  tiny.vertices = 2;
  CHECK_THROWS_AS(generate_sp(tiny), Error);
}
