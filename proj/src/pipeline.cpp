#include "bendmin/pipeline.hpp"

#include <chrono>

namespace bendmin {

Decomposition decompose(std::shared_ptr<const PlaneGraph> g) {
  if (is_biconnected(*g)) return {g, build_spq_tree(*g)};
  std::string last = "graph is not series-parallel";
  for (const auto& [a, b] : augmentation_candidates(*g)) {
    auto aug = std::make_shared<const PlaneGraph>(add_dummy_edge(*g, a, b));
    try {
      return {aug, build_spq_tree(*aug)};
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NotSeriesParallel) throw;
      last = e.what();
    }
  }
  throw Error(ErrorKind::NotSeriesParallel, last);
}

PipelineResult run_pipeline(std::shared_ptr<const PlaneGraph> g, std::mt19937_64* rng) {
  PipelineResult r;
  r.input = g;
  Decomposition d = decompose(g);
  r.graph = d.graph;
  r.tree = std::move(d.tree);
  r.budgets = bottom_up(r.tree);
  r.construction = assemble(r.tree, r.budgets, rng);
  r.construction.rep.graph = r.graph;
  if (r.graph == g) r.representation = std::move(r.construction.rep);
  else r.representation = drop_dummy_edge(r.construction.rep, g);
  r.bends = r.construction.bends;
  return r;
}

std::vector<std::string> target_mismatches(const PipelineResult& r) {
  std::vector<std::string> out;
  for (int id = 0; id < r.tree.size(); ++id) {
    if (id == r.tree.root || id == r.tree.reference_chain) continue;
    Spirality2 left = measure_spirality(r.tree_representation(), r.tree, id, false);
    Spirality2 right = measure_spirality(r.tree_representation(), r.tree, id, true);
    Spirality2 want = r.construction.target[id];
    if (left != want || right != want)
      out.push_back("node " + std::to_string(id) + ": target " + format_spirality(want) + ", measured " +
                    format_spirality(left) + " / " + format_spirality(right));
  }
  return out;
}

OracleRecord compare_with_oracle(const GeneratorSpec& spec) {
  OracleRecord rec;
  rec.seed = spec.seed;
  rec.vertices = spec.vertices;
  try {
    auto g = std::make_shared<const PlaneGraph>(generate_sp(spec));
    PipelineResult r = run_pipeline(g);
    rec.bends = r.bends;
    rec.rectilinear = rectilinear_test(r.tree);
    rec.oracle = flow_min_bends(*g);
    CheckReport check = check_representation(r.representation);
    std::vector<std::string> mismatches = target_mismatches(r);
    rec.representation_valid = check.ok && mismatches.empty() && r.representation.bend_count() == r.bends;
    if (!check.ok) rec.error = check.violations.front();
    else if (!mismatches.empty()) rec.error = mismatches.front();
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

std::vector<GeneratorSpec> oracle_batch_specs(std::uint64_t seed, int count, int max_vertices) {
  std::vector<GeneratorSpec> specs;
  const int span = std::max(1, max_vertices - 3);
  for (int i = 0; i < count; ++i) {
    GeneratorSpec s;
    s.vertices = 4 + i % span;
    s.seed = seed + static_cast<std::uint64_t>(i);
    // Alternate the shape parameters so that the batch mixes deep and wide trees.
    static constexpr double kParallel[] = {0.2, 0.35, 0.5, 0.65};
    static constexpr double kChain[] = {0.6, 0.4, 0.25, 0.15};
    s.parallel_bias = kParallel[(i / span) % 4];
    s.chain_continue = kChain[(i / span / 4) % 4];
    s.three_way = 0.3;
    specs.push_back(s);
  }
  return specs;
}

std::vector<OracleRecord> compare_batch(const std::vector<GeneratorSpec>& specs) {
  std::vector<OracleRecord> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(compare_with_oracle(s));
  return out;
}

std::vector<OracleRecord> compare_batch_parallel(const std::vector<GeneratorSpec>& specs) {
  std::vector<OracleRecord> out(specs.size());
  const long n = static_cast<long>(specs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < n; ++i) out[i] = compare_with_oracle(specs[i]);
  return out;
}

std::vector<TimingRow> time_pipeline(const std::vector<int>& sizes, std::uint64_t seed, int repeats) {
  std::vector<TimingRow> rows;
  for (int n : sizes) {
    GeneratorSpec spec;
    spec.vertices = n;
    spec.seed = seed;
    auto g = std::make_shared<const PlaneGraph>(generate_sp(spec));
    TimingRow row;
    row.vertices = n;
    row.seconds = -1;
    for (int i = 0; i < std::max(1, repeats); ++i) {
      auto start = std::chrono::steady_clock::now();
      PipelineResult r = run_pipeline(g);
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      if (row.seconds < 0 || s < row.seconds) row.seconds = s;
      row.bends = r.bends;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bendmin
