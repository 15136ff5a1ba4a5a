#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "bendmin/budgets.hpp"
#include "bendmin/flow_oracle.hpp"
#include "bendmin/representation.hpp"
#include "bendmin/spq_tree.hpp"

namespace bendmin {

struct PipelineResult {
  std::shared_ptr<const PlaneGraph> input;
  /// The input, or the input plus a dummy reference edge when it was not biconnected.
  std::shared_ptr<const PlaneGraph> graph;
  SpqTree tree;
  BudgetResult budgets;
  /// `construction.rep` is moved into `representation` when no dummy edge was added.
  Construction construction;
  /// Representation of the input graph.
  OrthogonalRepresentation representation;
  std::int64_t bends = 0;

  /// Representation of `graph`, the one the tree nodes refer to.
  const OrthogonalRepresentation& tree_representation() const {
    return graph == input ? representation : construction.rep;
  }
};

struct Decomposition {
  std::shared_ptr<const PlaneGraph> graph;
  SpqTree tree;
};
/// Builds the decomposition of g, augmenting it first when it has cut vertices.
/// Throws Error(NotSeriesParallel) when no decomposition exists.
Decomposition decompose(std::shared_ptr<const PlaneGraph> g);

/// Tree, budgets and representation. With `rng`, free choices are randomized.
PipelineResult run_pipeline(std::shared_ptr<const PlaneGraph> g, std::mt19937_64* rng = nullptr);

/// Nodes whose measured spirality differs from the assigned target.
std::vector<std::string> target_mismatches(const PipelineResult& r);

struct OracleRecord {
  std::uint64_t seed = 0;
  int vertices = 0;
  std::int64_t bends = -1;
  std::int64_t oracle = -1;
  bool rectilinear = false;
  bool representation_valid = false;
  std::string error;

  bool ok() const {
    return error.empty() && bends == oracle && rectilinear == (oracle == 0) && representation_valid;
  }
};

/// Runs the pipeline and the flow oracle on one generated instance.
OracleRecord compare_with_oracle(const GeneratorSpec& spec);

/// Generator specs for a seeded batch: vertex counts cycle through 4..max_vertices.
std::vector<GeneratorSpec> oracle_batch_specs(std::uint64_t seed, int count, int max_vertices);

std::vector<OracleRecord> compare_batch(const std::vector<GeneratorSpec>& specs);
/// Same results as compare_batch, instances spread over OpenMP threads.
std::vector<OracleRecord> compare_batch_parallel(const std::vector<GeneratorSpec>& specs);

struct TimingRow {
  int vertices = 0;
  double seconds = 0;
  std::int64_t bends = 0;
};

/// Wall time of run_pipeline on one generated instance per size (best of
/// `repeats` runs). Generation and I/O are not timed.
std::vector<TimingRow> time_pipeline(const std::vector<int>& sizes, std::uint64_t seed, int repeats = 5);

}  // namespace bendmin
