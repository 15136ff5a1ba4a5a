#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bendmin/compaction.hpp"
#include "bendmin/pipeline.hpp"

using namespace bendmin;

namespace {

struct Options {
  std::string input = "-";
  std::string ref_edge;
  std::string format;
  std::string out;
  std::uint64_t seed = 1;
  int count = 1000;
  int max_n = 30;
  int vertices = 20;
  double parallel_bias = 0.35;
  std::string sizes = "1e3,1e4,1e5";
  bool parallel = false;
};

std::shared_ptr<const PlaneGraph> load(const Options& o) {
  PlaneGraph g = load_plane_graph(o.input);
  if (!o.ref_edge.empty()) {
    int e = g.find_edge(o.ref_edge);
    if (e < 0) throw Error(ErrorKind::InvalidInput, "unknown reference edge " + o.ref_edge);
    g.reference_edge = e;
    g.finalize();
  }
  return std::make_shared<const PlaneGraph>(std::move(g));
}

void write_output(const Options& o, const std::string& text) {
  if (o.out.empty() || o.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + o.out);
  f << text;
}

std::vector<int> parse_sizes(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double v = std::stod(item);
    if (v < 3 || v > 5e7) throw Error(ErrorKind::InvalidInput, "size out of range: " + item);
    out.push_back(static_cast<int>(std::llround(v)));
  }
  if (out.empty()) throw Error(ErrorKind::InvalidInput, "no sizes given");
  return out;
}

int cmd_check(const Options& o) {
  auto g = load(o);
  Decomposition d = decompose(g);
  std::cout << "rectilinear: " << (rectilinear_test(d.tree) ? "true" : "false") << "\n";
  return 0;
}

int cmd_tree(const Options& o) {
  auto g = load(o);
  Decomposition d = decompose(g);
  if (o.format == "json") std::cout << tree_to_json(d.tree).dump(2) << "\n";
  else std::cout << dump_tree(d.tree);
  return 0;
}

int cmd_budget(const Options& o) {
  auto g = load(o);
  PipelineResult r = run_pipeline(g);
  const auto& ann = r.budgets.nodes;
  for (int id = 0; id < r.tree.size(); ++id) {
    const SpqNode& nd = r.tree[id];
    std::cout << "node " << id;
    switch (nd.kind) {
      case NodeKind::Chain: std::cout << " Q*"; break;
      case NodeKind::Series: std::cout << " S"; break;
      case NodeKind::Parallel: std::cout << " P" << (ann[id].type ? " " + ann[id].type->name() : ""); break;
      case NodeKind::Root: std::cout << " root"; break;
    }
    std::cout << " poles " << r.graph->vertex_ids[nd.source] << "->" << r.graph->vertex_ids[nd.sink]
              << " interval " << ann[id].interval.str() << " budget " << ann[id].budget << " cumulative "
              << ann[id].cumulative << "\n";
  }
  std::cout << "bends: " << r.bends << "\n";
  return 0;
}

int cmd_minimize(const Options& o) {
  auto g = load(o);
  PipelineResult r = run_pipeline(g);
  std::cout << "bends: " << r.bends << "\n";
  if (!o.out.empty()) write_output(o, to_json(r.representation).dump(2) + "\n");
  return 0;
}

int cmd_draw(const Options& o) {
  auto g = load(o);
  PipelineResult r = run_pipeline(g);
  GridDrawing d = compact(r.representation);
  if (o.format == "svg")
    write_output(o, emit_svg(d));
  else
    write_output(o, to_json(d).dump(2) + "\n");
  if (!o.out.empty() && o.out != "-") std::cout << "bends: " << d.bend_count() << "\n";
  return 0;
}

int cmd_oracle(const Options& o) {
  std::cout << "# seed: " << o.seed << "\n";
  auto specs = oracle_batch_specs(o.seed, o.count, o.max_n);
  auto records = o.parallel ? compare_batch_parallel(specs) : compare_batch(specs);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const OracleRecord& rec = records[i];
    if (rec.ok()) continue;
    std::cout << "mismatch: seed " << rec.seed << " vertices " << rec.vertices << " bends " << rec.bends
              << " oracle " << rec.oracle << (rec.error.empty() ? "" : " error: " + rec.error) << "\n";
    std::cout << to_json(generate_sp(specs[i])).dump() << "\n";
    return 2;
  }
  std::cout << "instances: " << records.size() << " mismatches: 0\n";
  return 0;
}

int cmd_bench(const Options& o) {
  std::cout << "# seed: " << o.seed << "\n";
  std::cout << "vertices seconds bends ratio\n";
  double prev = 0;
  for (const TimingRow& row : time_pipeline(parse_sizes(o.sizes), o.seed)) {
    std::cout << row.vertices << ' ' << row.seconds << ' ' << row.bends << ' ';
    if (prev > 0) std::cout << row.seconds / prev;
    else std::cout << '-';
    std::cout << "\n";
    prev = row.seconds;
  }
  return 0;
}

int cmd_gen(const Options& o) {
  GeneratorSpec spec;
  spec.vertices = o.vertices;
  spec.seed = o.seed;
  spec.parallel_bias = o.parallel_bias;
  nlohmann::json doc = to_json(generate_sp(spec));
  doc["seed"] = o.seed;
  write_output(o, doc.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bend-minimum orthogonal representations of series-parallel plane graphs"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Graph JSON file, or - for standard input")->required();
    sub->add_option("--ref-edge", o.ref_edge, "Reference edge id (must border the external face)");
  };
  auto* check = app.add_subcommand("check", "Test whether the graph is rectilinear planar");
  add_input(check);
  auto* tree = app.add_subcommand("tree", "Print the decomposition tree");
  add_input(tree);
  tree->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* budget = app.add_subcommand("budget", "Print intervals and budgets of the decomposition tree");
  add_input(budget);
  auto* minimize = app.add_subcommand("minimize", "Compute a bend-minimum representation");
  add_input(minimize);
  minimize->add_option("--out", o.out, "Write the representation JSON here (- for stdout)");
  auto* draw = app.add_subcommand("draw", "Draw a bend-minimum representation on the grid");
  add_input(draw);
  draw->add_option("--format", o.format, "svg or json")->check(CLI::IsMember({"svg", "json"}));
  draw->add_option("--out", o.out, "Output file (default stdout)");
  auto* oracle = app.add_subcommand("oracle", "Compare against the min-cost-flow oracle on generated graphs");
  oracle->add_option("--seed", o.seed, "First seed");
  oracle->add_option("--count", o.count, "Number of instances")->check(CLI::Range(1, 10000000));
  oracle->add_option("--max-n", o.max_n, "Largest vertex count")->check(CLI::Range(4, 100000));
  oracle->add_flag("--parallel", o.parallel, "Spread instances over threads");
  auto* bench = app.add_subcommand("bench", "Time the pipeline on generated graphs");
  bench->add_option("--sizes", o.sizes, "Comma-separated vertex counts, e.g. 1e3,1e4");
  bench->add_option("--seed", o.seed, "Generator seed");
  auto* gen = app.add_subcommand("gen", "Generate a random series-parallel plane graph");
  gen->add_option("--n", o.vertices, "Vertex count")->check(CLI::Range(3, 50000000));
  gen->add_option("--seed", o.seed, "Generator seed");
  gen->add_option("--parallel-bias", o.parallel_bias, "Probability of parallel compositions")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--out", o.out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (check->parsed()) return cmd_check(o);
    if (tree->parsed()) return cmd_tree(o);
    if (budget->parsed()) return cmd_budget(o);
    if (minimize->parsed()) return cmd_minimize(o);
    if (draw->parsed()) return cmd_draw(o);
    if (oracle->parsed()) return cmd_oracle(o);
    if (bench->parsed()) return cmd_bench(o);
    if (gen->parsed()) return cmd_gen(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::Internal ? 3 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
