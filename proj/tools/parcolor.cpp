/*
 * Copyright (c) 2026 The parcolor Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "parcolor/bench.hpp"
#include "parcolor/coloring.hpp"
#include "parcolor/graph.hpp"

namespace {

struct InputOptions {
  std::string path;
  std::string synthetic;
};

void add_input_options(CLI::App* cmd, InputOptions& input) {
  auto* file = cmd->add_option("--input", input.path, "edge-list file (# comments allowed)")
                   ->check(CLI::ExistingFile);
  auto* synth = cmd->add_option("--synthetic", input.synthetic,
                                "generated graph, kind:params[:seed] "
                                "(path:N | cycle:N | complete:N | bipartite:A,B | gnp:N,PROB)");
  file->excludes(synth);
  synth->excludes(file);
}

parcolor::BenchConfig make_config(const InputOptions& input) {
  parcolor::BenchConfig cfg;
  if (!input.path.empty()) {
    cfg.input_path = input.path;
  } else if (!input.synthetic.empty()) {
    cfg.synthetic = parcolor::SyntheticSpec::parse(input.synthetic);
  } else {
    throw std::invalid_argument("one of --input or --synthetic is required");
  }
  return cfg;
}

parcolor::Graph load_graph(const parcolor::BenchConfig& cfg) {
  if (!cfg.input_path.empty()) {
    std::ifstream in(cfg.input_path);
    if (!in) throw std::runtime_error("cannot open input file: " + cfg.input_path);
    return parcolor::parse_edge_list(in);
  }
  return parcolor::generate_synthetic(*cfg.synthetic);
}

void write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::cout << data;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write output file: " + path);
  out << data;
}

void dump_conflicts(const parcolor::ConflictReport& report) {
  std::cerr << "verification failed: " << report.conflicts.size()
            << " monochromatic edge(s)\n";
  std::size_t shown = 0;
  for (const auto& edge : report.conflicts) {
    if (shown++ == 20) {
      std::cerr << "  ...\n";
      break;
    }
    std::cerr << "  {" << edge.u << ", " << edge.v << "}\n";
  }
}

int run_bench(const InputOptions& input, const std::string& algo,
              const std::vector<unsigned>& threads, unsigned reps, bool verify,
              const std::string& out_path, const std::string& format) {
  parcolor::BenchConfig cfg = make_config(input);
  cfg.algo = parcolor::algorithm_from_string(algo);
  cfg.thread_counts = threads;
  cfg.repetitions = reps;
  cfg.verify = verify;
  cfg.out_path = out_path;
  cfg.format = parcolor::output_format_from_string(format);

  const auto results = parcolor::run_benchmark(cfg);
  write_output(cfg.out_path, parcolor::emit_results(results, cfg.format));
  return 0;
}

int run_color(const InputOptions& input, const std::string& algo, unsigned threads,
              const std::string& out_path) {
  parcolor::BenchConfig cfg = make_config(input);
  const auto algorithm = parcolor::algorithm_from_string(algo);

  const parcolor::Graph g = load_graph(cfg);
  const auto run = parcolor::color_with(algorithm, g, threads);

  const auto report = parcolor::verify_coloring(g, run.coloring);
  if (!report.proper()) {
    dump_conflicts(report);
    return 2;
  }

  std::ostringstream data;
  parcolor::write_coloring(g, run.coloring, data);
  write_output(out_path, data.str());
  std::cerr << "colored " << g.vertex_count() << " vertices with "
            << parcolor::count_colors(run.coloring) << " colors\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"parallel graph coloring benchmark harness"};
  app.require_subcommand(1);

  InputOptions bench_input;
  std::string bench_algo;
  std::vector<unsigned> bench_threads{1};
  unsigned bench_reps = 10;
  bool bench_verify = false;
  std::string bench_out;
  std::string bench_format = "csv";

  auto* bench = app.add_subcommand("bench", "time an algorithm over a thread-count sweep");
  add_input_options(bench, bench_input);
  bench->add_option("--algo", bench_algo, "seq | barrier | coarse | fine")->required();
  bench->add_option("--threads", bench_threads, "thread counts, e.g. 1,2,4")
      ->delimiter(',');
  bench->add_option("--reps", bench_reps, "repetitions per data point (default 10)");
  bench->add_flag("--verify", bench_verify, "check every coloring (untimed)");
  bench->add_option("--out", bench_out, "output path (default stdout)");
  bench->add_option("--format", bench_format, "csv | json");

  InputOptions color_input;
  std::string color_algo = "seq";
  unsigned color_threads = 1;
  std::string color_out;

  auto* color = app.add_subcommand("color", "color a graph and write the assignment");
  add_input_options(color, color_input);
  color->add_option("--algo", color_algo, "seq | barrier | coarse | fine");
  color->add_option("--threads", color_threads, "worker count (default 1)");
  color->add_option("--out", color_out, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bench->parsed())
      return run_bench(bench_input, bench_algo, bench_threads, bench_reps,
                       bench_verify, bench_out, bench_format);
    return run_color(color_input, color_algo, color_threads, color_out);
  } catch (const parcolor::VerificationError& e) {
    std::cerr << e.what() << '\n';
    dump_conflicts(e.report());
    return 2;
  } catch (const parcolor::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
