#include "mstsens/cli.hpp"

#include <chrono>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "mstsens/graph.hpp"
#include "mstsens/reduction.hpp"
#include "mstsens/replay.hpp"
#include "mstsens/sensitivity.hpp"
#include "mstsens/splitfindmin.hpp"

namespace mstsens {

namespace {

const std::map<std::string, sf_variant> variant_names{
    {"naive", sf_variant::naive},
    {"basis", sf_variant::basis},
    {"recursive", sf_variant::recursive},
    {"star", sf_variant::star}};

struct common_flags {
  std::string input = "-";
  std::string output = "-";
  std::string variant = "recursive";
  int level = 0;
  bool plain = false;

  sf_options sf() const {
    sf_options o;
    o.variant = variant_names.at(variant);
    o.level = level;
    o.binary_search_decreasekey = !plain;
    return o;
  }
};

void add_variant_flags(CLI::App* cmd, common_flags& f) {
  cmd->add_option("--variant", f.variant, "split-findmin variant")
      ->check(CLI::IsMember({"naive", "basis", "recursive", "star"}))
      ->capture_default_str();
  cmd->add_option("--level", f.level,
                  "structure level (0 = pick from instance size)")
      ->check(CLI::NonNegativeNumber);
  cmd->add_flag("--plain", f.plain,
                "linear-scan decreasekey instead of binary search");
}

graph load_graph(const std::string& path, std::istream& fallback) {
  if (path == "-") return parse_graph(fallback);
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open input file " + path);
  return parse_graph(f);
}

std::ostream& open_output(const std::string& path, std::ostream& fallback,
                          std::ofstream& file) {
  if (path == "-") return fallback;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file " + path);
  return file;
}

void print_sens(const graph& g, const std::vector<std::int64_t>& sens,
                std::ostream& out) {
  for (int e = 0; e < g.m(); ++e) {
    out << "s " << g.edges[e].u + 1 << ' ' << g.edges[e].v + 1 << ' '
        << g.edges[e].w << ' ';
    if (sens[e] == sens_inf)
      out << "inf\n";
    else
      out << sens[e] << '\n';
  }
}

std::vector<std::int64_t> run_mst_algorithm(const std::string& algo,
                                            const graph& g,
                                            const std::vector<int>& tree,
                                            sf_options opt,
                                            sens_stats* stats) {
  if (algo == "brute") return mst_sensitivity_brute(g, tree);
  if (algo == "splitfindmin") return mst_sensitivity(g, tree, opt, stats);
  auto out = nontree_edge_sensitivity(g, tree);
  auto tree_sens = sensitivity_via_mst(g, tree);
  for (std::size_t t = 0; t < tree.size(); ++t) out[tree[t]] = tree_sens[t];
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"minimum spanning tree and shortest path tree sensitivity"};
  app.require_subcommand(1);

  common_flags mst_f, sssp_f, verify_f, replay_f, bench_f;
  std::string mst_algo = "splitfindmin", bench_algo = "splitfindmin";
  int sssp_source = 1;
  int verify_seeds = 10;
  long long verify_n = 100, verify_m = 400;
  bool replay_counts = false;
  long long bench_n = 1000;
  std::vector<long long> bench_ms;
  std::uint64_t bench_seed = 1;
  long long gen_n = 10, gen_m = 15, gen_wmax = 1000000000;
  std::uint64_t gen_seed = 1;
  std::string gen_output = "-";

  CLI::App* mst = app.add_subcommand(
      "mst-sens", "sensitivity of every edge w.r.t. the MST");
  mst->add_option("-i,--input", mst_f.input, "graph file or - for stdin")
      ->capture_default_str();
  mst->add_option("-o,--output", mst_f.output)->capture_default_str();
  mst->add_option("--algo", mst_algo, "tree-edge algorithm")
      ->check(CLI::IsMember({"splitfindmin", "reduction", "brute"}))
      ->capture_default_str();
  add_variant_flags(mst, mst_f);

  CLI::App* sssp = app.add_subcommand(
      "sssp-sens", "sensitivity of every edge w.r.t. the shortest path tree");
  sssp->add_option("-i,--input", sssp_f.input)->capture_default_str();
  sssp->add_option("-o,--output", sssp_f.output)->capture_default_str();
  sssp->add_option("--source", sssp_source, "source vertex, 1-indexed")
      ->capture_default_str();
  add_variant_flags(sssp, sssp_f);

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check algorithms against the quadratic reference");
  verify->add_option("--seeds", verify_seeds, "number of random instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--n", verify_n)->capture_default_str();
  verify->add_option("--m", verify_m)->capture_default_str();
  verify->add_option("-o,--output", verify_f.output)->capture_default_str();
  add_variant_flags(verify, verify_f);

  CLI::App* replay = app.add_subcommand(
      "sfm-replay", "drive a split-findmin structure from a script");
  replay->add_option("-i,--input", replay_f.input)->capture_default_str();
  replay->add_option("-o,--output", replay_f.output)->capture_default_str();
  replay->add_flag("--counts", replay_counts,
                   "print a final comparison-count line");
  add_variant_flags(replay, replay_f);

  CLI::App* bench = app.add_subcommand(
      "bench", "comparison counts and wall time on random instances");
  bench->add_option("--n", bench_n)->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--m", bench_ms, "edge count, repeatable")
      ->required();
  bench->add_option("--seed", bench_seed)->capture_default_str();
  bench->add_option("--algo", bench_algo)
      ->check(CLI::IsMember({"splitfindmin", "reduction", "brute"}))
      ->capture_default_str();
  bench->add_option("-o,--output", bench_f.output)->capture_default_str();
  add_variant_flags(bench, bench_f);

  CLI::App* gen = app.add_subcommand("gen", "write a seeded random instance");
  gen->add_option("--n", gen_n)->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--m", gen_m)->capture_default_str();
  gen->add_option("--seed", gen_seed)->capture_default_str();
  gen->add_option("--wmax", gen_wmax)->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("-o,--output", gen_output)->capture_default_str();

  std::vector<const char*> argv;
  argv.push_back("mstsens");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (mst->parsed()) {
      graph g = load_graph(mst_f.input, in);
      normalize_graph(g);
      std::vector<int> tree = minimum_spanning_tree(g);
      auto sens = run_mst_algorithm(mst_algo, g, tree, mst_f.sf(), nullptr);
      std::ofstream file;
      print_sens(g, sens, open_output(mst_f.output, out, file));
    } else if (sssp->parsed()) {
      graph g = load_graph(sssp_f.input, in);
      normalize_graph(g);
      if (sssp_source < 1 || sssp_source > g.n)
        throw std::invalid_argument("source out of range");
      auto sens = sssp_sensitivity(g, sssp_source - 1, sssp_f.sf());
      std::ofstream file;
      print_sens(g, sens, open_output(sssp_f.output, out, file));
    } else if (verify->parsed()) {
      std::ofstream file;
      std::ostream& os = open_output(verify_f.output, out, file);
      int good = 0;
      for (int seed = 0; seed < verify_seeds; ++seed) {
        graph g = gen_random_graph(int(verify_n), verify_m,
                                   std::uint64_t(seed));
        std::vector<int> tree = minimum_spanning_tree(g);
        auto want = mst_sensitivity_brute(g, tree);
        auto have = mst_sensitivity(g, tree, verify_f.sf(), nullptr);
        auto reduced = sensitivity_via_mst(g, tree);
        bool ok = want == have;
        for (std::size_t t = 0; ok && t < tree.size(); ++t)
          ok = reduced[t] == want[tree[t]];
        good += ok;
      }
      os << good << '/' << verify_seeds << " agree\n";
      return good == verify_seeds ? 0 : 1;
    } else if (replay->parsed()) {
      std::ofstream file;
      std::ostream& os = open_output(replay_f.output, out, file);
      if (replay_f.input == "-")
        return run_replay(in, os, err, replay_f.sf(), replay_counts);
      std::ifstream f(replay_f.input);
      if (!f)
        throw std::invalid_argument("cannot open input file " +
                                    replay_f.input);
      return run_replay(f, os, err, replay_f.sf(), replay_counts);
    } else if (bench->parsed()) {
      std::ofstream file;
      std::ostream& os = open_output(bench_f.output, out, file);
      os << "n,m,algorithm,variant,comparisons,wall_ns\n";
      for (long long m : bench_ms) {
        graph g = gen_random_graph(int(bench_n), m, bench_seed);
        std::vector<int> tree = minimum_spanning_tree(g);
        sens_stats stats;
        auto t0 = std::chrono::steady_clock::now();
        run_mst_algorithm(bench_algo, g, tree, bench_f.sf(), &stats);
        auto t1 = std::chrono::steady_clock::now();
        auto ns =
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0);
        os << bench_n << ',' << m << ',' << bench_algo << ','
           << bench_f.variant << ',' << stats.comparisons << ','
           << ns.count() << '\n';
      }
    } else if (gen->parsed()) {
      graph g = gen_random_graph(int(gen_n), gen_m, gen_seed, gen_wmax);
      std::ofstream file;
      write_graph(g, open_output(gen_output, out, file));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace mstsens
