#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tempex/colour_coding.hpp"
#include "tempex/generators.hpp"
#include "tempex/io.hpp"
#include "tempex/ns_search.hpp"
#include "tempex/ns_structure.hpp"
#include "tempex/oracles.hpp"
#include "tempex/reductions.hpp"

namespace fs = std::filesystem;
using namespace tempex;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

/// Everything one solve needs besides the graph.
struct SolveRequest {
  std::string problem = "texp";
  std::optional<std::string> mode;
  std::optional<Vertex> start;
  std::optional<std::string> targets_path;
  std::optional<std::int32_t> k;
  double epsilon = 0.01;
  bool det = false;
  std::uint64_t seed = 0;
  std::optional<std::string> algo;
  int threads = 0;
};

struct RunReport {
  std::string instance;
  std::string algorithm;
  TourResult result;
  double millis = 0;
  std::uint64_t seed = 0;
};

std::string default_algo(const std::string& problem, const AnyGraph& g) {
  if (problem == "set") return "oracle";
  if (problem == "karb") return "cc";
  if (problem == "kfixed" || mode_of(g) == Mode::Strict) return "dp";
  return std::get<NonStrictTemporalGraph>(g).gamma() <= 2 ? "gamma2" : "searchtree";
}

[[noreturn]] void unsupported(const std::string& algo, const std::string& problem, Mode mode) {
  throw CapabilityError("algorithm '" + algo + "' does not handle problem '" + problem + "' on " +
                        to_string(mode) + " graphs");
}

/// The target of a problem, read from --targets / --k as needed.
TargetSpec target_of(const SolveRequest& req, Vertex n) {
  if (req.problem == "texp") return TargetSpec::all();
  if (req.problem == "karb") {
    if (!req.k) throw InputError("--k is required for problem karb");
    return TargetSpec::of_count(*req.k);
  }
  if (!req.targets_path) {
    // A bare k selects the first k vertices as X.
    if (req.problem == "kfixed" && req.k) {
      if (*req.k < 0 || *req.k > n) throw InputError("--k outside [0, n]");
      std::vector<Vertex> xs(static_cast<std::size_t>(*req.k));
      std::iota(xs.begin(), xs.end(), 0);
      return TargetSpec::fixed(std::move(xs));
    }
    throw InputError("--targets is required for problem " + req.problem);
  }
  auto t = read_targets_file(*req.targets_path);
  if (req.problem == "kfixed" && t.kind != TargetSpec::Kind::Fixed) {
    throw InputError("problem kfixed needs an 'X v...' targets file");
  }
  if (req.problem == "set" && t.kind != TargetSpec::Kind::Sets) {
    throw InputError("problem set needs a targets file of SET lines");
  }
  return t;
}

TourResult run_strict(const StrictTemporalGraph& g, Vertex s, const SolveRequest& req,
                      const std::string& algo, const TargetSpec& target) {
  const StrictProvider p(g);
  const SolveOptions opts{req.threads};
  if (algo == "oracle") return bf_strict(g, s, target, OracleBudget::maximal().with_env_override());
  if (req.problem == "texp" && algo == "dp") return solve_texp(p, s, opts);
  if (req.problem == "kfixed" && algo == "dp") return solve_k_fixed(p, s, target.vertices, opts);
  if (req.problem == "karb" && algo == "cc") {
    if (req.det) return solve_k_arbitrary_det(p, s, target.count, build_verified_family(g.vertex_count(), target.count, req.seed), opts);
    return solve_k_arbitrary_mc(p, s, target.count, {req.epsilon, req.seed}, opts);
  }
  unsupported(algo, req.problem, Mode::Strict);
}

TourResult run_ns(const NonStrictTemporalGraph& g, Vertex s, const SolveRequest& req,
                  const std::string& algo, const TargetSpec& target) {
  const NonStrictProvider p(g);
  const SolveOptions opts{req.threads};
  if (algo == "oracle") return bf_ns(g, s, target, OracleBudget::maximal().with_env_override());
  if (algo == "gamma2") return solve_gamma2(g, s, target);
  if (req.problem == "texp" && algo == "dp") return solve_texp(p, s, opts);
  if (req.problem == "texp" && algo == "searchtree") return solve_ns_texp(g, s);
  if (req.problem == "kfixed" && algo == "dp") return solve_k_fixed(p, s, target.vertices, opts);
  if (req.problem == "kfixed" && algo == "searchtree") return solve_ns_k_fixed_search(g, s, target.vertices);
  if (req.problem == "karb" && algo == "cc") {
    if (req.det) return solve_k_arbitrary_det(p, s, target.count, build_verified_family(g.vertex_count(), target.count, req.seed), opts);
    return solve_k_arbitrary_mc(p, s, target.count, {req.epsilon, req.seed}, opts);
  }
  unsupported(algo, req.problem, Mode::NonStrict);
}

RunReport solve(const GraphFile& file, const std::string& instance, const SolveRequest& req) {
  static const std::vector<std::string> problems{"texp", "kfixed", "karb", "set"};
  static const std::vector<std::string> algos{"dp", "cc", "gamma2", "searchtree", "oracle"};
  if (std::find(problems.begin(), problems.end(), req.problem) == problems.end()) {
    throw InputError("unknown problem '" + req.problem + "'");
  }
  const Mode mode = mode_of(file.graph);
  if (req.mode && *req.mode != to_string(mode)) {
    throw InputError("--mode " + *req.mode + " does not match the " + to_string(mode) + " input file");
  }
  const std::string algo = req.algo.value_or(default_algo(req.problem, file.graph));
  if (std::find(algos.begin(), algos.end(), algo) == algos.end()) {
    throw InputError("unknown algorithm '" + algo + "'");
  }
  const Vertex s = req.start.value_or(file.start.value_or(0));
  const Vertex n = vertex_count(file.graph);
  if (s < 0 || s >= n) throw InputError("start vertex " + std::to_string(s) + " out of range");
  const auto target = target_of(req, n);
  target.validate(n);

  RunReport report{instance, algo, {}, 0, req.seed};
  const auto begin = std::chrono::steady_clock::now();
  if (mode == Mode::Strict) {
    report.result = run_strict(std::get<StrictTemporalGraph>(file.graph), s, req, algo, target);
  } else {
    report.result = run_ns(std::get<NonStrictTemporalGraph>(file.graph), s, req, algo, target);
  }
  const auto end = std::chrono::steady_clock::now();
  report.millis = std::chrono::duration<double, std::milli>(end - begin).count();
  return report;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  return out;
}

/// Writes to the file when a path is given, else to stdout.
template <class F>
void emit(const std::string& path, F&& write) {
  if (path.empty()) {
    write(std::cout);
    return;
  }
  auto out = open_out(path);
  write(out);
}

// ---------------------------------------------------------------- bench

struct SuiteRow {
  std::string instance;
  std::string path;
  SolveRequest req;
  int repetitions = 1;
};

/// One row per line: `<instance> <problem> <algo> <repetitions> [key=value...]`
/// with keys start, targets, k, epsilon, seed, det. Paths are relative to
/// the suite file. `-` as algo selects the default.
std::vector<SuiteRow> read_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open suite '" + path + "'");
  const fs::path dir = fs::path(path).parent_path();
  auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? p : (dir / p).string(); };
  std::vector<SuiteRow> rows;
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    std::istringstream ss(line);
    std::vector<std::string> tok;
    for (std::string t; ss >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    auto fail = [&](const std::string& what) {
      throw InputError("suite line " + std::to_string(number) + ": " + what);
    };
    if (tok.size() < 4) fail("expected '<instance> <problem> <algo> <repetitions> [key=value...]'");
    SuiteRow row;
    row.instance = tok[0];
    row.path = resolve(tok[0]);
    row.req.problem = tok[1];
    if (tok[2] != "-") row.req.algo = tok[2];
    row.req.threads = 1;
    try {
      row.repetitions = std::stoi(tok[3]);
      for (std::size_t i = 4; i < tok.size(); ++i) {
        const auto eq = tok[i].find('=');
        const std::string key = tok[i].substr(0, eq);
        const std::string value = eq == std::string::npos ? "" : tok[i].substr(eq + 1);
        if (key == "start") row.req.start = std::stoi(value);
        else if (key == "targets") row.req.targets_path = resolve(value);
        else if (key == "k") row.req.k = std::stoi(value);
        else if (key == "epsilon") row.req.epsilon = std::stod(value);
        else if (key == "seed") row.req.seed = std::stoull(value);
        else if (key == "det") row.req.det = true;
        else fail("unknown key '" + key + "'");
      }
    } catch (const std::logic_error&) {
      fail("malformed number");
    }
    if (row.repetitions < 1) fail("repetitions must be positive");
    rows.push_back(std::move(row));
  }
  return rows;
}

int cmd_bench(const std::string& suite_path, const std::string& out_path) {
  const auto rows = read_suite(suite_path);
  std::ostringstream csv;
  csv << "instance,algorithm,answer,arrival,millis,seed\n";
  for (const auto& row : rows) {
    const auto file = read_graph_file(row.path);
    std::vector<double> times;
    RunReport last;
    for (int rep = 0; rep < row.repetitions; ++rep) {
      last = solve(file, row.instance, row.req);
      times.push_back(last.millis);
    }
    std::sort(times.begin(), times.end());
    const std::size_t mid = times.size() / 2;
    const double median = times.size() % 2 == 1 ? times[mid] : (times[mid - 1] + times[mid]) / 2;
    csv << row.instance << ',' << last.algorithm << ',' << (last.result.yes ? "YES" : "NO") << ',';
    if (last.result.yes) csv << last.result.arrival;
    csv << ',' << std::fixed << std::setprecision(3) << median << std::defaultfloat << ',' << last.seed << '\n';
  }
  emit(out_path, [&](std::ostream& out) { out << csv.str(); });
  return 0;
}

// ---------------------------------------------------------------- verify

int cmd_verify(const std::string& input, const std::string& result_path, const SolveRequest& req) {
  const auto file = read_graph_file(input);
  const Vertex s = req.start.value_or(file.start.value_or(0));
  std::ifstream in(result_path);
  if (!in) throw InputError("cannot open '" + result_path + "'");
  const auto parsed = read_result(in, file.graph, s);
  if (!parsed.yes) {
    std::cout << "NO (nothing to verify)\n";
    return 0;
  }
  if (!parsed.walk) throw InputError("YES result without a certificate");
  const bool strict = mode_of(file.graph) == Mode::Strict;
  bool ok = false;
  VertexSet visited;
  if (strict) {
    const auto& g = std::get<StrictTemporalGraph>(file.graph);
    const auto& w = std::get<StrictWalk>(*parsed.walk);
    ok = w.start == s && w.start_time == 1 && validate_strict_walk(g, w);
    if (ok) visited = visited_vertices(g, w);
  } else {
    const auto& g = std::get<NonStrictTemporalGraph>(file.graph);
    const auto& w = std::get<NonStrictWalk>(*parsed.walk);
    ok = validate_ns_walk(g, w);
    if (ok) visited = visited_vertices(g, w);
  }
  if (!ok) throw InputError("certificate does not validate");
  if (walk_arrival(*parsed.walk) != parsed.arrival) throw InputError("certificate arrival differs from the answer line");
  if (req.targets_path || req.k || req.problem == "texp") {
    const auto target = target_of(req, vertex_count(file.graph));
    if (!target.satisfied_by(visited)) throw InputError("certificate misses the target");
  }
  std::cout << "OK " << visited.count() << " vertices, arrival " << parsed.arrival << '\n';
  return 0;
}

void add_solve_flags(CLI::App* cmd, SolveRequest& req) {
  cmd->add_option("--problem", req.problem, "texp | kfixed | karb | set")
      ->check(CLI::IsMember({"texp", "kfixed", "karb", "set"}));
  cmd->add_option("--mode", req.mode, "strict | nonstrict (checked against the file)")
      ->check(CLI::IsMember({"strict", "nonstrict"}));
  cmd->add_option("--start", req.start, "start vertex (default: '# start' line, else 0)");
  cmd->add_option("--targets", req.targets_path, "targets file (X, K or SET lines)");
  cmd->add_option("--k", req.k, "k for karb, or |X| = k first vertices for kfixed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Foremost temporal exploration and tour solvers"};
  app.require_subcommand(1);

  SolveRequest req;
  std::string input;
  bool quiet = false;
  auto* solve_cmd = app.add_subcommand("solve", "decide one instance and print a certificate");
  add_solve_flags(solve_cmd, req);
  solve_cmd->add_option("--input", input, "graph file")->required();
  solve_cmd->add_option("--epsilon", req.epsilon, "Monte Carlo failure probability");
  solve_cmd->add_flag("--det", req.det, "use a verified perfect hash family instead of random colourings");
  solve_cmd->add_option("--seed", req.seed, "random seed");
  solve_cmd->add_option("--algo", req.algo, "dp | cc | gamma2 | searchtree | oracle")
      ->check(CLI::IsMember({"dp", "cc", "gamma2", "searchtree", "oracle"}));
  solve_cmd->add_option("--threads", req.threads, "OpenMP threads (0 = default)");
  solve_cmd->add_flag("--quiet", quiet, "omit the certificate");

  auto* gen = app.add_subcommand("gen", "write a generated instance");
  gen->require_subcommand(1);
  std::string out_path, targets_out;
  Vertex gen_n = 0;
  Time gen_l = 0;
  double gen_p = 0;
  std::int32_t gen_gamma = 1;
  std::uint64_t gen_seed = 0;
  std::string source_path;
  auto* rs = gen->add_subcommand("random-strict", "each edge of each layer independently with probability p");
  auto* rn = gen->add_subcommand("random-ns", "min(gamma, n) random parts per step");
  for (auto* c : {rs, rn}) {
    c->add_option("--n", gen_n)->required();
    c->add_option("--L", gen_l)->required();
    c->add_option("--seed", gen_seed)->required();
    c->add_option("--out", out_path, "output file (default stdout)");
  }
  rs->add_option("--p", gen_p)->required();
  rn->add_option("--gamma", gen_gamma)->required();
  auto* fhs = gen->add_subcommand("from-hitting-set", "strict set-exploration instance from HS source");
  auto* fsc = gen->add_subcommand("from-set-cover", "non-strict set-exploration instance from SC source");
  for (auto* c : {fhs, fsc}) {
    c->add_option("source", source_path, "HS/SC source file")->required();
    c->add_option("--out", out_path, "graph file (default stdout)");
    c->add_option("--targets-out", targets_out, "targets file (default: graph path with .targets)");
  }

  std::string suite_path;
  auto* bench = app.add_subcommand("bench", "run a suite and print a CSV of median timings");
  bench->add_option("--suite", suite_path, "suite file")->required();
  bench->add_option("--out", out_path, "CSV file (default stdout)");

  SolveRequest vreq;
  std::string result_path;
  auto* verify = app.add_subcommand("verify", "re-validate a printed result against its graph");
  add_solve_flags(verify, vreq);
  verify->add_option("--input", input, "graph file")->required();
  verify->add_option("--result", result_path, "output of solve")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (solve_cmd->parsed()) {
      const auto file = read_graph_file(input);
      const auto report = solve(file, input, req);
      write_result(std::cout, report.result, file.graph, quiet);
      return 0;
    }
    if (rs->parsed() || rn->parsed()) {
      const AnyGraph g = rs->parsed() ? AnyGraph(random_strict_graph(gen_n, gen_l, gen_p, gen_seed))
                                      : AnyGraph(random_ns_graph(gen_n, gen_l, gen_gamma, gen_seed));
      emit(out_path, [&](std::ostream& out) { write_graph(out, g); });
      return 0;
    }
    if (fhs->parsed() || fsc->parsed()) {
      const auto src = read_source_file(source_path);
      const auto want = fhs->parsed() ? SourceKind::HittingSet : SourceKind::SetCover;
      if (src.kind != want) throw InputError("source file has the wrong kind for this subcommand");
      AnyGraph g;
      Vertex start = 0;
      std::vector<std::vector<Vertex>> family;
      if (want == SourceKind::HittingSet) {
        HittingSetInstance hs;
        static_cast<SetSystem&>(hs) = src.system;
        auto inst = hitting_set_to_set_texp(hs);
        g = std::move(inst.graph);
        start = inst.start;
        family = std::move(inst.family);
      } else {
        SetCoverInstance sc;
        static_cast<SetSystem&>(sc) = src.system;
        auto inst = set_cover_to_set_ns_texp(sc);
        g = std::move(inst.graph);
        start = inst.start;
        family = std::move(inst.family);
      }
      emit(out_path, [&](std::ostream& out) { write_graph(out, g, start); });
      std::string tpath = targets_out;
      if (tpath.empty() && !out_path.empty()) tpath = fs::path(out_path).replace_extension(".targets").string();
      if (tpath.empty()) {
        std::cerr << "note: no --out/--targets-out given, targets not written\n";
      } else {
        auto out = open_out(tpath);
        write_targets(out, TargetSpec::of_sets(family));
      }
      return 0;
    }
    if (bench->parsed()) return cmd_bench(suite_path, out_path);
    if (verify->parsed()) return cmd_verify(input, result_path, vreq);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const CapabilityError& e) {
    std::cerr << "capability error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const UnreachableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
