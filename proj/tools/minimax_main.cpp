// Command-line front end: gen, solve, verify, bench, reduce, decide.
// Exit codes: 0 success, 1 violation / infeasible / "no", 2 usage or input error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "minimax/exact.hpp"
#include "minimax/heuristic.hpp"
#include "minimax/io.hpp"
#include "minimax/model.hpp"
#include "minimax/reductions.hpp"
#include "minimax/toolkit.hpp"

namespace {

using namespace minimax;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

// Writes to the named file, or stdout when the name is empty.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + path + "'");
  return in;
}

void write_loads(std::ostream& out, const std::vector<Weight>& loads) {
  out << "# loads";
  for (Weight w : loads) out << ' ' << w;
  out << '\n';
}

struct GenArgs {
  toolkit::GeneratorSpec spec;
  std::string output;
};

int run_gen(const GenArgs& args) {
  const Instance instance = toolkit::generate(args.spec);
  Output out(args.output);
  out.stream() << "# generated uniform [" << args.spec.weight_min << ", " << args.spec.weight_max << "] seed "
               << args.spec.seed << '\n';
  io::write_instance(out.stream(), instance);
  return kOk;
}

struct SolveArgs {
  std::string instance;
  std::string method = "heuristic";
  std::string set_order = "dec-range";
  std::uint64_t ls_cap = 10'000;
  std::uint64_t node_cap = exact::kDefaultNodeCap;
  std::uint64_t state_cap = std::uint64_t{1} << 31;
  bool low_memory = false;
  std::string output;
};

int run_solve(const SolveArgs& args) {
  const auto method = toolkit::parse_method(args.method);
  const auto order = heuristic::parse_set_order(args.set_order);
  if (!method || !order) throw CLI::ValidationError("--method/--set-order", "unknown value");
  const Instance instance = io::read_instance_file(args.instance);

  std::ostringstream header;
  Assignment assignment;
  Weight objective = 0;
  std::vector<Weight> loads;
  int status = kOk;
  header << "# method " << toolkit::to_string(*method) << '\n';
  header << "# T " << instance.sets() << " B " << instance.groups() << '\n';

  if (*method == toolkit::Method::Heuristic || *method == toolkit::Method::HeuristicLs) {
    heuristic::HeuristicConfig config;
    config.set_order = *order;
    config.local_search = *method == toolkit::Method::HeuristicLs;
    config.ls_iteration_cap = args.ls_cap;
    config.record_trace = !config.local_search;
    const auto result = heuristic::algorithm1(instance, config);
    header << "# set_order " << heuristic::to_string(*order) << '\n';
    header << "# max_pairwise_diff " << result.max_pairwise_diff << '\n';
    if (config.local_search)
      header << "# ls_moves " << result.ls_moves << (result.ls_cap_reached ? " (cap reached)" : "") << '\n';
    else {
      const auto guarantee = heuristic::guarantee_check(instance, result);
      header << "# guarantee " << (guarantee.ok ? "ok" : guarantee.message) << '\n';
      if (!guarantee.ok) status = kViolation;
    }
    assignment = result.assignment;
    objective = result.objective;
    loads = result.loads;
  } else {
    exact::ExactResult result;
    if (*method == toolkit::Method::DpB2)
      result = exact::solve_dp_b2(instance, {args.state_cap, args.low_memory});
    else
      result = exact::solve_brute_force(instance, args.node_cap);
    header << "# proof " << exact::to_string(result.proof) << (result.proven ? "" : " (node cap reached, not proven)")
           << '\n';
    header << "# work " << result.work << '\n';
    assignment = result.assignment;
    objective = result.objective;
    loads = evaluate(instance, assignment).loads;
  }

  const toolkit::VerifyReport check = toolkit::verify(instance, assignment, objective);
  if (!check.ok()) {
    std::cerr << check.message << '\n';
    return kViolation;
  }
  const Weight lb = lower_bound(instance);
  Output out(args.output);
  out.stream() << header.str();
  out.stream() << "# objective " << objective << '\n';
  out.stream() << "# lower_bound " << lb << '\n';
  out.stream() << "# R " << ranges(instance).max_range << '\n';
  out.stream() << "# abs_gap " << objective - lb << '\n';
  write_loads(out.stream(), loads);
  io::write_assignment(out.stream(), assignment);
  return status;
}

struct VerifyArgs {
  std::string instance;
  std::string assignment;
  std::optional<Weight> objective;
};

// "# objective N" line written by solve.
std::optional<Weight> claimed_from_file(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  const std::string tag = "# objective ";
  while (std::getline(in, line)) {
    if (line.rfind(tag, 0) == 0) return io::parse_decimals(line.substr(tag.size()), 0).at(0);
  }
  return std::nullopt;
}

int run_verify(const VerifyArgs& args) {
  const Instance instance = io::read_instance_file(args.instance);
  const Assignment assignment = io::read_assignment_file(args.assignment);
  const auto claimed = args.objective ? args.objective : claimed_from_file(args.assignment);
  if (!claimed) throw CLI::ValidationError("--objective", "no claim given and none recorded in the assignment file");
  const toolkit::VerifyReport report = toolkit::verify(instance, assignment, *claimed);
  if (!report.ok()) {
    std::cout << "violation " << report.message << '\n';
    return kViolation;
  }
  std::cout << "ok objective " << *report.actual << '\n';
  return kOk;
}

struct BenchArgs {
  std::vector<std::size_t> sets{20};
  std::vector<std::size_t> groups{300};
  Weight weight_min = 1;
  Weight weight_max = 100;
  std::size_t seeds = 25;
  std::uint64_t seed_base = 1;
  std::vector<std::string> methods{"heuristic"};
  std::string set_order = "dec-range";
  std::uint64_t ls_cap = 10'000;
  std::uint64_t node_cap = exact::kDefaultNodeCap;
  bool csv = false;
  bool timing = false;
  std::size_t jobs = 1;
};

int run_bench(const BenchArgs& args) {
  const auto order = heuristic::parse_set_order(args.set_order);
  if (!order) throw CLI::ValidationError("--set-order", "unknown value");
  std::vector<toolkit::Method> methods;
  for (const auto& name : args.methods) {
    const auto m = toolkit::parse_method(name);
    if (!m) throw CLI::ValidationError("--methods", "unknown method '" + name + "'");
    methods.push_back(*m);
  }
  std::vector<toolkit::GeneratorSpec> suite;
  for (std::size_t t : args.sets)
    for (std::size_t b : args.groups)
      for (std::size_t k = 0; k < args.seeds; ++k)
        suite.push_back({t, b, args.weight_min, args.weight_max, args.seed_base + k});

  toolkit::BenchOptions options;
  options.set_order = *order;
  options.ls_cap = args.ls_cap;
  options.node_cap = args.node_cap;
  options.timing = args.timing;
  options.jobs = args.jobs;
  const toolkit::BenchReport report = toolkit::bench(suite, methods, options);

  std::ostream& out = std::cout;
  out << "# bench weights [" << args.weight_min << ", " << args.weight_max << "] seeds " << args.seed_base << ".."
      << args.seed_base + args.seeds - (args.seeds ? 1 : 0) << " set_order " << heuristic::to_string(*order)
      << " ls_cap " << args.ls_cap << " node_cap " << args.node_cap << " timing " << (args.timing ? "on" : "off")
      << '\n';
  if (args.csv)
    toolkit::write_csv(out, report);
  else
    toolkit::write_table(out, report);
  toolkit::write_summary(out, report);
  return report.guarantee_pass_rate() < 1.0 ? kViolation : kOk;
}

struct ReduceArgs {
  std::string problem;
  std::string input;
  std::string output;
};

int run_reduce(const ReduceArgs& args) {
  auto in = open_input(args.input);
  const Instance instance = args.problem == "partition"
                                ? reductions::reduce_partition(reductions::read_partition(in))
                                : reductions::reduce_3partition(reductions::read_3partition(in));
  Output out(args.output);
  io::write_instance(out.stream(), instance);
  return kOk;
}

struct DecideArgs {
  std::string problem;
  std::string input;
  std::uint64_t node_cap = exact::kDefaultNodeCap;
  std::uint64_t state_cap = std::uint64_t{1} << 31;
};

int run_decide(const DecideArgs& args) {
  auto in = open_input(args.input);
  std::vector<Weight> sizes;
  reductions::DecisionOutcome outcome;
  if (args.problem == "partition") {
    const auto p = reductions::read_partition(in);
    sizes = p.sizes;
    outcome = reductions::decide_partition(p, {args.state_cap, false});
    std::cout << "total " << p.total() << '\n';
  } else {
    const auto q = reductions::read_3partition(in);
    sizes = q.sizes;
    outcome = reductions::decide_3partition(q, args.node_cap);
    std::cout << "m " << q.m << " U " << q.bound << '\n';
  }
  std::cout << "answer " << reductions::to_string(outcome.answer) << '\n';
  if (outcome.certificate_objective) std::cout << "objective " << *outcome.certificate_objective << '\n';
  if (outcome.witness) {
    for (std::size_t k = 0; k < outcome.witness->size(); ++k) {
      const auto& part = (*outcome.witness)[k];
      Weight sum = 0;
      for (std::size_t i : part) sum += sizes[i];
      std::cout << "part " << k + 1 << " sum " << sum << " elements";
      for (std::size_t i : part) std::cout << ' ' << i + 1;
      std::cout << " sizes";
      for (std::size_t i : part) std::cout << ' ' << sizes[i];
      std::cout << '\n';
    }
  }
  return outcome.answer == reductions::Answer::Yes ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimax bin packing with bin size constraints"};
  app.require_subcommand(1);
  int status = kOk;

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a uniform random instance");
  gen_cmd->add_option("-T,--sets", gen.spec.sets, "Number of sets")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("-B,--groups", gen.spec.groups, "Number of groups")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--min", gen.spec.weight_min, "Smallest weight")->capture_default_str();
  gen_cmd->add_option("--max", gen.spec.weight_max, "Largest weight")->capture_default_str();
  gen_cmd->add_option("--seed", gen.spec.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");
  gen_cmd->callback([&] { status = run_gen(gen); });

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  solve_cmd->add_option("instance", solve.instance, "Instance file")->required();
  solve_cmd->add_option("--method", solve.method, "Solver")
      ->check(CLI::IsMember({"heuristic", "heuristic+ls", "dp-b2", "brute-force"}))
      ->capture_default_str();
  solve_cmd->add_option("--set-order", solve.set_order, "Set processing order for the heuristic")
      ->check(CLI::IsMember({"input", "dec-range", "inc-range"}))
      ->capture_default_str();
  solve_cmd->add_option("--ls-cap", solve.ls_cap, "Local search move cap")->capture_default_str();
  solve_cmd->add_option("--node-cap", solve.node_cap, "Brute-force node cap")->capture_default_str();
  solve_cmd->add_option("--state-cap", solve.state_cap, "DP state cap")->capture_default_str();
  solve_cmd->add_flag("--low-memory", solve.low_memory, "DP keeps one row and recomputes while backtracking");
  solve_cmd->add_option("-o,--output", solve.output, "Output file (default stdout)");
  solve_cmd->callback([&] { status = run_solve(solve); });

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an assignment against an instance");
  verify_cmd->add_option("instance", verify.instance, "Instance file")->required();
  verify_cmd->add_option("assignment", verify.assignment, "Assignment file")->required();
  verify_cmd->add_option("--objective", verify.objective,
                         "Claimed objective (default: the '# objective' line of the assignment file)");
  verify_cmd->callback([&] { status = run_verify(verify); });

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Benchmark solvers on generated instances");
  bench_cmd->add_option("-T,--sets", bench.sets, "Set counts")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("-B,--groups", bench.groups, "Group counts")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--min", bench.weight_min, "Smallest weight")->capture_default_str();
  bench_cmd->add_option("--max", bench.weight_max, "Largest weight")->capture_default_str();
  bench_cmd->add_option("--seeds", bench.seeds, "Instances per (T, B)")->capture_default_str();
  bench_cmd->add_option("--seed-base", bench.seed_base, "First seed")->capture_default_str();
  bench_cmd->add_option("--methods", bench.methods, "heuristic, heuristic+ls, dp-b2, brute-force")
      ->delimiter(',')
      ->capture_default_str();
  bench_cmd->add_option("--set-order", bench.set_order, "Set processing order")
      ->check(CLI::IsMember({"input", "dec-range", "inc-range"}))
      ->capture_default_str();
  bench_cmd->add_option("--ls-cap", bench.ls_cap, "Local search move cap")->capture_default_str();
  bench_cmd->add_option("--node-cap", bench.node_cap, "Brute-force node cap")->capture_default_str();
  bench_cmd->add_flag("--csv", bench.csv, "CSV records instead of a table");
  bench_cmd->add_flag("--timing", bench.timing, "Measure median wall time of 5 solves");
  bench_cmd->add_option("-j,--jobs", bench.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bench_cmd->callback([&] { status = run_bench(bench); });

  ReduceArgs reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Turn a PARTITION or 3-PARTITION file into an instance");
  reduce_cmd->add_option("problem", reduce.problem, "partition or 3partition")
      ->required()
      ->check(CLI::IsMember({"partition", "3partition"}));
  reduce_cmd->add_option("input", reduce.input, "Source problem file")->required();
  reduce_cmd->add_option("-o,--output", reduce.output, "Output file (default stdout)");
  reduce_cmd->callback([&] { status = run_reduce(reduce); });

  DecideArgs decide;
  auto* decide_cmd = app.add_subcommand("decide", "Answer a PARTITION or 3-PARTITION file through its reduction");
  decide_cmd->add_option("problem", decide.problem, "partition or 3partition")
      ->required()
      ->check(CLI::IsMember({"partition", "3partition"}));
  decide_cmd->add_option("input", decide.input, "Source problem file")->required();
  decide_cmd->add_option("--node-cap", decide.node_cap, "Brute-force node cap (3partition)")->capture_default_str();
  decide_cmd->add_option("--state-cap", decide.state_cap, "DP state cap (partition)")->capture_default_str();
  decide_cmd->callback([&] { status = run_decide(decide); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalError ? kViolation : kUsage;
  }
  return status;
}
