#include "minimax/toolkit.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

namespace minimax::toolkit {

void GeneratorSpec::validate() const {
  if (sets < 1 || groups < 1) throw Error(ErrorCode::InvalidArgument, "InvalidArgument: T and B must be at least 1");
  if (weight_min < 0 || weight_min > weight_max)
    throw Error(ErrorCode::InvalidArgument, "InvalidArgument: need 0 <= weight_min <= weight_max");
}

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t span) {
  const std::uint64_t threshold = (0 - span) % span;
  while (true) {
    const std::uint64_t x = engine();
    if (x >= threshold) return x % span;
  }
}

Instance generate(const GeneratorSpec& spec) {
  spec.validate();
  std::mt19937_64 engine(spec.seed);
  const auto span = static_cast<std::uint64_t>(spec.weight_max - spec.weight_min) + 1;
  std::vector<Weight> weights(spec.sets * spec.groups);
  for (auto& w : weights) w = spec.weight_min + static_cast<Weight>(uniform_below(engine, span));
  return Instance(spec.sets, spec.groups, std::move(weights));
}

const char* to_string(VerifyStatus status) {
  switch (status) {
    case VerifyStatus::Ok: return "ok";
    case VerifyStatus::DimensionMismatch: return "DimensionMismatch";
    case VerifyStatus::NotAPermutation: return "NotAPermutation";
    case VerifyStatus::ObjectiveMismatch: return "ObjectiveMismatch";
  }
  return "unknown";
}

VerifyReport verify(const Instance& instance, const Assignment& assignment, Weight claimed_objective) {
  VerifyReport report;
  LoadVector loads;
  try {
    loads = evaluate(instance, assignment);
  } catch (const Error& e) {
    report.status = e.code() == ErrorCode::NotAPermutation ? VerifyStatus::NotAPermutation
                                                           : VerifyStatus::DimensionMismatch;
    report.message = e.what();
    return report;
  }
  report.actual = loads.objective;
  if (loads.objective != claimed_objective) {
    report.status = VerifyStatus::ObjectiveMismatch;
    report.message = "ObjectiveMismatch: claimed " + std::to_string(claimed_objective) + ", actual " +
                     std::to_string(loads.objective);
  }
  return report;
}

const char* to_string(Method method) {
  switch (method) {
    case Method::Heuristic: return "heuristic";
    case Method::HeuristicLs: return "heuristic+ls";
    case Method::DpB2: return "dp-b2";
    case Method::BruteForce: return "brute-force";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view text) {
  for (Method m : {Method::Heuristic, Method::HeuristicLs, Method::DpB2, Method::BruteForce})
    if (text == to_string(m)) return m;
  return std::nullopt;
}

double BenchReport::guarantee_pass_rate() const {
  std::size_t checked = 0, passed = 0;
  for (const auto& r : records) {
    if (!r.guarantee_checked) continue;
    ++checked;
    passed += r.guarantee_ok;
  }
  return checked == 0 ? 1.0 : static_cast<double>(passed) / static_cast<double>(checked);
}

namespace {

struct Solved {
  Weight objective = 0;
  Assignment assignment;
  bool proven = true;
  std::optional<heuristic::HeuristicResult> heuristic;
};

Solved solve_once(const Instance& instance, Method method, const BenchOptions& options) {
  Solved out;
  switch (method) {
    case Method::Heuristic:
    case Method::HeuristicLs: {
      heuristic::HeuristicConfig config;
      config.set_order = options.set_order;
      config.local_search = method == Method::HeuristicLs;
      config.ls_iteration_cap = options.ls_cap;
      auto result = heuristic::algorithm1(instance, config);
      out.objective = result.objective;
      out.assignment = result.assignment;
      out.heuristic = std::move(result);
      break;
    }
    case Method::DpB2: {
      auto result = exact::solve_dp_b2(instance, options.dp);
      out.objective = result.objective;
      out.assignment = std::move(result.assignment);
      break;
    }
    case Method::BruteForce: {
      auto result = exact::solve_brute_force(instance, options.node_cap);
      out.objective = result.objective;
      out.assignment = std::move(result.assignment);
      out.proven = result.proven;
      break;
    }
  }
  return out;
}

BenchRecord run_one(const Instance& instance, std::size_t id, const GeneratorSpec& spec, Method method,
                    const BenchOptions& options) {
  BenchRecord record;
  record.instance_id = id;
  record.method = method;
  record.sets = spec.sets;
  record.groups = spec.groups;
  record.seed = spec.seed;
  record.lb = lower_bound(instance);
  record.max_range = ranges(instance).max_range;
  try {
    const std::size_t reps = options.timing ? std::max<std::size_t>(1, options.repetitions) : 1;
    std::vector<double> times;
    Solved solved;
    for (std::size_t r = 0; r < reps; ++r) {
      const auto start = std::chrono::steady_clock::now();
      solved = solve_once(instance, method, options);
      const auto stop = std::chrono::steady_clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    if (options.timing) {
      std::nth_element(times.begin(), times.begin() + static_cast<std::ptrdiff_t>(times.size() / 2), times.end());
      record.ms = times[times.size() / 2];
    }
    record.objective = solved.objective;
    record.proven = solved.proven;
    record.relative_gap =
        record.lb == 0 ? 0.0 : static_cast<double>(solved.objective - record.lb) / static_cast<double>(record.lb);

    const VerifyReport check = verify(instance, solved.assignment, solved.objective);
    if (!check.ok()) {
      record.error = check.message;
      return record;
    }
    if (method == Method::Heuristic) {
      record.guarantee_checked = true;
      record.guarantee_ok = heuristic::guarantee_check(instance, *solved.heuristic).ok;
    } else if (method == Method::HeuristicLs) {
      record.guarantee_checked = true;
      record.guarantee_ok = solved.objective - record.lb <= record.max_range;
    }
    record.ok = true;
  } catch (const Error& e) {
    record.error = e.what();
  }
  return record;
}

std::string format_double(double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, value);
  return buf;
}

}  // namespace

BenchReport bench(const std::vector<GeneratorSpec>& suite, const std::vector<Method>& methods,
                  const BenchOptions& options) {
  BenchReport report;
  report.instances = suite.size();
  std::vector<std::vector<BenchRecord>> slots(suite.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < suite.size(); i = next++) {
      std::vector<BenchRecord> records;
      try {
        const Instance instance = generate(suite[i]);
        for (Method m : methods) records.push_back(run_one(instance, i, suite[i], m, options));
      } catch (const Error& e) {
        for (Method m : methods) {
          BenchRecord r;
          r.instance_id = i;
          r.method = m;
          r.sets = suite[i].sets;
          r.groups = suite[i].groups;
          r.seed = suite[i].seed;
          r.error = e.what();
          records.push_back(std::move(r));
        }
      }
      slots[i] = std::move(records);
    }
  };
  const std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(1, suite.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (auto& slot : slots)
    for (auto& r : slot) report.records.push_back(std::move(r));

  for (Method m : methods) {
    MethodSummary s;
    s.method = m;
    double gap_sum = 0.0, ms_sum = 0.0;
    for (const auto& r : report.records) {
      if (r.method != m) continue;
      if (!r.ok) {
        ++s.failures;
        continue;
      }
      ++s.n;
      gap_sum += r.relative_gap;
      s.max_gap = std::max(s.max_gap, r.relative_gap);
      if (r.ms) {
        ms_sum += *r.ms;
        s.max_ms = std::max(s.max_ms.value_or(0.0), *r.ms);
      }
      if (r.guarantee_checked) {
        ++s.guarantee_checked;
        s.guarantee_passed += r.guarantee_ok;
      }
    }
    if (s.n > 0) {
      s.mean_gap = gap_sum / static_cast<double>(s.n);
      if (s.max_ms) s.mean_ms = ms_sum / static_cast<double>(s.n);
    }
    report.summaries.push_back(s);
  }
  return report;
}

void write_csv(std::ostream& out, const BenchReport& report) {
  out << "id,method,T,B,objective,lb,gap,ms,seed\n";
  for (const auto& r : report.records) {
    out << r.instance_id << ',' << to_string(r.method) << ',' << r.sets << ',' << r.groups << ',';
    if (r.ok)
      out << r.objective << ',' << r.lb << ',' << format_double(r.relative_gap, 6) << ',';
    else
      out << "-," << r.lb << ",-,";
    out << (r.ms ? format_double(*r.ms, 4) : std::string("-")) << ',' << r.seed << '\n';
  }
}

void write_table(std::ostream& out, const BenchReport& report) {
  char line[256];
  std::snprintf(line, sizeof line, "%6s %-13s %5s %5s %10s %10s %6s %9s %10s %s\n", "id", "method", "T", "B",
                "objective", "lb", "R", "gap", "ms", "status");
  out << line;
  for (const auto& r : report.records) {
    const std::string objective = r.ok ? std::to_string(r.objective) : "-";
    const std::string gap = r.ok ? format_double(r.relative_gap, 6) : "-";
    const std::string ms = r.ms ? format_double(*r.ms, 4) : "-";
    std::string status = r.ok ? "ok" : r.error;
    if (r.ok && !r.proven) status = "not proven (node cap)";
    if (r.ok && !r.guarantee_ok) status = "GUARANTEE VIOLATED";
    std::snprintf(line, sizeof line, "%6zu %-13s %5zu %5zu %10s %10lld %6lld %9s %10s ", r.instance_id,
                  to_string(r.method), r.sets, r.groups, objective.c_str(), static_cast<long long>(r.lb),
                  static_cast<long long>(r.max_range), gap.c_str(), ms.c_str());
    out << line << status << '\n';
  }
}

void write_summary(std::ostream& out, const BenchReport& report) {
  out << "# instances " << report.instances << '\n';
  if (report.instances == 0) out << "# n=0: empty suite\n";
  for (const auto& s : report.summaries) {
    out << "# " << to_string(s.method) << ": n=" << s.n << " failures=" << s.failures;
    if (s.n > 0) {
      out << " mean_gap=" << format_double(s.mean_gap, 6) << " max_gap=" << format_double(s.max_gap, 6);
      if (s.mean_ms)
        out << " mean_ms=" << format_double(*s.mean_ms, 4) << " max_ms=" << format_double(*s.max_ms, 4);
    }
    if (s.guarantee_checked > 0) out << " guarantee=" << s.guarantee_passed << '/' << s.guarantee_checked;
    out << '\n';
  }
  out << "# guarantee_pass_rate " << format_double(report.guarantee_pass_rate(), 4) << '\n';
}

}  // namespace minimax::toolkit
