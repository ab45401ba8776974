#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "minimax/exact.hpp"
#include "minimax/heuristic.hpp"
#include "minimax/model.hpp"

namespace minimax::toolkit {

struct GeneratorSpec {
  std::size_t sets = 1;    // T
  std::size_t groups = 2;  // B
  Weight weight_min = 1;
  Weight weight_max = 100;
  std::uint64_t seed = 0;

  void validate() const;
};

// Weights are i.i.d. uniform integers in [weight_min, weight_max], drawn in
// row-major order (set outer, item inner) from std::mt19937_64 seeded with
// spec.seed. Each draw maps one 64-bit output by rejection below
// (2^64 - span) mod span followed by modulo span, so the stream is
// identical on every standard library.
Instance generate(const GeneratorSpec& spec);

// Uniform integer in [0, span), span >= 1.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t span);

enum class VerifyStatus { Ok, DimensionMismatch, NotAPermutation, ObjectiveMismatch };
const char* to_string(VerifyStatus status);

struct VerifyReport {
  VerifyStatus status = VerifyStatus::Ok;
  std::optional<Weight> actual;  // recomputed objective, when the assignment is valid
  std::string message;
  bool ok() const { return status == VerifyStatus::Ok; }
};

VerifyReport verify(const Instance& instance, const Assignment& assignment, Weight claimed_objective);

enum class Method { Heuristic, HeuristicLs, DpB2, BruteForce };
const char* to_string(Method method);
std::optional<Method> parse_method(std::string_view text);

struct BenchOptions {
  heuristic::SetOrder set_order = heuristic::SetOrder::NonincreasingRange;
  std::uint64_t ls_cap = 10'000;
  std::uint64_t node_cap = exact::kDefaultNodeCap;
  exact::DpOptions dp;
  // When off, each solve runs once and no times are reported, so output
  // depends only on the inputs.
  bool timing = false;
  std::size_t repetitions = 5;
  std::size_t jobs = 1;
};

struct BenchRecord {
  std::size_t instance_id = 0;
  Method method = Method::Heuristic;
  std::size_t sets = 0;
  std::size_t groups = 0;
  std::uint64_t seed = 0;
  bool ok = false;  // solved and passed the verify self-check
  std::string error;
  Weight objective = 0;
  Weight lb = 0;
  Weight max_range = 0;
  double relative_gap = 0.0;  // (objective - lb) / lb, 0 when lb = 0
  std::optional<double> ms;   // median wall time of the solve call
  bool proven = true;
  bool guarantee_checked = false;
  bool guarantee_ok = true;
};

struct MethodSummary {
  Method method = Method::Heuristic;
  std::size_t n = 0;  // successful records
  std::size_t failures = 0;
  double mean_gap = 0.0;
  double max_gap = 0.0;
  std::optional<double> mean_ms;
  std::optional<double> max_ms;
  std::size_t guarantee_checked = 0;
  std::size_t guarantee_passed = 0;
};

struct BenchReport {
  std::vector<BenchRecord> records;  // by instance id, then method order
  std::vector<MethodSummary> summaries;
  std::size_t instances = 0;
  // Passed over checked across all heuristic records; 1 when none checked.
  double guarantee_pass_rate() const;
};

BenchReport bench(const std::vector<GeneratorSpec>& suite, const std::vector<Method>& methods,
                  const BenchOptions& options = {});

// Columns: id,method,T,B,objective,lb,gap,ms,seed. Failed records and
// untimed runs print '-' in the fields they lack.
void write_csv(std::ostream& out, const BenchReport& report);
void write_table(std::ostream& out, const BenchReport& report);
void write_summary(std::ostream& out, const BenchReport& report);

}  // namespace minimax::toolkit
