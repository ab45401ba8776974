#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace minimax {

using Weight = std::int64_t;

enum class ErrorCode {
  DimensionMismatch,
  NotAPermutation,
  NegativeWeight,
  WeightOverflow,
  ParseError,
  WrongGroupCount,
  TableBudgetExceeded,
  InvariantViolation,
  InvalidArgument,
  InternalError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A T x B matrix of non-negative integer weights: T sets, each holding B
// items. Exactly one item of every set ends up in every group. Immutable once
// built; every constructor path validates.
class Instance {
 public:
  Instance() = default;
  // Row-major weights, size T*B.
  Instance(std::size_t sets, std::size_t groups, std::vector<Weight> weights);

  static Instance from_rows(const std::vector<std::vector<Weight>>& rows);

  std::size_t sets() const { return sets_; }
  std::size_t groups() const { return groups_; }
  Weight at(std::size_t t, std::size_t b) const { return weights_[t * groups_ + b]; }
  std::span<const Weight> row(std::size_t t) const {
    return {weights_.data() + t * groups_, groups_};
  }
  std::span<const Weight> weights() const { return weights_; }
  Weight total() const { return total_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::size_t sets_ = 0;
  std::size_t groups_ = 0;
  std::vector<Weight> weights_;
  Weight total_ = 0;
};

// One problem found by validate(). row/column are 0-based; column is
// npos when the issue concerns a whole row.
struct ValidationIssue {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t row = npos;
  std::size_t column = npos;
  ErrorCode code = ErrorCode::InvalidArgument;
  std::string reason;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Checks rectangularity, non-negativity and the overflow budget
// T * B * max(w) < 2^62. Stops at the first violation unless verbose.
ValidationReport validate(const std::vector<std::vector<Weight>>& rows, bool verbose = false);

// group_of(t, b) is the 0-based group receiving item b of set t. For every
// set the map b -> group is a permutation of [0, B).
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::size_t sets, std::size_t groups, std::vector<std::size_t> group_of);

  static Assignment identity(std::size_t sets, std::size_t groups);
  static Assignment from_rows(const std::vector<std::vector<std::size_t>>& rows);

  std::size_t sets() const { return sets_; }
  std::size_t groups() const { return groups_; }
  std::size_t group_of(std::size_t t, std::size_t b) const { return groups_of_[t * groups_ + b]; }
  void set_group(std::size_t t, std::size_t b, std::size_t g) { groups_of_[t * groups_ + b] = g; }
  std::span<const std::size_t> row(std::size_t t) const {
    return {groups_of_.data() + t * groups_, groups_};
  }

  // Throws NotAPermutation naming the first offending set.
  void check_permutations() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::size_t sets_ = 0;
  std::size_t groups_ = 0;
  std::vector<std::size_t> groups_of_;
};

struct LoadVector {
  std::vector<Weight> loads;
  Weight objective = 0;
  Weight min_load = 0;
};

LoadVector make_load_vector(std::vector<Weight> loads);

LoadVector evaluate(const Instance& instance, const Assignment& assignment);

struct SetRange {
  std::size_t set = 0;
  Weight range = 0;
};

struct RangeSummary {
  std::vector<SetRange> per_set;
  Weight max_range = 0;  // R
};

Weight set_range(std::span<const Weight> row);
RangeSummary ranges(const Instance& instance);

// ceil(W / B).
Weight lower_bound(const Instance& instance);

}  // namespace minimax
