#include "minimax/model.hpp"

#include <algorithm>
#include <sstream>

namespace minimax {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::WeightOverflow: return "WeightOverflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::WrongGroupCount: return "WrongGroupCount";
    case ErrorCode::TableBudgetExceeded: return "TableBudgetExceeded";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "Unknown";
}

namespace {

constexpr std::uint64_t kOverflowBudget = std::uint64_t{1} << 62;

void throw_first(const ValidationReport& report) {
  if (report.ok()) return;
  const auto& issue = report.issues.front();
  std::ostringstream os;
  os << to_string(issue.code);
  if (issue.row != ValidationIssue::npos) os << " at row " << issue.row + 1;
  if (issue.column != ValidationIssue::npos) os << " column " << issue.column + 1;
  os << ": " << issue.reason;
  throw Error(issue.code, os.str());
}

ValidationReport validate_flat(std::size_t sets, std::size_t groups, std::span<const Weight> weights,
                               bool verbose) {
  ValidationReport report;
  if (weights.size() != sets * groups) {
    report.issues.push_back({ValidationIssue::npos, ValidationIssue::npos, ErrorCode::DimensionMismatch,
                             "weight count does not equal T*B"});
    return report;
  }
  Weight max_weight = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) {
      report.issues.push_back({i / groups, i % groups, ErrorCode::NegativeWeight, "negative weight"});
      if (!verbose) return report;
    }
    max_weight = std::max(max_weight, weights[i]);
  }
  // T * B * max(w) < 2^62, without forming the product.
  const std::uint64_t cells = static_cast<std::uint64_t>(sets) * groups;
  if (cells > 0 && static_cast<std::uint64_t>(max_weight) > (kOverflowBudget - 1) / cells) {
    report.issues.push_back({ValidationIssue::npos, ValidationIssue::npos, ErrorCode::WeightOverflow,
                             "T*B*max(w) must stay below 2^62"});
  }
  return report;
}

}  // namespace

ValidationReport validate(const std::vector<std::vector<Weight>>& rows, bool verbose) {
  ValidationReport report;
  if (rows.empty()) return report;
  const std::size_t groups = rows.front().size();
  std::vector<Weight> flat;
  flat.reserve(rows.size() * groups);
  bool rectangular = true;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (rows[t].size() != groups) {
      std::ostringstream os;
      os << "row has " << rows[t].size() << " items, expected " << groups;
      report.issues.push_back({t, ValidationIssue::npos, ErrorCode::DimensionMismatch, os.str()});
      if (!verbose) return report;
      rectangular = false;
    }
  }
  if (!rectangular) {
    // Still report negative entries row by row.
    for (std::size_t t = 0; t < rows.size(); ++t)
      for (std::size_t b = 0; b < rows[t].size(); ++b)
        if (rows[t][b] < 0)
          report.issues.push_back({t, b, ErrorCode::NegativeWeight, "negative weight"});
    return report;
  }
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  auto flat_report = validate_flat(rows.size(), groups, flat, verbose);
  report.issues.insert(report.issues.end(), flat_report.issues.begin(), flat_report.issues.end());
  return report;
}

Instance::Instance(std::size_t sets, std::size_t groups, std::vector<Weight> weights)
    : sets_(sets), groups_(groups), weights_(std::move(weights)) {
  if (sets_ == 0 || groups_ == 0)
    throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: T and B must be at least 1");
  throw_first(validate_flat(sets_, groups_, weights_, false));
  for (Weight w : weights_) total_ += w;
}

Instance Instance::from_rows(const std::vector<std::vector<Weight>>& rows) {
  throw_first(validate(rows, false));
  if (rows.empty()) throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: no sets");
  std::vector<Weight> flat;
  for (const auto& row : rows) flat.insert(flat.end(), row.begin(), row.end());
  return Instance(rows.size(), rows.front().size(), std::move(flat));
}

Assignment::Assignment(std::size_t sets, std::size_t groups, std::vector<std::size_t> group_of)
    : sets_(sets), groups_(groups), groups_of_(std::move(group_of)) {
  if (groups_of_.size() != sets_ * groups_)
    throw Error(ErrorCode::DimensionMismatch, "DimensionMismatch: assignment size does not equal T*B");
}

Assignment Assignment::identity(std::size_t sets, std::size_t groups) {
  std::vector<std::size_t> g(sets * groups);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = i % groups;
  return Assignment(sets, groups, std::move(g));
}

Assignment Assignment::from_rows(const std::vector<std::vector<std::size_t>>& rows) {
  if (rows.empty()) return {};
  const std::size_t groups = rows.front().size();
  std::vector<std::size_t> flat;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    if (rows[t].size() != groups) {
      std::ostringstream os;
      os << "DimensionMismatch: assignment row " << t + 1 << " has " << rows[t].size()
         << " entries, expected " << groups;
      throw Error(ErrorCode::DimensionMismatch, os.str());
    }
    flat.insert(flat.end(), rows[t].begin(), rows[t].end());
  }
  return Assignment(rows.size(), groups, std::move(flat));
}

void Assignment::check_permutations() const {
  std::vector<unsigned char> seen(groups_);
  for (std::size_t t = 0; t < sets_; ++t) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < groups_; ++b) {
      const std::size_t g = group_of(t, b);
      if (g >= groups_ || seen[g]) {
        std::ostringstream os;
        os << "NotAPermutation: set " << t + 1;
        if (g >= groups_)
          os << " sends item " << b + 1 << " to nonexistent group " << g + 1;
        else
          os << " sends two items to group " << g + 1;
        throw Error(ErrorCode::NotAPermutation, os.str());
      }
      seen[g] = 1;
    }
  }
}

LoadVector make_load_vector(std::vector<Weight> loads) {
  LoadVector lv;
  lv.loads = std::move(loads);
  if (!lv.loads.empty()) {
    auto [lo, hi] = std::minmax_element(lv.loads.begin(), lv.loads.end());
    lv.objective = *hi;
    lv.min_load = *lo;
  }
  return lv;
}

LoadVector evaluate(const Instance& instance, const Assignment& assignment) {
  if (assignment.sets() != instance.sets() || assignment.groups() != instance.groups()) {
    std::ostringstream os;
    os << "DimensionMismatch: instance is " << instance.sets() << "x" << instance.groups()
       << ", assignment is " << assignment.sets() << "x" << assignment.groups();
    throw Error(ErrorCode::DimensionMismatch, os.str());
  }
  assignment.check_permutations();
  std::vector<Weight> loads(instance.groups(), 0);
  for (std::size_t t = 0; t < instance.sets(); ++t)
    for (std::size_t b = 0; b < instance.groups(); ++b)
      loads[assignment.group_of(t, b)] += instance.at(t, b);
  return make_load_vector(std::move(loads));
}

Weight set_range(std::span<const Weight> row) {
  if (row.empty()) return 0;
  auto [lo, hi] = std::minmax_element(row.begin(), row.end());
  return *hi - *lo;
}

RangeSummary ranges(const Instance& instance) {
  RangeSummary summary;
  summary.per_set.reserve(instance.sets());
  for (std::size_t t = 0; t < instance.sets(); ++t) {
    const Weight r = set_range(instance.row(t));
    summary.per_set.push_back({t, r});
    summary.max_range = std::max(summary.max_range, r);
  }
  return summary;
}

Weight lower_bound(const Instance& instance) {
  const auto groups = static_cast<Weight>(instance.groups());
  if (groups == 0) return 0;
  return (instance.total() + groups - 1) / groups;
}

}  // namespace minimax
