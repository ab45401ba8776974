#include "minimax/reductions.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "minimax/io.hpp"

namespace minimax::reductions {

namespace {

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorCode::InvariantViolation, "InvariantViolation: " + what);
}

}  // namespace

const char* to_string(Answer answer) {
  switch (answer) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::Unknown: return "unknown";
  }
  return "unknown";
}

Weight PartitionInstance::total() const { return std::accumulate(sizes.begin(), sizes.end(), Weight{0}); }

void PartitionInstance::validate() const {
  if (sizes.empty()) violation("PARTITION needs at least one element");
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] <= 0) violation("size " + std::to_string(i + 1) + " is not a positive integer");
}

void ThreePartitionInstance::validate() const {
  if (m == 0) violation("m must be at least 1");
  if (bound <= 0) violation("U must be a positive integer");
  if (sizes.size() != 3 * m)
    violation("expected 3m = " + std::to_string(3 * m) + " sizes, got " + std::to_string(sizes.size()));
  Weight total = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const Weight s = sizes[i];
    // U/4 < s < U/2 without rounding.
    if (!(4 * s > bound && 2 * s < bound))
      violation("size " + std::to_string(i + 1) + " = " + std::to_string(s) + " is outside (U/4, U/2)");
    total += s;
  }
  if (total != static_cast<Weight>(m) * bound)
    violation("sizes sum to " + std::to_string(total) + ", expected m*U = " +
              std::to_string(static_cast<Weight>(m) * bound));
}

Instance reduce_partition(const PartitionInstance& p) {
  p.validate();
  std::vector<Weight> weights;
  weights.reserve(p.sizes.size() * 2);
  for (Weight s : p.sizes) {
    weights.push_back(s);
    weights.push_back(0);
  }
  return Instance(p.sizes.size(), 2, std::move(weights));
}

Instance reduce_3partition(const ThreePartitionInstance& q) {
  q.validate();
  std::vector<Weight> weights(q.sizes.size() * q.m, 0);
  for (std::size_t t = 0; t < q.sizes.size(); ++t) weights[t * q.m] = q.sizes[t];
  return Instance(q.sizes.size(), q.m, std::move(weights));
}

std::vector<std::vector<std::size_t>> witness_from_assignment(const Assignment& assignment) {
  std::vector<std::vector<std::size_t>> parts(assignment.groups());
  for (std::size_t t = 0; t < assignment.sets(); ++t) parts[assignment.group_of(t, 0)].push_back(t);
  return parts;
}

DecisionOutcome decide_partition(const PartitionInstance& p, const exact::DpOptions& options) {
  p.validate();
  DecisionOutcome outcome;
  const Weight total = p.total();
  if (total % 2 != 0) {
    outcome.answer = Answer::No;
    return outcome;
  }
  const exact::ExactResult solved = exact::solve_dp_b2(reduce_partition(p), options);
  outcome.certificate_objective = solved.objective;
  if (solved.objective == total / 2) {
    outcome.answer = Answer::Yes;
    outcome.witness = witness_from_assignment(solved.assignment);
  } else {
    outcome.answer = Answer::No;
  }
  return outcome;
}

DecisionOutcome decide_3partition(const ThreePartitionInstance& q, std::uint64_t node_cap) {
  const Instance reduced = reduce_3partition(q);
  const exact::ExactResult solved = exact::solve_brute_force(reduced, node_cap);
  DecisionOutcome outcome;
  outcome.certificate_objective = solved.objective;
  if (solved.objective == q.bound) {
    auto parts = witness_from_assignment(solved.assignment);
    for (const auto& part : parts) {
      Weight sum = 0;
      for (std::size_t i : part) sum += q.sizes[i];
      if (part.size() != 3 || sum != q.bound)
        throw Error(ErrorCode::InternalError, "InternalError: 3-PARTITION witness is not a set of triples");
    }
    outcome.answer = Answer::Yes;
    outcome.witness = std::move(parts);
  } else {
    outcome.answer = solved.proven ? Answer::No : Answer::Unknown;
  }
  return outcome;
}

PartitionInstance read_partition(std::istream& in) {
  PartitionInstance p;
  for (const auto& line : io::content_lines(in)) {
    const auto values = io::parse_decimals(line.text, line.number);
    if (values.size() != 1) io::parse_error(line.number, "expected one size per line");
    p.sizes.push_back(values.front());
  }
  p.validate();
  return p;
}

void write_partition(std::ostream& out, const PartitionInstance& p) {
  for (Weight s : p.sizes) out << s << '\n';
}

ThreePartitionInstance read_3partition(std::istream& in) {
  const auto lines = io::content_lines(in);
  if (lines.empty()) io::parse_error(1, "missing header 'm U'");
  const auto header = io::parse_decimals(lines[0].text, lines[0].number);
  if (header.size() != 2 || header[0] < 1 || header[1] < 1)
    io::parse_error(lines[0].number, "header must be 'm U' with positive m and U");
  ThreePartitionInstance q;
  q.m = static_cast<std::size_t>(header[0]);
  q.bound = header[1];
  for (std::size_t i = 1; i < lines.size(); ++i)
    for (Weight s : io::parse_decimals(lines[i].text, lines[i].number)) q.sizes.push_back(s);
  q.validate();
  return q;
}

void write_3partition(std::ostream& out, const ThreePartitionInstance& q) {
  out << q.m << ' ' << q.bound << '\n';
  for (Weight s : q.sizes) out << s << '\n';
}

}  // namespace minimax::reductions
