#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "minimax/exact.hpp"
#include "minimax/model.hpp"

namespace minimax::reductions {

// PARTITION: split an ordered multiset of positive sizes into two halves of
// equal sum.
struct PartitionInstance {
  std::vector<Weight> sizes;

  Weight total() const;
  // Throws InvariantViolation on an empty list or a non-positive size.
  void validate() const;
};

// 3-PARTITION: split 3m sizes into m triples each summing to U, with
// U/4 < s < U/2 for every size and a total of m*U.
struct ThreePartitionInstance {
  std::size_t m = 0;
  Weight bound = 0;  // U
  std::vector<Weight> sizes;

  // Throws InvariantViolation naming the first failed condition.
  void validate() const;
};

enum class Answer { Yes, No, Unknown };
const char* to_string(Answer answer);

struct DecisionOutcome {
  Answer answer = Answer::Unknown;
  // Indices (0-based, into sizes) of each part: two parts for PARTITION,
  // m triples for 3-PARTITION. Present iff answer is Yes.
  std::optional<std::vector<std::vector<std::size_t>>> witness;
  // Optimal objective of the reduced instance, when a solver ran.
  std::optional<Weight> certificate_objective;
};

// T = |A|, B = 2, row t = (s(a_t), 0).
Instance reduce_partition(const PartitionInstance& p);

// Odd totals answer No without building a table. Otherwise Yes iff the DP
// optimum of the reduced instance equals total / 2.
DecisionOutcome decide_partition(const PartitionInstance& p, const exact::DpOptions& options = {});

// B = m, T = 3m, row t = (s(a_t), 0, ..., 0).
Instance reduce_3partition(const ThreePartitionInstance& q);

// Yes iff the brute-force optimum of the reduced instance equals U. A
// search stopped by the node cap without reaching U answers Unknown.
DecisionOutcome decide_3partition(const ThreePartitionInstance& q,
                                  std::uint64_t node_cap = exact::kDefaultNodeCap);

// Groups of the nonzero column-0 items in a solved reduced instance.
std::vector<std::vector<std::size_t>> witness_from_assignment(const Assignment& assignment);

// PARTITION file: one positive decimal per line.
PartitionInstance read_partition(std::istream& in);
void write_partition(std::ostream& out, const PartitionInstance& p);
// 3-PARTITION file: "m U" on line 1, then the 3m sizes, one per line on write.
ThreePartitionInstance read_3partition(std::istream& in);
void write_3partition(std::ostream& out, const ThreePartitionInstance& q);

}  // namespace minimax::reductions
