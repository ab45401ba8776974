#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minimax/model.hpp"

namespace minimax::heuristic {

enum class SetOrder {
  Input,
  NonincreasingRange,  // dec-range
  NondecreasingRange,  // inc-range
};

// CLI spellings: input, dec-range, inc-range.
const char* to_string(SetOrder order);
std::optional<SetOrder> parse_set_order(std::string_view text);

struct HeuristicConfig {
  SetOrder set_order = SetOrder::NonincreasingRange;
  bool local_search = false;
  std::uint64_t ls_iteration_cap = 10'000;
  bool record_trace = false;
};

struct HeuristicResult {
  Weight objective = 0;
  Assignment assignment;
  std::vector<Weight> loads;
  Weight lb = 0;
  Weight abs_gap = 0;
  Weight max_pairwise_diff = 0;
  // Loads after each processed stage, in processing order.
  std::vector<std::vector<Weight>> trace;
  std::vector<std::size_t> processing_order;
  // Comparator calls made while sorting items and groups.
  std::uint64_t work = 0;
  std::uint64_t ls_moves = 0;
  bool ls_cap_reached = false;
};

// Order in which sets are processed; ties keep input order.
std::vector<std::size_t> set_processing_order(const Instance& instance, SetOrder order);

// Greedy: start from zero loads; for every set, in config order, the k-th
// lightest item goes to the k-th heaviest group. Both sorts are stable, so
// ties resolve by original index.
HeuristicResult algorithm1(const Instance& instance, const HeuristicConfig& config = {});

// Best-improvement descent over swaps of the groups of two items of the same
// set. Moves are ranked by (max load, number of groups at the max load), so
// the objective never increases. cap bounds the number of applied moves.
HeuristicResult local_search_swap(const Instance& instance, const Assignment& start, std::uint64_t cap);

struct GuaranteeReport {
  bool ok = true;
  Weight max_range = 0;
  // Heaviest and lightest group (0-based) when violated.
  std::size_t heavy_group = 0;
  std::size_t light_group = 0;
  Weight difference = 0;
  std::string message;
};

// Checks max_b W_b - min_b W_b <= R and objective - ceil(W/B) <= R against
// the loads carried by the result, plus every stage of the trace when one
// was recorded.
GuaranteeReport guarantee_check(const Instance& instance, const HeuristicResult& result);

}  // namespace minimax::heuristic
