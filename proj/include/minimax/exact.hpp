#pragma once

#include <cstdint>
#include <vector>

#include "minimax/model.hpp"

namespace minimax::exact {

// Packed reachability set over states [0, width).
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

  std::size_t width() const { return width_; }
  bool test(std::size_t s) const { return s < width_ && ((words_[s / 64] >> (s % 64)) & 1u); }
  void set(std::size_t s) { words_[s / 64] |= std::uint64_t{1} << (s % 64); }
  std::size_t count() const;
  std::vector<std::size_t> members() const;

  // *this |= (src << shift), truncated to width().
  void or_shifted(const StateSet& src, std::size_t shift);

  friend bool operator==(const StateSet&, const StateSet&) = default;

 private:
  void clear_tail();

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

// Subset-sum stages for B = 2. Row t holds every weight group 1 can carry
// after one item of each of sets 0..t has been routed to it:
//   row 0 = {w[0][0], w[0][1]}
//   row t = (row t-1 + w[t][0]) | (row t-1 + w[t][1])
class FeasibilityTable {
 public:
  // Keeps every row. Throws WrongGroupCount unless B = 2 and
  // TableBudgetExceeded when W + 1 > state_cap.
  static FeasibilityTable build(const Instance& instance, std::uint64_t state_cap);

  std::size_t stages() const { return rows_.size(); }
  const StateSet& row(std::size_t t) const { return rows_.at(t); }
  const StateSet& final_row() const { return rows_.back(); }
  std::size_t width() const { return rows_.empty() ? 0 : rows_.front().width(); }

  // Next row from the previous one and a set's two weights.
  static StateSet advance(const StateSet& prev, Weight first, Weight second);
  static StateSet first_row(const Instance& instance);

 private:
  std::vector<StateSet> rows_;
};

enum class Proof { DpB2, BruteForce };
const char* to_string(Proof proof);

struct ExactResult {
  Weight objective = 0;
  Assignment assignment;
  Proof proof = Proof::BruteForce;
  std::uint64_t work = 0;  // reachable states summed over rows, or search nodes
  bool proven = true;      // false only when the brute-force node cap was hit
};

struct DpOptions {
  std::uint64_t state_cap = std::uint64_t{1} << 31;
  // Keep only the current row and recompute earlier rows while
  // backtracking: O(T * W / 64) memory becomes O(W / 64), time grows by T.
  bool low_memory = false;
};

ExactResult solve_dp_b2(const Instance& instance, const DpOptions& options = {});

// The final state chosen by reconstruction: minimizes max(s, W - s), the
// smaller s on ties.
std::size_t best_final_state(const StateSet& final_row, Weight total);

inline constexpr std::uint64_t kDefaultNodeCap = 100'000'000;

// Depth-first search over per-set permutations with set 0 pinned to the
// identity. Prunes when the partial maximum load plus the remaining
// per-set minima reaches the incumbent; stops early once the incumbent
// meets ceil(W/B). On node-cap exhaustion the incumbent comes back with
// proven = false.
ExactResult solve_brute_force(const Instance& instance, std::uint64_t node_cap = kDefaultNodeCap);

}  // namespace minimax::exact
