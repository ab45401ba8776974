#include "minimax/heuristic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace minimax::heuristic {

const char* to_string(SetOrder order) {
  switch (order) {
    case SetOrder::Input: return "input";
    case SetOrder::NonincreasingRange: return "dec-range";
    case SetOrder::NondecreasingRange: return "inc-range";
  }
  return "unknown";
}

std::optional<SetOrder> parse_set_order(std::string_view text) {
  if (text == "input") return SetOrder::Input;
  if (text == "dec-range") return SetOrder::NonincreasingRange;
  if (text == "inc-range") return SetOrder::NondecreasingRange;
  return std::nullopt;
}

std::vector<std::size_t> set_processing_order(const Instance& instance, SetOrder order) {
  std::vector<std::size_t> sets(instance.sets());
  std::iota(sets.begin(), sets.end(), std::size_t{0});
  if (order == SetOrder::Input) return sets;
  std::vector<Weight> range(instance.sets());
  for (std::size_t t = 0; t < instance.sets(); ++t) range[t] = set_range(instance.row(t));
  if (order == SetOrder::NonincreasingRange)
    std::stable_sort(sets.begin(), sets.end(), [&](std::size_t a, std::size_t b) { return range[a] > range[b]; });
  else
    std::stable_sort(sets.begin(), sets.end(), [&](std::size_t a, std::size_t b) { return range[a] < range[b]; });
  return sets;
}

namespace {

void finish(const Instance& instance, HeuristicResult& result) {
  const LoadVector lv = make_load_vector(result.loads);
  result.objective = lv.objective;
  result.lb = lower_bound(instance);
  result.abs_gap = result.objective - result.lb;
  result.max_pairwise_diff = lv.objective - lv.min_load;
}

}  // namespace

HeuristicResult algorithm1(const Instance& instance, const HeuristicConfig& config) {
  const std::size_t groups = instance.groups();
  HeuristicResult result;
  result.loads.assign(groups, 0);
  result.processing_order = set_processing_order(instance, config.set_order);

  std::vector<std::size_t> group_of(instance.sets() * groups);
  std::vector<std::size_t> items(groups);
  std::vector<std::size_t> by_load(groups);
  std::uint64_t comparisons = 0;

  for (std::size_t t : result.processing_order) {
    const auto row = instance.row(t);
    std::iota(items.begin(), items.end(), std::size_t{0});
    std::iota(by_load.begin(), by_load.end(), std::size_t{0});
    std::stable_sort(items.begin(), items.end(), [&](std::size_t a, std::size_t b) {
      ++comparisons;
      return row[a] < row[b];
    });
    std::stable_sort(by_load.begin(), by_load.end(), [&](std::size_t a, std::size_t b) {
      ++comparisons;
      return result.loads[a] > result.loads[b];
    });
    for (std::size_t k = 0; k < groups; ++k) {
      group_of[t * groups + items[k]] = by_load[k];
      result.loads[by_load[k]] += row[items[k]];
    }
    if (config.record_trace) result.trace.push_back(result.loads);
  }

  result.work = comparisons;
  result.assignment = Assignment(instance.sets(), groups, std::move(group_of));
  finish(instance, result);

  if (config.local_search) {
    HeuristicResult improved = local_search_swap(instance, result.assignment, config.ls_iteration_cap);
    improved.trace = std::move(result.trace);
    improved.processing_order = std::move(result.processing_order);
    improved.work = result.work;
    return improved;
  }
  return result;
}

namespace {

// Max load and its multiplicity; the local search minimizes this pair.
using Score = std::pair<Weight, std::size_t>;

class SwapNeighborhood {
 public:
  SwapNeighborhood(const Instance& instance, Assignment& assignment, std::vector<Weight>& loads)
      : instance_(instance), assignment_(assignment), loads_(loads) {}

  Score score() const {
    const Weight top = *std::max_element(loads_.begin(), loads_.end());
    return {top, static_cast<std::size_t>(std::count(loads_.begin(), loads_.end(), top))};
  }

  // Applies the best strictly improving swap; false at a local optimum.
  bool improve() {
    const std::size_t groups = instance_.groups();
    const Score current = score();
    prepare();

    Score best = current;
    std::size_t best_t = 0, best_a = 0, best_b = 0;
    bool found = false;
    for (std::size_t t = 0; t < instance_.sets(); ++t) {
      for (std::size_t a = 0; a < groups; ++a) {
        const std::size_t ga = assignment_.group_of(t, a);
        if (loads_[ga] != current.first) continue;
        for (std::size_t b = 0; b < groups; ++b) {
          const Weight delta = instance_.at(t, b) - instance_.at(t, a);
          if (delta >= 0) continue;
          const std::size_t gb = assignment_.group_of(t, b);
          const Score candidate = after_swap(ga, gb, delta);
          if (candidate < best) {
            best = candidate;
            std::tie(best_t, best_a, best_b) = std::tuple{t, a, b};
            found = true;
          }
        }
      }
    }
    if (!found) return false;
    const std::size_t ga = assignment_.group_of(best_t, best_a);
    const std::size_t gb = assignment_.group_of(best_t, best_b);
    const Weight delta = instance_.at(best_t, best_b) - instance_.at(best_t, best_a);
    assignment_.set_group(best_t, best_a, gb);
    assignment_.set_group(best_t, best_b, ga);
    loads_[ga] += delta;
    loads_[gb] -= delta;
    return true;
  }

 private:
  void prepare() {
    sorted_ = loads_;
    std::sort(sorted_.begin(), sorted_.end());
    std::vector<std::size_t> idx(loads_.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const std::size_t keep = std::min<std::size_t>(3, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(keep), idx.end(),
                      [&](std::size_t x, std::size_t y) { return loads_[x] > loads_[y]; });
    top_.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(keep));
  }

  std::size_t count_equal(Weight v) const {
    auto [lo, hi] = std::equal_range(sorted_.begin(), sorted_.end(), v);
    return static_cast<std::size_t>(hi - lo);
  }

  // Score after item weights moving ga -> ga + delta and gb -> gb - delta.
  Score after_swap(std::size_t ga, std::size_t gb, Weight delta) const {
    const Weight new_a = loads_[ga] + delta;
    const Weight new_b = loads_[gb] - delta;
    Weight top = std::max(new_a, new_b);
    for (std::size_t g : top_) {
      if (g != ga && g != gb) {
        top = std::max(top, loads_[g]);
        break;
      }
    }
    std::size_t count = count_equal(top) - (loads_[ga] == top) - (loads_[gb] == top);
    count += (new_a == top) + (new_b == top);
    return {top, count};
  }

  const Instance& instance_;
  Assignment& assignment_;
  std::vector<Weight>& loads_;
  std::vector<Weight> sorted_;
  std::vector<std::size_t> top_;
};

}  // namespace

HeuristicResult local_search_swap(const Instance& instance, const Assignment& start, std::uint64_t cap) {
  HeuristicResult result;
  result.assignment = start;
  result.loads = evaluate(instance, start).loads;

  SwapNeighborhood neighborhood(instance, result.assignment, result.loads);
  bool local_optimum = false;
  while (result.ls_moves < cap) {
    if (!neighborhood.improve()) {
      local_optimum = true;
      break;
    }
    ++result.ls_moves;
  }
  result.ls_cap_reached = !local_optimum;
  finish(instance, result);
  return result;
}

GuaranteeReport guarantee_check(const Instance& instance, const HeuristicResult& result) {
  GuaranteeReport report;
  report.max_range = ranges(instance).max_range;
  const Weight lb = lower_bound(instance);

  auto check = [&](const std::vector<Weight>& loads, const char* where, bool final_stage) {
    if (loads.empty() || !report.ok) return;
    const auto [lo, hi] = std::minmax_element(loads.begin(), loads.end());
    const Weight diff = *hi - *lo;
    std::ostringstream os;
    if (diff > report.max_range) {
      os << where << ": groups " << (hi - loads.begin()) + 1 << " and " << (lo - loads.begin()) + 1
         << " differ by " << diff << " > R = " << report.max_range;
    } else if (final_stage && *hi - lb > report.max_range) {
      os << where << ": objective " << *hi << " exceeds ceil(W/B) = " << lb << " by more than R = "
         << report.max_range;
    } else {
      return;
    }
    report.ok = false;
    report.heavy_group = static_cast<std::size_t>(hi - loads.begin());
    report.light_group = static_cast<std::size_t>(lo - loads.begin());
    report.difference = diff;
    report.message = "GuaranteeViolation: " + os.str();
  };

  for (std::size_t k = 0; k < result.trace.size(); ++k) {
    const std::string where = "stage " + std::to_string(k + 1);
    check(result.trace[k], where.c_str(), false);
  }
  check(result.loads, "final loads", true);
  return report;
}

}  // namespace minimax::heuristic
