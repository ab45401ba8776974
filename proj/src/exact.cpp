#include "minimax/exact.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace minimax::exact {

const char* to_string(Proof proof) {
  switch (proof) {
    case Proof::DpB2: return "dp-b2";
    case Proof::BruteForce: return "brute-force";
  }
  return "unknown";
}

std::size_t StateSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> StateSet::members() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void StateSet::clear_tail() {
  const std::size_t used = width_ % 64;
  if (used && !words_.empty()) words_.back() &= (std::uint64_t{1} << used) - 1;
}

void StateSet::or_shifted(const StateSet& src, std::size_t shift) {
  const std::size_t n = words_.size();
  const std::size_t word_shift = shift / 64;
  const unsigned bit_shift = static_cast<unsigned>(shift % 64);
  if (word_shift >= n) return;
  for (std::size_t j = n; j-- > word_shift;) {
    const std::size_t i = j - word_shift;
    std::uint64_t v = i < src.words_.size() ? src.words_[i] << bit_shift : 0;
    if (bit_shift && i >= 1 && i - 1 < src.words_.size()) v |= src.words_[i - 1] >> (64 - bit_shift);
    words_[j] |= v;
  }
  clear_tail();
}

namespace {

std::size_t checked_width(const Instance& instance, std::uint64_t state_cap) {
  if (instance.groups() != 2) {
    std::ostringstream os;
    os << "WrongGroupCount: the subset-sum DP needs B = 2, got B = " << instance.groups();
    throw Error(ErrorCode::WrongGroupCount, os.str());
  }
  const auto states = static_cast<std::uint64_t>(instance.total()) + 1;
  if (states > state_cap) {
    std::ostringstream os;
    os << "TableBudgetExceeded: W + 1 = " << states << " states exceeds the cap of " << state_cap;
    throw Error(ErrorCode::TableBudgetExceeded, os.str());
  }
  return static_cast<std::size_t>(states);
}

}  // namespace

StateSet FeasibilityTable::first_row(const Instance& instance) {
  StateSet row(static_cast<std::size_t>(instance.total()) + 1);
  row.set(static_cast<std::size_t>(instance.at(0, 0)));
  row.set(static_cast<std::size_t>(instance.at(0, 1)));
  return row;
}

StateSet FeasibilityTable::advance(const StateSet& prev, Weight first, Weight second) {
  StateSet next(prev.width());
  next.or_shifted(prev, static_cast<std::size_t>(first));
  next.or_shifted(prev, static_cast<std::size_t>(second));
  return next;
}

FeasibilityTable FeasibilityTable::build(const Instance& instance, std::uint64_t state_cap) {
  checked_width(instance, state_cap);
  FeasibilityTable table;
  table.rows_.reserve(instance.sets());
  table.rows_.push_back(first_row(instance));
  for (std::size_t t = 1; t < instance.sets(); ++t)
    table.rows_.push_back(advance(table.rows_.back(), instance.at(t, 0), instance.at(t, 1)));
  return table;
}

std::size_t best_final_state(const StateSet& final_row, Weight total) {
  std::size_t best = 0;
  Weight best_value = std::numeric_limits<Weight>::max();
  for (std::size_t s : final_row.members()) {
    const auto load = static_cast<Weight>(s);
    const Weight value = std::max(load, total - load);
    if (value < best_value) {
      best_value = value;
      best = s;
    }
  }
  return best;
}

ExactResult solve_dp_b2(const Instance& instance, const DpOptions& options) {
  checked_width(instance, options.state_cap);
  const std::size_t sets = instance.sets();

  ExactResult result;
  result.proof = Proof::DpB2;

  FeasibilityTable table;
  StateSet last;
  if (options.low_memory) {
    last = FeasibilityTable::first_row(instance);
    result.work += last.count();
    for (std::size_t t = 1; t < sets; ++t) {
      last = FeasibilityTable::advance(last, instance.at(t, 0), instance.at(t, 1));
      result.work += last.count();
    }
  } else {
    table = FeasibilityTable::build(instance, options.state_cap);
    for (std::size_t t = 0; t < sets; ++t) result.work += table.row(t).count();
  }
  const StateSet& final_row = options.low_memory ? last : table.final_row();

  // Recomputes row t from scratch in low-memory mode.
  auto row_at = [&](std::size_t t) -> StateSet {
    if (!options.low_memory) return table.row(t);
    StateSet row = FeasibilityTable::first_row(instance);
    for (std::size_t k = 1; k <= t; ++k) row = FeasibilityTable::advance(row, instance.at(k, 0), instance.at(k, 1));
    return row;
  };

  std::size_t s = best_final_state(final_row, instance.total());
  std::vector<std::size_t> groups(sets * 2);
  auto route = [&](std::size_t t, std::size_t item_to_first) {
    groups[t * 2 + item_to_first] = 0;
    groups[t * 2 + (1 - item_to_first)] = 1;
  };
  for (std::size_t t = sets; t-- > 1;) {
    const auto w0 = static_cast<std::size_t>(instance.at(t, 0));
    const auto w1 = static_cast<std::size_t>(instance.at(t, 1));
    const StateSet prev = row_at(t - 1);
    if (s >= w0 && prev.test(s - w0)) {
      route(t, 0);
      s -= w0;
    } else if (s >= w1 && prev.test(s - w1)) {
      route(t, 1);
      s -= w1;
    } else {
      throw Error(ErrorCode::InternalError, "InternalError: DP backtracking lost its state");
    }
  }
  if (s == static_cast<std::size_t>(instance.at(0, 0)))
    route(0, 0);
  else if (s == static_cast<std::size_t>(instance.at(0, 1)))
    route(0, 1);
  else
    throw Error(ErrorCode::InternalError, "InternalError: DP backtracking missed the first set");

  result.assignment = Assignment(sets, 2, std::move(groups));
  const LoadVector loads = evaluate(instance, result.assignment);
  const auto chosen = static_cast<Weight>(best_final_state(final_row, instance.total()));
  result.objective = std::max(chosen, instance.total() - chosen);
  if (loads.objective != result.objective)
    throw Error(ErrorCode::InternalError, "InternalError: reconstructed assignment does not reproduce the DP optimum");
  return result;
}

namespace {

class PermutationSearch {
 public:
  PermutationSearch(const Instance& instance, std::uint64_t node_cap)
      : instance_(instance), node_cap_(node_cap), groups_(instance.groups()), loads_(groups_, 0) {
    const std::size_t sets = instance.sets();
    // Items of each set sorted by weight, grouped into classes of equal
    // weight so that permutations differing only among equal items are
    // enumerated once.
    sorted_items_.resize(sets);
    class_of_.resize(sets);
    class_start_.resize(sets);
    for (std::size_t t = 0; t < sets; ++t) {
      auto& items = sorted_items_[t];
      items.resize(groups_);
      for (std::size_t b = 0; b < groups_; ++b) items[b] = b;
      std::stable_sort(items.begin(), items.end(),
                       [&](std::size_t a, std::size_t b) { return instance.at(t, a) < instance.at(t, b); });
      auto& cls = class_of_[t];
      cls.resize(groups_);
      class_start_[t].push_back(0);
      for (std::size_t k = 0; k < groups_; ++k) {
        if (k > 0 && instance.at(t, items[k]) != instance.at(t, items[k - 1]))
          class_start_[t].push_back(k);
        cls[k] = class_start_[t].size() - 1;
      }
    }
    suffix_min_.assign(sets + 1, 0);
    for (std::size_t t = sets; t-- > 0;) {
      const auto row = instance.row(t);
      suffix_min_[t] = suffix_min_[t + 1] + *std::min_element(row.begin(), row.end());
    }
    lower_bound_ = lower_bound(instance);
  }

  ExactResult run() {
    const std::size_t sets = instance_.sets();
    ExactResult result;
    result.proof = Proof::BruteForce;

    best_ = Assignment::identity(sets, groups_);
    incumbent_ = evaluate(instance_, best_).objective;
    current_ = best_;

    // Set 0 stays on the identity permutation.
    for (std::size_t b = 0; b < groups_; ++b) loads_[b] = instance_.at(0, b);
    if (incumbent_ > lower_bound_) search(1);

    result.objective = incumbent_;
    result.assignment = best_;
    result.work = nodes_;
    result.proven = !capped_;
    return result;
  }

 private:
  bool done() const { return capped_ || incumbent_ == lower_bound_; }

  void search(std::size_t t) {
    if (t == instance_.sets()) {
      const Weight objective = *std::max_element(loads_.begin(), loads_.end());
      if (objective < incumbent_) {
        incumbent_ = objective;
        best_ = current_;
      }
      return;
    }
    std::vector<std::size_t> arrangement = class_of_[t];  // class placed in each group
    std::vector<std::size_t> next_in_class(class_start_[t].size());
    do {
      if (nodes_ >= node_cap_) {
        capped_ = true;
        return;
      }
      ++nodes_;
      Weight partial_max = 0;
      for (std::size_t g = 0; g < groups_; ++g) {
        const std::size_t item = sorted_items_[t][class_start_[t][arrangement[g]]];
        partial_max = std::max(partial_max, loads_[g] + instance_.at(t, item));
      }
      if (partial_max + suffix_min_[t + 1] >= incumbent_) continue;

      std::copy(class_start_[t].begin(), class_start_[t].end(), next_in_class.begin());
      for (std::size_t g = 0; g < groups_; ++g) {
        const std::size_t item = sorted_items_[t][next_in_class[arrangement[g]]++];
        current_.set_group(t, item, g);
        loads_[g] += instance_.at(t, item);
      }
      search(t + 1);
      for (std::size_t b = 0; b < groups_; ++b) loads_[current_.group_of(t, b)] -= instance_.at(t, b);
      if (done()) return;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  }

  const Instance& instance_;
  std::uint64_t node_cap_;
  std::size_t groups_;
  std::vector<Weight> loads_;
  std::vector<std::vector<std::size_t>> sorted_items_;
  std::vector<std::vector<std::size_t>> class_of_;
  std::vector<std::vector<std::size_t>> class_start_;
  std::vector<Weight> suffix_min_;
  Weight lower_bound_ = 0;
  Weight incumbent_ = 0;
  Assignment best_;
  Assignment current_;
  std::uint64_t nodes_ = 0;
  bool capped_ = false;
};

}  // namespace

ExactResult solve_brute_force(const Instance& instance, std::uint64_t node_cap) {
  if (instance.groups() < 1) throw Error(ErrorCode::WrongGroupCount, "WrongGroupCount: B must be at least 1");
  PermutationSearch search(instance, node_cap);
  ExactResult result = search.run();
  if (evaluate(instance, result.assignment).objective != result.objective)
    throw Error(ErrorCode::InternalError, "InternalError: brute-force incumbent does not reproduce its objective");
  return result;
}

}  // namespace minimax::exact
