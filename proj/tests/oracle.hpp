#pragma once

// Test-only reference computations. Nothing here calls into the solvers;
// each routine enumerates the search space directly.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "minimax/model.hpp"

namespace oracle {

using minimax::Assignment;
using minimax::Instance;
using minimax::Weight;

// Calls f(assignment) for every combination of per-set permutations,
// including set 0 (no symmetry reduction). B!^T assignments.
template <typename F>
void for_each_assignment(const Instance& instance, F&& f) {
  const std::size_t sets = instance.sets(), groups = instance.groups();
  std::vector<std::vector<std::size_t>> perms(sets, std::vector<std::size_t>(groups));
  for (auto& p : perms) std::iota(p.begin(), p.end(), std::size_t{0});
  while (true) {
    std::vector<std::size_t> flat;
    for (const auto& p : perms) flat.insert(flat.end(), p.begin(), p.end());
    f(Assignment(sets, groups, flat));
    std::size_t t = 0;
    while (t < sets && !std::next_permutation(perms[t].begin(), perms[t].end())) ++t;
    if (t == sets) return;
  }
}

// Optimum by direct load summation over every assignment.
inline Weight optimum(const Instance& instance) {
  Weight best = std::numeric_limits<Weight>::max();
  for_each_assignment(instance, [&](const Assignment& a) {
    std::vector<Weight> loads(instance.groups(), 0);
    for (std::size_t t = 0; t < instance.sets(); ++t)
      for (std::size_t b = 0; b < instance.groups(); ++b) loads[a.group_of(t, b)] += instance.at(t, b);
    best = std::min(best, *std::max_element(loads.begin(), loads.end()));
  });
  return best;
}

// For B = 2: every weight group 0 can carry, by enumerating 2^T choices.
inline std::set<Weight> group0_sums(const Instance& instance) {
  std::set<Weight> sums;
  const std::size_t sets = instance.sets();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sets); ++mask) {
    Weight s = 0;
    for (std::size_t t = 0; t < sets; ++t) s += instance.at(t, (mask >> t) & 1u);
    sums.insert(s);
  }
  return sums;
}

// Sums reachable after the first `stages` sets (B = 2).
inline std::set<Weight> group0_sums_prefix(const Instance& instance, std::size_t stages) {
  std::set<Weight> sums{0};
  for (std::size_t t = 0; t < stages; ++t) {
    std::set<Weight> next;
    for (Weight s : sums) {
      next.insert(s + instance.at(t, 0));
      next.insert(s + instance.at(t, 1));
    }
    sums = std::move(next);
  }
  return sums;
}

// PARTITION by enumerating all 2^n subsets.
inline bool partition_exists(const std::vector<Weight>& sizes) {
  const Weight total = std::accumulate(sizes.begin(), sizes.end(), Weight{0});
  if (total % 2) return false;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << sizes.size()); ++mask) {
    Weight s = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
      if ((mask >> i) & 1u) s += sizes[i];
    if (2 * s == total) return true;
  }
  return false;
}

// 3-PARTITION by recursive triple matching: the first unused element is
// tried with every pair of later unused elements.
inline bool three_partition_exists(std::vector<Weight> sizes, Weight bound) {
  if (sizes.empty()) return true;
  const Weight first = sizes.front();
  for (std::size_t i = 1; i < sizes.size(); ++i)
    for (std::size_t j = i + 1; j < sizes.size(); ++j) {
      if (first + sizes[i] + sizes[j] != bound) continue;
      std::vector<Weight> rest;
      for (std::size_t k = 1; k < sizes.size(); ++k)
        if (k != i && k != j) rest.push_back(sizes[k]);
      if (three_partition_exists(rest, bound)) return true;
    }
  return false;
}

inline Instance random_instance(std::mt19937_64& rng, std::size_t sets, std::size_t groups, Weight lo, Weight hi) {
  std::uniform_int_distribution<Weight> dist(lo, hi);
  std::vector<Weight> w(sets * groups);
  for (auto& x : w) x = dist(rng);
  return Instance(sets, groups, std::move(w));
}

inline std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace oracle
