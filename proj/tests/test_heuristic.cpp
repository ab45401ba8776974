#include <random>

#include "doctest.h"
#include "minimax/exact.hpp"
#include "minimax/heuristic.hpp"
#include "oracle.hpp"

using namespace minimax;
using namespace minimax::heuristic;

TEST_CASE("set order spellings") {
  for (auto order : {SetOrder::Input, SetOrder::NonincreasingRange, SetOrder::NondecreasingRange})
    CHECK(parse_set_order(to_string(order)) == order);
  CHECK(std::string(to_string(SetOrder::NonincreasingRange)) == "dec-range");
  CHECK_FALSE(parse_set_order("decreasing").has_value());
}

TEST_CASE("set_processing_order is stable on ties") {
  const auto inst = Instance::from_rows({{0, 5}, {1, 2}, {3, 8}, {4, 5}, {0, 0}});  // r = 5 1 5 1 0
  CHECK(set_processing_order(inst, SetOrder::Input) == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(set_processing_order(inst, SetOrder::NonincreasingRange) == std::vector<std::size_t>{0, 2, 1, 3, 4});
  CHECK(set_processing_order(inst, SetOrder::NondecreasingRange) == std::vector<std::size_t>{4, 1, 3, 0, 2});
}

TEST_CASE("algorithm1: running example") {
  const auto inst = Instance::from_rows({{1, 4}, {2, 3}});
  const auto r = algorithm1(inst, {.set_order = SetOrder::NonincreasingRange, .record_trace = true});
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0] == std::vector<Weight>{1, 4});
  CHECK(r.trace[1] == std::vector<Weight>{4, 6});
  CHECK(r.loads == std::vector<Weight>{4, 6});
  CHECK(r.objective == 6);
  CHECK(r.lb == 5);
  CHECK(r.abs_gap == 1);
  CHECK(r.max_pairwise_diff == 2);
  CHECK(r.abs_gap <= ranges(inst).max_range);
  CHECK(exact::solve_brute_force(inst).objective == 6);
  CHECK(guarantee_check(inst, r).ok);
}

TEST_CASE("algorithm1: constant sets balance exactly") {
  const auto inst = Instance::from_rows({{4, 4, 4}, {7, 7, 7}, {0, 0, 0}, {2, 2, 2}});
  const auto r = algorithm1(inst);
  CHECK(r.loads == std::vector<Weight>{13, 13, 13});
  CHECK(r.abs_gap == 0);
  CHECK(r.max_pairwise_diff == 0);
}

TEST_CASE("algorithm1: single set") {
  const auto inst = Instance::from_rows({{3, 1, 2}});
  const auto r = algorithm1(inst);
  auto loads = r.loads;
  std::sort(loads.begin(), loads.end());
  CHECK(loads == std::vector<Weight>{1, 2, 3});
  CHECK(r.objective == 3);
}

TEST_CASE("algorithm1: B = 1 is accepted") {
  const auto inst = Instance::from_rows({{3}, {4}});
  const auto r = algorithm1(inst);
  CHECK(r.objective == 7);
  CHECK(r.abs_gap == 0);
}

TEST_CASE("property: stage invariant and absolute guarantee") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = oracle::random_instance(rng, oracle::pick(rng, 1, 50), oracle::pick(rng, 2, 20), 0, 100);
    const auto order = static_cast<SetOrder>(trial % 3);
    const auto r = algorithm1(inst, {.set_order = order, .record_trace = true});
    const auto rs = ranges(inst);

    Weight previous = 0;
    for (std::size_t k = 0; k < r.trace.size(); ++k) {
      const auto [lo, hi] = std::minmax_element(r.trace[k].begin(), r.trace[k].end());
      const Weight diff = *hi - *lo;
      const Weight range = rs.per_set[r.processing_order[k]].range;
      REQUIRE(diff <= std::max(previous, range));
      REQUIRE(diff <= rs.max_range);
      previous = diff;
    }
    REQUIRE(r.abs_gap >= 0);
    REQUIRE(r.max_pairwise_diff <= rs.max_range);
    REQUIRE(r.objective - lower_bound(inst) <= rs.max_range);
    REQUIRE(evaluate(inst, r.assignment).loads == r.loads);
    REQUIRE(guarantee_check(inst, r).ok);
  }
}

TEST_CASE("property: heuristic never beats the optimum, and ties it when R = 0") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t groups = oracle::pick(rng, 2, 3);
    const auto inst = oracle::random_instance(rng, oracle::pick(rng, 1, 6), groups, 0, 30);
    const auto h = algorithm1(inst);
    const auto opt = exact::solve_brute_force(inst);
    REQUIRE(h.objective >= opt.objective);

    // Constant rows.
    std::vector<Weight> flat;
    for (std::size_t t = 0; t < inst.sets(); ++t)
      for (std::size_t b = 0; b < groups; ++b) flat.push_back(inst.at(t, 0));
    const Instance flat_inst(inst.sets(), groups, flat);
    REQUIRE(algorithm1(flat_inst).objective == exact::solve_brute_force(flat_inst).objective);
  }
}

TEST_CASE("property: work grows like B log B") {
  std::mt19937_64 rng(43);
  for (std::size_t groups : {16u, 64u, 256u}) {
    const auto small = oracle::random_instance(rng, 20, groups, 1, 100);
    const auto large = oracle::random_instance(rng, 20, 2 * groups, 1, 100);
    const double ratio =
        static_cast<double>(algorithm1(large).work) / static_cast<double>(algorithm1(small).work);
    CHECK(ratio > 1.5);
    CHECK(ratio < 3.0);
  }
}

TEST_CASE("local_search_swap: examples") {
  const auto inst = Instance::from_rows({{1, 4}, {2, 3}});
  const auto start = algorithm1(inst).assignment;
  const auto r = local_search_swap(inst, start, 100);
  CHECK(r.objective == 6);
  CHECK(r.assignment == start);
  CHECK(r.ls_moves == 0);
  CHECK_FALSE(r.ls_cap_reached);

  const auto nines = Instance::from_rows({{9, 0}, {9, 0}});
  const auto worst = Assignment::from_rows({{0, 1}, {0, 1}});
  CHECK(evaluate(nines, worst).loads == std::vector<Weight>{18, 0});
  const auto fixed = local_search_swap(nines, worst, 100);
  CHECK(fixed.loads == std::vector<Weight>{9, 9});
  CHECK(fixed.objective == 9);
  CHECK(fixed.ls_moves == 1);

  const auto frozen = local_search_swap(nines, worst, 0);
  CHECK(frozen.assignment == worst);
  CHECK(frozen.objective == 18);
  CHECK(frozen.ls_cap_reached);
}

TEST_CASE("property: local search is monotone and keeps assignments valid") {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const auto inst = oracle::random_instance(rng, oracle::pick(rng, 1, 15), oracle::pick(rng, 2, 10), 0, 60);
    std::vector<std::size_t> g(inst.sets() * inst.groups());
    for (std::size_t t = 0; t < inst.sets(); ++t) {
      std::vector<std::size_t> p(inst.groups());
      std::iota(p.begin(), p.end(), std::size_t{0});
      std::shuffle(p.begin(), p.end(), rng);
      std::copy(p.begin(), p.end(), g.begin() + static_cast<std::ptrdiff_t>(t * inst.groups()));
    }
    const Assignment start(inst.sets(), inst.groups(), g);
    const Weight before = evaluate(inst, start).objective;
    const auto r = local_search_swap(inst, start, oracle::pick(rng, 0, 50));
    REQUIRE(r.objective <= before);
    REQUIRE(evaluate(inst, r.assignment).objective == r.objective);
    REQUIRE(evaluate(inst, r.assignment).loads == r.loads);

    const auto seeded = algorithm1(inst, {.local_search = true});
    REQUIRE(seeded.objective <= algorithm1(inst).objective);
  }
}

TEST_CASE("guarantee_check: negative controls") {
  const auto inst = Instance::from_rows({{1, 4}, {2, 3}});  // R = 3, W = 10
  HeuristicResult fake;
  fake.loads = {0, 3 + 10};
  fake.objective = 13;
  const auto report = guarantee_check(inst, fake);
  CHECK_FALSE(report.ok);
  CHECK(report.heavy_group == 1);
  CHECK(report.light_group == 0);
  CHECK(report.difference == 13);
  CHECK(report.message.find("GuaranteeViolation") == 0);

  HeuristicResult bad_trace;
  bad_trace.loads = {5, 5};
  bad_trace.trace = {{0, 9}, {5, 5}};
  CHECK_FALSE(guarantee_check(inst, bad_trace).ok);

  const auto flat = Instance::from_rows({{2, 2}, {3, 3}});  // R = 0
  HeuristicResult uneven;
  uneven.loads = {4, 6};
  CHECK_FALSE(guarantee_check(flat, uneven).ok);
  HeuristicResult even;
  even.loads = {5, 5};
  CHECK(guarantee_check(flat, even).ok);
  CHECK(guarantee_check(flat, algorithm1(flat)).ok);
}
