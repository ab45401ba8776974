#include <random>
#include <sstream>

#include "doctest.h"
#include "minimax/io.hpp"
#include "oracle.hpp"

using namespace minimax;

namespace {

ErrorCode code_of(const std::string& text) {
  std::istringstream in(text);
  try {
    io::read_instance(in);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for: " << text);
  return ErrorCode::InternalError;
}

}  // namespace

TEST_CASE("read_instance: plain and commented") {
  std::istringstream in("# test\n2 2\n1 4\n# mid\n2 3\n");
  const auto inst = io::read_instance(in);
  CHECK(inst == Instance::from_rows({{1, 4}, {2, 3}}));

  std::istringstream no_trailing("1 3\n0 10 5");
  CHECK(io::read_instance(no_trailing) == Instance::from_rows({{0, 10, 5}}));
}

TEST_CASE("write_instance is bit-exact") {
  std::ostringstream out;
  io::write_instance(out, Instance::from_rows({{0, 10}, {5, 5}, {2, 9}}));
  CHECK(out.str() == "3 2\n0 10\n5 5\n2 9\n");
}

TEST_CASE("read_instance: errors") {
  CHECK(code_of("") == ErrorCode::ParseError);
  CHECK(code_of("2\n1 2\n") == ErrorCode::ParseError);
  CHECK(code_of("1 2\n1  2\n") == ErrorCode::ParseError);
  CHECK(code_of("1 2\n1 x\n") == ErrorCode::ParseError);
  CHECK(code_of("1 2\n1 2 \n") == ErrorCode::ParseError);
  CHECK(code_of("0 2\n") == ErrorCode::ParseError);
  CHECK(code_of("1 2\n1 99999999999999999999\n") == ErrorCode::ParseError);
  CHECK(code_of("2 2\n1 2\n3\n") == ErrorCode::DimensionMismatch);
  CHECK(code_of("2 2\n1 2\n") == ErrorCode::DimensionMismatch);
  CHECK(code_of("1 2\n1 2\n3 4\n") == ErrorCode::DimensionMismatch);
  CHECK(code_of("1 2\n1 -1\n") == ErrorCode::NegativeWeight);
}

TEST_CASE("assignment format is 1-based") {
  std::istringstream in("# objective 6\n1 2\n2 1\n");
  const auto a = io::read_assignment(in);
  CHECK(a.group_of(0, 0) == 0);
  CHECK(a.group_of(1, 0) == 1);
  std::ostringstream out;
  io::write_assignment(out, a);
  CHECK(out.str() == "1 2\n2 1\n");

  std::istringstream zero("0 1\n");
  CHECK_THROWS_AS(io::read_assignment(zero), Error);
  std::istringstream ragged("1 2\n1\n");
  CHECK_THROWS_AS(io::read_assignment(ragged), Error);
}

TEST_CASE("property: instance text round trip") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const auto inst = oracle::random_instance(rng, oracle::pick(rng, 1, 12), oracle::pick(rng, 1, 9), 0, 100000);
    std::stringstream buf;
    io::write_instance(buf, inst);
    REQUIRE(io::read_instance(buf) == inst);
  }
}
