#include <doctest.h>

#include "support/oracles.hpp"
#include "wpgap/error.hpp"
#include "wpgap/order_sequence.hpp"

using namespace wpgap;

namespace {

OrderSequence seq(std::vector<std::int64_t> v) { return OrderSequence{std::move(v), 0}; }

}  // namespace

TEST_CASE("binomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("wronskian condition examples") {
  for (std::uint64_t p : {0ULL, 2ULL, 3ULL, 5ULL, 7ULL}) {
    CHECK(wronskian_det_condition(seq({0, 1, 2}), seq({0, 1, 2}), p));
  }
  CHECK(wronskian_determinant(seq({0, 1, 3}), seq({0, 1, 2})) == 3);
  CHECK(wronskian_det_condition(seq({0, 1, 3}), seq({0, 1, 2}), 5));
  CHECK_FALSE(wronskian_det_condition(seq({0, 1, 3}), seq({0, 1, 2}), 3));
  CHECK(wronskian_det_condition(seq({0, 1, 3}), seq({0, 1, 2}), 0));
}

TEST_CASE("wronskian errors") {
  CHECK_THROWS_AS(wronskian_det_condition(seq({0, 1}), seq({0, 1, 2}), 0), Error);
  try {
    wronskian_det_condition(seq({0, 1}), seq({0, 1, 2}), 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
  CHECK_THROWS_AS(wronskian_det_condition(seq({0, 1}), seq({0, 1}), 4), Error);
  CHECK_THROWS_AS(wronskian_det_condition(seq({1, 0}), seq({0, 1}), 0), Error);
}

TEST_CASE("determinant agrees with cofactor expansion") {
  // All point sequences 0 = e0 < e1 < e2 < e3 <= 9 against classical and a
  // non-classical generic sequence.
  for (const auto& generic : {std::vector<std::int64_t>{0, 1, 2, 3}, std::vector<std::int64_t>{0, 1, 2, 4}}) {
    for (std::int64_t a = 1; a <= 9; ++a) {
      for (std::int64_t b = a + 1; b <= 9; ++b) {
        for (std::int64_t c = b + 1; c <= 9; ++c) {
          const std::vector<std::int64_t> point{0, a, b, c};
          std::vector<std::vector<std::int64_t>> m(4, std::vector<std::int64_t>(4));
          for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) m[i][j] = oracle::small_binomial(point[i], generic[j]);
          }
          const std::int64_t expected = oracle::det_by_expansion(m);
          REQUIRE(wronskian_determinant(seq(point), seq(generic)) == expected);
          for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
            REQUIRE(wronskian_det_condition(seq(point), seq(generic), p) ==
                    (expected % static_cast<std::int64_t>(p) != 0));
          }
        }
      }
    }
  }
}

TEST_CASE("identical sequences always satisfy the condition") {
  for (int n = 1; n <= 8; ++n) {
    const OrderSequence classical = OrderSequence::classical(n);
    for (std::uint64_t p : {0ULL, 2ULL, 3ULL, 11ULL}) {
      CHECK(wronskian_det_condition(classical, classical, p));
    }
  }
  const OrderSequence shifted = seq({0, 2, 5, 9, 14});
  for (std::uint64_t p : {0ULL, 2ULL, 3ULL, 5ULL, 7ULL}) {
    CHECK(wronskian_det_condition(shifted, shifted, p));
  }
}

TEST_CASE("orders from a gap sequence") {
  const OrderSequence s = OrderSequence::from_gaps(GapSequence({1, 2, 5}));
  CHECK(s.orders == std::vector<std::int64_t>{0, 1, 4});
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}
