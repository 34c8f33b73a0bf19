#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wpgap/semigroup.hpp"

namespace wpgap {

using BigInt = boost::multiprecision::cpp_int;

/// Hermitian invariants eps_0 < eps_1 < ... of a linear system, either at a
/// point or generically. characteristic is 0 or a prime.
struct OrderSequence {
  std::vector<std::int64_t> orders;
  std::uint64_t characteristic = 0;

  /// eps_i = i for i = 0 .. count-1.
  static OrderSequence classical(int count, std::uint64_t characteristic = 0);
  /// Canonical orders at a point from its gap sequence: eps_j = l_{j+1} - 1.
  static OrderSequence from_gaps(const GapSequence& gaps, std::uint64_t characteristic = 0);

  std::size_t size() const { return orders.size(); }
};

/// C(n, k), zero when n < k.
BigInt binomial(std::int64_t n, std::int64_t k);

/// det(C(point[i], generic[j])) computed exactly (fraction-free elimination).
BigInt wronskian_determinant(const OrderSequence& point_orders,
                             const OrderSequence& generic_orders);

/// True iff the determinant is nonzero (p = 0) or nonzero mod p.
bool wronskian_det_condition(const OrderSequence& point_orders,
                             const OrderSequence& generic_orders, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace wpgap
