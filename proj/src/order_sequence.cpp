#include "wpgap/order_sequence.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "wpgap/error.hpp"

namespace wpgap {

namespace {

void require_valid(const OrderSequence& seq) {
  for (std::size_t i = 0; i < seq.orders.size(); ++i) {
    if (seq.orders[i] < 0 || (i > 0 && seq.orders[i] <= seq.orders[i - 1])) {
      throw Error(ErrorCode::PreconditionViolated,
                  "order sequence must be nonnegative and strictly increasing");
    }
  }
}

}  // namespace

OrderSequence OrderSequence::classical(int count, std::uint64_t characteristic) {
  OrderSequence seq;
  seq.characteristic = characteristic;
  for (int i = 0; i < count; ++i) seq.orders.push_back(i);
  return seq;
}

OrderSequence OrderSequence::from_gaps(const GapSequence& gaps, std::uint64_t characteristic) {
  OrderSequence seq;
  seq.characteristic = characteristic;
  for (int j = 0; j < gaps.size(); ++j) seq.orders.push_back(gaps.order(j));
  return seq;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt wronskian_determinant(const OrderSequence& point_orders,
                             const OrderSequence& generic_orders) {
  if (point_orders.size() != generic_orders.size()) {
    throw Error(ErrorCode::LengthMismatch, std::to_string(point_orders.size()) + " vs " +
                                               std::to_string(generic_orders.size()));
  }
  require_valid(point_orders);
  require_valid(generic_orders);

  const std::size_t n = point_orders.size();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = binomial(point_orders.orders[i], generic_orders.orders[j]);
    }
  }

  // Bareiss: every division below is exact.
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool wronskian_det_condition(const OrderSequence& point_orders,
                             const OrderSequence& generic_orders, std::uint64_t p) {
  if (p != 0 && !is_prime(p)) {
    throw Error(ErrorCode::PreconditionViolated, "characteristic must be 0 or prime");
  }
  const BigInt det = wronskian_determinant(point_orders, generic_orders);
  if (p == 0) return det != 0;
  return det % BigInt(p) != 0;
}

}  // namespace wpgap
