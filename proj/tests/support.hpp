#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "magicsq/enumeration.hpp"
#include "magicsq/square.hpp"
#include "magicsq/single_even.hpp"

namespace support {

namespace detail {

inline bool match_rest(const std::vector<int>& values, std::vector<bool>& taken,
                       std::size_t from, int order, int plus, int minus,
                       int plain) {
  while (from < values.size() && taken[from]) ++from;
  if (from == values.size()) return plus == 0 && minus == 0 && plain == 0;
  taken[from] = true;
  for (std::size_t j = from + 1; j < values.size(); ++j) {
    if (taken[j]) continue;
    const int kind = magicsq::pair_kind(values[from], values[j], order);
    int* budget = kind == 1    ? &plus
                  : kind == -1 ? &minus
                  : kind == 0  ? &plain
                               : nullptr;
    if (budget == nullptr || *budget == 0) continue;
    taken[j] = true;
    --*budget;
    if (match_rest(values, taken, from + 1, order, plus, minus, plain)) {
      return true;
    }
    taken[j] = false;
    ++*budget;
  }
  taken[from] = false;
  return false;
}

}  // namespace detail

// True iff `values` can be split into disjoint pairs with exactly `plus`
// pairs of kind +1, `minus` of kind -1 and `plain` complementary pairs.
// Counting qualifying pairs independently would over-count (one value can
// close a +-1 pair with several partners), so this searches for an actual
// disjoint matching with the required kind budget.
inline bool pairs_into(const std::vector<int>& values, int order, int plus,
                       int minus, int plain) {
  if (values.size() % 2 != 0) return false;
  if (static_cast<std::size_t>(plus + minus + plain) * 2 != values.size()) {
    return false;
  }
  std::vector<bool> taken(values.size(), false);
  return detail::match_rest(values, taken, 0, order, plus, minus, plain);
}

inline std::vector<int> column_of(const magicsq::Square& square, int col) {
  std::vector<int> values;
  for (int i = 1; i <= square.order(); ++i) values.push_back(square.at(i, col));
  return values;
}

inline std::vector<int> row_of(const magicsq::Square& square, int row) {
  std::vector<int> values;
  for (int j = 1; j <= square.order(); ++j) values.push_back(square.at(row, j));
  return values;
}

// The even-odd pattern of the figures: odd values fill the top-left and
// bottom-right quadrants, even values the other two.
inline bool cell_parity_ok(int order, int row, int col, int value) {
  const bool top = row <= order / 2;
  const bool left = col <= order / 2;
  const bool expect_odd = top == left;
  return (value % 2 == 1) == expect_odd;
}

inline bool quadrant_parity(const magicsq::Square& square) {
  for (int i = 1; i <= square.order(); ++i) {
    for (int j = 1; j <= square.order(); ++j) {
      if (!cell_parity_ok(square.order(), i, j, square.at(i, j))) return false;
    }
  }
  return true;
}

// Same pattern over the filled cells only (the gapped center rows are 0).
inline bool quadrant_parity_outer(const magicsq::GappedSquare& grid) {
  for (int i = 1; i <= grid.order; ++i) {
    for (int j = 1; j <= grid.order; ++j) {
      const int value = grid.at(i, j);
      if (value == 0) continue;
      if (!cell_parity_ok(grid.order, i, j, value)) return false;
    }
  }
  return true;
}

// Deterministic shuffled grid; almost never magic, always primitive.
inline magicsq::Square random_square(int order, std::uint32_t seed) {
  std::vector<int> cells(static_cast<std::size_t>(order) * order);
  std::iota(cells.begin(), cells.end(), 1);
  std::mt19937 rng(seed);
  std::shuffle(cells.begin(), cells.end(), rng);
  return magicsq::Square(order, std::move(cells));
}

// One shared exhaustive 4x4 run; several suites assert against it and the
// search is too slow to repeat per test.
inline const magicsq::EnumerationResult& all_order4() {
  static const magicsq::EnumerationResult result = magicsq::count_magic(4, true);
  return result;
}

}  // namespace support
