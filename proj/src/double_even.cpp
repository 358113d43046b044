#include "magicsq/double_even.hpp"

#include <algorithm>
#include <string>

namespace magicsq {

namespace {

void require_double_even(const BuildParams& params) {
  if (params.parity != ParityClass::DoubleEven) {
    throw ParityError("order " + std::to_string(params.order) +
                      " is not divisible by 4");
  }
}

void require_matching_order(const Square& square, const BuildParams& params) {
  if (square.order() != params.order) {
    throw ShapeError("square of order " + std::to_string(square.order()) +
                     " does not match build parameters for order " +
                     std::to_string(params.order));
  }
}

void check_construction_order(int order) {
  if (order < 1) {
    throw UnsupportedOrderError("order must be at least 1, got " +
                                std::to_string(order));
  }
  if (order % 2 != 0) {
    throw ParityError("order " + std::to_string(order) +
                      " is odd; this construction handles orders divisible "
                      "by 4");
  }
  if (order % 4 != 0) {
    throw ParityError("order " + std::to_string(order) +
                      " is single even; use the single even construction");
  }
}

void expect_value(const Square& square, int row, int col, int expected) {
  const int found = square.at(row, col);
  if (found != expected) {
    throw ConsistencyError("cell (" + std::to_string(row) + ", " +
                           std::to_string(col) + ") holds " +
                           std::to_string(found) + ", expected " +
                           std::to_string(expected));
  }
}

}  // namespace

Square fill_columns(const BuildParams& params) {
  require_double_even(params);
  const int n = params.order;
  const int m = params.half_order;
  std::vector<int> cells(static_cast<std::size_t>(n) * n);
  for (int j = 1; j <= m; ++j) {
    for (int i = 1; i <= n; ++i) {
      const int value = (j - 1) * n + i;
      cells[static_cast<std::size_t>(i - 1) * n + (j - 1)] = value;
      // Mirror column gets the complements, descending downward.
      cells[static_cast<std::size_t>(i - 1) * n + (n - j)] =
          n * n + 1 - value;
    }
  }
  return Square(n, std::move(cells));
}

std::vector<int> reversal_rows(int order) {
  if (order < 4) {
    throw UnsupportedOrderError("order must be at least 4, got " +
                                std::to_string(order));
  }
  if (order % 4 != 0) {
    throw ParityError("order " + std::to_string(order) +
                      " is not divisible by 4");
  }
  std::vector<int> rows;
  rows.reserve(order / 2);
  const int half = order / 2;
  for (int i = 1; i <= order; ++i) {
    const bool reversed = i <= half ? i % 2 == 0 : i % 2 == 1;
    if (reversed) rows.push_back(i);
  }
  return rows;
}

Square apply_row_reversals(const Square& square, const std::vector<int>& rows) {
  const int n = square.order();
  std::vector<bool> chosen(static_cast<std::size_t>(n) + 1, false);
  for (int r : rows) {
    if (r < 1 || r > n) {
      throw DomainError("row " + std::to_string(r) +
                        " is outside a square of order " + std::to_string(n));
    }
    if (chosen[static_cast<std::size_t>(r)]) {
      throw DomainError("row " + std::to_string(r) + " listed twice");
    }
    chosen[static_cast<std::size_t>(r)] = true;
  }
  std::vector<int> cells = square.cells();
  for (int r : rows) {
    auto begin = cells.begin() + static_cast<std::ptrdiff_t>(r - 1) * n;
    std::reverse(begin, begin + n);
  }
  return Square(n, std::move(cells));
}

Square innermost_interchange(const Square& square, const BuildParams& params) {
  require_double_even(params);
  require_matching_order(square, params);
  const int n = params.order;
  const int m = params.half_order;
  const int p = params.pair_count;

  expect_value(square, m + 1, m, p + m);
  expect_value(square, m + 1, m + 1, p - m + 1);
  expect_value(square, n, m, p);
  expect_value(square, n, m + 1, p + 1);

  std::vector<int> cells = square.cells();
  auto idx = [n](int row, int col) {
    return static_cast<std::size_t>(row - 1) * n + (col - 1);
  };
  std::swap(cells[idx(m + 1, m)], cells[idx(n, m)]);
  std::swap(cells[idx(m + 1, m + 1)], cells[idx(n, m + 1)]);
  return Square(n, std::move(cells));
}

DoubleEvenTrace construct_double_even(int order) {
  check_construction_order(order);
  const BuildParams params = BuildParams::for_order(order);
  const int n = params.order;
  const int m = params.half_order;

  Square stage_columns = fill_columns(params);
  std::vector<int> rows = reversal_rows(order);
  Square stage_reversed = apply_row_reversals(stage_columns, rows);
  Square final_square = innermost_interchange(stage_reversed, params);

  const MagicReport report = line_sums(final_square);
  if (!report.is_magic) {
    throw ConsistencyError("construction produced a non-magic square: " +
                           line_name(*report.first_violation) + " sums to " +
                           std::to_string(report.first_violation->sum));
  }

  return DoubleEvenTrace{
      std::move(stage_columns),
      std::move(stage_reversed),
      std::move(final_square),
      std::move(rows),
      {Cell{m + 1, m}, Cell{m + 1, m + 1}, Cell{n, m}, Cell{n, m + 1}},
  };
}

Square construct_consecutive(int order) {
  check_construction_order(order);
  const BuildParams params = BuildParams::for_order(order);
  const int n = params.order;
  const int m = params.half_order;
  const int p = params.pair_count;

  std::vector<int> cells(static_cast<std::size_t>(n) * n, 0);
  auto idx = [n](int row, int col) {
    return static_cast<std::size_t>(row - 1) * n + (col - 1);
  };

  // Lower half snakes top to bottom through the column pairs, outside in.
  // Within a pair the side alternates per row, flipping once past halfway.
  for (int stage = 1; stage <= m; ++stage) {
    for (int i = 1; i <= n; ++i) {
      const int value = (stage - 1) * n + i;
      const bool left = i <= m ? i % 2 == 1 : i % 2 == 0;
      cells[idx(i, left ? stage : n + 1 - stage)] = value;
    }
  }

  // Upper half retraces the path bottom to top, inside out, taking the side
  // the first pass skipped.
  for (int batch = 0; batch < m; ++batch) {
    const int stage = m - batch;
    for (int pos = 1; pos <= n; ++pos) {
      const int value = p + batch * n + pos;
      const int row = n + 1 - pos;
      const bool right = pos <= m ? pos % 2 == 1 : pos % 2 == 0;
      cells[idx(row, right ? n + 1 - stage : stage)] = value;
    }
  }

  return innermost_interchange(Square(n, std::move(cells)), params);
}

}  // namespace magicsq
