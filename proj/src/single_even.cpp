#include "magicsq/single_even.hpp"

#include <algorithm>
#include <string>

#include "magicsq/double_even.hpp"

namespace magicsq {

namespace {

void require_single_even(const BuildParams& params) {
  if (params.parity != ParityClass::SingleEven) {
    throw ParityError("order " + std::to_string(params.order) +
                      " is not single even");
  }
}

void check_construction_order(int order) {
  if (order < 1) {
    throw UnsupportedOrderError("order must be at least 1, got " +
                                std::to_string(order));
  }
  if (order % 2 != 0) {
    throw ParityError("order " + std::to_string(order) +
                      " is odd; this construction handles orders of the "
                      "form 4k + 2");
  }
  if (order == 2) {
    throw ImpossibleOrderError("no 2 by 2 magic square exists");
  }
  if (order % 4 == 0) {
    throw ParityError("order " + std::to_string(order) +
                      " is double even; use the double even construction");
  }
}

std::size_t cell_index(int order, int row, int col) {
  return static_cast<std::size_t>(row - 1) * order + (col - 1);
}

}  // namespace

int GappedSquare::at(int row, int col) const {
  if (row < 1 || row > order || col < 1 || col > order) {
    throw DomainError("cell (" + std::to_string(row) + ", " +
                      std::to_string(col) + ") is outside a square of order " +
                      std::to_string(order));
  }
  return cells[cell_index(order, row, col)];
}

ValueRange middle_numbers(int order) {
  check_construction_order(order);
  return ValueRange{(order * order - 2 * order) / 2 + 1,
                    (order * order + 2 * order) / 2};
}

CenterSequence CenterSequence::for_order(int order) {
  check_construction_order(order);
  CenterSequence sequence;
  sequence.order = order;
  sequence.terms.reserve(order);
  const int first = (order * order - 2 * order) / 2 + 1;
  for (int k = 0; k < order; ++k) sequence.terms.push_back(first + k);
  return sequence;
}

GappedSquare outer_columns(const BuildParams& params) {
  require_single_even(params);
  const int n = params.order;
  const int m = params.half_order;
  GappedSquare grid{n, std::vector<int>(static_cast<std::size_t>(n) * n, 0)};
  for (int outer = 1; outer <= n - 2; ++outer) {
    // Outer row indices skip the two centre rows.
    const int row = outer <= m - 1 ? outer : outer + 2;
    for (int j = 1; j <= m; ++j) {
      grid.cells[cell_index(n, row, j)] = (j - 1) * (n - 2) + outer;
      grid.cells[cell_index(n, row, n + 1 - j)] =
          n * n - (j - 1) * (n - 2) - outer + 1;
    }
  }
  return grid;
}

GappedSquare fill_outer(const BuildParams& params) {
  GappedSquare grid = outer_columns(params);
  const int n = params.order;
  const int m = params.half_order;
  for (int outer : reversal_rows(n - 2)) {
    const int row = outer <= m - 1 ? outer : outer + 2;
    auto begin = grid.cells.begin() + static_cast<std::ptrdiff_t>(
                                          cell_index(n, row, 1));
    std::reverse(begin, begin + n);
  }
  return grid;
}

CenterRows center_rows_base(const CenterSequence& sequence) {
  const int n = sequence.order;
  check_construction_order(n);
  if (static_cast<int>(sequence.terms.size()) != n) {
    throw ShapeError("centre sequence for order " + std::to_string(n) +
                     " needs " + std::to_string(n) + " terms, got " +
                     std::to_string(sequence.terms.size()));
  }
  const int first = (n * n - 2 * n) / 2 + 1;
  for (int k = 0; k < n; ++k) {
    if (sequence.terms[static_cast<std::size_t>(k)] != first + k) {
      throw ConsistencyError("centre sequence must run " +
                             std::to_string(first) + ".." +
                             std::to_string(first + n - 1) + " consecutively");
    }
  }

  const int m = n / 2;
  auto term = [&sequence](int k) {  // 1-based
    return sequence.terms[static_cast<std::size_t>(k - 1)];
  };
  CenterRows rows{std::vector<int>(n, 0), std::vector<int>(n, 0)};
  // First half of the sequence fills the left of the lower row, second half
  // fills the right of the upper row in reverse.
  for (int c = 1; c <= m; ++c) rows.lower[c - 1] = term(c);
  for (int c = m + 1; c <= n; ++c) rows.upper[c - 1] = term(n + m + 1 - c);
  for (int c = 1; c <= m; ++c) rows.upper[c - 1] = complement(rows.lower[c - 1], n);
  for (int c = m + 1; c <= n; ++c) rows.lower[c - 1] = complement(rows.upper[c - 1], n);
  return rows;
}

std::vector<int> interchange_columns(const BuildParams& params) {
  require_single_even(params);
  const int n = params.order;
  const int m = params.half_order;
  std::vector<int> columns;
  columns.reserve(m - 2);
  for (int c = 2; c <= m - 1; c += 2) columns.push_back(c);
  for (int c = m + 3; c <= n - 2; c += 2) columns.push_back(c);
  return columns;
}

CenterRows center_interchanges(const CenterRows& rows, const BuildParams& params) {
  require_single_even(params);
  const int n = params.order;
  if (static_cast<int>(rows.upper.size()) != n ||
      static_cast<int>(rows.lower.size()) != n) {
    throw ShapeError("centre rows for order " + std::to_string(n) +
                     " need " + std::to_string(n) + " cells each");
  }
  CenterRows swapped = rows;
  for (int c : interchange_columns(params)) {
    std::swap(swapped.upper[static_cast<std::size_t>(c - 1)],
              swapped.lower[static_cast<std::size_t>(c - 1)]);
  }
  return swapped;
}

Square with_center_rows(const GappedSquare& outer, const CenterRows& rows) {
  const int n = outer.order;
  check_construction_order(n);
  if (static_cast<int>(outer.cells.size()) != n * n) {
    throw ShapeError("gapped square of order " + std::to_string(n) +
                     " needs " + std::to_string(n * n) + " cells, got " +
                     std::to_string(outer.cells.size()));
  }
  if (static_cast<int>(rows.upper.size()) != n ||
      static_cast<int>(rows.lower.size()) != n) {
    throw ShapeError("centre rows for order " + std::to_string(n) +
                     " need " + std::to_string(n) + " cells each");
  }
  const int m = n / 2;
  std::vector<int> cells = outer.cells;
  for (int c = 1; c <= n; ++c) {
    for (int row : {m, m + 1}) {
      if (cells[cell_index(n, row, c)] != 0) {
        throw ConsistencyError("centre cell (" + std::to_string(row) + ", " +
                               std::to_string(c) + ") is already filled");
      }
    }
    cells[cell_index(n, m, c)] = rows.upper[static_cast<std::size_t>(c - 1)];
    cells[cell_index(n, m + 1, c)] = rows.lower[static_cast<std::size_t>(c - 1)];
  }
  return Square(n, std::move(cells));
}

Square diagonal_fix(const Square& square, const BuildParams& params) {
  require_single_even(params);
  if (square.order() != params.order) {
    throw ShapeError("square of order " + std::to_string(square.order()) +
                     " does not match build parameters for order " +
                     std::to_string(params.order));
  }
  const int n = params.order;
  const int m = params.half_order;
  const int high_1 = n * n / 2 + 5 * n / 2 - 3;
  const int low_1 = n * n / 2 - 5 * n / 2 + 4;
  const int high_2 = high_1 + 1;
  const int low_2 = low_1 - 1;

  const int upper_row = m - 1;
  const int lower_row = m + 2;
  const int left_col = m - 1;
  const int right_col = m + 2;

  const struct {
    int row, col, value;
  } expected[] = {
      {upper_row, left_col, high_2},
      {upper_row, right_col, low_2},
      {lower_row, left_col, high_1},
      {lower_row, right_col, low_1},
  };
  for (const auto& cell : expected) {
    const int found = square.at(cell.row, cell.col);
    if (found != cell.value) {
      throw ConsistencyError("cell (" + std::to_string(cell.row) + ", " +
                             std::to_string(cell.col) + ") holds " +
                             std::to_string(found) + ", expected " +
                             std::to_string(cell.value));
    }
  }

  std::vector<int> cells = square.cells();
  for (int col : {left_col, right_col}) {
    std::swap(cells[cell_index(n, upper_row, col)],
              cells[cell_index(n, lower_row, col)]);
  }
  return Square(n, std::move(cells));
}

SingleEvenTrace construct_single_even(int order) {
  check_construction_order(order);
  const BuildParams params = BuildParams::for_order(order);
  const int m = params.half_order;

  GappedSquare stage_outer = fill_outer(params);
  CenterRows base = center_rows_base(CenterSequence::for_order(order));
  CenterRows center_final = center_interchanges(base, params);
  Square pre_fix = with_center_rows(stage_outer, center_final);
  Square final_square = diagonal_fix(pre_fix, params);

  const MagicReport report = line_sums(final_square);
  if (!report.is_magic) {
    throw ConsistencyError("construction produced a non-magic square: " +
                           line_name(*report.first_violation) + " sums to " +
                           std::to_string(report.first_violation->sum));
  }

  return SingleEvenTrace{
      std::move(stage_outer),
      std::move(base),
      std::move(center_final),
      std::move(pre_fix),
      std::move(final_square),
      {Cell{m - 1, m - 1}, Cell{m - 1, m + 2}, Cell{m + 2, m - 1},
       Cell{m + 2, m + 2}},
  };
}

}  // namespace magicsq
