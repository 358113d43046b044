#include "magicsq/square.hpp"

#include <algorithm>

namespace magicsq {

namespace {

// Largest order whose cell values still fit in an int.
constexpr int kMaxOrder = 46340;

void check_order(int order) {
  if (order < 1) {
    throw UnsupportedOrderError("order must be at least 1, got " +
                                std::to_string(order));
  }
  if (order > kMaxOrder) {
    throw UnsupportedOrderError("order " + std::to_string(order) +
                                " exceeds the supported maximum of " +
                                std::to_string(kMaxOrder));
  }
}

}  // namespace

Square::Square(int order, std::vector<int> values)
    : order_(order), cells_(std::move(values)) {
  check_order(order_);
  const std::size_t expected = static_cast<std::size_t>(order_) * order_;
  if (cells_.size() != expected) {
    throw ShapeError("order " + std::to_string(order_) + " needs " +
                     std::to_string(expected) + " cells, got " +
                     std::to_string(cells_.size()));
  }
  std::vector<bool> seen(expected + 1, false);
  for (int v : cells_) {
    if (v < 1 || static_cast<std::size_t>(v) > expected) {
      throw PrimitivityError("value " + std::to_string(v) +
                                 " is outside 1.." + std::to_string(expected),
                             v);
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw PrimitivityError("duplicate value " + std::to_string(v), v);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

int Square::at(int row, int col) const {
  if (row < 1 || row > order_ || col < 1 || col > order_) {
    throw DomainError("cell (" + std::to_string(row) + ", " +
                      std::to_string(col) + ") is outside a square of order " +
                      std::to_string(order_));
  }
  return cells_[static_cast<std::size_t>(row - 1) * order_ + (col - 1)];
}

long long magic_constant(int order) {
  check_order(order);
  const long long n = order;
  return n * (n * n + 1) / 2;
}

int complement(int value, int order) {
  check_order(order);
  const int total = order * order;
  if (value < 1 || value > total) {
    throw DomainError("value " + std::to_string(value) + " is outside 1.." +
                      std::to_string(total));
  }
  return total + 1 - value;
}

int pair_kind(int a, int b, int order) {
  check_order(order);
  const int total = order * order;
  for (int v : {a, b}) {
    if (v < 1 || v > total) {
      throw DomainError("value " + std::to_string(v) + " is outside 1.." +
                        std::to_string(total));
    }
  }
  return a + b - (total + 1);
}

BuildParams BuildParams::for_order(int order) {
  check_order(order);
  if (order % 2 != 0) {
    throw UnsupportedOrderError(
        "order " + std::to_string(order) +
        " is odd; only even orders have a construction here");
  }
  if (order == 2) {
    throw ImpossibleOrderError("no 2 by 2 magic square exists");
  }
  BuildParams params;
  params.order = order;
  params.half_order = order / 2;
  params.pair_count = order * order / 2;
  params.parity =
      order % 4 == 0 ? ParityClass::DoubleEven : ParityClass::SingleEven;
  return params;
}

std::string line_name(const LineRef& line) {
  switch (line.kind) {
    case LineKind::Row:
      return "row " + std::to_string(line.index);
    case LineKind::Column:
      return "column " + std::to_string(line.index);
    case LineKind::MainDiagonal:
      return "main diagonal";
    case LineKind::AntiDiagonal:
      return "anti-diagonal";
  }
  return "line";
}

MagicReport line_sums(const Square& square) {
  const int n = square.order();
  const auto& cells = square.cells();

  MagicReport report;
  report.magic_constant = magic_constant(n);
  report.row_sums.assign(n, 0);
  report.col_sums.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int v = cells[static_cast<std::size_t>(i) * n + j];
      report.row_sums[i] += v;
      report.col_sums[j] += v;
      if (i == j) report.main_diag_sum += v;
      if (i + j == n - 1) report.anti_diag_sum += v;
    }
  }

  const long long target = report.magic_constant;
  for (int i = 0; i < n && !report.first_violation; ++i) {
    if (report.row_sums[i] != target) {
      report.first_violation =
          LineRef{LineKind::Row, i + 1, report.row_sums[i]};
    }
  }
  for (int j = 0; j < n && !report.first_violation; ++j) {
    if (report.col_sums[j] != target) {
      report.first_violation =
          LineRef{LineKind::Column, j + 1, report.col_sums[j]};
    }
  }
  if (!report.first_violation && report.main_diag_sum != target) {
    report.first_violation =
        LineRef{LineKind::MainDiagonal, 0, report.main_diag_sum};
  }
  if (!report.first_violation && report.anti_diag_sum != target) {
    report.first_violation =
        LineRef{LineKind::AntiDiagonal, 0, report.anti_diag_sum};
  }
  report.is_magic = !report.first_violation.has_value();
  return report;
}

}  // namespace magicsq
