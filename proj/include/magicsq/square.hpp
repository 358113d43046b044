#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magicsq/errors.hpp"

namespace magicsq {

// 1-based grid coordinate (row 1 is the top row, column 1 the leftmost).
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

// An n by n arrangement of the numbers 1..n^2, stored row-major.
// Validated on construction and immutable afterwards, so values can be
// shared freely (including across threads) and pipeline stages snapshot
// cheaply.
class Square {
 public:
  // Throws ShapeError if values.size() != order^2 and PrimitivityError if
  // the values are not a permutation of 1..order^2.
  Square(int order, std::vector<int> values);

  int order() const { return order_; }
  // 1-based access; throws on out-of-range coordinates.
  int at(int row, int col) const;
  const std::vector<int>& cells() const { return cells_; }

  friend bool operator==(const Square&, const Square&) = default;

 private:
  int order_;
  std::vector<int> cells_;
};

// The common line sum n(n^2 + 1)/2.
long long magic_constant(int order);

// The value paired with `value`, i.e. n^2 + 1 - value. An involution.
int complement(int value, int order);

// The k with a + b = n^2 + 1 + k; k = 0 means a and b are complements.
int pair_kind(int a, int b, int order);

enum class ParityClass { DoubleEven, SingleEven };

// Quantities shared by both even-order constructions.
struct BuildParams {
  int order = 0;
  int half_order = 0;  // n/2
  int pair_count = 0;  // n^2/2, also the number of complementary pairs
  ParityClass parity = ParityClass::DoubleEven;

  // Classifies an even order >= 4. Throws UnsupportedOrderError for orders
  // below 1 or odd, ImpossibleOrderError for order 2.
  static BuildParams for_order(int order);
};

enum class LineKind { Row, Column, MainDiagonal, AntiDiagonal };

struct LineRef {
  LineKind kind = LineKind::Row;
  int index = 0;  // 1-based for rows and columns, 0 for the diagonals
  long long sum = 0;
};

// "row 3", "column 1", "main diagonal", ...
std::string line_name(const LineRef& line);

struct MagicReport {
  long long magic_constant = 0;
  std::vector<long long> row_sums;
  std::vector<long long> col_sums;
  long long main_diag_sum = 0;
  long long anti_diag_sum = 0;
  bool is_magic = false;
  // First failing line in the fixed order rows 1..n, columns 1..n,
  // main diagonal, anti-diagonal; empty when magic.
  std::optional<LineRef> first_violation;
};

// Computes all 2n+2 line sums and the magic verdict.
MagicReport line_sums(const Square& square);

}  // namespace magicsq
