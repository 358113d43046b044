#pragma once

#include <array>
#include <vector>

#include "magicsq/square.hpp"

namespace magicsq {

// Inclusive range of cell values.
struct ValueRange {
  int first = 0;
  int last = 0;
  int count() const { return last - first + 1; }
  bool contains(int value) const { return value >= first && value <= last; }
  friend bool operator==(const ValueRange&, const ValueRange&) = default;
};

// The n consecutive values (n^2-2n)/2+1 .. n^2/2 placed explicitly in the
// centre rows; together with their complements they make up the middle 2n
// numbers withheld from the outer fill.
struct CenterSequence {
  int order = 0;
  std::vector<int> terms;

  static CenterSequence for_order(int order);
};

// Outer-fill state: the two centre rows are still empty (cell value 0).
struct GappedSquare {
  int order = 0;
  std::vector<int> cells;  // row-major, 0 marks an empty cell

  int at(int row, int col) const;
  friend bool operator==(const GappedSquare&, const GappedSquare&) = default;
};

// The two centre rows, row n/2 on top of row n/2+1, each of length n.
struct CenterRows {
  std::vector<int> upper;
  std::vector<int> lower;
  friend bool operator==(const CenterRows&, const CenterRows&) = default;
};

struct SingleEvenTrace {
  GappedSquare stage_outer;        // outer rows filled and reversed
  CenterRows stage_center_base;    // sequence placed, blanks complement-filled
  CenterRows stage_center_final;   // after the column-wise interchanges
  Square pre_fix;                  // assembled, diagonals still off by +-2
  Square final;
  std::array<Cell, 4> fix_cells;
};

// The middle 2n numbers (n^2-2n)/2+1 .. (n^2+2n)/2, forming n complementary
// pairs. Requires a single even order (n = 2 mod 4, n >= 6).
ValueRange middle_numbers(int order);

// Column-wise fill of the n-2 outer rows: left columns 1..m take
// 1..(n^2-2n)/2 ascending, right columns n down to m+1 take n^2 down to
// (n^2+2n)/2+1. Centre rows stay empty.
GappedSquare outer_columns(const BuildParams& params);

// outer_columns followed by the double even row-reversal rule applied under
// outer-row indexing 1..n-2.
GappedSquare fill_outer(const BuildParams& params);

// Places a_1..a_m in cells 1..m of the lower centre row and a_n..a_{m+1} in
// cells m+1..n of the upper centre row; every blank cell takes the
// complement of the value in the other centre row of the same column.
CenterRows center_rows_base(const CenterSequence& sequence);

// Columns whose two centre cells get swapped: 2, 4, ..., m-1 and then
// m+3, m+5, ..., n-2. Exactly m-2 columns; just column 2 when m = 3.
std::vector<int> interchange_columns(const BuildParams& params);

// Applies the column-wise swaps; afterwards both centre row sums equal the
// magic constant.
CenterRows center_interchanges(const CenterRows& rows, const BuildParams& params);

// Splices the centre rows into the gapped square.
Square with_center_rows(const GappedSquare& outer, const CenterRows& rows);

// Exchanges the complementary pairs (n^2/2+5n/2-3, n^2/2-5n/2+4) and
// (n^2/2+5n/2-2, n^2/2-5n/2+3) between rows n/2-1 and n/2+2. The pairs are
// located by value and must sit in columns m-1 and m+2; the swap moves each
// diagonal sum from magic+-2 to magic without touching row or column sums.
Square diagonal_fix(const Square& square, const BuildParams& params);

// Runs the full pipeline for n = 2 mod 4 (n >= 6) and verifies the result
// is magic before returning.
SingleEvenTrace construct_single_even(int order);

}  // namespace magicsq
