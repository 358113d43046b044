#pragma once

#include <array>
#include <vector>

#include "magicsq/square.hpp"

namespace magicsq {

// The three stages of the double even pipeline, kept as first-class values
// so intermediate-state claims can be asserted directly.
struct DoubleEvenTrace {
  Square stage_columns;   // after the column fill
  Square stage_reversed;  // after the row reversals
  Square final;           // after the innermost interchange
  std::vector<int> reversed_rows;
  std::array<Cell, 4> swapped_cells;
};

// Fills column j (j <= n/2) with (j-1)n+1 .. jn top to bottom and the
// mirror column n+1-j with the complements, descending downward.
// Requires double even params.
Square fill_columns(const BuildParams& params);

// Rows whose contents get reversed: even rows in the top half, odd rows in
// the bottom half. Requires n divisible by 4.
std::vector<int> reversal_rows(int order);

// Reverses each listed row left-to-right; other rows are untouched.
Square apply_row_reversals(const Square& square, const std::vector<int>& rows);

// Exchanges the complementary pair at cells (m+1, m), (m+1, m+1) with the
// pair at (n, m), (n, m+1). Raises the main diagonal sum by n/2 and lowers
// the anti-diagonal by the same amount. The input must carry the exact
// post-reversal values at those four cells; anything else is rule drift and
// throws ConsistencyError.
Square innermost_interchange(const Square& square, const BuildParams& params);

// Runs the full pipeline for n divisible by 4 (n >= 4) and verifies the
// result is magic before returning.
DoubleEvenTrace construct_double_even(int order);

// Serpentine restatement of the same construction: 1..n^2/2 snake down the
// column pairs from the outside in, alternating sides with a pause at each
// half stage; the upper half of the values retraces the path bottom-to-top
// moving back out; then the same innermost interchange. Produces the exact
// same square as construct_double_even.
Square construct_consecutive(int order);

}  // namespace magicsq
