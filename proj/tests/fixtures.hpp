#pragma once

// Golden grids: the published 8x8 and 10x10 construction states, the same
// pipelines executed by hand for orders 4 and 6, and the classic 3x3 square.
// Frozen here independently of the library so tests cannot drift with it.

#include <vector>

#include "magicsq/single_even.hpp"
#include "magicsq/square.hpp"

namespace fixtures {

using Rows = std::vector<std::vector<int>>;

inline std::vector<int> flatten(const Rows& rows) {
  std::vector<int> cells;
  for (const auto& row : rows) cells.insert(cells.end(), row.begin(), row.end());
  return cells;
}

inline magicsq::Square square(const Rows& rows) {
  return magicsq::Square(static_cast<int>(rows.size()), flatten(rows));
}

inline magicsq::GappedSquare gapped(const Rows& rows) {
  return magicsq::GappedSquare{static_cast<int>(rows.size()), flatten(rows)};
}

// 8x8 column-fill stage.
inline magicsq::Square fig2a() {
  return square({
      {1, 9, 17, 25, 40, 48, 56, 64},
      {2, 10, 18, 26, 39, 47, 55, 63},
      {3, 11, 19, 27, 38, 46, 54, 62},
      {4, 12, 20, 28, 37, 45, 53, 61},
      {5, 13, 21, 29, 36, 44, 52, 60},
      {6, 14, 22, 30, 35, 43, 51, 59},
      {7, 15, 23, 31, 34, 42, 50, 58},
      {8, 16, 24, 32, 33, 41, 49, 57},
  });
}

// 8x8 after the row reversals, before the innermost interchange.
inline magicsq::Square reversed8() {
  return square({
      {1, 9, 17, 25, 40, 48, 56, 64},
      {63, 55, 47, 39, 26, 18, 10, 2},
      {3, 11, 19, 27, 38, 46, 54, 62},
      {61, 53, 45, 37, 28, 20, 12, 4},
      {60, 52, 44, 36, 29, 21, 13, 5},
      {6, 14, 22, 30, 35, 43, 51, 59},
      {58, 50, 42, 34, 31, 23, 15, 7},
      {8, 16, 24, 32, 33, 41, 49, 57},
  });
}

// The complete 8x8 parallel magic square.
inline magicsq::Square fig2b() {
  return square({
      {1, 9, 17, 25, 40, 48, 56, 64},
      {63, 55, 47, 39, 26, 18, 10, 2},
      {3, 11, 19, 27, 38, 46, 54, 62},
      {61, 53, 45, 37, 28, 20, 12, 4},
      {60, 52, 44, 32, 33, 21, 13, 5},
      {6, 14, 22, 30, 35, 43, 51, 59},
      {58, 50, 42, 34, 31, 23, 15, 7},
      {8, 16, 24, 36, 29, 41, 49, 57},
  });
}

// 10x10 outer fill before the row reversals; center rows empty.
inline magicsq::GappedSquare fig5a() {
  return gapped({
      {1, 9, 17, 25, 33, 68, 76, 84, 92, 100},
      {2, 10, 18, 26, 34, 67, 75, 83, 91, 99},
      {3, 11, 19, 27, 35, 66, 74, 82, 90, 98},
      {4, 12, 20, 28, 36, 65, 73, 81, 89, 97},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {5, 13, 21, 29, 37, 64, 72, 80, 88, 96},
      {6, 14, 22, 30, 38, 63, 71, 79, 87, 95},
      {7, 15, 23, 31, 39, 62, 70, 78, 86, 94},
      {8, 16, 24, 32, 40, 61, 69, 77, 85, 93},
  });
}

// 10x10 outer fill after the row reversals.
inline magicsq::GappedSquare fig5b() {
  return gapped({
      {1, 9, 17, 25, 33, 68, 76, 84, 92, 100},
      {99, 91, 83, 75, 67, 34, 26, 18, 10, 2},
      {3, 11, 19, 27, 35, 66, 74, 82, 90, 98},
      {97, 89, 81, 73, 65, 36, 28, 20, 12, 4},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
      {96, 88, 80, 72, 64, 37, 29, 21, 13, 5},
      {6, 14, 22, 30, 38, 63, 71, 79, 87, 95},
      {94, 86, 78, 70, 62, 39, 31, 23, 15, 7},
      {8, 16, 24, 32, 40, 61, 69, 77, 85, 93},
  });
}

// 10x10 center rows with the middle sequence placed and blanks complemented.
inline magicsq::CenterRows fig6a() {
  return magicsq::CenterRows{
      {60, 59, 58, 57, 56, 50, 49, 48, 47, 46},
      {41, 42, 43, 44, 45, 51, 52, 53, 54, 55},
  };
}

// 10x10 center rows after the column interchanges.
inline magicsq::CenterRows fig6b() {
  return magicsq::CenterRows{
      {60, 42, 58, 44, 56, 50, 49, 53, 47, 46},
      {41, 59, 43, 57, 45, 51, 52, 48, 54, 55},
  };
}

// The complete 10x10 mixed magic square.
inline magicsq::Square fig7() {
  return square({
      {1, 9, 17, 25, 33, 68, 76, 84, 92, 100},
      {99, 91, 83, 75, 67, 34, 26, 18, 10, 2},
      {3, 11, 19, 27, 35, 66, 74, 82, 90, 98},
      {97, 89, 81, 72, 65, 36, 29, 20, 12, 4},
      {60, 42, 58, 44, 56, 50, 49, 53, 47, 46},
      {41, 59, 43, 57, 45, 51, 52, 48, 54, 55},
      {96, 88, 80, 73, 64, 37, 28, 21, 13, 5},
      {6, 14, 22, 30, 38, 63, 71, 79, 87, 95},
      {94, 86, 78, 70, 62, 39, 31, 23, 15, 7},
      {8, 16, 24, 32, 40, 61, 69, 77, 85, 93},
  });
}

// Hand-run 4x4 pipeline: column fill, row reversals, final interchange.
inline magicsq::Square columns4() {
  return square({
      {1, 5, 12, 16},
      {2, 6, 11, 15},
      {3, 7, 10, 14},
      {4, 8, 9, 13},
  });
}

inline magicsq::Square reversed4() {
  return square({
      {1, 5, 12, 16},
      {15, 11, 6, 2},
      {14, 10, 7, 3},
      {4, 8, 9, 13},
  });
}

inline magicsq::Square final4() {
  return square({
      {1, 5, 12, 16},
      {15, 11, 6, 2},
      {14, 8, 9, 3},
      {4, 10, 7, 13},
  });
}

// Hand-run 6x6 pipeline.
inline magicsq::GappedSquare outer_columns6() {
  return gapped({
      {1, 5, 9, 28, 32, 36},
      {2, 6, 10, 27, 31, 35},
      {0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0},
      {3, 7, 11, 26, 30, 34},
      {4, 8, 12, 25, 29, 33},
  });
}

inline magicsq::GappedSquare outer6() {
  return gapped({
      {1, 5, 9, 28, 32, 36},
      {35, 31, 27, 10, 6, 2},
      {0, 0, 0, 0, 0, 0},
      {0, 0, 0, 0, 0, 0},
      {34, 30, 26, 11, 7, 3},
      {4, 8, 12, 25, 29, 33},
  });
}

inline magicsq::CenterRows center_base6() {
  return magicsq::CenterRows{
      {24, 23, 22, 18, 17, 16},
      {13, 14, 15, 19, 20, 21},
  };
}

inline magicsq::CenterRows center_final6() {
  return magicsq::CenterRows{
      {24, 14, 22, 18, 17, 16},
      {13, 23, 15, 19, 20, 21},
  };
}

inline magicsq::Square pre_fix6() {
  return square({
      {1, 5, 9, 28, 32, 36},
      {35, 31, 27, 10, 6, 2},
      {24, 14, 22, 18, 17, 16},
      {13, 23, 15, 19, 20, 21},
      {34, 30, 26, 11, 7, 3},
      {4, 8, 12, 25, 29, 33},
  });
}

inline magicsq::Square final6() {
  return square({
      {1, 5, 9, 28, 32, 36},
      {35, 30, 27, 10, 7, 2},
      {24, 14, 22, 18, 17, 16},
      {13, 23, 15, 19, 20, 21},
      {34, 31, 26, 11, 6, 3},
      {4, 8, 12, 25, 29, 33},
  });
}

// The unique 3x3 magic square, in its canonical orientation.
inline magicsq::Square lo_shu() {
  return square({
      {2, 7, 6},
      {9, 5, 1},
      {4, 3, 8},
  });
}

// A famous associated 4x4 magic square (from the 1514 engraving).
inline magicsq::Square durer() {
  return square({
      {16, 3, 2, 13},
      {5, 10, 11, 8},
      {9, 6, 7, 12},
      {4, 15, 14, 1},
  });
}

}  // namespace fixtures
