#include "magicsq/analysis.hpp"

#include <numeric>
#include <string>

namespace magicsq {

namespace {

// positions[v] is the cell holding value v (1-based values).
std::vector<Cell> position_index(const Square& square) {
  const int n = square.order();
  std::vector<Cell> positions(static_cast<std::size_t>(n) * n + 1);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      positions[static_cast<std::size_t>(square.at(i, j))] = Cell{i, j};
    }
  }
  return positions;
}

Direction normalized_direction(const Cell& from, const Cell& to) {
  int dr = to.row - from.row;
  int dc = to.col - from.col;
  const int g = std::gcd(dr, dc);
  dr /= g;
  dc /= g;
  if (dr < 0 || (dr == 0 && dc < 0)) {
    dr = -dr;
    dc = -dc;
  }
  return Direction{dr, dc};
}

void require_even(const Square& square) {
  if (square.order() % 2 != 0) {
    throw UnsupportedOrderError(
        "order " + std::to_string(square.order()) +
        " is odd; pair geometry needs an even order");
  }
}

}  // namespace

std::string_view to_string(MagicClass cls) {
  switch (cls) {
    case MagicClass::Associated:
      return "associated";
    case MagicClass::Parallel:
      return "parallel";
    case MagicClass::Mixed:
      return "mixed";
  }
  return "unknown";
}

std::vector<PairGeometry> pair_geometry(const Square& square) {
  require_even(square);
  const int n = square.order();
  const int total = n * n;
  const std::vector<Cell> positions = position_index(square);

  std::vector<PairGeometry> pairs;
  pairs.reserve(static_cast<std::size_t>(total) / 2);
  for (int v = 1; v <= total / 2; ++v) {
    const Cell low = positions[static_cast<std::size_t>(v)];
    const Cell high = positions[static_cast<std::size_t>(total + 1 - v)];
    pairs.push_back(PairGeometry{v, low, high, normalized_direction(low, high)});
  }
  return pairs;
}

bool is_associated(const Square& square) {
  const int n = square.order();
  const int total = n * n;
  const std::vector<Cell> positions = position_index(square);
  // For odd orders the centre value pairs with itself and is exempt.
  for (int v = 1; v <= total / 2; ++v) {
    const Cell low = positions[static_cast<std::size_t>(v)];
    const Cell high = positions[static_cast<std::size_t>(total + 1 - v)];
    if (low.row + high.row != n + 1 || low.col + high.col != n + 1) {
      return false;
    }
  }
  return true;
}

bool is_parallel(const Square& square) {
  const std::vector<PairGeometry> pairs = pair_geometry(square);
  for (const PairGeometry& pair : pairs) {
    if (!(pair.direction == pairs.front().direction)) return false;
  }
  return true;
}

MagicClass classify(const Square& square) {
  if (square.order() % 2 != 0) {
    throw UnsupportedOrderError("order " + std::to_string(square.order()) +
                                " is odd; classification covers even orders");
  }
  const MagicReport report = line_sums(square);
  if (!report.is_magic) {
    throw NotMagicError("square is not magic: " +
                            line_name(*report.first_violation) + " sums to " +
                            std::to_string(report.first_violation->sum) +
                            ", expected " +
                            std::to_string(report.magic_constant),
                        report);
  }
  if (is_associated(square)) return MagicClass::Associated;
  if (is_parallel(square)) return MagicClass::Parallel;
  return MagicClass::Mixed;
}

}  // namespace magicsq
