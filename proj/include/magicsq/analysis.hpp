#pragma once

#include <string_view>
#include <vector>

#include "magicsq/square.hpp"

namespace magicsq {

// Displacement between the two cells of a pair, reduced by the gcd of its
// components with the first nonzero component made positive, so any two
// collinear placements compare equal.
struct Direction {
  int row_step = 0;
  int col_step = 0;
  friend bool operator==(const Direction&, const Direction&) = default;
};

// Placement of one complementary pair.
struct PairGeometry {
  int value_low = 0;  // the smaller value of the pair
  Cell cell_low;
  Cell cell_high;
  Direction direction;
};

enum class MagicClass { Associated, Parallel, Mixed };

std::string_view to_string(MagicClass cls);

// One record per complementary pair (n^2/2 of them). Even orders only.
std::vector<PairGeometry> pair_geometry(const Square& square);

// True iff every complementary pair is placed symmetrically about the
// centre of the square. Also defined for odd orders, where the self-paired
// centre value is exempt.
bool is_associated(const Square& square);

// True iff all pair placements share one direction. Even orders only.
bool is_parallel(const Square& square);

// Thrown by classify when the input square is not magic.
class NotMagicError : public Error {
 public:
  NotMagicError(const std::string& what, MagicReport report)
      : Error(what), report_(std::move(report)) {}
  const MagicReport& report() const { return report_; }

 private:
  MagicReport report_;
};

// Associated if is_associated, else Parallel if is_parallel, else Mixed.
// The input must be magic and of even order.
MagicClass classify(const Square& square);

}  // namespace magicsq
