#pragma once

#include <array>
#include <functional>
#include <vector>

#include "magicsq/square.hpp"

namespace magicsq {

// The 8 dihedral transforms of the square: 4 rotations, each plain and
// mirrored. images[0] is the square itself.
std::array<Square, 8> dihedral_images(const Square& square);

// Lexicographically smallest (row-major) of the 8 dihedral images.
// Idempotent; identical for any two squares related by rotation/reflection.
Square canonical_form(const Square& square);

struct EnumerationResult {
  int order = 0;
  long long raw_count = 0;       // reflections and rotations counted separately
  long long distinct_count = 0;  // up to the 8 dihedral symmetries
  double elapsed_seconds = 0.0;
  std::vector<Square> squares;   // canonical representatives, when emitting
};

// Exhaustive deterministic count of magic squares of order n <= 4 by
// backtracking: cells filled row-major, the last cell of each row forced by
// the row sum, partial lines pruned against what the unused values can
// still reach. With emit, each square that equals its own canonical form is
// recorded (and handed to emit_sink if given) in search order.
EnumerationResult count_magic(
    int order, bool emit = false,
    const std::function<void(const Square&)>& emit_sink = {});

}  // namespace magicsq
