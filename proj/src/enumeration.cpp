#include "magicsq/enumeration.hpp"

#include <algorithm>
#include <chrono>
#include <string>

namespace magicsq {

namespace {

// 0-based accessor for the transform table below.
int cell_of(const std::vector<int>& cells, int n, int i, int j) {
  return cells[static_cast<std::size_t>(i) * n + j];
}

std::vector<int> transformed(const std::vector<int>& cells, int n,
                             int rotation, bool mirrored) {
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int jj = mirrored ? n - 1 - j : j;
      int v = 0;
      switch (rotation) {
        case 0:
          v = cell_of(cells, n, i, jj);
          break;
        case 1:  // quarter turn clockwise
          v = cell_of(cells, n, n - 1 - jj, i);
          break;
        case 2:
          v = cell_of(cells, n, n - 1 - i, n - 1 - jj);
          break;
        default:  // quarter turn counterclockwise
          v = cell_of(cells, n, jj, n - 1 - i);
          break;
      }
      out[static_cast<std::size_t>(i) * n + j] = v;
    }
  }
  return out;
}

// Backtracking state for one enumeration run.
class Search {
 public:
  Search(int order, bool emit, const std::function<void(const Square&)>& sink,
         std::vector<Square>& out)
      : n_(order),
        target_(magic_constant(order)),
        emit_(emit),
        sink_(sink),
        out_(out),
        cells_(static_cast<std::size_t>(order) * order, 0),
        used_(static_cast<std::size_t>(order) * order + 1, false),
        row_sum_(order, 0),
        col_sum_(order, 0) {}

  long long run() {
    place(0);
    return raw_;
  }

 private:
  void place(int index) {
    if (index == n_ * n_) {
      ++raw_;
      if (emit_) record();
      return;
    }
    const int i = index / n_;
    const int j = index % n_;

    if (j == n_ - 1) {
      try_value(i, j, static_cast<int>(target_ - row_sum_[i]), index);
    } else if (i == n_ - 1) {
      try_value(i, j, static_cast<int>(target_ - col_sum_[j]), index);
    } else {
      for (int v = 1; v <= n_ * n_; ++v) try_value(i, j, v, index);
    }
  }

  void try_value(int i, int j, int v, int index) {
    if (v < 1 || v > n_ * n_ || used_[static_cast<std::size_t>(v)]) return;

    used_[static_cast<std::size_t>(v)] = true;
    cells_[static_cast<std::size_t>(index)] = v;
    row_sum_[i] += v;
    col_sum_[j] += v;
    // Each diagonal holds one cell per row, so it is extended at most once
    // per row and has n-1-i cells open after this one.
    const bool on_main = i == j;
    const bool on_anti = i + j == n_ - 1;
    if (on_main) main_sum_ += v;
    if (on_anti) anti_sum_ += v;

    const bool ok = line_ok(row_sum_[i], n_ - 1 - j) &&
                    line_ok(col_sum_[j], n_ - 1 - i) &&
                    (!on_main || line_ok(main_sum_, n_ - 1 - i)) &&
                    (!on_anti || line_ok(anti_sum_, n_ - 1 - i));
    if (ok) place(index + 1);

    used_[static_cast<std::size_t>(v)] = false;
    cells_[static_cast<std::size_t>(index)] = 0;
    row_sum_[i] -= v;
    col_sum_[j] -= v;
    if (on_main) main_sum_ -= v;
    if (on_anti) anti_sum_ -= v;
  }

  // A line with `remaining` open cells and partial sum `sum` can still hit
  // the target only if the remaining smallest/largest unused values bracket
  // it. Exact equality once the line is complete.
  bool line_ok(long long sum, int remaining) const {
    if (remaining == 0) return sum == target_;
    if (remaining == 1) {
      const long long need = target_ - sum;
      return need >= 1 && need <= n_ * n_ &&
             !used_[static_cast<std::size_t>(need)];
    }
    long long lo = sum;
    long long hi = sum;
    int need = remaining;
    for (int v = 1; v <= n_ * n_ && need > 0; ++v) {
      if (!used_[static_cast<std::size_t>(v)]) {
        lo += v;
        --need;
      }
    }
    need = remaining;
    for (int v = n_ * n_; v >= 1 && need > 0; --v) {
      if (!used_[static_cast<std::size_t>(v)]) {
        hi += v;
        --need;
      }
    }
    return lo <= target_ && target_ <= hi;
  }

  void record() {
    Square square(n_, cells_);
    if (square == canonical_form(square)) {
      if (sink_) sink_(square);
      out_.push_back(std::move(square));
    }
  }

  int n_;
  long long target_;
  bool emit_;
  const std::function<void(const Square&)>& sink_;
  std::vector<Square>& out_;
  long long raw_ = 0;
  std::vector<int> cells_;
  std::vector<bool> used_;
  std::vector<long long> row_sum_;
  std::vector<long long> col_sum_;
  long long main_sum_ = 0;
  long long anti_sum_ = 0;
};

}  // namespace

std::array<Square, 8> dihedral_images(const Square& square) {
  const int n = square.order();
  const std::vector<int>& cells = square.cells();
  return {
      square,
      Square(n, transformed(cells, n, 1, false)),
      Square(n, transformed(cells, n, 2, false)),
      Square(n, transformed(cells, n, 3, false)),
      Square(n, transformed(cells, n, 0, true)),
      Square(n, transformed(cells, n, 1, true)),
      Square(n, transformed(cells, n, 2, true)),
      Square(n, transformed(cells, n, 3, true)),
  };
}

Square canonical_form(const Square& square) {
  std::array<Square, 8> images = dihedral_images(square);
  const Square* best = &images[0];
  for (const Square& image : images) {
    if (image.cells() < best->cells()) best = &image;
  }
  return *best;
}

EnumerationResult count_magic(
    int order, bool emit, const std::function<void(const Square&)>& emit_sink) {
  if (order < 1) {
    throw UnsupportedOrderError("order must be at least 1, got " +
                                std::to_string(order));
  }
  if (order > 4) {
    throw InfeasibleOrderError("exhaustive search stops at order 4; order " +
                               std::to_string(order) + " is out of reach");
  }

  EnumerationResult result;
  result.order = order;

  const auto start = std::chrono::steady_clock::now();
  Search search(order, emit, emit_sink, result.squares);
  result.raw_count = search.run();
  const auto stop = std::chrono::steady_clock::now();
  result.elapsed_seconds = std::chrono::duration<double>(stop - start).count();

  if (order >= 3) {
    if (result.raw_count % 8 != 0) {
      throw ConsistencyError("raw count " +
                             std::to_string(result.raw_count) +
                             " is not a multiple of 8");
    }
    result.distinct_count = result.raw_count / 8;
  } else {
    result.distinct_count = result.raw_count;
  }
  return result;
}

}  // namespace magicsq
