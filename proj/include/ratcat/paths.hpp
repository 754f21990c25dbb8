#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "ratcat/error.hpp"

namespace ratcat {

// Smallest integer >= num/den for num >= 0, den > 0.
constexpr std::int64_t ceil_div(std::int64_t num, std::int64_t den) noexcept {
  return (num + den - 1) / den;
}

/// Lattice cell (column, row), both 1-indexed; rows count bottom to top.
struct Cell {
  int column = 1;
  int row = 1;

  friend bool operator==(const Cell&, const Cell&) = default;
};

class DyckPath;
DyckPath make_path(int m, int n, std::vector<int> east_heights);

/**
 * A north/east lattice path from (0,0) to (m,n) that stays weakly above the
 * rectangle diagonal y = (n/m) x, with gcd(m,n) = 1.
 *
 * Stored as east-step heights: y_a is the number of north steps taken before
 * the a-th east step. Instances only come out of make_path / parse_path, so
 * every DyckPath satisfies
 *
 *     ceil(a n / m) <= y_a <= y_{a+1} <= n.
 */
class DyckPath {
 public:
  int m() const noexcept { return m_; }
  int n() const noexcept { return n_; }
  std::span<const int> east_heights() const noexcept { return heights_; }

  // Height of column a (1-indexed).
  int height(int column) const { return heights_.at(static_cast<std::size_t>(column - 1)); }

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend bool operator<(const DyckPath& lhs, const DyckPath& rhs) {
    return std::tie(lhs.m_, lhs.n_, lhs.heights_) < std::tie(rhs.m_, rhs.n_, rhs.heights_);
  }

 private:
  DyckPath(int m, int n, std::vector<int> heights)
      : m_(m), n_(n), heights_(std::move(heights)) {}

  friend DyckPath make_path(int m, int n, std::vector<int> east_heights);

  int m_;
  int n_;
  std::vector<int> heights_;
};

inline void require_dimensions(int m, int n) {
  if (m < 1 || n < 1) {
    throw Error(ErrorKind::BadDimensions,
                "m and n must be positive, got (" + std::to_string(m) + "," + std::to_string(n) + ")");
  }
  if (std::gcd(m, n) != 1) {
    throw Error(ErrorKind::NotCoprime,
                "gcd(" + std::to_string(m) + "," + std::to_string(n) + ") != 1");
  }
}

// Least admissible height of column a.
inline int min_height(int m, int n, int column) {
  return static_cast<int>(ceil_div(static_cast<std::int64_t>(column) * n, m));
}

inline DyckPath make_path(int m, int n, std::vector<int> east_heights) {
  require_dimensions(m, n);
  if (east_heights.size() != static_cast<std::size_t>(m)) {
    throw Error(ErrorKind::BadLength, "expected " + std::to_string(m) + " east heights, got " +
                                          std::to_string(east_heights.size()));
  }
  int previous = 0;
  for (int a = 1; a <= m; ++a) {
    const int y = east_heights[static_cast<std::size_t>(a - 1)];
    if (y < previous || y > n) {
      throw Error(ErrorKind::NotMonotone,
                  "height " + std::to_string(y) + " at column " + std::to_string(a));
    }
    const int floor_height = min_height(m, n, a);
    if (y < floor_height) {
      throw Error(ErrorKind::BelowDiagonal, "column " + std::to_string(a) + " has height " +
                                                std::to_string(y) + " < " +
                                                std::to_string(floor_height));
    }
    previous = y;
  }
  return DyckPath(m, n, std::move(east_heights));
}

inline DyckPath parse_path(std::string_view steps) {
  std::vector<int> heights;
  int north = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const char c = steps[i];
    if (c == 'N') {
      ++north;
    } else if (c == 'E') {
      heights.push_back(north);
    } else {
      throw Error(ErrorKind::BadCharacter,
                  "unexpected '" + std::string(1, c) + "' at offset " + std::to_string(i));
    }
  }
  const int m = static_cast<int>(heights.size());
  return make_path(m, north, std::move(heights));
}

inline std::string render_path(const DyckPath& path) {
  std::string out;
  out.reserve(static_cast<std::size_t>(path.m() + path.n()));
  int y = 0;
  for (int h : path.east_heights()) {
    out.append(static_cast<std::size_t>(h - y), 'N');
    out.push_back('E');
    y = h;
  }
  out.append(static_cast<std::size_t>(path.n() - y), 'N');
  return out;
}

/**
 * Visits every (m,n)-Dyck path once, in lexicographic order of east heights.
 * The visitor receives a const DyckPath&.
 */
template <class Visitor>
void for_each_path(int m, int n, Visitor&& visit) {
  require_dimensions(m, n);
  std::vector<int> floors(static_cast<std::size_t>(m));
  for (int a = 1; a <= m; ++a) floors[static_cast<std::size_t>(a - 1)] = min_height(m, n, a);

  std::vector<int> heights(floors);
  for (std::size_t a = 1; a < heights.size(); ++a) heights[a] = std::max(heights[a], heights[a - 1]);

  const auto last = static_cast<std::ptrdiff_t>(m) - 1;
  while (true) {
    visit(make_path(m, n, heights));

    // Advance to the lexicographic successor.
    std::ptrdiff_t a = last;
    while (a >= 0 && heights[static_cast<std::size_t>(a)] == n) --a;
    if (a < 0) return;
    ++heights[static_cast<std::size_t>(a)];
    for (auto b = static_cast<std::size_t>(a) + 1; b < heights.size(); ++b) {
      heights[b] = std::max(heights[b - 1], floors[b]);
    }
  }
}

inline std::vector<DyckPath> enumerate_paths(int m, int n) {
  std::vector<DyckPath> out;
  for_each_path(m, n, [&](const DyckPath& p) { out.push_back(p); });
  return out;
}

/// (1/(m+n)) * binomial(m+n, m): the number of (m,n)-Dyck paths for coprime m, n.
inline std::uint64_t rational_catalan_number(int m, int n) {
  require_dimensions(m, n);
  // binom(total, i) = binom(total, i - 1) * (total - k + i) / i, kept exact by
  // cancelling gcd(binom, i) first (i / g then divides the new factor).
  std::uint64_t binom = 1;
  const std::uint64_t total = static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(n);
  const std::uint64_t k = static_cast<std::uint64_t>(std::min(m, n));
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t g = std::gcd(binom, i);
    const std::uint64_t factor = (total - k + i) / (i / g);
    if (__builtin_mul_overflow(binom / g, factor, &binom)) {
      throw Error(ErrorKind::CoefficientOverflow, "binomial(" + std::to_string(total) + "," + std::to_string(k) + ")");
    }
  }
  return binom / total;
}

/// Column counts of the English Ferrers diagram lying above a path.
struct FerrersShape {
  int rows = 0;
  std::vector<int> column_counts;

  bool contains(Cell x) const noexcept {
    if (x.column < 1 || x.column > static_cast<int>(column_counts.size())) return false;
    if (x.row < 1 || x.row > rows) return false;
    return x.row > rows - column_counts[static_cast<std::size_t>(x.column - 1)];
  }

  int size() const noexcept {
    return std::accumulate(column_counts.begin(), column_counts.end(), 0);
  }

  // Cells column by column, bottom to top within each column.
  std::vector<Cell> cells() const {
    std::vector<Cell> out;
    for (std::size_t a = 0; a < column_counts.size(); ++a) {
      for (int b = rows - column_counts[a] + 1; b <= rows; ++b) {
        out.push_back(Cell{static_cast<int>(a) + 1, b});
      }
    }
    return out;
  }

  friend bool operator==(const FerrersShape&, const FerrersShape&) = default;
};

inline FerrersShape cells_above(const DyckPath& path) {
  FerrersShape shape;
  shape.rows = path.n();
  shape.column_counts.reserve(static_cast<std::size_t>(path.m()));
  for (int h : path.east_heights()) shape.column_counts.push_back(path.n() - h);
  return shape;
}

namespace detail {

inline void require_above(const DyckPath& path, Cell x) {
  if (x.column < 1 || x.column > path.m() || x.row < 1 || x.row > path.n()) {
    throw Error(ErrorKind::OutOfBounds, "cell (" + std::to_string(x.column) + "," +
                                            std::to_string(x.row) + ")");
  }
  if (x.row <= path.height(x.column)) {
    throw Error(ErrorKind::CellNotAboveThePath, "cell (" + std::to_string(x.column) + "," +
                                                    std::to_string(x.row) + ")");
  }
}

}  // namespace detail

/// Shape cells strictly east of x in its row.
inline int arm(const DyckPath& path, Cell x) {
  detail::require_above(path, x);
  int count = 0;
  for (int a = x.column + 1; a <= path.m() && path.height(a) < x.row; ++a) ++count;
  return count;
}

/// Shape cells strictly south of x in its column.
inline int leg(const DyckPath& path, Cell x) {
  detail::require_above(path, x);
  return x.row - path.height(x.column) - 1;
}

/// Reflection across the rectangle diagonal: the (n,m)-path whose step word is
/// the reversed step word with N and E exchanged.
inline DyckPath transpose(const DyckPath& path) {
  std::string steps = render_path(path);
  std::reverse(steps.begin(), steps.end());
  for (char& c : steps) c = (c == 'N') ? 'E' : 'N';
  return parse_path(steps);
}

}  // namespace ratcat
