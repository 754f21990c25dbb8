#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <tuple>

#include "ratcat/paths.hpp"
#include "ratcat/rank_words.hpp"

namespace ratcat {

/// Full cells strictly between the path and the diagonal.
inline int area(const DyckPath& path) {
  int total = 0;
  for (int a = 1; a <= path.m(); ++a) total += path.height(a) - min_height(path.m(), path.n(), a);
  return total;
}

/**
 * Does a shape cell with this arm and leg satisfy
 *
 *     arm / (leg + 1) < m / n < (arm + 1) / leg ?
 *
 * Exact integer cross-multiplication; leg = 0 makes the right bound infinite.
 */
constexpr bool satisfies_dinv(std::int64_t arm_length, std::int64_t leg_length, std::int64_t m,
                              std::int64_t n) noexcept {
  const bool left = arm_length * n < m * (leg_length + 1);
  const bool right = leg_length == 0 || m * leg_length < n * (arm_length + 1);
  return left && right;
}

inline int dinv(const DyckPath& path) {
  int total = 0;
  for (const Cell& x : cells_above(path).cells()) {
    if (satisfies_dinv(arm(path, x), leg(path, x), path.m(), path.n())) ++total;
  }
  return total;
}

inline int skips(const DyckPath& path) { return count_skips(mark_from_path(path)); }

struct StatTriple {
  int area = 0;
  int skips = 0;
  int dinv = 0;

  friend bool operator==(const StatTriple&, const StatTriple&) = default;
  friend bool operator<(const StatTriple& l, const StatTriple& r) {
    return std::tie(l.area, l.skips, l.dinv) < std::tie(r.area, r.skips, r.dinv);
  }
};

inline StatTriple stat_triple(const DyckPath& path) {
  require_three_columns(path);
  return StatTriple{area(path), skips(path), dinv(path)};
}

enum class CellLabel { Contributes, Case1, Case2 };

constexpr std::string_view to_string(CellLabel label) noexcept {
  switch (label) {
    case CellLabel::Contributes: return "Contributes";
    case CellLabel::Case1: return "Case1";
    case CellLabel::Case2: return "Case2";
  }
  return "Unknown";
}

/**
 * For a cell above a (3,n)-path: Contributes when it counts toward dinv,
 * otherwise Case1 (arm 1, leg < n/3 - 1) or Case2 (arm 0, leg > n/3).
 * A non-contributing cell matching neither case would contradict the
 * classification and raises std::logic_error.
 */
inline CellLabel classify_nondinv_cell(const DyckPath& path, Cell x) {
  require_three_columns(path);
  const int arm_length = arm(path, x);
  const int leg_length = leg(path, x);
  const int n = path.n();
  if (satisfies_dinv(arm_length, leg_length, 3, n)) return CellLabel::Contributes;
  if (arm_length == 1 && 3 * leg_length < n - 3) return CellLabel::Case1;
  if (arm_length == 0 && 3 * leg_length > n) return CellLabel::Case2;
  throw std::logic_error("cell fails the dinv inequality but matches neither case");
}

}  // namespace ratcat
